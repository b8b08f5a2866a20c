// Acceptance suite: one [PASS]/[FAIL] line per criterion, each under a wall-clock limit.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dortho/eigenfam.hpp"
#include "dortho/errors.hpp"
#include "golden_cases.hpp"
#include "oracle.hpp"

using namespace dortho;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) return std::string("failed: ") + #cond;             \
    } while (0)

std::string ac1() {
    oracle::Gen g(1001u);
    const Poly x = Poly::x();
    for (int t = 0; t < 120; ++t) {
        const auto J = g.op(3);
        const Poly p = g.poly(10, 9, 5);
        const Poly f = g.poly(10, 9, 5);
        std::vector<Poly> Ji;
        for (int i = 0; i <= 4; ++i) Ji.push_back(apply(shifted(J, i), p));
        EXPECT(leibniz_expand(J, p, f) == apply(J, p * f));
        EXPECT(apply(J, x * p) == x * Ji[0] + Ji[1]);
        EXPECT(apply(J, x * x * p) == x * x * Ji[0] + q(2) * x * Ji[1] + Ji[2]);
        EXPECT(apply(J, x * x * x * p) == x * x * x * Ji[0] + q(3) * x * x * Ji[1] + q(3) * x * Ji[2] + Ji[3]);
        for (int i = 0; i <= 3; ++i) EXPECT(apply(shifted(J, i), x * p) == Ji[static_cast<size_t>(i + 1)] + x * Ji[static_cast<size_t>(i)]);
    }
    return {};
}

std::string ac2() {
    oracle::Gen g(2002u);
    for (int t = 0; t < 60; ++t) {
        const int K = g.integer(0, 6);
        const auto J = g.op(K);
        std::vector<Poly> images;
        for (int n = 0; n <= K; ++n) images.push_back(apply_monomial(J, n));
        EXPECT(from_action(images) == J);
    }
    return {};
}

std::string ac3() {
    const Case1Params p{q(1), q(0), q(1), q(-2), q(-6)};
    const auto J = p.op();
    const auto d = derive_recurrence(J, 26);
    EXPECT(d.report.passed());
    for (int n = 0; n <= 25; ++n) {
        EXPECT(d.table.beta(n) == q(0));
        EXPECT(d.table.alpha(n + 1) == q(n + 1));
        EXPECT(d.table.gamma(n + 1) == q((n + 1) * (n + 2)));
        EXPECT(apply(J, d.sequence[n]) == d.sequence[n] * q(n + 1));
    }
    return {};
}

std::string ac4() {
    const auto rt = corollary42_coeffs(27);
    EXPECT(rt.gamma(1) == q(-8));
    EXPECT(rt.gamma(2) == q(-216));
    EXPECT(rt.gamma(3) == q(-10800));
    const auto seq = generate(rt, 25);
    for (const Rational& a00 : {q(0), q(1), q(-7, 3)}) {
        const auto J = corollary42_operator(a00);
        for (int n = 0; n <= 25; ++n) EXPECT(apply(J, seq[n]) == seq[n] * (q(n, 24) + a00));
    }
    const auto d = derive_recurrence(corollary42_operator(q(1)), 25);
    EXPECT(d.report.passed());
    EXPECT(compare_tables(rt, d.table, 25, "oracle").passed());
    for (int n = 0; n <= 25; ++n) EXPECT(d.sequence[n] == seq[n]);
    return {};
}

std::string ac5() {
    const Case2Params p(q(1), q(0), q(1, 24), q(1), q(-2), q(1));
    EXPECT((p.b() == std::array<Rational, 3>{q(252), q(192), q(48)}));
    EXPECT((p.f() == std::array<Rational, 5>{q(60), q(96), q(-96), q(-192), q(-64)}));
    EXPECT(compare_tables(corollary42_coeffs(26), case2_coeffs(p, 26), 25, "specialise").passed());
    return {};
}

std::string ac6() {
    const Case1Params c1{q(1), q(0), q(1), q(-2), q(-6)};
    const auto r1 = verify_expansions(c1.op(), case1_coeffs(c1, 22), 15);
    const auto r2 = verify_expansions(corollary42_operator(), corollary42_coeffs(22), 15);
    for (const auto* r : {&r1, &r2}) {
        EXPECT(r->passed());
        for (const char* id : {"eigen", "J1-expansion", "J2-expansion", "J3-expansion", "J3-initial"}) {
            int seen = 0;
            for (const auto& e : r->entries()) seen += e.identity == id;
            EXPECT(seen > 0);
        }
    }
    return {};
}

std::string ac7() {
    const Case1Params c1{q(1), q(0), q(1), q(-2), q(-6)};
    const auto s1 = generate(case1_coeffs(c1, 21), 21);
    for (int n = 0; n <= 20; ++n) EXPECT(derivative(s1[n + 1]) == s1[n] * q(n + 1));

    const auto s2 = generate(corollary42_coeffs(21), 21);
    const auto Q = derivative_sequence(s2);
    EXPECT(check_d_orthogonality(Q, 2, 6).passed());
    const auto qt = extract_two_orthogonal_table(Q);
    for (int n = 1; n <= qt.gamma_count(0); ++n) EXPECT(!qt.gamma(n).is_zero());
    return {};
}

std::string ac8() {
    const auto seq = generate(corollary42_coeffs(26), 26);
    const auto r = check_d_orthogonality(seq, 2, 8);
    EXPECT(r.passed());
    const auto dm = dual_moments(seq, 2);
    EXPECT(dm.moments[0][0] == q(1));

    auto g = corollary42_coeffs(26).gammas();
    g[0][2] = q(0);  // gamma_3
    const auto bad = generate(RecurrenceTable(2, corollary42_coeffs(26).betas(), g), 26);
    const auto rb = check_d_orthogonality(bad, 2, 8);
    EXPECT(!rb.passed());
    const auto* f = rb.first_failure();
    EXPECT(f->identity == "regularity");
    EXPECT(f->m == 2 && f->nu == 0 && f->n == 4);
    return {};
}

std::string ac9() {
    const DiffOperator J({Poly{q(1)}, Poly{q(0), q(1)}, Poly{}, Poly{q(0), q(1)}});
    bool threw = false;
    try {
        derive_recurrence(J, 8);
    } catch (const NotTwoOrthogonal&) {
        threw = true;
    }
    EXPECT(threw);
    EXPECT(classify_solvability(ThirdOrderParams::from_operator(J)).tag == Solvability::NoSolution);
    return {};
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

std::string ac10() {
    for (const auto& c : golden::cases()) {
        std::string cmd = shell_quote(DORTHO_CLI);
        for (const auto& a : golden::resolve(c.args, DORTHO_GOLDEN_DIR)) cmd += " " + shell_quote(a);
        cmd += " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return "cannot start " + cmd;
        std::string out;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        const int status = pclose(pipe);
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (code != c.exit_code)
            return c.args.front() + " " + c.expected + ": exit " + std::to_string(code) + ", want " +
                   std::to_string(c.exit_code);
        if (c.expected.empty()) continue;
        std::ifstream in(std::string(DORTHO_GOLDEN_DIR) + "/" + c.expected, std::ios::binary);
        std::ostringstream want;
        want << in.rdbuf();
        if (out != want.str()) return "output differs from " + c.expected;
    }
    return {};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        Check run;
    };
    const std::vector<Criterion> all{
        {1, "operator-calculus properties", 5, ac1},
        {2, "recovery round-trip", 2, ac2},
        {3, "case-1 reproduction", 10, ac3},
        {4, "corollary reproduction", 10, ac4},
        {5, "theorem-to-corollary specialisation", 2, ac5},
        {6, "expansion identities", 10, ac6},
        {7, "Appell and Hahn", 10, ac7},
        {8, "d-orthogonality via duals", 10, ac8},
        {9, "negative subcase", 2, ac9},
        {10, "CLI golden files", 5, ac10},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (why.empty() && s > c.limit_s) why = "over time limit";
        const bool ok = why.empty();
        failed += !ok;
        std::printf("[%s] AC%d %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, s, c.limit_s,
                    ok ? "" : ": ", why.c_str());
    }
    return failed == 0 ? 0 : 1;
}
