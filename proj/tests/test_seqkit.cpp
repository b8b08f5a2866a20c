#include <doctest.h>

#include "dortho/errors.hpp"
#include "dortho/seqkit.hpp"
#include "oracle.hpp"

using namespace dortho;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// beta_n = 0, alpha_n = n, gamma_n = n(n+1)
RecurrenceTable case1_example(int N) {
    return RecurrenceTable::two_orthogonal(
        N, [](int) { return q(0); }, [](int n) { return q(n); }, [](int n) { return q(n * (n + 1)); });
}

RecurrenceTable random_table(oracle::Gen& g, int d, int N) {
    std::vector<Rational> beta;
    for (int n = 0; n <= N; ++n) beta.push_back(g.rational(6, 3));
    std::vector<std::vector<Rational>> gammas(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int m = 1; m <= N; ++m) {
            Rational v = g.rational(6, 3);
            if (j == 0 && v.is_zero()) v = q(1);  // keep the table regular
            gammas[static_cast<size_t>(j)].push_back(v);
        }
    return RecurrenceTable(d, std::move(beta), std::move(gammas));
}

}  // namespace

TEST_CASE("generate: frozen example") {
    const auto seq = generate(case1_example(6), 6);
    CHECK(seq[0] == Poly{q(1)});
    CHECK(seq[1] == Poly{q(0), q(1)});
    CHECK(seq[2] == Poly{q(-1), q(0), q(1)});
    CHECK(seq[3] == Poly{q(-2), q(-3), q(0), q(1)});
    CHECK(seq.table().has_value());
    CHECK_THROWS_AS(generate(case1_example(2), 6), MissingCoefficient);
}

TEST_CASE("table accessors") {
    const auto rt = case1_example(4);
    CHECK(rt.d() == 2);
    CHECK(rt.alpha(3) == q(3));
    CHECK(rt.gamma(2) == q(6));
    CHECK(rt.gamma_upper(1, 3) == rt.alpha(3));
    CHECK(rt.regular());
    CHECK_THROWS_AS(rt.gamma(0), MissingCoefficient);
    CHECK_THROWS_AS(rt.beta(5), MissingCoefficient);
    const RecurrenceTable bad = RecurrenceTable::two_orthogonal({q(0), q(0)}, {q(1)}, {q(1), q(0)});
    CHECK_FALSE(bad.regular());
    CHECK(bad.first_vanishing_gamma() == 2);
    CHECK_THROWS_AS(RecurrenceTable(3, {}, {{}, {}}), std::invalid_argument);
}

TEST_CASE("basis expansion") {
    const auto rt = case1_example(8);
    const auto seq = generate(rt, 8);
    const auto e = expand_in_basis(Poly::monomial(3), seq);
    // x^3 = P_3 + 3 P_1 + 2 P_0
    CHECK(e.coeff(3) == q(1));
    CHECK(e.coeff(2) == q(0));
    CHECK(e.coeff(1) == q(3));
    CHECK(e.coeff(0) == q(2));
    CHECK_THROWS_AS(expand_in_basis(Poly::monomial(9), seq), DegreeTooLarge);
    CHECK(multiply_by_x(seq, rt, 4) == expand_in_basis(seq[4].shift(1), seq));
    CHECK_THROWS_AS(multiply_by_x(seq, rt, 8), IndexOutOfRange);

    const auto dm = dual_moments(seq, 2);
    CHECK(dm.moments[0][0] == q(1));
    CHECK(dm.moments[1][0] == q(0));
    CHECK(dm.moments[0][3] == q(2));
    CHECK(dm.moments[1][3] == q(3));
}

TEST_CASE("property: expansion reconstruction and generate/structure round trip") {
    oracle::Gen g(31337u);
    for (int t = 0; t < 40; ++t) {
        const int d = g.integer(1, 3);
        const int N = 9;
        const auto rt = random_table(g, d, N);
        const auto seq = generate(rt, N);
        const Poly p = g.poly(N);
        REQUIRE(expand_in_basis(p, seq).reconstruct(seq) == p);

        const auto dm = dual_moments(seq, d);
        for (int n = 0; n <= N; ++n) {
            const auto e = expand_in_basis(Poly::monomial(n), seq);
            for (int i = 0; i < d; ++i) REQUIRE(dm.moments[static_cast<size_t>(i)][static_cast<size_t>(n)] == e.coeff(i));
        }

        const auto sc = structure_coeffs(seq);
        for (int n = 0; n < N; ++n) REQUIRE(sc.beta[static_cast<size_t>(n)] == rt.beta(n));
        // x P_{n+1} carries gamma^{d-1-nu}_{n+1-nu} on P_{n-nu}
        for (int n = 0; n + 2 <= N; ++n) {
            const auto& row = sc.chi[static_cast<size_t>(n)];
            for (int k = 0; k <= n; ++k) {
                const int nu = n - k;
                const Rational want = nu < d ? rt.gamma_upper(d - 1 - nu, n + 1 - nu) : q(0);
                REQUIRE(row[static_cast<size_t>(k)] == want);
            }
        }
        if (d == 2) {
            const auto back = extract_two_orthogonal_table(seq);
            REQUIRE(compare_tables(rt, back, N - 2, "round-trip").passed());
            for (int n = 0; n + 1 < N; ++n) REQUIRE(multiply_by_x(seq, rt, n).reconstruct(seq) == seq[n].shift(1));
        }
    }
}

TEST_CASE("d-orthogonality") {
    SUBCASE("regular tables pass for several d") {
        oracle::Gen g(5u);
        for (int d = 1; d <= 3; ++d) {
            const int M = 2;
            const int N = M * (d + 1) + d + 2;
            const auto seq = generate(random_table(g, d, N), N);
            const auto r = check_d_orthogonality(seq, d, M);
            CHECK(r.passed());
            CHECK(r.entries().size() > 0);
        }
    }
    SUBCASE("a zeroed gamma fails regularity at the predicted index") {
        // gamma_3 = 0: the leading pairing <u_0, P_m P_{2m}> carries gamma_1 gamma_3 ... gamma_{2m-1}
        std::vector<Rational> beta(12, q(0)), alpha(11, q(1)), gamma;
        for (int n = 1; n <= 11; ++n) gamma.push_back(n == 3 ? q(0) : q(-n));
        const auto seq = generate(RecurrenceTable::two_orthogonal(beta, alpha, gamma), 11);
        const auto r = check_d_orthogonality(seq, 2, 3);
        REQUIRE_FALSE(r.passed());
        const auto* f = r.first_failure();
        CHECK(f->identity == "regularity");
        CHECK(f->m == 2);
        CHECK(f->nu == 0);
        CHECK(f->n == 4);
    }
    SUBCASE("insufficient degree") {
        const auto seq = generate(case1_example(6), 6);
        CHECK_THROWS_AS(check_d_orthogonality(seq, 2, 2), InsufficientDegree);
    }
    SUBCASE("pairing conventions") {
        const auto seq = generate(case1_example(12), 12);
        const auto r = check_d_orthogonality(seq, 2, 3);
        CHECK(r.passed());
        CHECK(r.entries().front().identity == "regularity");
        CHECK(r.entries().front().n == 0);
    }
}

TEST_CASE("derivative sequence and table extraction") {
    const auto seq = generate(case1_example(8), 8);
    const auto Q = derivative_sequence(seq);
    CHECK(Q.size() == seq.size() - 1);
    for (int n = 0; n < Q.size(); ++n) CHECK(Q[n].is_monic());

    // x^n is not 2-orthogonal in the four-term sense once a chi entry below gamma is hit
    std::vector<Poly> mono;
    for (int n = 0; n <= 5; ++n) mono.push_back(Poly::monomial(n) + (n >= 3 ? Poly{q(1)} : Poly{}));
    CHECK_THROWS_AS(extract_two_orthogonal_table(MonicSequence(mono)), NotTwoOrthogonal);
    CHECK_THROWS_AS(MonicSequence({Poly{q(2)}}), std::invalid_argument);

    const auto a = case1_example(6);
    auto b_alpha = std::vector<Rational>(a.gammas()[1]);
    b_alpha[2] = q(99);
    const auto b = RecurrenceTable::two_orthogonal(a.betas(), b_alpha, a.gammas()[0]);
    const auto r = compare_tables(a, b, 5, "cmp");
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->identity == "cmp:alpha");
    CHECK(r.first_failure()->n == 3);
}
