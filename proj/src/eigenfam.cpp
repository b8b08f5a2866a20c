#include "dortho/eigenfam.hpp"

#include <map>

#include "dortho/errors.hpp"

namespace dortho {

namespace {

Rational R(long n) { return Rational(n); }

// Table accessors with the P_{-i} = 0 conventions.
struct Lookup {
    const EigenvalueTable& lambdas;
    const RecurrenceTable& rt;

    Rational lam(int i) const {
        if (i < 0) return {};
        return lambdas.at(i);
    }
    Rational beta(int i) const {
        if (i < 0) return {};
        return guarded([&] { return rt.beta(i); });
    }
    Rational alpha(int i) const {
        if (i <= 0) return {};
        return guarded([&] { return rt.alpha(i); });
    }
    Rational gamma(int i) const {
        if (i <= 0) return {};
        return guarded([&] { return rt.gamma(i); });
    }

    template <class F>
    static Rational guarded(F f) {
        try {
            return f();
        } catch (const MissingCoefficient& e) {
            throw IndexOutOfRange(e.what());
        }
    }
};

// sum c_k P_k over the given (index, coefficient) pairs, dropping negative indices.
Poly combine(const MonicSequence& seq, std::initializer_list<std::pair<int, Rational>> terms) {
    Poly out;
    for (const auto& [k, c] : terms) {
        if (k < 0 || c.is_zero()) continue;
        out += seq[k] * c;
    }
    return out;
}

bool is_constant(const Poly& p) { return p.degree() <= 0; }

}  // namespace

DiffOperator ThirdOrderParams::op() const {
    return DiffOperator({Poly{a0_0}, Poly{a0_1, a1_1}, Poly{a0_2, a1_2, a2_2}, Poly{a0_3, a1_3, a2_3, a3_3}});
}

ThirdOrderParams ThirdOrderParams::from_operator(const DiffOperator& J) {
    if (J.order() > 3) throw std::invalid_argument("operator order exceeds 3");
    return {J.coeff(0, 0), J.coeff(0, 1), J.coeff(1, 1), J.coeff(0, 2), J.coeff(1, 2),
            J.coeff(2, 2), J.coeff(0, 3), J.coeff(1, 3), J.coeff(2, 3), J.coeff(3, 3)};
}

DiffOperator Case1Params::op() const {
    return DiffOperator({Poly{a0_0}, Poly{a0_1, a1_1}, Poly{a0_2}, Poly{a0_3}});
}

Case2Params::Case2Params(Rational a0_0, Rational a0_1, Rational a1_1, Rational a0_3, Rational a1_3, Rational a2_3)
    : a0_0_(std::move(a0_0)),
      a0_1_(std::move(a0_1)),
      a1_1_(std::move(a1_1)),
      a0_3_(std::move(a0_3)),
      a1_3_(std::move(a1_3)),
      a2_3_(std::move(a2_3)) {
    if (a1_1_.is_zero()) throw ZeroParameter("a_1^[1] must be nonzero");
    const Rational disc = a1_3_ * a1_3_ - R(4) * a2_3_ * a0_3_;
    if (!disc.is_zero()) throw DiscriminantNonzero("(a_1^[3])^2 - 4 a_2^[3] a_0^[3] = " + disc.str() + " != 0");

    const Rational& s = a1_1_;
    const Rational s2 = s * s;
    const Rational s3 = s2 * s;
    const Rational& c = a0_1_;
    const Rational& e0 = a0_3_;
    const Rational& e1 = a1_3_;
    const Rational& e2 = a2_3_;

    b_[0] = Rational(1, 2) * (-e1 / (R(2) * s) + c * e2 / s2 + R(10) * e2 * e2 / (R(12) * s2));
    b_[1] = e2 * e2 / (R(3) * s2);
    b_[2] = e2 * e2 / (R(12) * s2);

    f_[0] = (R(-18) * e0 * s2 + R(6) * e1 * s * (R(3) * c + e2) + e2 * (R(-18) * c * c - R(12) * e2 * c + e2 * e2)) /
            (R(108) * s3);
    f_[1] = e2 * (R(6) * s * e1 + e2 * (e2 - R(12) * c)) / (R(72) * s3);
    f_[2] = -(e2 * (e2 * (R(12) * c + e2) - R(6) * s * e1)) / (R(216) * s3);
    f_[3] = -(e2 * e2 * e2) / (R(72) * s3);
    f_[4] = -(e2 * e2 * e2) / (R(216) * s3);
}

DiffOperator Case2Params::op() const {
    return DiffOperator({Poly{a0_0_}, Poly{a0_1_, a1_1_}, Poly{}, Poly{a0_3_, a1_3_, a2_3_}});
}

DiffOperator corollary42_operator(const Rational& a0_0) {
    return DiffOperator({Poly{a0_0}, Poly{R(0), Rational(1, 24)}, Poly{}, Poly{R(1), R(-2), R(1)}});
}

Poly eigenpoly(const DiffOperator& J, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const auto cls = classify(J, std::max(n, J.order() + 1));
    if (cls.kind != OperatorKind::Isomorphism) {
        std::string why = "operator is " + to_string(cls.kind);
        if (cls.kind == OperatorKind::DerivativeLike) why += " with k = " + std::to_string(cls.k);
        if (!cls.witness.empty()) why += ": " + cls.witness;
        throw NotIsomorphism(why);
    }

    const auto lambdas = lambda_table(J, 0, n);
    const Rational& target = lambdas.values[static_cast<size_t>(n)];
    for (int k = 0; k < n; ++k)
        if (lambdas.values[static_cast<size_t>(k)] == target) throw EigenvalueCollision(k, n);

    // images[j] = J(x^j); J is triangular on the monomial basis with diagonal lambda_j.
    std::vector<Poly> images;
    for (int j = 0; j <= n; ++j) images.push_back(apply_monomial(J, j));

    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    for (int i = n - 1; i >= 0; --i) {
        // coefficient of x^i in (J - lambda_n) P = 0
        Rational acc;
        for (int j = i + 1; j <= n; ++j) acc += images[static_cast<size_t>(j)].coeff(i) * c[static_cast<size_t>(j)];
        c[static_cast<size_t>(i)] = acc / (target - lambdas.values[static_cast<size_t>(i)]);
    }
    return Poly(std::move(c));
}

DerivedRecurrence derive_recurrence(const DiffOperator& J, int N) {
    if (N < 1) throw std::invalid_argument("derive_recurrence needs N >= 1");
    std::vector<Poly> polys;
    for (int n = 0; n <= N + 2; ++n) polys.push_back(eigenpoly(J, n));
    MonicSequence seq(std::move(polys), "eigen");

    VerificationReport report;
    const auto lambdas = lambda_table(J, 0, N + 2);
    for (int n = 0; n <= N + 2; ++n)
        report.check_equal("eigen", n, apply(J, seq[n]), seq[n] * lambdas.values[static_cast<size_t>(n)]);

    RecurrenceTable table = extract_two_orthogonal_table(seq);
    report.note("four-term shape and gamma_n != 0 confirmed for n <= " + std::to_string(N));
    MonicSequence tagged(seq.polys(), "eigen", table);
    return {std::move(table), std::move(tagged), std::move(report)};
}

RecurrenceTable case1_coeffs(const Case1Params& p, int N) {
    if (p.a1_1.is_zero()) throw ZeroParameter("a_1^[1] must be nonzero");
    if (p.a0_3.is_zero()) throw ZeroParameter("a_0^[3] must be nonzero");
    const Rational beta = -p.a0_1 / p.a1_1;
    return RecurrenceTable::two_orthogonal(
        N, [&](int) { return beta; }, [&](int n) { return -p.a0_2 * R(n) / (R(2) * p.a1_1); },
        [&](int n) { return -p.a0_3 * R(n) * R(n + 1) / (R(6) * p.a1_1); });
}

RecurrenceTable case2_coeffs(const Case2Params& p, int N) {
    const Rational& s = p.a1_1();
    const Rational s2 = s * s;
    const Rational s3 = s2 * s;
    const Rational& c = p.a0_1();
    const Rational& e0 = p.a0_3();
    const Rational& e1 = p.a1_3();
    const Rational& e2 = p.a2_3();
    const auto& b = p.b();
    const auto& f = p.f();

    const auto beta = [&](int n) { return -e2 / (R(2) * s) * R(n - 1) * R(n) - c / s; };
    const auto alpha = [&](int n) {
        const Rational m = R(n - 2);
        return -e1 / (R(2) * s) + c * e2 / s2 + m * (R(-3) * e1 / (R(4) * s) + e2 * (R(9) * c + e2) / (R(6) * s2)) +
               m * m * (b[0] + b[1] * m + b[2] * m * m);
    };
    const auto gamma = [&](int n) {
        const Rational m = R(n - 1);
        return -(e0 + c * (-s * e1 + c * e2) / s2) / (R(3) * s) - m * ((s2 * e0 - c * s * e1 + c * c * e2) / (R(2) * s3)) +
               m * m * (f[0] + f[1] * m + f[2] * m * m + f[3] * m * m * m + f[4] * m * m * m * m);
    };
    return RecurrenceTable::two_orthogonal(N, beta, alpha, gamma);
}

RecurrenceTable corollary42_coeffs(int N) {
    return RecurrenceTable::two_orthogonal(
        N, [](int n) { return R(-12) * R(n - 1) * R(n); },
        [](int n) { return R(12) * R(n - 1) * R(n) * R(2 * n - 3) * R(2 * n - 3); },
        [](int n) { return R(-4) * R(n) * R(n + 1) * R(2 * n - 3) * R(2 * n - 3) * R(2 * n - 1) * R(2 * n - 1); });
}

StepTwoCoeffs steptwo_coeffs(const EigenvalueTable& lambdas, const RecurrenceTable& rt, int n) {
    if (rt.d() != 2) throw std::invalid_argument("steptwo_coeffs needs a d = 2 table");
    const Lookup t{lambdas, rt};
    const auto L = [&](int i) { return t.lam(i); };
    StepTwoCoeffs s;
    s.A = L(n) - R(2) * L(n - 1) + L(n - 2);
    s.B = (t.beta(n - 1) - t.beta(n)) * (L(n) - L(n - 1));
    s.C = R(2) * t.alpha(n + 1) * (L(n) - L(n + 1)) + R(2) * t.alpha(n) * (L(n) - L(n - 1));
    s.D = t.alpha(n + 1) * (t.beta(n + 1) - t.beta(n)) * (L(n) - L(n + 1)) +
          t.gamma(n + 1) * (L(n) - R(2) * L(n + 2) + L(n + 1)) + t.gamma(n) * (L(n) - R(2) * L(n - 1) + L(n + 1));
    s.F = t.alpha(n + 2) * t.alpha(n + 1) * (L(n) - R(2) * L(n + 1) + L(n + 2)) +
          t.gamma(n + 1) * (t.beta(n + 2) - t.beta(n)) * (L(n) - L(n + 2));
    s.G = t.alpha(n + 3) * t.gamma(n + 1) * (L(n) - R(2) * L(n + 2) + L(n + 3)) +
          t.alpha(n + 1) * t.gamma(n + 2) * (L(n) - R(2) * L(n + 1) + L(n + 3));
    s.H = t.gamma(n + 3) * t.gamma(n + 1) * (L(n) - R(2) * L(n + 2) + L(n + 4));
    return s;
}

std::array<Rational, 10> j3_expansion_coeffs(const Rational& a3_3, const EigenvalueTable& lambdas,
                                              const RecurrenceTable& rt, int n) {
    const Lookup t{lambdas, rt};
    std::map<int, StepTwoCoeffs> cache;
    const auto S = [&](int i) -> const StepTwoCoeffs& {
        auto it = cache.find(i);
        if (it == cache.end()) it = cache.emplace(i, steptwo_coeffs(lambdas, rt, i)).first;
        return it->second;
    };
    const auto A = [&](int i) { return S(i).A; };
    const auto B = [&](int i) { return S(i).B; };
    const auto C = [&](int i) { return S(i).C; };
    const auto D = [&](int i) { return S(i).D; };
    const auto F = [&](int i) { return S(i).F; };
    const auto G = [&](int i) { return S(i).G; };
    const auto H = [&](int i) { return S(i).H; };
    const auto be = [&](int i) { return t.beta(i); };
    const auto al = [&](int i) { return t.alpha(i); };
    const auto ga = [&](int i) { return t.gamma(i); };

    std::array<Rational, 10> c;
    c[0] = a3_3;
    c[1] = A(n + 4) * be(n + 2) - A(n + 4) * be(n + 4) - B(n + 3) + B(n + 4);
    c[2] = A(n + 3) * al(n + 2) - A(n + 4) * al(n + 4) + B(n + 3) * be(n + 2) - B(n + 3) * be(n + 3) - C(n + 2) +
           C(n + 3);
    c[3] = A(n + 2) * ga(n + 1) - A(n + 4) * ga(n + 3) + B(n + 2) * al(n + 2) - B(n + 3) * al(n + 3) - D(n + 1) +
           D(n + 2);
    c[4] = B(n + 1) * ga(n + 1) - B(n + 3) * ga(n + 2) + C(n + 1) * al(n + 2) - C(n + 2) * al(n + 2) -
           D(n + 1) * be(n + 1) + D(n + 1) * be(n + 2) - F(n) + F(n + 1);
    c[5] = C(n) * ga(n + 1) - C(n + 2) * ga(n + 1) - D(n + 1) * al(n + 1) + D(n) * al(n + 2) - F(n) * be(n) +
           F(n) * be(n + 2) - G(n - 1) + G(n);
    c[6] = -D(n + 1) * ga(n) + D(n - 1) * ga(n + 1) - F(n) * al(n) + F(n - 1) * al(n + 2) - G(n - 1) * be(n - 1) +
           G(n - 1) * be(n + 2) - H(n - 2) + H(n - 1);
    c[7] = -F(n) * ga(n - 1) + F(n - 2) * ga(n + 1) - G(n - 1) * al(n - 1) + G(n - 2) * al(n + 2) -
           H(n - 2) * be(n - 2) + H(n - 2) * be(n + 2);
    c[8] = -G(n - 1) * ga(n - 2) + G(n - 3) * ga(n + 1) - H(n - 2) * al(n - 2) + H(n - 3) * al(n + 2);
    c[9] = H(n - 4) * ga(n + 1) - H(n - 2) * ga(n - 3);
    return c;
}

KnownFamily detect_family(const DiffOperator& J) {
    if (J.order() != 3) return KnownFamily::None;
    const Poly& a1 = J.coeff(1);
    const Poly& a2 = J.coeff(2);
    const Poly& a3 = J.coeff(3);
    if (a1 == Poly{R(0), Rational(1, 24)} && a2.is_zero() && a3 == Poly{R(1), R(-2), R(1)})
        return KnownFamily::Corollary42;
    if (a1.degree() == 1 && is_constant(a2) && a3.degree() == 0) return KnownFamily::Case1;
    return KnownFamily::None;
}

namespace {

// J^{(3)}(P_0) and J^{(3)}(P_1) written out in the basis.
Poly j3_initial(const MonicSequence& seq, const RecurrenceTable& rt, const ThirdOrderParams& p, int which) {
    const auto b = [&](int i) { return rt.beta(i); };
    const auto a = [&](int i) { return rt.alpha(i); };
    const auto g = [&](int i) { return rt.gamma(i); };
    const Rational &e0 = p.a0_3, &e1 = p.a1_3, &e2 = p.a2_3, &e3 = p.a3_3;
    if (which == 0) {
        return combine(seq, {{3, e3},
                             {2, (b(0) + b(1) + b(2)) * e3 + e2},
                             {1, e3 * (a(1) + a(2) + b(0) * b(0) + b(1) * b(0) + b(1) * b(1)) + (b(0) + b(1)) * e2 + e1},
                             {0, e3 * (a(1) * (R(2) * b(0) + b(1)) + b(0) * b(0) * b(0) + g(1)) + a(1) * e2 +
                                     b(0) * (b(0) * e2 + e1) + e0}});
    }
    return combine(
        seq,
        {{4, e3},
         {3, (b(1) + b(2) + b(3)) * e3 + e2},
         {2, e3 * (a(1) + a(2) + a(3) + b(1) * b(1) + b(2) * b(1) + b(2) * b(2)) + (b(1) + b(2)) * e2 + e1},
         {1, e3 * (R(2) * (a(1) + a(2)) * b(1) + a(2) * b(2) + b(1) * b(1) * b(1) + g(1) + g(2)) + a(1) * b(0) * e3 +
                 (a(1) + a(2)) * e2 + b(1) * (b(1) * e2 + e1) + e0},
         {0, a(1) * (e3 * (a(2) + b(0) * b(0) + b(1) * b(0) + b(1) * b(1)) + (b(0) + b(1)) * e2 + e1) +
                 a(1) * a(1) * e3 + g(1) * ((b(0) + b(1) + b(2)) * e3 + e2)}});
}

}  // namespace

VerificationReport verify_expansions(const DiffOperator& J, const RecurrenceTable& rt, int N) {
    if (J.order() > 3) throw std::invalid_argument("verify_expansions handles operators of order <= 3");
    if (rt.d() != 2) throw std::invalid_argument("verify_expansions needs a d = 2 table");
    if (rt.beta_count() < N + 7 || rt.gamma_count(0) < N + 7 || rt.gamma_count(1) < N + 7)
        throw IndexOutOfRange("verify_expansions up to n = " + std::to_string(N) + " needs coefficients to index " +
                              std::to_string(N + 7));
    const auto seq = generate(rt, N + 5);
    const auto lambdas = lambda_table(J, 0, N + 8);  // the J^(3) coefficients reach lambda_{n+8}
    const auto params = ThirdOrderParams::from_operator(J);
    const Lookup t{lambdas, rt};
    const auto J1 = shifted(J, 1);
    const auto J2 = shifted(J, 2);
    const auto J3 = shifted(J, 3);

    VerificationReport r;
    for (int n = 0; n <= N; ++n) {
        const Poly& P = seq[n];
        r.check_equal("eigen", n, apply(J, P), P * t.lam(n));
        r.check_equal("J1-expansion", n, apply(J1, P),
                      combine(seq, {{n + 1, t.lam(n + 1) - t.lam(n)},
                                    {n - 1, t.alpha(n) * (t.lam(n - 1) - t.lam(n))},
                                    {n - 2, t.gamma(n - 1) * (t.lam(n - 2) - t.lam(n))}}));
        r.check_equal("J2-expansion", n, apply(J2, P),
                      combine(seq, {{n + 2, steptwo_coeffs(lambdas, rt, n + 2).A},
                                    {n + 1, steptwo_coeffs(lambdas, rt, n + 1).B},
                                    {n, steptwo_coeffs(lambdas, rt, n).C},
                                    {n - 1, steptwo_coeffs(lambdas, rt, n - 1).D},
                                    {n - 2, steptwo_coeffs(lambdas, rt, n - 2).F},
                                    {n - 3, steptwo_coeffs(lambdas, rt, n - 3).G},
                                    {n - 4, steptwo_coeffs(lambdas, rt, n - 4).H}}));
        const auto c = j3_expansion_coeffs(params.a3_3, lambdas, rt, n);
        Poly rhs;
        for (int i = 0; i < 10; ++i) {
            const int k = n + 5 - i;
            if (k >= 0 && !c[static_cast<size_t>(i)].is_zero()) rhs += seq[k] * c[static_cast<size_t>(i)];
        }
        r.check_equal("J3-expansion", n, apply(J3, seq[n + 2]), rhs);
    }
    r.check_equal("J3-initial", 0, apply(J3, seq[0]), j3_initial(seq, rt, params, 0));
    r.check_equal("J3-initial", 1, apply(J3, seq[1]), j3_initial(seq, rt, params, 1));

    switch (detect_family(J)) {
        case KnownFamily::Case1: {
            const Rational &a01 = params.a0_1, &a11 = params.a1_1, &a02 = params.a0_2, &a03 = params.a0_3;
            const Poly a1{a01, a11};
            for (int n = 0; n <= N; ++n) {
                const Poly& P = seq[n];
                const Poly lhs = a1 * P + derivative(P) * a02 + derivative(P, 2) * (a03 / R(2));
                r.check_equal("case1-second-order", n, lhs,
                              combine(seq, {{n + 1, a11},
                                            {n - 1, Rational(1, 2) * R(n) * a02},
                                            {n - 2, Rational(1, 3) * R(n - 1) * R(n) * a03}}));
                r.check_equal("appell", n, derivative(P), n >= 1 ? seq[n - 1] * R(n) : Poly{});
            }
            r.note("family: case1");
            break;
        }
        case KnownFamily::Corollary42: {
            const Poly sq{R(1), R(-2), R(1)};  // (x-1)^2
            for (int n = 0; n <= N; ++n) {
                const Poly& P = seq[n];
                const Poly lhs1 = P.shift(1) * Rational(1, 24) + sq * derivative(P, 2) * Rational(1, 2);
                const Rational q = R(15) - R(16 * n) + R(4 * n * n);
                r.check_equal("corollary-J1-relation", n, lhs1,
                              combine(seq, {{n + 1, Rational(1, 24)},
                                            {n - 1, Rational(-1, 2) * R((3 - 2 * n) * (3 - 2 * n)) * R(n - 1) * R(n)},
                                            {n - 2, Rational(1, 3) * R(n - 1) * R(n) * q * q}}));
                const Poly lhs2 = sq * derivative(P);
                const Rational s3 = R((3 - 2 * n) * (3 - 2 * n));
                const Rational s5 = R((5 - 2 * n) * (5 - 2 * n));
                const Rational s7 = R((7 - 2 * n) * (7 - 2 * n));
                r.check_equal("corollary-J2-relation", n, lhs2,
                              combine(seq, {{n + 1, R(n)},
                                            {n, R(-2) * R(n) * R(5 + 4 * n * (2 * n - 3))},
                                            {n - 1, s3 * R(n) * R(24 * (n - 2) * n + 25)},
                                            {n - 2, R(-8) * s5 * R(n - 1) * R(n) * pow(R(2 * n - 3), 3)},
                                            {n - 3, R(4) * s3 * s5 * s7 * R(n - 2) * R(n - 1) * R(n)}}));
            }
            r.note("family: corollary42");
            break;
        }
        case KnownFamily::None:
            break;
    }
    return r;
}

std::string to_string(Solvability s) {
    switch (s) {
        case Solvability::Case1: return "case1";
        case Solvability::Case2: return "case2";
        case Solvability::NoSolution: return "no-solution";
        case Solvability::Reduced: return "reduced";
        case Solvability::Unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

void attach_residues(const ThirdOrderParams& p, SolvabilityResult& out) {
    constexpr int kTop = 7;
    try {
        std::vector<Poly> polys;
        const auto J = p.op();
        for (int n = 0; n <= kTop; ++n) polys.push_back(eigenpoly(J, n));
        const auto sc = structure_coeffs(MonicSequence(std::move(polys), "eigen"));
        for (size_t n = 0; n < sc.chi.size(); ++n)
            for (size_t nu = 0; nu + 2 <= n; ++nu)
                out.residues.emplace_back("chi_{" + std::to_string(n) + "," + std::to_string(nu) + "}", sc.chi[n][nu]);
        // alpha_{n+1} = chi_{n,n}, gamma_n = chi_{n,n-1}, read regardless of shape
        const auto be = [&](int i) { return sc.beta[static_cast<size_t>(i)]; };
        const auto al = [&](int i) { return sc.chi[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)]; };
        const auto ga = [&](int i) { return sc.chi[static_cast<size_t>(i)][static_cast<size_t>(i - 1)]; };
        for (int n = 0; n <= 1; ++n) {
            const std::string tag = "[n=" + std::to_string(n) + "]";
            out.residues.emplace_back("beta-second-difference" + tag, be(n + 4) - R(2) * be(n + 3) + be(n + 2));
            const Rational db = be(n + 2) - be(n + 3);
            out.residues.emplace_back("alpha-equation" + tag,
                                      R(-2) * al(n + 2) + R(4) * al(n + 3) - R(2) * al(n + 4) + db * db);
            out.residues.emplace_back("gamma-equation" + tag,
                                      R(-3) * p.a1_1 * (ga(n + 1) - R(2) * ga(n + 2) + ga(n + 3)) - p.a0_3);
        }
    } catch (const Error& e) {
        out.notes.push_back(std::string("eigen-oracle unavailable: ") + e.what());
    }
}

}  // namespace

SolvabilityResult classify_solvability(const ThirdOrderParams& p) {
    SolvabilityResult out;
    const bool a3_zero = p.a0_3.is_zero() && p.a1_3.is_zero() && p.a2_3.is_zero() && p.a3_3.is_zero();
    const bool a3_const = p.a1_3.is_zero() && p.a2_3.is_zero() && p.a3_3.is_zero();
    const bool a2_const = p.a1_2.is_zero() && p.a2_2.is_zero();
    const bool a2_zero = a2_const && p.a0_2.is_zero();
    const int deg_a3 = Poly{p.a0_3, p.a1_3, p.a2_3, p.a3_3}.degree();

    if (a3_zero) {
        out.tag = Solvability::Reduced;
        out.notes.push_back("a_3 = 0: the only solution corresponds to J = a_0^[1] D + a_0^[0] I");
        return out;
    }
    if (a2_const && deg_a3 <= 2 && p.a1_1.is_zero()) {
        out.tag = Solvability::NoSolution;
        out.notes.push_back("a_2 constant and deg a_3 <= 2 force a_1^[1] != 0");
        return out;
    }
    if (a3_const && p.a2_2.is_zero() && !p.a1_1.is_zero()) {
        if (!p.a1_2.is_zero()) {
            out.tag = Solvability::NoSolution;
            out.notes.push_back("a_3 constant nonzero forces a_1^[2] = 0");
            return out;
        }
        out.tag = Solvability::Case1;
        out.notes.push_back("a_1^[2] = 0 is forced");
        out.notes.push_back("a_1^[1] != 0 is forced");
        return out;
    }
    if (a2_zero && deg_a3 == 1) {
        out.tag = Solvability::NoSolution;
        out.notes.push_back("a_2 = 0 and deg a_3 = 1: no 2-orthogonal eigen-solution exists");
        return out;
    }
    if (a2_zero && deg_a3 == 2) {
        const Rational disc = p.a1_3 * p.a1_3 - R(4) * p.a2_3 * p.a0_3;
        if (!disc.is_zero()) {
            out.tag = Solvability::NoSolution;
            out.notes.push_back("discriminant (a_1^[3])^2 - 4 a_2^[3] a_0^[3] = " + disc.str() + " must vanish");
            return out;
        }
        out.tag = Solvability::Case2;
        out.notes.push_back("a_1^[1] != 0 is forced");
        return out;
    }
    out.tag = Solvability::Unclassified;
    attach_residues(p, out);
    return out;
}

}  // namespace dortho
