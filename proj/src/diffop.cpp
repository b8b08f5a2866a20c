#include "dortho/diffop.hpp"

#include <algorithm>

#include "dortho/errors.hpp"

namespace dortho {

namespace {

const Poly kZero{};

// Rational roots beyond this bound are not enumerated.
constexpr long kRootSearchLimit = 1'000'000;

}  // namespace

DiffOperator::DiffOperator(std::vector<Poly> coeffs) : a_(std::move(coeffs)) {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    for (size_t nu = 0; nu < a_.size(); ++nu) {
        if (a_[nu].degree() > static_cast<int>(nu)) throw DegreeViolation(static_cast<int>(nu), a_[nu].degree());
    }
}

const Poly& DiffOperator::coeff(int nu) const {
    if (nu < 0 || nu >= static_cast<int>(a_.size())) return kZero;
    return a_[static_cast<size_t>(nu)];
}

Poly apply(const DiffOperator& J, const Poly& p) {
    Poly out;
    const int top = std::min(static_cast<int>(J.coeffs().size()) - 1, p.degree());
    Poly dp = p;
    for (int nu = 0; nu <= top; ++nu) {
        if (nu > 0) dp = derivative(dp);
        const Poly& a = J.coeff(nu);
        if (a.is_zero()) continue;
        out += a * dp * Rational(mpq_class(1, factorial(nu)));
    }
    return out;
}

Poly apply_monomial(const DiffOperator& J, int n) {
    if (n < 0) throw std::invalid_argument("negative monomial exponent");
    Poly out;
    const int top = std::min(n, static_cast<int>(J.coeffs().size()) - 1);
    for (int nu = 0; nu <= top; ++nu) {
        const Poly& a = J.coeff(nu);
        if (a.is_zero()) continue;
        out += a.shift(n - nu) * Rational(binomial(n, nu));
    }
    return out;
}

Rational monomial_image_coefficient(const DiffOperator& J, int n, int tau) {
    Rational s;
    for (int nu = 0; nu <= tau && nu <= n; ++nu) s += Rational(binomial(n, n - nu)) * J.coeff(tau - nu, n - nu);
    return s;
}

DiffOperator from_action(std::span<const Poly> images) {
    std::vector<Poly> a;
    a.reserve(images.size());
    for (size_t n = 0; n < images.size(); ++n) {
        const int ni = static_cast<int>(n);
        if (images[n].degree() > ni) throw DegreeViolation(ni, images[n].degree());
        // J(x^n) = a_n(x) + sum_{nu<n} C(n,nu) a_nu(x) x^{n-nu}
        Poly rest = images[n];
        for (int nu = 0; nu < ni; ++nu) {
            if (a[static_cast<size_t>(nu)].is_zero()) continue;
            rest -= a[static_cast<size_t>(nu)].shift(ni - nu) * Rational(binomial(ni, nu));
        }
        a.push_back(std::move(rest));
    }
    return DiffOperator(std::move(a));
}

DiffOperator shifted(const DiffOperator& J, int m) {
    if (m < 0) throw std::invalid_argument("negative shift");
    if (m == 0) return J;
    DiffOperator r;
    if (static_cast<size_t>(m) < J.a_.size()) r.a_.assign(J.a_.begin() + m, J.a_.end());
    r.shifted_ = true;
    return r;
}

Poly leibniz_expand(const DiffOperator& J, const Poly& f, const Poly& g) {
    Poly out;
    Poly dg = g;
    for (int n = 0; n <= J.order() && !dg.is_zero(); ++n) {
        if (n > 0) dg = derivative(dg);
        out += apply(shifted(J, n), f) * dg * Rational(mpq_class(1, factorial(n)));
    }
    return out;
}

const Rational& EigenvalueTable::at(int m) const {
    const int idx = m - shift;
    if (idx < 0 || idx >= size())
        throw IndexOutOfRange("lambda_" + std::to_string(m) + "^[" + std::to_string(shift) + "] is not tabulated");
    return values[static_cast<size_t>(idx)];
}

EigenvalueTable lambda_table(const DiffOperator& J, int k, int N) {
    if (k < 0) throw std::invalid_argument("negative lowering order");
    EigenvalueTable t{k, {}};
    for (int n = 0; n <= N; ++n) {
        Rational s;
        for (int j = 0; j <= n && j + k <= J.order(); ++j) s += Rational(binomial(n + k, j + k)) * J.coeff(j, j + k);
        t.values.push_back(std::move(s));
    }
    return t;
}

Poly lambda_polynomial(const DiffOperator& J, int k) {
    Poly q;
    for (int j = 0; j + k <= J.order(); ++j) {
        const Rational a = J.coeff(j, j + k);
        if (a.is_zero()) continue;
        // C(n+k, j+k) = prod_{i<j+k} (n + k - i) / (j+k)!
        Poly term = Poly::constant(a / Rational(factorial(j + k)));
        for (int i = 0; i < j + k; ++i) term *= Poly{Rational(k - i), Rational(1)};
        q += term;
    }
    return q;
}

ClosedFormCheck nonvanishing_on_naturals(const Poly& q) {
    if (q.is_zero() || q.coeff(0).is_zero()) return {Nonvanishing::VanishesAt, 0};
    if (q.degree() == 0) return {Nonvanishing::AllN, -1};

    // Integer-coefficient multiple: a positive integer root must divide its constant term.
    mpz_class lcm = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : q.coeffs()) ic.push_back(c.numerator() * (lcm / c.denominator()));

    // Cauchy bound: |root| <= 1 + max_i |c_i / c_d|.
    const Rational lead = abs(Rational(mpz_class(ic.back())));
    Rational worst;
    for (size_t i = 0; i + 1 < ic.size(); ++i) worst = std::max(worst, abs(Rational(mpz_class(ic[i]))) / lead);
    const mpz_class bound = 1 + worst.numerator() / worst.denominator();
    if (bound > kRootSearchLimit) return {Nonvanishing::Undecided, -1};

    const mpz_class c0 = abs(ic.front());
    for (long r = 1; r <= bound.get_si(); ++r) {
        if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(r)) == 0) continue;
        if (q(Rational(r)).is_zero()) return {Nonvanishing::VanishesAt, static_cast<int>(r)};
    }
    return {Nonvanishing::AllN, -1};
}

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Isomorphism: return "isomorphism";
        case OperatorKind::DerivativeLike: return "derivative-like";
        case OperatorKind::Degenerate: return "degenerate";
    }
    return "degenerate";
}

OperatorClass classify(const DiffOperator& J, int probe_bound) {
    if (probe_bound < J.order() + 1)
        throw InvalidProbe("probe bound " + std::to_string(probe_bound) + " is below K+1 = " +
                           std::to_string(J.order() + 1));
    OperatorClass out;
    out.probe_bound = probe_bound;

    const auto first_zero = [&](const EigenvalueTable& t) -> std::optional<int> {
        for (int n = 0; n < t.size(); ++n)
            if (t.values[static_cast<size_t>(n)].is_zero()) return n;
        return std::nullopt;
    };

    const auto iso = lambda_table(J, 0, probe_bound);
    const auto iso_zero = first_zero(iso);
    if (!iso_zero) {
        out.kind = OperatorKind::Isomorphism;
        out.closed_form = nonvanishing_on_naturals(lambda_polynomial(J, 0));
        return out;
    }

    if (J.is_zero()) {
        out.witness_index = 0;
        out.witness = "zero operator";
        return out;
    }

    int k = 0;
    while (J.coeff(k).is_zero()) ++k;
    if (k == 0) {
        out.witness_index = *iso_zero;
        out.witness = "lambda_" + std::to_string(*iso_zero) + "^[0] = 0";
        return out;
    }
    for (int nu = k; nu <= J.order(); ++nu) {
        if (J.coeff(nu).degree() > nu - k) {
            out.witness_index = nu;
            out.witness = "deg a_" + std::to_string(nu) + " exceeds " + std::to_string(nu - k);
            return out;
        }
    }
    const auto lowered = lambda_table(J, k, probe_bound);
    if (const auto z = first_zero(lowered)) {
        out.witness_index = *z + k;
        out.witness = "lambda_" + std::to_string(*z + k) + "^[" + std::to_string(k) + "] = 0";
        return out;
    }
    out.kind = OperatorKind::DerivativeLike;
    out.k = k;
    out.closed_form = nonvanishing_on_naturals(lambda_polynomial(J, k));
    return out;
}

}  // namespace dortho
