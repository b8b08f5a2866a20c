#include "dortho/seqkit.hpp"

#include <algorithm>
#include <map>

#include "dortho/errors.hpp"

namespace dortho {

RecurrenceTable::RecurrenceTable(int d, std::vector<Rational> beta, std::vector<std::vector<Rational>> gammas)
    : d_(d), beta_(std::move(beta)), gammas_(std::move(gammas)) {
    if (d_ < 1) throw std::invalid_argument("recurrence order d must be at least 1");
    if (gammas_.size() != static_cast<size_t>(d_))
        throw std::invalid_argument("expected " + std::to_string(d_) + " gamma arrays, got " +
                                    std::to_string(gammas_.size()));
    regular_ = !first_vanishing_gamma().has_value();
}

RecurrenceTable RecurrenceTable::two_orthogonal(std::vector<Rational> beta, std::vector<Rational> alpha,
                                                std::vector<Rational> gamma) {
    return RecurrenceTable(2, std::move(beta), {std::move(gamma), std::move(alpha)});
}

RecurrenceTable RecurrenceTable::two_orthogonal(int N, const Generator& beta, const Generator& alpha,
                                                const Generator& gamma) {
    std::vector<Rational> b, a, g;
    for (int n = 0; n <= N; ++n) b.push_back(beta(n));
    for (int n = 1; n <= N; ++n) {
        a.push_back(alpha(n));
        g.push_back(gamma(n));
    }
    return two_orthogonal(std::move(b), std::move(a), std::move(g));
}

const Rational& RecurrenceTable::beta(int n) const {
    if (n < 0 || n >= beta_count()) throw MissingCoefficient("beta_" + std::to_string(n) + " is not tabulated");
    return beta_[static_cast<size_t>(n)];
}

const Rational& RecurrenceTable::gamma_upper(int j, int m) const {
    if (j < 0 || j >= d_) throw std::invalid_argument("gamma superscript out of range");
    const auto& g = gammas_[static_cast<size_t>(j)];
    if (m < 1 || m > static_cast<int>(g.size()))
        throw MissingCoefficient("gamma^" + std::to_string(j) + "_" + std::to_string(m) + " is not tabulated");
    return g[static_cast<size_t>(m - 1)];
}

const Rational& RecurrenceTable::alpha(int n) const {
    if (d_ != 2) throw std::logic_error("alpha is only defined for d = 2");
    if (n < 1 || n > gamma_count(1)) throw MissingCoefficient("alpha_" + std::to_string(n) + " is not tabulated");
    return gammas_[1][static_cast<size_t>(n - 1)];
}

const Rational& RecurrenceTable::gamma(int n) const {
    if (d_ != 2) throw std::logic_error("gamma_n is only defined for d = 2; use gamma_upper");
    if (n < 1 || n > gamma_count(0)) throw MissingCoefficient("gamma_" + std::to_string(n) + " is not tabulated");
    return gammas_[0][static_cast<size_t>(n - 1)];
}

std::optional<int> RecurrenceTable::first_vanishing_gamma() const {
    if (gammas_.empty()) return std::nullopt;
    const auto& g0 = gammas_[0];
    for (size_t m = 0; m < g0.size(); ++m)
        if (g0[m].is_zero()) return static_cast<int>(m) + 1;
    return std::nullopt;
}

MonicSequence::MonicSequence(std::vector<Poly> polys, std::string provenance, std::optional<RecurrenceTable> table)
    : p_(std::move(polys)), provenance_(std::move(provenance)), table_(std::move(table)) {
    for (size_t n = 0; n < p_.size(); ++n) {
        if (p_[n].degree() != static_cast<int>(n) || !p_[n].is_monic())
            throw std::invalid_argument("P_" + std::to_string(n) + " is not monic of degree " + std::to_string(n));
    }
}

Rational BasisExpansion::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return Rational(0);
    return coeffs[static_cast<size_t>(i)];
}

Poly BasisExpansion::reconstruct(const MonicSequence& seq) const {
    Poly out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out += seq[static_cast<int>(i)] * coeffs[i];
    }
    return out;
}

bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
    const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (size_t i = 0; i < n; ++i)
        if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
    return true;
}

MonicSequence generate(const RecurrenceTable& rt, int N) {
    if (N < 0) throw std::invalid_argument("sequence length must be non-negative");
    const int d = rt.d();
    std::vector<Poly> p;
    p.reserve(static_cast<size_t>(N) + 1);
    p.push_back(Poly::constant(1));
    for (int n = 1; n <= N; ++n) {
        Poly next = p[static_cast<size_t>(n - 1)].shift(1) - p[static_cast<size_t>(n - 1)] * rt.beta(n - 1);
        for (int nu = 0; nu <= std::min(n - 2, d - 1); ++nu) {
            const Rational& g = rt.gamma_upper(d - 1 - nu, n - 1 - nu);
            if (!g.is_zero()) next -= p[static_cast<size_t>(n - 2 - nu)] * g;
        }
        p.push_back(std::move(next));
    }
    return MonicSequence(std::move(p), "recurrence d=" + std::to_string(d), rt);
}

BasisExpansion multiply_by_x(const MonicSequence& seq, const RecurrenceTable& rt, int n) {
    if (rt.d() != 2) throw std::invalid_argument("multiply_by_x needs a d = 2 table");
    if (n < 0 || n + 1 > seq.top())
        throw IndexOutOfRange("x P_" + std::to_string(n) + " needs P_" + std::to_string(n + 1));
    BasisExpansion e;
    e.coeffs.assign(static_cast<size_t>(n) + 2, Rational(0));
    e.coeffs[static_cast<size_t>(n + 1)] = 1;
    e.coeffs[static_cast<size_t>(n)] = rt.beta(n);
    if (n >= 1) e.coeffs[static_cast<size_t>(n - 1)] = rt.alpha(n);
    if (n >= 2) e.coeffs[static_cast<size_t>(n - 2)] = rt.gamma(n - 1);
    return e;
}

BasisExpansion expand_in_basis(const Poly& p, const MonicSequence& seq) {
    if (p.degree() > seq.top())
        throw DegreeTooLarge("degree " + std::to_string(p.degree()) + " exceeds basis top " +
                             std::to_string(seq.top()));
    BasisExpansion e;
    if (p.is_zero()) return e;
    e.coeffs.assign(static_cast<size_t>(p.degree()) + 1, Rational(0));
    Poly rest = p;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = rest.coeff(k);
        if (c.is_zero()) continue;
        e.coeffs[static_cast<size_t>(k)] = c;
        rest -= seq[k] * c;
    }
    return e;
}

StructureCoeffs structure_coeffs(const MonicSequence& seq) {
    const int N = seq.top();
    if (N < 1) throw std::invalid_argument("structure coefficients need P_0 and P_1");
    StructureCoeffs sc;
    for (int n = 0; n < N; ++n) {
        const auto e = expand_in_basis(seq[n].shift(1), seq);
        sc.beta.push_back(e.coeff(n));
        if (n >= 1) {
            std::vector<Rational> row;
            for (int nu = 0; nu <= n - 1; ++nu) row.push_back(e.coeff(nu));
            sc.chi.push_back(std::move(row));
        }
    }
    return sc;
}

DualMoments dual_moments(const MonicSequence& seq, int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    DualMoments dm;
    dm.moments.assign(static_cast<size_t>(d), {});
    for (int n = 0; n <= seq.top(); ++n) {
        const auto e = expand_in_basis(Poly::monomial(n), seq);
        for (int i = 0; i < d; ++i) dm.moments[static_cast<size_t>(i)].push_back(e.coeff(i));
    }
    return dm;
}

VerificationReport check_d_orthogonality(const MonicSequence& seq, int d, int M) {
    if (d < 1 || M < 0) throw std::invalid_argument("need d >= 1 and M >= 0");
    const int N = seq.top();
    const int need = M * (d + 1) + d;
    if (N < need)
        throw InsufficientDegree("d-orthogonality up to m = " + std::to_string(M) + " needs P_0..P_" +
                                 std::to_string(need) + ", have P_0..P_" + std::to_string(N));
    // <u_i, q> is the coefficient of P_i in the expansion of q.
    std::map<std::pair<int, int>, BasisExpansion> cache;
    const auto pairing = [&](int i, int m, int n) {
        auto it = cache.find({m, n});
        if (it == cache.end()) it = cache.emplace(std::pair{m, n}, expand_in_basis(seq[m] * seq[n], seq)).first;
        return it->second.coeff(i);
    };

    VerificationReport r;
    for (int m = 0; m <= M; ++m) {
        for (int nu = 0; nu < d; ++nu) {
            const int n0 = m * d + nu;
            r.check_scalar("regularity", n0, pairing(nu, m, n0), false, m, nu);
            for (int n = n0 + 1; n + m <= N; ++n) r.check_scalar("orthogonality", n, pairing(nu, m, n), true, m, nu);
        }
    }
    r.note("d-orthogonality certified for m <= " + std::to_string(M) + " and n <= " + std::to_string(N) + " - m");
    return r;
}

MonicSequence derivative_sequence(const MonicSequence& seq) {
    if (seq.top() < 1) throw std::invalid_argument("derivative sequence needs P_1");
    std::vector<Poly> q;
    for (int n = 0; n < seq.top(); ++n) q.push_back(derivative(seq[n + 1]) * Rational(1, n + 1));
    return MonicSequence(std::move(q), "derivative of " + seq.provenance());
}

RecurrenceTable extract_two_orthogonal_table(const MonicSequence& seq) {
    const auto sc = structure_coeffs(seq);
    std::vector<Rational> alpha, gamma;
    // chi[n] is the row for x P_{n+1}.
    for (size_t n = 0; n < sc.chi.size(); ++n) {
        const auto& row = sc.chi[n];
        const int ni = static_cast<int>(n);
        for (int nu = 0; nu + 2 <= ni; ++nu) {
            if (!row[static_cast<size_t>(nu)].is_zero())
                throw NotTwoOrthogonal(ni, nu,
                                       "structure coefficient chi_{" + std::to_string(ni) + "," + std::to_string(nu) +
                                           "} = " + row[static_cast<size_t>(nu)].str() + " is nonzero");
        }
        alpha.push_back(row[n]);
        if (n >= 1) {
            if (row[n - 1].is_zero())
                throw NotTwoOrthogonal(ni, -1, "gamma_" + std::to_string(ni) + " vanishes (regularity fails)");
            gamma.push_back(row[n - 1]);
        }
    }
    return RecurrenceTable::two_orthogonal(sc.beta, std::move(alpha), std::move(gamma));
}

VerificationReport compare_tables(const RecurrenceTable& expected, const RecurrenceTable& actual, int N,
                                  const std::string& label) {
    VerificationReport r;
    for (int n = 0; n <= N; ++n)
        r.check_equal(label + ":beta", n, Poly::constant(actual.beta(n)), Poly::constant(expected.beta(n)));
    for (int n = 1; n <= N; ++n)
        r.check_equal(label + ":alpha", n, Poly::constant(actual.alpha(n)), Poly::constant(expected.alpha(n)));
    for (int n = 1; n <= N; ++n)
        r.check_equal(label + ":gamma", n, Poly::constant(actual.gamma(n)), Poly::constant(expected.gamma(n)));
    return r;
}

}  // namespace dortho
