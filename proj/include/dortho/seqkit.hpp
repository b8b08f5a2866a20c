#ifndef DORTHO_SEQKIT_HPP
#define DORTHO_SEQKIT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dortho/poly.hpp"
#include "dortho/report.hpp"

namespace dortho {

/*
 * Coefficients of the (d+1)-term recurrence
 *
 *   P_n = (x - beta_{n-1}) P_{n-1} - sum_{nu=0}^{min(n-2, d-1)} gamma^{d-1-nu}_{n-1-nu} P_{n-2-nu},
 *
 * which covers both the initial conditions (2 <= n <= d) and the generic
 * step. beta is indexed from 0; every gamma^j is indexed from 1. For d = 2
 * the usual names are alpha_n = gamma^1_n and gamma_n = gamma^0_n.
 */
class RecurrenceTable {
   public:
    using Generator = std::function<Rational(int)>;

    RecurrenceTable() = default;
    /// gammas[j][m-1] = gamma^j_m for j = 0..d-1.
    RecurrenceTable(int d, std::vector<Rational> beta, std::vector<std::vector<Rational>> gammas);

    /// d = 2 table; alpha[0] = alpha_1, gamma[0] = gamma_1.
    static RecurrenceTable two_orthogonal(std::vector<Rational> beta, std::vector<Rational> alpha,
                                          std::vector<Rational> gamma);
    /// d = 2 table from closed forms: beta_0..beta_N, alpha_1..alpha_N, gamma_1..gamma_N.
    static RecurrenceTable two_orthogonal(int N, const Generator& beta, const Generator& alpha,
                                          const Generator& gamma);

    int d() const noexcept { return d_; }
    int beta_count() const noexcept { return static_cast<int>(beta_.size()); }
    int gamma_count(int j) const { return static_cast<int>(gammas_.at(static_cast<size_t>(j)).size()); }

    /// Throw MissingCoefficient when the entry is not tabulated.
    const Rational& beta(int n) const;
    const Rational& gamma_upper(int j, int m) const;
    const Rational& alpha(int n) const;  // d == 2 only
    const Rational& gamma(int n) const;  // d == 2 only

    /// Every tabulated gamma^0_m is nonzero.
    bool regular() const noexcept { return regular_; }
    std::optional<int> first_vanishing_gamma() const;

    const std::vector<Rational>& betas() const noexcept { return beta_; }
    const std::vector<std::vector<Rational>>& gammas() const noexcept { return gammas_; }

    friend bool operator==(const RecurrenceTable&, const RecurrenceTable&) = default;

   private:
    int d_ = 1;
    std::vector<Rational> beta_;
    std::vector<std::vector<Rational>> gammas_;
    bool regular_ = true;
};

/// Monic P_0..P_N with deg P_n = n.
class MonicSequence {
   public:
    MonicSequence() = default;
    /// Throws std::invalid_argument unless every polys[n] is monic of degree n.
    explicit MonicSequence(std::vector<Poly> polys, std::string provenance = {},
                           std::optional<RecurrenceTable> table = {});

    int size() const noexcept { return static_cast<int>(p_.size()); }
    /// Highest tabulated index N.
    int top() const noexcept { return size() - 1; }
    const Poly& operator[](int n) const { return p_.at(static_cast<size_t>(n)); }
    const std::vector<Poly>& polys() const noexcept { return p_; }
    const std::string& provenance() const noexcept { return provenance_; }
    const std::optional<RecurrenceTable>& table() const noexcept { return table_; }

   private:
    std::vector<Poly> p_;
    std::string provenance_;
    std::optional<RecurrenceTable> table_;
};

/// Coefficients c_0..c_m of sum c_nu P_nu.
struct BasisExpansion {
    std::vector<Rational> coeffs;

    Rational coeff(int i) const;
    Poly reconstruct(const MonicSequence& seq) const;
    friend bool operator==(const BasisExpansion& a, const BasisExpansion& b);
};

/// x P_{n+1} = P_{n+2} + beta_{n+1} P_{n+1} + sum_{nu<=n} chi_{n,nu} P_nu, and x P_0 = P_1 + beta_0 P_0.
struct StructureCoeffs {
    std::vector<Rational> beta;              // beta_0..beta_{N-1}
    std::vector<std::vector<Rational>> chi;  // chi[n][nu], 0 <= nu <= n <= N-2
};

/// moments[i][n] = (u_i)_n = <u_i, x^n>.
struct DualMoments {
    std::vector<std::vector<Rational>> moments;
};

MonicSequence generate(const RecurrenceTable& rt, int N);

/// x P_n = P_{n+1} + beta_n P_n + alpha_n P_{n-1} + gamma_{n-1} P_{n-2}, with P_{-i} = 0.
BasisExpansion multiply_by_x(const MonicSequence& seq, const RecurrenceTable& rt, int n);

/// Throws DegreeTooLarge when deg p exceeds the top of the sequence.
BasisExpansion expand_in_basis(const Poly& p, const MonicSequence& seq);

StructureCoeffs structure_coeffs(const MonicSequence& seq);

DualMoments dual_moments(const MonicSequence& seq, int d);

/*
 * Checks <u_nu, P_m P_n> = 0 for md + nu + 1 <= n <= N - m and
 * <u_nu, P_m P_{md+nu}> != 0 for all m <= M, nu < d. Certification is
 * therefore finite: it covers what the tabulated sequence can express.
 * Requires N >= M(d+1) + d; throws InsufficientDegree otherwise.
 */
VerificationReport check_d_orthogonality(const MonicSequence& seq, int d, int M);

/// Q_n = P'_{n+1} / (n+1), n = 0..N-1.
MonicSequence derivative_sequence(const MonicSequence& seq);

/// Reads a d = 2 table off the structure coefficients: beta_0..beta_{N-1},
/// alpha_1..alpha_{N-1}, gamma_1..gamma_{N-2}. Throws NotTwoOrthogonal if
/// some chi_{n,nu} with nu <= n-2 is nonzero or some gamma_n vanishes.
RecurrenceTable extract_two_orthogonal_table(const MonicSequence& seq);

/// Compares beta_0..beta_N, alpha_1..alpha_N and gamma_1..gamma_N of two d = 2 tables.
VerificationReport compare_tables(const RecurrenceTable& expected, const RecurrenceTable& actual, int N,
                                  const std::string& label);

}  // namespace dortho

#endif
