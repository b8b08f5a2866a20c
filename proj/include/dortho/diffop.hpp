#ifndef DORTHO_DIFFOP_HPP
#define DORTHO_DIFFOP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dortho/poly.hpp"

namespace dortho {

/*
 * Finite-order linear operator on polynomials,
 *
 *     J = sum_{nu=0}^{K} a_nu(x) / nu! * D^nu,
 *
 * stored as the coefficient list a_0(x), ..., a_K(x) with trailing zero
 * entries trimmed. A primary operator enforces deg a_nu <= nu, which is
 * exactly the condition for J not to raise degrees. Operators produced by
 * shifted() waive that check and carry is_shifted() == true.
 */
class DiffOperator {
   public:
    DiffOperator() = default;
    /// Throws DegreeViolation naming the first nu with deg a_nu > nu.
    explicit DiffOperator(std::vector<Poly> coeffs);

    /// Highest index with a nonzero coefficient; 0 for the zero operator.
    int order() const noexcept { return a_.empty() ? 0 : static_cast<int>(a_.size()) - 1; }
    bool is_zero() const noexcept { return a_.empty(); }
    bool is_shifted() const noexcept { return shifted_; }

    /// a_nu(x); the zero polynomial past the stored range.
    const Poly& coeff(int nu) const;
    /// a_i^{[nu]}, the coefficient of x^i in a_nu(x).
    Rational coeff(int i, int nu) const { return coeff(nu).coeff(i); }
    std::span<const Poly> coeffs() const noexcept { return a_; }

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

   private:
    friend DiffOperator shifted(const DiffOperator& J, int m);

    std::vector<Poly> a_;
    bool shifted_ = false;
};

/// sum_{nu <= min(K, deg p)} a_nu(x) p^{(nu)}(x) / nu!
Poly apply(const DiffOperator& J, const Poly& p);

/// J(x^n) = sum_{nu=0}^{n} a_nu(x) C(n, nu) x^{n-nu}
Poly apply_monomial(const DiffOperator& J, int n);

/// Coefficient of x^tau in J(x^n) through the double-sum form
/// sum_{nu=0}^{tau} C(n, n-nu) a_{tau-nu}^{[n-nu]}.
Rational monomial_image_coefficient(const DiffOperator& J, int n, int tau);

/// Recovers the unique a_0..a_N (deg a_nu <= nu) with J(x^n) = images[n].
/// Throws DegreeViolation when deg images[n] > n.
DiffOperator from_action(std::span<const Poly> images);

/// J^{(m)} = sum_n a_{n+m}(x) / n! D^n. The degree constraint is waived.
DiffOperator shifted(const DiffOperator& J, int m);

/// Right-hand side of the product rule, sum_n J^{(n)}(f) g^{(n)} / n!.
Poly leibniz_expand(const DiffOperator& J, const Poly& f, const Poly& g);

/*
 * The diagonal sums lambda_{n+k}^{[k]} = sum_{nu=0}^{n} C(n+k, n+k-nu) a_{n-nu}^{[n+k-nu]}
 * for n = 0..N. When J lowers degrees by k these are the leading
 * coefficients of J(x^{n+k}); for k = 0 they reduce to sum_mu C(n,mu) a_mu^{[mu]}.
 */
struct EigenvalueTable {
    int shift = 0;
    std::vector<Rational> values;  // values[n] = lambda_{n+shift}^{[shift]}

    int size() const noexcept { return static_cast<int>(values.size()); }
    /// lambda_m^{[shift]} for shift <= m < shift + size(); throws IndexOutOfRange otherwise.
    const Rational& at(int m) const;
};

EigenvalueTable lambda_table(const DiffOperator& J, int k, int N);

/// lambda_{n+k}^{[k]} as a polynomial in n (exact for every integer n >= 0).
Poly lambda_polynomial(const DiffOperator& J, int k);

enum class Nonvanishing { AllN, VanishesAt, Undecided, NotApplicable };

struct ClosedFormCheck {
    Nonvanishing status = Nonvanishing::NotApplicable;
    int root = -1;  // smallest n >= 0 with q(n) = 0 when status == VanishesAt
};

/// Decides whether q(n) != 0 for every integer n >= 0, via the rational root
/// test bounded by the Cauchy root bound. Undecided only for astronomically
/// large bounds.
ClosedFormCheck nonvanishing_on_naturals(const Poly& q);

enum class OperatorKind { Isomorphism, DerivativeLike, Degenerate };

struct OperatorClass {
    OperatorKind kind = OperatorKind::Degenerate;
    int k = 0;  // lowering order for DerivativeLike
    int probe_bound = 0;
    std::optional<int> witness_index;
    std::string witness;
    /// Closed-form nonvanishing of the relevant lambda sequence over all n.
    ClosedFormCheck closed_form;
};

std::string to_string(OperatorKind kind);

/// Certifies the class only for n <= probe_bound; see OperatorClass::closed_form
/// for the all-n verdict. Throws InvalidProbe when probe_bound < K + 1.
OperatorClass classify(const DiffOperator& J, int probe_bound);

}  // namespace dortho

#endif
