#ifndef DORTHO_EIGENFAM_HPP
#define DORTHO_EIGENFAM_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dortho/diffop.hpp"
#include "dortho/report.hpp"
#include "dortho/seqkit.hpp"

namespace dortho {

/*
 * Coefficients of the third-order operator
 *   J = a_0 I + a_1(x) D + a_2(x)/2 D^2 + a_3(x)/6 D^3,
 * named a{i}_{nu} for a_i^{[nu]}, the coefficient of x^i in a_nu(x).
 */
struct ThirdOrderParams {
    Rational a0_0;
    Rational a0_1, a1_1;
    Rational a0_2, a1_2, a2_2;
    Rational a0_3, a1_3, a2_3, a3_3;

    DiffOperator op() const;
    /// Reads the coefficients off an operator of order <= 3.
    static ThirdOrderParams from_operator(const DiffOperator& J);
};

/// a_1 = a0_1 + a1_1 x, a_2 = a0_2, a_3 = a0_3 (constant, nonzero).
struct Case1Params {
    Rational a0_0, a0_1, a1_1, a0_2, a0_3;

    DiffOperator op() const;
};

/*
 * a_1 = a0_1 + a1_1 x, a_2 = 0, a_3 = a0_3 + a1_3 x + a2_3 x^2 with
 * vanishing discriminant. The auxiliary constants b_0..b_2 and f_0..f_4
 * are evaluated once at construction.
 */
class Case2Params {
   public:
    /// Throws ZeroParameter if a1_1 == 0, DiscriminantNonzero if (a1_3)^2 != 4 a2_3 a0_3.
    Case2Params(Rational a0_0, Rational a0_1, Rational a1_1, Rational a0_3, Rational a1_3, Rational a2_3);

    const Rational& a0_0() const noexcept { return a0_0_; }
    const Rational& a0_1() const noexcept { return a0_1_; }
    const Rational& a1_1() const noexcept { return a1_1_; }
    const Rational& a0_3() const noexcept { return a0_3_; }
    const Rational& a1_3() const noexcept { return a1_3_; }
    const Rational& a2_3() const noexcept { return a2_3_; }
    const std::array<Rational, 3>& b() const noexcept { return b_; }
    const std::array<Rational, 5>& f() const noexcept { return f_; }

    DiffOperator op() const;

   private:
    Rational a0_0_, a0_1_, a1_1_, a0_3_, a1_3_, a2_3_;
    std::array<Rational, 3> b_;
    std::array<Rational, 5> f_;
};

/// (1/6)(x-1)^2 D^3 + (1/24) x D + a0_0 I
DiffOperator corollary42_operator(const Rational& a0_0 = Rational(1));

/// The seven coefficients of the J^{(2)} expansion, all evaluated at one index n.
struct StepTwoCoeffs {
    Rational A, B, C, D, F, G, H;
};

/// Monic P with J(P) = lambda_n^{[0]} P and deg P = n, by triangular solve.
/// Throws NotIsomorphism or EigenvalueCollision.
Poly eigenpoly(const DiffOperator& J, int n);

struct DerivedRecurrence {
    RecurrenceTable table;  // beta_0..beta_{N+1}, alpha_1..alpha_{N+1}, gamma_1..gamma_N
    MonicSequence sequence;  // P_0..P_{N+2}
    VerificationReport report;
};

/// Eigen-oracle: builds P_0..P_{N+2} by eigenpoly and reads off the d = 2
/// table. Throws NotTwoOrthogonal when the structure coefficients do not
/// have four-term shape or some gamma_n vanishes.
DerivedRecurrence derive_recurrence(const DiffOperator& J, int N);

/// Throws ZeroParameter when a1_1 or a0_3 is zero.
RecurrenceTable case1_coeffs(const Case1Params& p, int N);
RecurrenceTable case2_coeffs(const Case2Params& p, int N);
RecurrenceTable corollary42_coeffs(int N);

/// A_n..H_n at index n. Off-range low indices use alpha_m = gamma_m = 0 for
/// m <= 0 and zero beta/lambda for negative indices; missing high entries
/// throw IndexOutOfRange.
StepTwoCoeffs steptwo_coeffs(const EigenvalueTable& lambdas, const RecurrenceTable& rt, int n);

/// Coefficients of P_{n+5}, P_{n+4}, ..., P_{n-4} in the J^{(3)}(P_{n+2}) expansion.
std::array<Rational, 10> j3_expansion_coeffs(const Rational& a3_3, const EigenvalueTable& lambdas,
                                              const RecurrenceTable& rt, int n);

enum class KnownFamily { None, Case1, Corollary42 };
KnownFamily detect_family(const DiffOperator& J);

/*
 * For n <= N: J(P_n) = lambda_n P_n, the J^{(1)}, J^{(2)} and J^{(3)}
 * expansions, the J^{(3)}(P_0) and J^{(3)}(P_1) closed forms, and the
 * extra relations of the recognised family. rt must cover index N+7.
 */
VerificationReport verify_expansions(const DiffOperator& J, const RecurrenceTable& rt, int N);

enum class Solvability { Case1, Case2, NoSolution, Reduced, Unclassified };
std::string to_string(Solvability s);

struct SolvabilityResult {
    Solvability tag = Solvability::Unclassified;
    std::vector<std::string> notes;
    /// Residues of the difference equations / structure shape, filled for Unclassified.
    std::vector<std::pair<std::string, Rational>> residues;
};

SolvabilityResult classify_solvability(const ThirdOrderParams& p);

}  // namespace dortho

#endif
