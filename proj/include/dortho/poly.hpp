#ifndef DORTHO_POLY_HPP
#define DORTHO_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dortho/rational.hpp"

namespace dortho {

/*
 * Dense univariate polynomial with exact rational coefficients, stored in
 * ascending degree. The leading stored coefficient is never zero; the zero
 * polynomial has no stored coefficients and degree -1.
 */
class Poly {
   public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& c);
    /// c * x^n
    static Poly monomial(int n, const Rational& c = Rational(1));
    static Poly x() { return monomial(1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const noexcept { return c_; }

    Rational operator()(const Rational& x0) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Multiplication by x^k.
    Poly shift(int k) const;

    /// Human-readable form, e.g. "x^3 + 24*x^2 - 24*x + 8".
    std::string str() const;

   private:
    void trim();

    std::vector<Rational> c_;
};

/// The order-th derivative; zero when order exceeds the degree.
Poly derivative(const Poly& p, int order = 1);

/// Horner evaluation.
Rational eval(const Poly& p, const Rational& x0);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace dortho

#endif
