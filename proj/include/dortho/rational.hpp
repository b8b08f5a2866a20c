#ifndef DORTHO_RATIONAL_HPP
#define DORTHO_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dortho {

/*
 * Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0,
 * zero is 0/1. Backed by GMP's mpq_class.
 */
class Rational {
   public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : q_(mpz_class(static_cast<long>(n))) {}
    template <std::integral I, std::integral J>
    Rational(I num, J den);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& value() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& rhs) {
        q_ += rhs.q_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        q_ -= rhs.q_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        q_ *= rhs.q_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    mpq_class q_;
};

template <std::integral I, std::integral J>
Rational::Rational(I num, J den) : q_(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n, n >= 0.
mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace dortho

#endif
