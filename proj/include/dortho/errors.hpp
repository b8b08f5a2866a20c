#ifndef DORTHO_ERRORS_HPP
#define DORTHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dortho {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (bad rational literal, bad JSON shape).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// A coefficient a_nu of an operator (or an image J(x^n)) has degree above nu.
class DegreeViolation : public Error {
   public:
    DegreeViolation(int index, int degree)
        : Error("degree violation at index " + std::to_string(index) + ": degree " + std::to_string(degree) +
                " exceeds " + std::to_string(index)),
          index_(index) {}
    int index() const noexcept { return index_; }

   private:
    int index_;
};

class InvalidProbe : public Error {
   public:
    using Error::Error;
};

/// A recurrence-table entry needed by the computation is not tabulated.
class MissingCoefficient : public Error {
   public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
   public:
    using Error::Error;
};

class InsufficientDegree : public Error {
   public:
    using Error::Error;
};

class NotIsomorphism : public Error {
   public:
    using Error::Error;
};

/// lambda_k == lambda_n for some k < n: the monic eigenpolynomial of degree n is not unique.
class EigenvalueCollision : public Error {
   public:
    EigenvalueCollision(int k, int n)
        : Error("eigenvalue collision: lambda_" + std::to_string(k) + " == lambda_" + std::to_string(n)), k_(k), n_(n) {}
    int lower() const noexcept { return k_; }
    int index() const noexcept { return n_; }

   private:
    int k_;
    int n_;
};

/// The eigen family does not obey a four-term recurrence with nonvanishing gamma.
/// `nu() < 0` means the failure is a vanishing gamma_n rather than a stray structure coefficient.
class NotTwoOrthogonal : public Error {
   public:
    NotTwoOrthogonal(int n, int nu, const std::string& what) : Error(what), n_(n), nu_(nu) {}
    int n() const noexcept { return n_; }
    int nu() const noexcept { return nu_; }

   private:
    int n_;
    int nu_;
};

class ZeroParameter : public Error {
   public:
    using Error::Error;
};

class DiscriminantNonzero : public Error {
   public:
    using Error::Error;
};

}  // namespace dortho

#endif
