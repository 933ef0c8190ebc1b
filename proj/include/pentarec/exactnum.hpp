// Exact scalar arithmetic: big rationals, Bernoulli numbers, factorial
// variants, Gamma at half-integers, and real quadratic field elements.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pentarec {

using Int = mpz_class;
/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in
/// canonical form; values built from a raw numerator/denominator pair must go
/// through make_rat().
using Rat = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised when a series operation would need coefficients beyond the known
/// precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails (a bug, never user input).
class InternalError : public Error {
 public:
  using Error::Error;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

std::string to_string(const Rat& x);
std::string to_string(const Int& x);
/// Parses "p", "-p" or "p/q".
Rat parse_rat(const std::string& s);

Int factorial(unsigned long n);
Int binomial(long n, long k);
Int int_pow(long base, unsigned long exp);

/// B_n with the B_1 = -1/2 convention.
Rat bernoulli(unsigned long n);

/// (x)_m: x(x-1)...(x-m+1) for m >= 1, 1 for m = 0, 1/(x)_{-m} for m <= -1.
Rat falling_factorial(const Rat& x, long m);

/// x(x+1)...(x+j-1); 1 when j = 0.
Rat rising_factorial(const Rat& x, long j);

/// pi to `bits` of mantissa (Machin's formula, cached per precision).
mpf_class pi_mpf(unsigned long bits);

/// coeff * pi^(half_pi_pow / 2). Zero is always stored with half_pi_pow = 0.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(Rat coeff, long half_pi_pow);

  const Rat& coeff() const { return coeff_; }
  long half_pi_pow() const { return half_pi_pow_; }
  bool is_zero() const { return sgn(coeff_) == 0; }

  PiScalar operator*(const PiScalar& o) const;
  PiScalar operator/(const PiScalar& o) const;
  PiScalar operator*(const Rat& r) const;
  PiScalar operator-() const;
  bool operator==(const PiScalar& o) const = default;

  double to_double() const;
  long double to_long_double() const;
  /// Conversion at `bits` of mantissa precision.
  mpf_class to_mpf(unsigned long bits) const;

 private:
  Rat coeff_{0};
  long half_pi_pow_ = 0;
};

/// Exact Gamma at a positive half-integer, or at a negative half-odd-integer.
/// Throws DomainError at the poles 0, -1, -2, ... and for other inputs.
PiScalar gamma_exact(const Rat& x);

/// a + b*sqrt(d) with d squarefree and positive. d = 1 marks a rational value
/// (b is then folded into a).
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rat a);  // NOLINT: rationals embed implicitly
  QuadNum(long a) : QuadNum(Rat(a)) {}  // NOLINT
  QuadNum(Rat a, Rat b, Int d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& d() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadNum conjugate() const;
  /// a^2 - d b^2.
  Rat norm() const;

  QuadNum operator+(const QuadNum& o) const;
  QuadNum operator-(const QuadNum& o) const;
  QuadNum operator*(const QuadNum& o) const;
  QuadNum operator/(const QuadNum& o) const;
  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
  QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
  QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
  bool operator==(const QuadNum& o) const;

  /// Real embedding with sqrt(d) > 0.
  double to_double() const;
  mpf_class to_mpf(unsigned long bits) const;

 private:
  Rat a_{0};
  Rat b_{0};
  Int d_{1};
};

std::string to_string(const QuadNum& x);

/// Kronecker symbol (a/n) for any integers a, n (GMP backed).
int kronecker_symbol(long a, long n);

/// True when no prime square divides n (n >= 1).
bool is_squarefree(const Int& n);

/// Splits n > 0 as s^2 * d with d squarefree. Trial division runs up to
/// `bound`; an unresolved composite cofactor that is not a perfect square
/// raises DomainError.
struct SquarefreeSplit {
  Int square_root;  // s
  Int squarefree;   // d
};
SquarefreeSplit squarefree_split(const Int& n, unsigned long bound = 1000000);

}  // namespace pentarec
