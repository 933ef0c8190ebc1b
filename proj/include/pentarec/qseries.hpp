// Truncated formal series over Rat on an exponent grid of step 1/Grid.
//
// A series stores coefficients for exponents offset .. prec-1 (in grid units)
// and is exactly known below prec. Operations never invent coefficients at or
// above the precision their inputs guarantee.
#pragma once

#include <string>
#include <vector>

#include "pentarec/exactnum.hpp"

namespace pentarec {

template <long Grid>
class Series {
 public:
  Series() = default;
  /// coeffs[i] multiplies q^((offset + i) / Grid); needs coeffs.size() == prec - offset.
  Series(long offset, long prec, std::vector<Rat> coeffs);

  static Series zero(long offset, long prec) {
    return Series(offset, prec, std::vector<Rat>(static_cast<std::size_t>(prec - offset)));
  }
  static Series monomial(long exponent, const Rat& c, long prec);
  static Series one(long prec) { return monomial(0, Rat(1), prec); }

  long offset() const { return offset_; }
  long prec() const { return prec_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Coefficient of q^(exponent / Grid). Zero below the offset; PrecisionError
  /// at or above prec.
  Rat coeff(long exponent) const;
  const Rat& at(long exponent) const { return coeffs_[static_cast<std::size_t>(exponent - offset_)]; }

  /// Same series known only below new_prec (new_prec <= prec).
  Series truncated(long new_prec) const;
  /// Drops leading zero coefficients.
  Series normalized() const;
  bool is_zero() const;

 private:
  long offset_ = 0;
  long prec_ = 1;
  std::vector<Rat> coeffs_{Rat(0)};
};

/// Series in q^(1/24): the home of eta, 1/eta and their derivatives.
using QSeries24 = Series<24>;
/// Series in integer powers of q.
using IntQSeries = Series<1>;

template <long G> Series<G> operator+(const Series<G>& a, const Series<G>& b);
template <long G> Series<G> operator-(const Series<G>& a, const Series<G>& b);
template <long G> Series<G> operator-(const Series<G>& a);
template <long G> Series<G> operator*(const Rat& c, const Series<G>& a);

/// Convolution product; prec = min(a.prec + b.offset, b.prec + a.offset).
template <long G> Series<G> mul(const Series<G>& a, const Series<G>& b);
template <long G> Series<G> operator*(const Series<G>& a, const Series<G>& b) { return mul(a, b); }

/// Serial reference product, kept for the kernel equivalence tests.
template <long G> Series<G> mul_serial(const Series<G>& a, const Series<G>& b);

template <long G> Series<G> pow(const Series<G>& a, unsigned long e, long prec);

/// Multiplicative inverse; the stored leading coefficient must be nonzero.
/// Result offset is -a.offset and it carries as many terms as a does.
template <long G> Series<G> invert(const Series<G>& a);

/// D = q d/dq: coefficient at exponent e/G is multiplied by e/G.
template <long G> Series<G> d_operator(const Series<G>& a);
template <long G> Series<G> d_operator(const Series<G>& a, unsigned r);

/// Termwise equality through min(a.prec, b.prec).
template <long G> bool equal_through_precision(const Series<G>& a, const Series<G>& b);

/// Down-converts to integer exponents. Every known coefficient off the integer
/// lattice must vanish, else InternalError.
IntQSeries to_int_series(const QSeries24& a);
QSeries24 to_series24(const IntQSeries& a);

/// eta = sum_k (-1)^k q^((6k+1)^2/24), known below q^(prec24/24).
QSeries24 eta_expansion(long prec24);
/// q^(1/24) prod_{n>=1} (1 - q^n), built by multiplying the factors out.
QSeries24 eta_product_expansion(long prec24);
/// 1/eta = q^(-1/24) sum p(n) q^n, by inverting eta_expansion.
QSeries24 eta_inverse_expansion(long prec24);

/// prod_{n>=1} (1 - q^n) through q^(prec-1), factor by factor.
IntQSeries euler_product(long prec);

}  // namespace pentarec
