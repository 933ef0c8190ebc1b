// The Kloosterman-Bessel series for the coefficients of 1/eta: the eta
// multiplier system, generalized Kloosterman sums with t = 24, kappa = 23,
// I_{3/2}, and partial sums converging to p(n).
#pragma once

#include <complex>
#include <vector>

#include "pentarec/exactnum.hpp"
#include "pentarec/kernels.hpp"

namespace pentarec {

/// sign * exp(pi i e / 12) with e in [0, 24).
struct Root24 {
  int sign = 1;
  int e = 0;

  Root24 operator*(const Root24& o) const;
  Root24 conj() const;
  Root24 pow(long k) const;
  /// Same value with sign folded into e (sign = +1).
  Root24 canonical() const;
  std::complex<double> value() const;
  bool operator==(const Root24& o) const;
};

/// eta(gamma tau) = eps(gamma) (c tau + d)^(1/2) eta(tau) for gamma = [a b; c d].
Root24 eta_multiplier(long a, long b, long c, long d);

inline constexpr long kCuspWidth = 24;
inline constexpr long kCuspParameter = 23;

struct KloostermanSum {
  long c = 0;
  std::complex<double> value;
  long term_count = 0;
  kernels::PhaseHistogram histogram;
};

/// K_c(m, n) = sum over S = [a b; c d] with 0 <= a, d < 24c of
/// eps(S) exp(2 pi i ((m + 23) a + (n + 23) d) / (24 c)).
/// Enumerates d coprime to c and a in the class of d^{-1} mod c.
KloostermanSum kloosterman(long c, long m, long n);
/// Literal double loop over (a, d) in [0, 24c)^2 with ad = 1 mod c.
KloostermanSum kloosterman_literal(long c, long m, long n);

/// I_{3/2}(x) for x > 0.
double bessel_i32(double x);

struct RademacherResult {
  long n = 0;
  long depth = 0;
  double estimate = 0.0;
  Int nearest;
  double gap = 0.0;
  /// |Im| / |value| of the complex partial sum before taking the real part.
  double imag_residual = 0.0;
};

/// Contribution of one c to the coefficient of q^((24n-1)/24) in 1/eta,
/// before the overall prefactor.
std::complex<double> rademacher_term(long n, long c);

/// Partial sum over 1 <= c <= C, terms computed in parallel and accumulated
/// in ascending c.
RademacherResult rademacher_pn(long n, long C);
/// Results at every depth 1..C from one pass (index C-1 holds depth C).
std::vector<RademacherResult> rademacher_convergence(long n, long C);
/// Serial reference of rademacher_pn.
RademacherResult rademacher_pn_serial(long n, long C);

}  // namespace pentarec
