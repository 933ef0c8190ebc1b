// Floating-point side: the character (12/n), the constants beta(nu, j, m),
// partial twisted Dirichlet sums, their truncated weighted double sum, and
// Petersson-norm estimates.
#pragma once

#include <vector>

#include "pentarec/exactnum.hpp"
#include "pentarec/hecke.hpp"

namespace pentarec {

/// (12/n): 0 when gcd(n, 12) > 1, +1 for n = +-1 mod 12, -1 for n = +-5 mod 12.
int kronecker12(long n);

/// beta(nu, j, m) exactly; a rational times pi^(1 - 2nu).
PiScalar beta_constant(int nu, int j, long m);

enum class FloatMode { Binary64, Extended };

struct FloatConfig {
  FloatMode mode = FloatMode::Binary64;
  unsigned long bits = 256;  // mantissa bits in Extended mode
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// D(f, N; s) = sum_{n=1}^{N} (12/n) a_f((n^2-1)/24) / n^s in the real
/// embedding with sqrt(d) > 0.
double dirichlet_partial(const Eigenform& f, long N, long s);

/// Largest coefficient index dirichlet sums up to N touch, plus one.
long dirichlet_coeffs_needed(long N);

/// D^_f(M, N) = sum_{j=0}^{nu-2} sum_{m=0}^{M} beta(nu, j, m) D(f, N; 2nu+1+2m+2j),
/// j outer, m inner.
double df_truncated(const Eigenform& f, int nu, long M, long N, FloatConfig cfg = {});

struct NormEstimate {
  int nu = 0;
  long M = 0;
  long N = 0;
  std::vector<double> df_hat;         // D^_{f_i}(M, N)
  std::vector<QuadNum> df_over_norm;  // exact gamma_i
  std::vector<double> norms;          // df_hat / gamma
};

/// ||f_i|| ~ D^_{f_i}(M, N) / (D_{f_i} / ||f_i||) for each eigenform of S_{2nu}.
NormEstimate petersson_norm_estimate(int nu, long M, long N, FloatConfig cfg = {});

}  // namespace pentarec
