// Hecke operators, normalized eigenforms over real quadratic fields, the
// Hecke trace series, and the exact ratios D_f / ||f||.
#pragma once

#include <vector>

#include "pentarec/exactnum.hpp"
#include "pentarec/qseries.hpp"

namespace pentarec {

class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// (T_m f)(n) = sum_{d | gcd(m, n)} d^(weight-1) a(mn / d^2); the result is
/// known below floor(f.prec / m).
IntQSeries hecke_operator(const IntQSeries& f, int weight, long m);
/// Same action on a coefficient list a(0), a(1), ...
std::vector<QuadNum> hecke_operator(const std::vector<QuadNum>& coeffs, int weight, long m);

struct Eigenform {
  int weight = 0;
  Int field_disc{1};
  /// coeffs[n] = a(n); coeffs[0] = 0, coeffs[1] = 1.
  std::vector<QuadNum> coeffs;

  long prec() const { return static_cast<long>(coeffs.size()); }
};

/// Normalized Hecke eigenforms of S_weight through q^(prec-1). For a
/// two-dimensional space they come from the T_2 matrix on the echelon cusp
/// basis, the one whose a(2) has negative sqrt(d) part first.
std::vector<Eigenform> eigenforms(int weight, long prec);

struct TraceSeries {
  int nu = 0;
  /// values[n] = Tr_{2nu}(n) for 0 <= n <= N; values[0] = 0.
  std::vector<Rat> values;
};

/// Tr_{2nu}(n) = [q^n] P_nu + (4nu / B_{2nu}) C(2nu-2, nu-2) sigma_{2nu-1}(n).
/// Identically zero when S_{2nu} = 0.
TraceSeries trace_series(int nu, long N);

/// Tr_{2nu}(n) = sum_f gamma_f a_f(n), from the eigenforms and df_over_norm.
TraceSeries trace_from_eigenforms(int nu, long N);

/// gamma_i = D_{f_i} / ||f_i||, in the order returned by eigenforms().
std::vector<QuadNum> df_over_norm(int nu);

/// beta_nu with cusp part of P_nu = beta_nu * Delta_{2nu} (dim S_{2nu} = 1).
Rat corollary_beta(int nu);

}  // namespace pentarec
