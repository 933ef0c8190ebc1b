// Level-1 modular forms as exact q-expansions.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pentarec/exactnum.hpp"
#include "pentarec/qseries.hpp"

namespace pentarec {

/// A series that is not a combination of the given basis through its precision.
class NotInSpaceError : public Error {
 public:
  using Error::Error;
};

/// E_w = 1 - (2w / B_w) sum sigma_{w-1}(n) q^n. w = 2 gives the quasi-modular E_2.
IntQSeries eisenstein(int weight, long prec);

/// Delta = q prod (1 - q^n)^24 through q^(prec-1), from the eighth power of
/// sum_k (-1)^k (2k+1) q^(k(k+1)/2) (Jacobi's identity for eta^3).
IntQSeries delta_series(long prec);

/// Delta, Delta E4, Delta E6, Delta E4^2, Delta E4 E6, Delta E4^2 E6 for
/// nu = 6, 8, 9, 10, 11, 13.
IntQSeries delta_2nu(int nu, long prec);

/// dim M_w and dim S_w for even w >= 0.
int dim_modular_forms(int weight);
int dim_cusp_forms(int weight);

struct MFSpace {
  int weight = 0;
  int dim_total = 0;
  int dim_cusp = 0;
  long prec = 0;
  /// (a, b) with 4a + 6b = weight, a ascending.
  std::vector<std::pair<int, int>> exponents;
  /// E4^a E6^b in the order of `exponents`.
  std::vector<IntQSeries> basis;
  /// Reduced echelon basis of S_w: cusp_basis[i] = q^(i+1) + O(q^(dim_cusp+1)).
  std::vector<IntQSeries> cusp_basis;
};

/// Needs prec > dim_total + 2; PrecisionError otherwise or when the cusp
/// echelon form does not reach full rank.
MFSpace space_basis(int weight, long prec);

/// Coordinates of f in the span of `basis`, exact. The residual must vanish
/// through min(f.prec, basis precision), else NotInSpaceError.
std::vector<Rat> solve_in_span(const IntQSeries& f, std::span<const IntQSeries> basis);

/// Coordinates of f on the monomial basis of `space`.
std::vector<Rat> decompose(const IntQSeries& f, const MFSpace& space);

/// sum c_i basis_i.
IntQSeries synthesize(std::span<const Rat> coords, std::span<const IntQSeries> basis);

}  // namespace pentarec
