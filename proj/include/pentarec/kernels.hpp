// Hot loops shared by the series and analytic modules. Every parallel kernel
// has a serial reference twin; the test suite requires identical output.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pentarec/exactnum.hpp"

namespace pentarec::kernels {

/// c[k] = sum_{i+j=k} a[i] b[j] for 0 <= k < out_len. Scatter loop over the
/// nonzero entries of a and b.
std::vector<Rat> convolve_serial(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len);

/// Same contract; one OpenMP task per output coefficient (gather loop).
std::vector<Rat> convolve_parallel(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len);

/// Dispatches to the parallel kernel once the work is large enough to pay for
/// the thread team.
std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len);

/// f^e for an integer power series f with f[0] = 1, through `len` terms, by
/// the J.C.P. Miller recurrence. Cost is O(len * nnz(f)).
std::vector<Int> power_series_pow(std::span<const Int> f, long e, std::size_t len);

/// Phase histogram of one Kloosterman sum: counts[sign][r] is the number of
/// terms equal to sign * exp(2 pi i r / modulus).
struct PhaseHistogram {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> plus;
  std::vector<std::int64_t> minus;
  std::int64_t terms = 0;

  std::complex<double> evaluate() const;
  bool operator==(const PhaseHistogram&) const = default;
};

}  // namespace pentarec::kernels
