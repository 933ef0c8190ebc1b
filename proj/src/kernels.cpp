#include "pentarec/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

namespace pentarec::kernels {

namespace {

// Clears denominators so the inner loops run on mpz: returns the scaled
// integer vector and the common denominator.
struct Scaled {
  std::vector<Int> values;
  std::vector<std::size_t> nonzero;
  Int denom = 1;
};

Scaled scale_to_integers(std::span<const Rat> a, std::size_t limit) {
  Scaled s;
  std::size_t n = std::min(a.size(), limit);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), a[i].get_den_mpz_t());
  }
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    s.values[i] = a[i].get_num() * (s.denom / a[i].get_den());
    s.nonzero.push_back(i);
  }
  return s;
}

std::vector<Rat> unscale(std::vector<Int>& acc, const Int& denom) {
  std::vector<Rat> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    out[k] = make_rat(acc[k], denom);
  }
  return out;
}

}  // namespace

std::vector<Rat> convolve_serial(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len) {
  Scaled sa = scale_to_integers(a, out_len);
  Scaled sb = scale_to_integers(b, out_len);
  std::vector<Int> acc(out_len);
  for (std::size_t i : sa.nonzero) {
    for (std::size_t j : sb.nonzero) {
      if (i + j >= out_len) break;
      mpz_addmul(acc[i + j].get_mpz_t(), sa.values[i].get_mpz_t(), sb.values[j].get_mpz_t());
    }
  }
  return unscale(acc, sa.denom * sb.denom);
}

std::vector<Rat> convolve_parallel(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len) {
  Scaled sa = scale_to_integers(a, out_len);
  Scaled sb = scale_to_integers(b, out_len);
  std::vector<Int> acc(out_len);
  const auto n = static_cast<std::int64_t>(out_len);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t k = 0; k < n; ++k) {
    Int sum = 0;
    for (std::size_t i : sa.nonzero) {
      if (i > static_cast<std::size_t>(k)) break;
      std::size_t j = static_cast<std::size_t>(k) - i;
      if (j >= sb.values.size() || sgn(sb.values[j]) == 0) continue;
      mpz_addmul(sum.get_mpz_t(), sa.values[i].get_mpz_t(), sb.values[j].get_mpz_t());
    }
    acc[static_cast<std::size_t>(k)] = std::move(sum);
  }
  Int denom = sa.denom * sb.denom;
  std::vector<Rat> out(out_len);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    auto kk = static_cast<std::size_t>(k);
    if (acc[kk] != 0) out[kk] = make_rat(acc[kk], denom);
  }
  return out;
}

std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b, std::size_t out_len) {
  if (omp_get_max_threads() > 1 && out_len >= 256) return convolve_parallel(a, b, out_len);
  return convolve_serial(a, b, out_len);
}

std::vector<Int> power_series_pow(std::span<const Int> f, long e, std::size_t len) {
  if (f.empty() || f[0] != 1) throw DomainError("power_series_pow needs f[0] = 1");
  std::vector<Int> out(len);
  if (len == 0) return out;
  out[0] = 1;
  std::vector<std::size_t> nz;
  for (std::size_t i = 1; i < std::min(f.size(), len); ++i)
    if (f[i] != 0) nz.push_back(i);
  // n out[n] = sum_{i=1}^{n} ((e+1) i - n) f[i] out[n-i]
  Int sum, w;
  for (std::size_t n = 1; n < len; ++n) {
    sum = 0;
    for (std::size_t i : nz) {
      if (i > n) break;
      long weight = (e + 1) * static_cast<long>(i) - static_cast<long>(n);
      if (weight == 0) continue;
      w = f[i] * weight;
      mpz_addmul(sum.get_mpz_t(), w.get_mpz_t(), out[n - i].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) throw InternalError("power_series_pow: inexact division");
    mpz_divexact_ui(out[n].get_mpz_t(), sum.get_mpz_t(), n);
  }
  return out;
}

std::complex<double> PhaseHistogram::evaluate() const {
  long double re = 0, im = 0;
  for (std::int64_t r = 0; r < modulus; ++r) {
    std::int64_t c = plus[static_cast<std::size_t>(r)] - minus[static_cast<std::size_t>(r)];
    if (c == 0) continue;
    long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) /
                        static_cast<long double>(modulus);
    re += static_cast<long double>(c) * std::cos(angle);
    im += static_cast<long double>(c) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace pentarec::kernels
