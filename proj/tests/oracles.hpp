// Independent reference computations. Nothing here calls the library's own
// algorithms for the quantity being checked.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace oracle {

inline mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<mpq_class> bernoulli_table(long n) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    mpq_class s = 0;
    for (long k = 0; k < m; ++k) s += mpq_class(binom(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -s / mpq_class(m + 1);
  }
  return b;
}

inline mpz_class sigma(unsigned long m, long n) {
  mpz_class s = 0, t;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), m);
      s += t;
    }
  return s;
}

/// p(0..N) by counting partitions with parts <= k, one part size at a time.
inline std::vector<mpz_class> partitions(long N) {
  std::vector<mpz_class> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (long part = 1; part <= N; ++part)
    for (long n = part; n <= N; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

/// Dense truncated product of integer series.
inline std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, std::size_t len) {
  std::vector<mpz_class> c(len);
  for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// prod_{n>=1} (1 - q^n) by expanding each factor.
inline std::vector<mpz_class> euler(std::size_t len) {
  std::vector<mpz_class> v(len);
  v[0] = 1;
  for (std::size_t n = 1; n < len; ++n)
    for (std::size_t e = len - 1; e >= n; --e) v[e] -= v[e - n];
  return v;
}

/// tau(1..N) from q * prod (1 - q^n)^24, by repeated squaring of dense series.
inline std::vector<mpz_class> tau(long N) {
  auto len = static_cast<std::size_t>(N);
  auto e = euler(len);
  auto e2 = mul(e, e, len), e4 = mul(e2, e2, len), e8 = mul(e4, e4, len), e16 = mul(e8, e8, len);
  auto e24 = mul(e16, e8, len);
  std::vector<mpz_class> t(static_cast<std::size_t>(N) + 1);
  for (long n = 1; n <= N; ++n) t[static_cast<std::size_t>(n)] = e24[static_cast<std::size_t>(n - 1)];
  return t;
}

/// 1 + c sum sigma_{w-1}(n) q^n with c = -2w / B_w from the Bernoulli oracle.
inline std::vector<mpq_class> eisenstein(int w, long len) {
  auto b = bernoulli_table(w);
  mpq_class c = mpq_class(-2 * w) / b[static_cast<std::size_t>(w)];
  std::vector<mpq_class> v(static_cast<std::size_t>(len));
  v[0] = 1;
  for (long n = 1; n < len; ++n) v[static_cast<std::size_t>(n)] = c * mpq_class(sigma(static_cast<unsigned long>(w - 1), n));
  return v;
}

/// Jacobi symbol (a/n) for odd n > 0, by quadratic reciprocity.
inline int jacobi(long a, long n) {
  a %= n;
  if (a < 0) a += n;
  int r = 1;
  while (a) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) r = -r;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) r = -r;
    a %= n;
  }
  return n == 1 ? r : 0;
}

/// Kronecker symbol (a/n) for n >= 0.
inline int kronecker(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int r = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    long a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) r = -r;
  }
  return r * jacobi(a, n);
}

/// I_{3/2}(x) from its ascending series sum (x/2)^(2k+3/2) / (k! Gamma(k+5/2)).
inline long double bessel_i32_series(long double x) {
  long double s = 0;
  for (int k = 0; k < 80; ++k)
    s += std::pow(x / 2, 2.0L * k + 1.5L) / (std::tgamma(static_cast<long double>(k) + 1) * std::tgamma(k + 2.5L));
  return s;
}

}  // namespace oracle
