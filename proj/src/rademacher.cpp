#include "pentarec/rademacher.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace pentarec {

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Root24 Root24::operator*(const Root24& o) const {
  return {sign * o.sign, static_cast<int>(mod(e + o.e, 24))};
}

Root24 Root24::conj() const { return {sign, static_cast<int>(mod(-e, 24))}; }

Root24 Root24::pow(long k) const {
  int s = (k % 2 != 0 && sign < 0) ? -1 : 1;
  return {s, static_cast<int>(mod(static_cast<long>(e) * mod(k, 24), 24))};
}

Root24 Root24::canonical() const {
  return sign > 0 ? *this : Root24{1, static_cast<int>(mod(e + 12, 24))};
}

std::complex<double> Root24::value() const {
  double ang = std::numbers::pi * e / 12.0;
  return {sign * std::cos(ang), sign * std::sin(ang)};
}

bool Root24::operator==(const Root24& o) const {
  Root24 x = canonical(), y = o.canonical();
  return x.e == y.e;
}

Root24 eta_multiplier(long a, long b, long c, long d) {
  if (a * d - b * c != 1) throw DomainError("eta_multiplier needs ad - bc = 1");
  // bd(c^2 - 1) reduced mod 24 factor by factor
  long bdc = mod(mod(b, 24) * mod(d, 24), 24) * mod(mod(c, 24) * mod(c, 24) - 1, 24);
  if (c % 2 != 0) {
    int s = kronecker_symbol(d, std::labs(c));
    long e = mod(c, 24) * mod(a + d - 3, 24) - bdc;
    return {s, static_cast<int>(mod(e, 24))};
  }
  int s = kronecker_symbol(c, std::labs(d));
  if (c <= 0 && d < 0) s = -s;
  long e = mod(c, 24) * mod(a - 2 * d, 24) - bdc + 3 * mod(d, 24) - 3;
  return {s, static_cast<int>(mod(e, 24))};
}

namespace {

struct HistBuilder {
  long c, m, n;
  kernels::PhaseHistogram h;

  HistBuilder(long c_, long m_, long n_) : c(c_), m(m_), n(n_) {
    h.modulus = 24 * c;
    h.plus.assign(static_cast<std::size_t>(h.modulus), 0);
    h.minus.assign(static_cast<std::size_t>(h.modulus), 0);
  }

  void add(long a, long d) {
    long b = (a * d - 1) / c;
    Root24 eps = eta_multiplier(a, b, c, d);
    // eps = sign exp(2 pi i e c / (24c))
    const long M = h.modulus;
    long r = mod(static_cast<long>(eps.e) * c + mod(m + kCuspParameter, M) * a + mod(n + kCuspParameter, M) * d, M);
    auto& bucket = eps.sign > 0 ? h.plus : h.minus;
    ++bucket[static_cast<std::size_t>(r)];
    ++h.terms;
  }

  KloostermanSum finish() {
    KloostermanSum k;
    k.c = c;
    k.value = h.evaluate();
    k.term_count = h.terms;
    k.histogram = std::move(h);
    return k;
  }
};

long inverse_mod(long x, long m) {
  if (m == 1) return 0;
  mpz_class xi = x, mi = m, r;
  if (!mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), mi.get_mpz_t())) throw InternalError("no inverse");
  return r.get_si();
}

}  // namespace

KloostermanSum kloosterman(long c, long m, long n) {
  if (c < 1) throw DomainError("kloosterman needs c >= 1");
  HistBuilder hb(c, m, n);
  const long range = kCuspWidth * c;
  for (long d = 0; d < range; ++d) {
    if (std::gcd(d, c) != 1) continue;
    long a0 = inverse_mod(d % c, c);
    for (long a = a0; a < range; a += c) hb.add(a, d);
  }
  return hb.finish();
}

KloostermanSum kloosterman_literal(long c, long m, long n) {
  if (c < 1) throw DomainError("kloosterman needs c >= 1");
  HistBuilder hb(c, m, n);
  const long range = kCuspWidth * c;
  for (long a = 0; a < range; ++a)
    for (long d = 0; d < range; ++d)
      if (mod(a * d - 1, c) == 0) hb.add(a, d);
  // the literal loop visits (a, d) in a different order; histograms are order free
  return hb.finish();
}

double bessel_i32(double x) {
  if (!(x > 0)) throw DomainError("bessel_i32 needs x > 0");
  const double pre = std::sqrt(2.0 / (std::numbers::pi * x));
  if (x < 0.5) {
    // cosh x - sinh x / x = sum_{k>=1} 2k x^(2k) / (2k+1)!
    double term = 1.0, sum = 0.0, x2 = x * x;
    for (int k = 1; k < 30; ++k) {
      term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += 2.0 * k * term;
    }
    return pre * sum;
  }
  return pre * (std::cosh(x) - std::sinh(x) / x);
}

namespace {

// Principal part index m = 24 (q^{-1/24}), weight k = -1/2, series index 24n - 24.
constexpr long kPrincipal = 24;

double bessel_argument(long n, long c) {
  const double mk = std::fabs(static_cast<double>(-kPrincipal + kCuspParameter));
  const double nk = static_cast<double>(24 * n - 24 + kCuspParameter);
  return 4.0 * std::numbers::pi / (static_cast<double>(c) * kCuspWidth) * std::sqrt(mk * nk);
}

std::complex<double> prefactor(long n) {
  const double k = -0.5;
  const double mk = std::fabs(static_cast<double>(-kPrincipal + kCuspParameter));
  const double nk = static_cast<double>(24 * n - 24 + kCuspParameter);
  std::complex<double> ipow = std::polar(1.0, std::numbers::pi / 2.0 * (2.0 - k));
  // The (a, d) box [0, 24c)^2 counts every coset 24 times; the 1/24 undoes it.
  return -ipow * (2.0 * std::numbers::pi) * std::pow(mk / nk, (1.0 - k) / 2.0) / static_cast<double>(kCuspWidth) /
         static_cast<double>(kCuspWidth);
}

RademacherResult finish(long n, long C, const std::vector<std::complex<double>>& terms) {
  std::complex<double> s = 0;
  for (const auto& t : terms) s += t;  // ascending c
  s *= prefactor(n);
  RademacherResult r;
  r.n = n;
  r.depth = C;
  r.estimate = s.real();
  r.nearest = Int(static_cast<long>(std::llround(s.real())));
  r.gap = std::fabs(s.real() - std::round(s.real()));
  r.imag_residual = std::abs(s) > 0 ? std::fabs(s.imag()) / std::abs(s) : 0.0;
  return r;
}

void check_args(long n, long C) {
  if (n < 1) throw DomainError("rademacher_pn needs n >= 1");
  if (C < 1) throw DomainError("rademacher_pn needs C >= 1");
}

}  // namespace

std::complex<double> rademacher_term(long n, long c) {
  KloostermanSum k = kloosterman(c, -kPrincipal, 24 * n - 24);
  return k.value / static_cast<double>(c) * bessel_i32(bessel_argument(n, c));
}

RademacherResult rademacher_pn(long n, long C) {
  check_args(n, C);
  std::vector<std::complex<double>> terms(static_cast<std::size_t>(C));
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 1; c <= C; ++c) terms[static_cast<std::size_t>(c - 1)] = rademacher_term(n, c);
  return finish(n, C, terms);
}

std::vector<RademacherResult> rademacher_convergence(long n, long C) {
  check_args(n, C);
  std::vector<std::complex<double>> terms(static_cast<std::size_t>(C));
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 1; c <= C; ++c) terms[static_cast<std::size_t>(c - 1)] = rademacher_term(n, c);
  std::vector<RademacherResult> out;
  for (long depth = 1; depth <= C; ++depth)
    out.push_back(finish(n, depth, {terms.begin(), terms.begin() + depth}));
  return out;
}

RademacherResult rademacher_pn_serial(long n, long C) {
  check_args(n, C);
  std::vector<std::complex<double>> terms;
  for (long c = 1; c <= C; ++c) terms.push_back(rademacher_term(n, c));
  return finish(n, C, terms);
}

}  // namespace pentarec
