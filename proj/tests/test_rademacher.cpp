#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pentarec/rademacher.hpp"

using namespace pentarec;

namespace {

struct Mat {
  long a, b, c, d;
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

Mat random_sl2(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long c = dist(rng), d = dist(rng);
    if (c == 0 && d == 0) continue;
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mpz_class(d).get_mpz_t(), mpz_class(c).get_mpz_t());
    if (g != 1) continue;
    // a d - b c = 1 with a = s, b = -t
    return {s.get_si(), -t.get_si(), c, d};
  }
}

std::complex<double> principal_sqrt(std::complex<double> z) { return std::sqrt(z); }

// eta(tau) = q^(1/24) prod (1 - q^n), summed until the factors stop mattering.
std::complex<double> eta(std::complex<double> tau) {
  const std::complex<double> I(0, 1);
  std::complex<double> q = std::exp(2.0 * std::numbers::pi * I * tau);
  std::complex<double> prod = 1, qn = 1;
  for (int n = 1; n < 200000 && std::abs(qn) > 1e-18; ++n) {
    qn *= q;
    prod *= 1.0 - qn;
  }
  return std::exp(2.0 * std::numbers::pi * I * tau / 24.0) * prod;
}

}  // namespace

TEST_SUITE("rademacher") {

TEST_CASE("multiplier on the generators") {
  CHECK(eta_multiplier(1, 1, 0, 1) == Root24{1, 1});
  CHECK(eta_multiplier(0, -1, 1, 0) == Root24{1, 21});
  CHECK_THROWS_AS(eta_multiplier(1, 1, 1, 1), DomainError);
}

TEST_CASE("Root24 algebra") {
  Root24 x{-1, 5};
  CHECK(x.pow(24) == Root24{1, 0});
  CHECK(x * x.conj() == Root24{1, 0});
  CHECK(x == Root24{1, 17});
  CHECK(std::abs(x.value() - std::polar(1.0, std::numbers::pi * 17 / 12)) < 1e-15);
}

TEST_CASE("multiplier is a 24th root of unity") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 200; ++i) {
    Mat g = random_sl2(rng, 1000);
    CHECK(eta_multiplier(g.a, g.b, g.c, g.d).pow(24) == Root24{1, 0});
  }
}

TEST_CASE("transformation law of eta at sample points") {
  std::mt19937_64 rng(1618);
  const std::complex<double> tau(0.1, 1.1);
  for (int i = 0; i < 40; ++i) {
    Mat g = random_sl2(rng, 4);
    CAPTURE(g.a);
    CAPTURE(g.b);
    CAPTURE(g.c);
    CAPTURE(g.d);
    std::complex<double> ct = static_cast<double>(g.c) * tau + static_cast<double>(g.d);
    std::complex<double> gt = (static_cast<double>(g.a) * tau + static_cast<double>(g.b)) / ct;
    std::complex<double> lhs = eta(gt);
    std::complex<double> rhs = eta_multiplier(g.a, g.b, g.c, g.d).value() * principal_sqrt(ct) * eta(tau);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
  }
}

TEST_CASE("cocycle at tau = i") {
  std::mt19937_64 rng(4669);
  const std::complex<double> tau(0, 1);
  for (int i = 0; i < 100; ++i) {
    Mat g1 = random_sl2(rng, 30), g2 = random_sl2(rng, 30), g = g1 * g2;
    auto j = [](const Mat& m, std::complex<double> z) {
      return principal_sqrt(static_cast<double>(m.c) * z + static_cast<double>(m.d));
    };
    std::complex<double> g2tau = (static_cast<double>(g2.a) * tau + static_cast<double>(g2.b)) /
                                 (static_cast<double>(g2.c) * tau + static_cast<double>(g2.d));
    std::complex<double> whole = eta_multiplier(g.a, g.b, g.c, g.d).value() * j(g, tau);
    std::complex<double> split = eta_multiplier(g1.a, g1.b, g1.c, g1.d).value() * j(g1, g2tau) *
                                 eta_multiplier(g2.a, g2.b, g2.c, g2.d).value() * j(g2, tau);
    CHECK(std::abs(whole - split) < 1e-10 * std::abs(whole));
  }
}

TEST_CASE("Kloosterman term counts") {
  CHECK(kloosterman(1, -24, 0).term_count == 576);
  CHECK(kloosterman(2, -24, 0).term_count == 576);
  long odd = 0;
  for (long a = 0; a < 48; ++a)
    for (long d = 0; d < 48; ++d) odd += (a * d) % 2;
  CHECK(odd == 576);
  for (long c = 1; c <= 12; ++c) {
    auto k = kloosterman(c, -24, 24 * 3 - 24);
    CHECK(std::abs(k.value) <= static_cast<double>(k.term_count));
  }
}

TEST_CASE("optimized and literal Kloosterman enumerations have identical phases") {
  for (long c = 1; c <= 15; ++c)
    for (long n : {0L, 24L, 216L}) {
      auto a = kloosterman(c, -24, n), b = kloosterman_literal(c, -24, n);
      CHECK(a.histogram == b.histogram);
      CHECK(a.value == b.value);
    }
}

TEST_CASE("I_{3/2}") {
  CHECK(bessel_i32(1e-3) == doctest::Approx(static_cast<double>(oracle::bessel_i32_series(1e-3L))).epsilon(1e-10));
  CHECK(bessel_i32(1.0) == doctest::Approx(static_cast<double>(oracle::bessel_i32_series(1.0L))).epsilon(1e-12));
  for (double x : {0.2, 0.49, 0.5, 0.51, 3.0, 10.0})
    CHECK(bessel_i32(x) == doctest::Approx(static_cast<double>(oracle::bessel_i32_series(x))).epsilon(1e-12));
  double prev = 1;
  for (double x : {10.0, 20.0, 30.0, 40.0}) {
    double r = std::fabs(bessel_i32(x) * std::sqrt(2 * std::numbers::pi * x) * std::exp(-x) - 1);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 0.04);
  CHECK_THROWS_AS(bessel_i32(0.0), DomainError);
}

TEST_CASE("partial sums round to partition numbers") {
  auto p = oracle::partitions(100);
  CHECK(rademacher_pn(1, 20).nearest == 1);
  auto r10 = rademacher_pn(10, 20);
  CHECK(r10.nearest == 42);
  CHECK(r10.gap < 0.1);
  CHECK(rademacher_pn(100, 50).nearest == p[100]);
  for (long n = 1; n <= 50; ++n) {
    auto r = rademacher_pn(n, 50);
    REQUIRE(r.nearest == p[static_cast<std::size_t>(n)]);
    CHECK(r.gap < 0.5);
    CHECK(r.imag_residual < 1e-6);
  }
}

TEST_CASE("small cases fix the index mapping") {
  // coefficient of q^((24n-1)/24) in 1/eta is p(n)
  auto p = oracle::partitions(10);
  for (long n = 1; n <= 10; ++n) CHECK(rademacher_pn(n, 40).nearest == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("convergence depth stays within 50") {
  auto p = oracle::partitions(50);
  for (long n = 1; n <= 50; ++n) {
    CAPTURE(n);
    auto runs = rademacher_convergence(n, 50);
    long c0 = 0;
    for (long C = 50; C >= 1; --C) {
      if (runs[static_cast<std::size_t>(C - 1)].nearest != p[static_cast<std::size_t>(n)]) break;
      c0 = C;
    }
    CHECK(runs.back().estimate == rademacher_pn(n, 50).estimate);
    CHECK(c0 >= 1);
    CHECK(c0 <= 50);
  }
}

TEST_CASE("parallel and serial partial sums are bit identical") {
  for (long n : {1L, 7L, 33L}) {
    auto a = rademacher_pn(n, 30), b = rademacher_pn_serial(n, 30);
    CHECK(a.estimate == b.estimate);
    CHECK(a.imag_residual == b.imag_residual);
  }
}

}
