#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pentarec/kernels.hpp"
#include "pentarec/qseries.hpp"

using namespace pentarec;

namespace {

IntQSeries from_ints(std::initializer_list<long> c, long offset = 0) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  long prec = offset + static_cast<long>(v.size());
  return IntQSeries(offset, prec, std::move(v));
}

IntQSeries random_series(std::mt19937_64& rng, long offset, long len) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rat> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = make_rat(num(rng), den(rng));
  if (sgn(v[0]) == 0) v[0] = 1;
  return IntQSeries(offset, offset + len, std::move(v));
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("precision of a product") {
  IntQSeries a = from_ints({1, 1, 1, 1, 1});        // known below q^5
  IntQSeries b = from_ints({2, 0, 3}, 1);           // q-offset 1, known below q^4
  IntQSeries c = mul(a, b);
  CHECK(c.offset() == 1);
  CHECK(c.prec() == 4);                             // min(5 + 1, 4 + 0)
  CHECK(c.coeff(3) == 5);
  CHECK_THROWS_AS(c.coeff(4), PrecisionError);
  CHECK(c.coeff(0) == 0);
}

TEST_CASE("sum keeps the smaller precision") {
  IntQSeries a = from_ints({1, 2, 3}), b = from_ints({1, 1, 1, 1, 1});
  IntQSeries s = a + b;
  CHECK(s.prec() == 3);
  CHECK(s.coeff(2) == 4);
  CHECK((a - a).is_zero());
}

TEST_CASE("inverse of the Euler product gives partition numbers") {
  IntQSeries e = euler_product(200);
  IntQSeries p = invert(e);
  auto ref = oracle::partitions(199);
  CHECK(p.prec() == 200);
  for (long n = 0; n < 200; ++n) REQUIRE(p.coeff(n) == Rat(ref[static_cast<std::size_t>(n)]));
}

TEST_CASE("invert rejects a zero leading coefficient") {
  IntQSeries a(0, 3, {Rat(0), Rat(1), Rat(1)});
  CHECK_THROWS_AS(invert(a), DivisionByZero);
}

TEST_CASE("eta as a sum equals eta as a product") {
  for (long prec24 : {2L, 25L, 480L, 2401L}) {
    QSeries24 s = eta_expansion(prec24), p = eta_product_expansion(prec24);
    CHECK(equal_through_precision(s, p));
  }
}

TEST_CASE("1/eta times eta is one") {
  QSeries24 inv = eta_inverse_expansion(24 * 40);
  CHECK(inv.offset() == -1);
  QSeries24 one = mul(inv, eta_expansion(24 * 40));
  for (long e = 0; e < one.prec(); ++e) CHECK(one.coeff(e) == (e == 0 ? 1 : 0));
}

TEST_CASE("down conversion enforces integral exponents") {
  QSeries24 q = to_series24(from_ints({1, 2, 3}));
  IntQSeries back = to_int_series(q);
  CHECK(equal_through_precision(back, from_ints({1, 2, 3})));
  CHECK_THROWS_AS(to_int_series(eta_expansion(48)), InternalError);
}

TEST_CASE("D acts on exponents") {
  QSeries24 eta = eta_expansion(24 * 10);
  QSeries24 d = d_operator(eta);
  CHECK(d.coeff(1) == make_rat(1, 24));
  CHECK(d.coeff(25) == make_rat(-25, 24));
  CHECK(d_operator(eta, 2).coeff(49) == make_rat(-49 * 49, 576));
}

TEST_CASE("logarithmic derivative of eta is E2 / 24") {
  const long P = 50;
  auto e2c = oracle::eisenstein(2, P);
  QSeries24 e2 = to_series24(IntQSeries(0, P, std::vector<Rat>(e2c.begin(), e2c.end())));
  QSeries24 eta = eta_expansion(24 * P), inv = eta_inverse_expansion(24 * P);
  CHECK(equal_through_precision(d_operator(eta), make_rat(1, 24) * mul(e2, eta)));
  CHECK(equal_through_precision(d_operator(inv), make_rat(-1, 24) * mul(e2, inv)));
}

TEST_CASE("ring laws for random series") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    IntQSeries a = random_series(rng, trial % 3, 25), b = random_series(rng, 0, 20), c = random_series(rng, 1, 22);
    CHECK(equal_through_precision(mul(a, b), mul(b, a)));
    CHECK(equal_through_precision(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(equal_through_precision(mul(a, b + c), mul(a, b) + mul(a, c)));
    IntQSeries u = random_series(rng, 0, 30);
    IntQSeries one = mul(u, invert(u));
    for (long e = 0; e < one.prec(); ++e) REQUIRE(one.coeff(e) == (e == 0 ? 1 : 0));
    // Leibniz rule for D
    CHECK(equal_through_precision(d_operator(mul(a, b)), mul(d_operator(a), b) + mul(a, d_operator(b))));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  IntQSeries e = euler_product(60);
  IntQSeries r = IntQSeries::one(60);
  for (int i = 0; i < 5; ++i) r = mul(r, e);
  CHECK(equal_through_precision(pow(e, 5, 60), r));
}

TEST_CASE("parallel and serial convolution are identical") {
  std::mt19937_64 rng(7);
  for (long len : {1L, 17L, 300L, 1200L}) {
    IntQSeries a = random_series(rng, 0, len), b = random_series(rng, 0, len);
    auto s = kernels::convolve_serial(a.coeffs(), b.coeffs(), static_cast<std::size_t>(len));
    auto p = kernels::convolve_parallel(a.coeffs(), b.coeffs(), static_cast<std::size_t>(len));
    CHECK(s == p);
    CHECK(equal_through_precision(mul(a, b), mul_serial(a, b)));
  }
}

TEST_CASE("Miller power recurrence matches dense powers") {
  auto e = oracle::euler(200);
  std::vector<Int> f(e.begin(), e.end());
  auto p = kernels::power_series_pow(f, 24, 200);
  auto e24 = oracle::tau(200);
  for (std::size_t n = 0; n < 199; ++n) REQUIRE(p[n] == e24[n + 1]);
  CHECK_THROWS_AS(kernels::power_series_pow(std::vector<Int>{Int(2)}, 2, 3), DomainError);
}

}
