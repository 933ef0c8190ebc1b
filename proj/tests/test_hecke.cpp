#include <doctest.h>

#include <numeric>
#include "oracles.hpp"
#include "pentarec/forms.hpp"
#include "pentarec/hecke.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/rankincohen.hpp"

using namespace pentarec;

namespace {

const Rat kBeta6 = make_rat(Int("-33108590592"), Int(691));

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("T_1 is the identity and T_2 Delta = -24 Delta") {
  IntQSeries d = delta_series(100);
  CHECK(equal_through_precision(hecke_operator(d, 12, 1), d));
  IntQSeries t2 = hecke_operator(d, 12, 2);
  CHECK(t2.prec() == 50);
  CHECK(equal_through_precision(t2, Rat(-24) * d.truncated(50)));
}

TEST_CASE("T_6 = T_2 T_3 on Delta") {
  IntQSeries d = delta_series(240);
  CHECK(equal_through_precision(hecke_operator(d, 12, 6), hecke_operator(hecke_operator(d, 12, 3), 12, 2)));
  CHECK_THROWS_AS(hecke_operator(d, 12, 0), DomainError);
  CHECK_THROWS_AS(hecke_operator(delta_series(3), 12, 5), PrecisionError);
}

TEST_CASE("weight 12 eigenform") {
  auto ef = eigenforms(12, 30);
  REQUIRE(ef.size() == 1);
  CHECK(ef[0].coeffs[1] == QuadNum(1));
  CHECK(ef[0].coeffs[2] == QuadNum(-24));
}

TEST_CASE("weight 24 eigenforms") {
  auto ef = eigenforms(24, 40);
  REQUIRE(ef.size() == 2);
  const Int d(144169);
  CHECK(ef[0].field_disc == d);
  CHECK(ef[0].coeffs[2] == QuadNum(Rat(540), Rat(-12), d));
  CHECK(ef[1].coeffs[2] == QuadNum(Rat(540), Rat(12), d));
  // f = Delta E4^3 + (-156 -+ 12 sqrt(144169)) Delta^2
  IntQSeries de43 = mul(delta_series(40), pow(eisenstein(4, 40), 3, 40));
  IntQSeries d2 = mul(delta_series(40), delta_series(40));
  for (int i = 0; i < 2; ++i) {
    QuadNum c(Rat(-156), Rat(i == 0 ? -12 : 12), d);
    for (long n = 0; n < 40; ++n)
      REQUIRE(ef[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(n)] ==
              QuadNum(de43.coeff(n)) + c * QuadNum(d2.coeff(n)));
  }
}

TEST_CASE("eigenvector property and multiplicativity") {
  for (int w : {12, 16, 18, 20, 22, 24, 26, 28, 30, 32, 34, 38}) {
    CAPTURE(w);
    auto ef = eigenforms(w, 71);
    for (const auto& f : ef) {
      CHECK(f.coeffs[1] == QuadNum(1));
      for (long m : {2L, 3L, 5L, 7L}) {
        auto t = hecke_operator(f.coeffs, w, m);
        for (std::size_t n = 0; n < t.size(); ++n) REQUIRE(t[n] == f.coeffs[static_cast<std::size_t>(m)] * f.coeffs[n]);
      }
      for (long p = 2; p < 10; ++p)
        for (long q = 2; p * q < 71; ++q)
          if (std::gcd(p, q) == 1)
            REQUIRE(f.coeffs[static_cast<std::size_t>(p * q)] ==
                    f.coeffs[static_cast<std::size_t>(p)] * f.coeffs[static_cast<std::size_t>(q)]);
    }
  }
}

TEST_CASE("three-dimensional cusp space is rejected") {
  CHECK_THROWS_AS(eigenforms(36, 20), UnsupportedFieldError);
  CHECK_THROWS_AS(df_over_norm(18), UnsupportedFieldError);
}

TEST_CASE("weight 12 trace") {
  TraceSeries t = trace_series(6, 50);
  auto tau = oracle::tau(50);
  CHECK(t.values[1] == kBeta6);
  CHECK(t.values[2] == make_rat(Int("794606174208"), Int(691)));
  for (long n = 1; n <= 50; ++n) REQUIRE(t.values[static_cast<std::size_t>(n)] == kBeta6 * Rat(tau[static_cast<std::size_t>(n)]));
}

TEST_CASE("Ramanujan congruence mod 691") {
  auto tau = oracle::tau(50);
  for (long n = 1; n <= 50; ++n) {
    Int diff = tau[static_cast<std::size_t>(n)] - sigma(11, n);
    REQUIRE(diff % 691 == 0);
  }
}

TEST_CASE("trace vanishes without cusp forms") {
  for (int nu : {0, 1, 2, 3, 4, 5, 7}) {
    TraceSeries t = trace_series(nu, 10);
    for (const auto& v : t.values) CHECK(v == 0);
  }
  // and the cusp part of P_nu really is zero there
  for (int nu : {2, 3, 4, 5, 7}) {
    IntQSeries p = p_nu(nu, 40);
    Rat c = Rat(binomial(2 * nu - 2, nu - 2));
    CHECK(equal_through_precision(p, c * eisenstein(2 * nu, 40)));
  }
}

TEST_CASE("weight 24 trace and ratios") {
  TraceSeries t = trace_series(12, 2);
  CHECK(t.values[1] == make_rat(Int("-11762326506193377107116032"), Int("236364091")));
  CHECK(t.values[2] == make_rat(Int("-22599437869751987230702829568"), Int("236364091")));
  auto g = df_over_norm(12);
  REQUIRE(g.size() == 2);
  const Int d(144169);
  Rat a = make_rat(Int("-5881163253096688553558016"), Int("236364091"));
  Rat b = make_rat(Int("676990898183648483035840512"), Int("236364091") * d);
  CHECK(g[0] == QuadNum(a, b, d));
  CHECK(g[1] == QuadNum(a, -b, d));
  CHECK(g[1] == g[0].conjugate());
}

TEST_CASE("the six tabulated constants") {
  CHECK(corollary_beta(6) == kBeta6);
  CHECK(corollary_beta(8) == make_rat(Int("-187167592415232"), Int(3617)));
  CHECK(corollary_beta(9) == make_rat(Int("-28682634201661440"), Int(43867)));
  CHECK(corollary_beta(10) == make_rat(Int("-8294726176465158144"), Int(174611)));
  CHECK(corollary_beta(11) == make_rat(Int("-101475065073734516736"), Int(77683)));
  CHECK(corollary_beta(13) == make_rat(Int("-1195065734266339700244480"), Int(657931)));
  CHECK_THROWS_AS(corollary_beta(12), DomainError);
}

TEST_CASE("cusp part of P_nu is beta_nu Delta_2nu") {
  for (int nu : {6, 8, 9, 10, 11, 13}) {
    CAPTURE(nu);
    IntQSeries p = p_nu(nu, 40);
    IntQSeries cusp = p - Rat(binomial(2 * nu - 2, nu - 2)) * eisenstein(2 * nu, 40);
    CHECK(equal_through_precision(cusp, corollary_beta(nu) * delta_2nu(nu, 40)));
  }
}

TEST_CASE("reconstruction from eigenforms") {
  for (int nu = 6; nu <= 13; ++nu) {
    if (nu == 7) continue;
    CAPTURE(nu);
    TraceSeries a = trace_series(nu, 30), b = trace_from_eigenforms(nu, 30);
    CHECK(a.values == b.values);
  }
}

}
