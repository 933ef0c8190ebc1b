#include "pentarec/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "pentarec/dirichlet.hpp"
#include "pentarec/forms.hpp"
#include "pentarec/hecke.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/qseries.hpp"
#include "pentarec/rademacher.hpp"
#include "pentarec/rankincohen.hpp"

namespace pentarec {

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first failure
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Check = std::function<Outcome()>;

struct NamedCheck {
  std::string name;
  Check run;
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Rat random_rat(std::mt19937_64& rng, long span = 30, long den = 12) {
  std::uniform_int_distribution<long> n(-span, span), d(1, den);
  return make_rat(n(rng), d(rng));
}

IntQSeries random_series(std::mt19937_64& rng, long offset, long len, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Rat> v(static_cast<std::size_t>(len));
  for (auto& x : v)
    if (keep(rng)) x = random_rat(rng);
  if (sgn(v[0]) == 0) v[0] = 1;
  return IntQSeries(offset, offset + len, std::move(v));
}

// ---------------------------------------------------------------- exactnum

std::vector<NamedCheck> exactnum_checks() {
  return {
      {"bernoulli odd indices vanish",
       [] {
         Outcome o;
         for (unsigned long n = 1; n <= 60; ++n)
           o.require(sgn(bernoulli(2 * n + 1)) == 0, "B_" + std::to_string(2 * n + 1) + " != 0");
         return o;
       }},
      {"falling factorial at m and -m are reciprocal",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed);
         for (int i = 0; i < 200; ++i) {
           Rat x = random_rat(rng);
           long m = static_cast<long>(rng() % 9);
           if (sgn(falling_factorial(x, m)) == 0) continue;
           o.require(falling_factorial(x, m) * falling_factorial(x, -m) == 1, "x = " + to_string(x));
         }
         return o;
       }},
      {"rising factorial is a reflected falling factorial",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 1);
         for (int i = 0; i < 200; ++i) {
           Rat x = random_rat(rng);
           long j = static_cast<long>(rng() % 11);
           Rat f = falling_factorial(-x, j);
           if (j % 2) f = -f;
           o.require(rising_factorial(x, j) == f, "x = " + to_string(x));
         }
         return o;
       }},
      {"gamma functional equation on half-integers",
       [] {
         Outcome o;
         for (int k = 1; k <= 40; ++k) {
           Rat x = make_rat(k, 2);
           o.require(gamma_exact(x + 1) == gamma_exact(x) * x, "x = " + to_string(x));
         }
         return o;
       }},
      {"z times its conjugate is rational",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 2);
         for (int i = 0; i < 100; ++i) {
           QuadNum z(random_rat(rng), random_rat(rng), Int(144169));
           o.require((z * z.conjugate()).is_rational(), to_string(z));
         }
         return o;
       }},
  };
}

// ----------------------------------------------------------------- qseries

std::vector<NamedCheck> qseries_checks() {
  return {
      {"pentagonal number theorem",
       [] {
         Outcome o;
         for (long p24 = 2; p24 <= 2400; p24 += 97)
           o.require(equal_through_precision(eta_expansion(p24), eta_product_expansion(p24)),
                     "prec24 = " + std::to_string(p24));
         o.require(equal_through_precision(eta_expansion(2400), eta_product_expansion(2400)), "prec24 = 2400");
         return o;
       }},
      {"ring axioms on random sparse series",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 3);
         for (int i = 0; i < 25; ++i) {
           IntQSeries a = random_series(rng, i % 3, 40, 0.3), b = random_series(rng, 0, 35, 0.3),
                      c = random_series(rng, 1, 38, 0.3);
           o.require(equal_through_precision(mul(mul(a, b), c), mul(a, mul(b, c))), "associativity");
           o.require(equal_through_precision(mul(a, b + c), mul(a, b) + mul(a, c)), "distributivity");
         }
         return o;
       }},
      {"Leibniz rule for D",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 4);
         for (int i = 0; i < 25; ++i) {
           QSeries24 a = to_series24(random_series(rng, 0, 20, 0.4));
           QSeries24 b = eta_expansion(24 * 20);
           o.require(equal_through_precision(d_operator(mul(a, b)), mul(d_operator(a), b) + mul(a, d_operator(b))),
                     "trial " + std::to_string(i));
         }
         return o;
       }},
      {"D(eta) = E2 eta / 24 and D(1/eta) = -E2 / (24 eta)",
       [] {
         Outcome o;
         const long P = 60;
         QSeries24 e2 = to_series24(eisenstein(2, P));
         QSeries24 eta = eta_expansion(24 * P), inv = eta_inverse_expansion(24 * P);
         o.require(equal_through_precision(d_operator(eta), Rat(1, 24) * mul(e2, eta)), "D(eta)");
         o.require(equal_through_precision(d_operator(inv), Rat(-1, 24) * mul(e2, inv)), "D(1/eta)");
         return o;
       }},
      {"invert is a two-sided inverse",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 5);
         for (int i = 0; i < 50; ++i) {
           IntQSeries a = random_series(rng, static_cast<long>(i % 5) - 2, 30, 0.5);
           IntQSeries b = invert(a);
           for (const IntQSeries& p : {mul(a, b), mul(b, a)})
             for (long e = p.offset(); e < p.prec(); ++e)
               o.require(p.coeff(e) == (e == 0 ? 1 : 0), "trial " + std::to_string(i));
         }
         QSeries24 eta = eta_expansion(24 * 30);
         o.require(equal_through_precision(invert(invert(eta)), eta), "invert(invert(eta))");
         return o;
       }},
  };
}

// ------------------------------------------------------------------- euler

bool euler_agrees(long N) {
  PartitionTable t = partition_table(N);
  IntQSeries gf = invert(euler_product(N + 1));
  for (long n = 0; n <= N; ++n)
    if (gf.coeff(n) != Rat(t(n))) return false;
  return true;
}

std::vector<NamedCheck> euler_checks() {
  return {
      {"recurrence equals the inverse product through 200",
       [] {
         Outcome o;
         o.require(euler_agrees(200), "mismatch");
         return o;
       }},
      {"recurrence equals the inverse product through 500",
       [] {
         Outcome o;
         o.require(euler_agrees(500), "mismatch");
         return o;
       }},
      {"partition numbers increase",
       [] {
         Outcome o;
         PartitionTable t = partition_table(500);
         o.require(t(0) == 1, "p(0)");
         for (long n = 2; n <= 500; ++n) o.require(t(n) > t(n - 1), "n = " + std::to_string(n));
         return o;
       }},
  };
}

// -------------------------------------------------------------- partitions

std::vector<NamedCheck> partitions_checks() {
  return {
      {"weighted recurrences reproduce p(n) for nu = 2..13, n <= 40",
       [] {
         Outcome o;
         PartitionTable t = partition_table(40);
         for (int nu = 2; nu <= 13; ++nu) {
           TraceSeries tr = trace_series(nu, 40);
           for (long n = 1; n <= 40; ++n) {
             Rat v = theorem2_rhs(nu, n, tr.values[static_cast<std::size_t>(n)], t);
             o.require(v == Rat(t(n)), "nu = " + std::to_string(nu) + ", n = " + std::to_string(n) + " gives " +
                                           to_string(v));
           }
         }
         return o;
       }},
      {"g_nu(n, 0) is nonzero for nu <= 14, n <= 1000",
       [] {
         Outcome o;
         for (int nu = 0; nu <= 14; ++nu)
           for (long n = 1; n <= 1000; ++n)
             o.require(sgn(g_poly(nu, n, 0)) != 0, "nu = " + std::to_string(nu) + ", n = " + std::to_string(n));
         return o;
       }},
  };
}

// ------------------------------------------------------------------- forms

std::vector<NamedCheck> forms_checks() {
  return {
      {"Ramanujan derivative identities",
       [] {
         Outcome o;
         const long P = 60;
         IntQSeries e2 = eisenstein(2, P), e4 = eisenstein(4, P), e6 = eisenstein(6, P);
         o.require(equal_through_precision(d_operator(e2), Rat(1, 12) * (mul(e2, e2) - e4)), "D(E2)");
         o.require(equal_through_precision(d_operator(e4), Rat(1, 3) * (mul(e2, e4) - e6)), "D(E4)");
         o.require(equal_through_precision(d_operator(e6), Rat(1, 2) * (mul(e2, e6) - mul(e4, e4))), "D(E6)");
         return o;
       }},
      {"eta^24 = (E4^3 - E6^2) / 1728",
       [] {
         Outcome o;
         const long P = 60;
         IntQSeries e4 = eisenstein(4, P), e6 = eisenstein(6, P);
         IntQSeries lhs = to_int_series(pow(eta_expansion(24 * P), 24, 24 * P));
         o.require(equal_through_precision(lhs, Rat(1, 1728) * (pow(e4, 3, P) - mul(e6, e6))), "eta^24");
         o.require(equal_through_precision(lhs, delta_series(P)), "fast Delta");
         return o;
       }},
      {"dim M_w - dim S_w = 1 for 4 <= w <= 40",
       [] {
         Outcome o;
         for (int w = 4; w <= 40; w += 2) {
           MFSpace s = space_basis(w, 20);
           o.require(s.dim_total - s.dim_cusp == 1, "w = " + std::to_string(w));
         }
         return o;
       }},
      {"decompose then synthesize on random elements, weights 4..30",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 6);
         for (int w = 4; w <= 30; w += 2) {
           MFSpace s = space_basis(w, 30);
           std::vector<Rat> c(s.basis.size());
           for (auto& x : c) x = random_rat(rng);
           IntQSeries f = synthesize(c, s.basis);
           o.require(decompose(f, s) == c, "w = " + std::to_string(w));
           o.require(equal_through_precision(synthesize(decompose(f, s), s.basis), f), "w = " + std::to_string(w));
         }
         return o;
       }},
  };
}

// ------------------------------------------------------------- rankincohen

std::vector<NamedCheck> rankincohen_checks() {
  return {
      {"operator side equals series side, nu <= 10, 60 coefficients",
       [] {
         Outcome o;
         PartitionTable t = partition_table(60);
         for (int nu = 0; nu <= 10; ++nu)
           o.require(equal_through_precision(p_nu(nu, 60), p_nu_series_side(nu, 60, t)), "nu = " + std::to_string(nu));
         return o;
       }},
      {"P_nu decomposes in M_2nu for 2 <= nu <= 14",
       [] {
         Outcome o;
         for (int nu = 2; nu <= 14; ++nu) {
           try {
             decompose(p_nu(nu, 60), space_basis(2 * nu, 60));
           } catch (const NotInSpaceError&) {
             o.fail("nu = " + std::to_string(nu));
           }
         }
         return o;
       }},
      {"constant term of P_nu is C(2nu - 2, nu - 2)",
       [] {
         Outcome o;
         for (int nu = 2; nu <= 14; ++nu)
           o.require(p_nu(nu, 4).coeff(0) == Rat(binomial(2 * nu - 2, nu - 2)), "nu = " + std::to_string(nu));
         return o;
       }},
      {"g_nu(n, k) is even in 6k + 1",
       [] {
         Outcome o;
         for (int nu = 0; nu <= 10; ++nu)
           for (long n = 0; n <= 10; ++n)
             for (long k = -10; k <= 10; ++k) {
               // rebuild from X = -(6k+1): only X^2 enters
               Int x = -(6 * k + 1);
               Rat s = 0;
               for (int r = 0; r <= nu; ++r) {
                 Int xp, yp;
                 mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(2 * r));
                 Int y = Int(24 * n) - x * x;
                 mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(nu - r));
                 Rat t = make_rat(Int(2 * nu - 2 * r - 1) * xp * yp,
                                  factorial(static_cast<unsigned long>(2 * r)) *
                                      factorial(static_cast<unsigned long>(2 * nu - 2 * r)));
                 s += (nu + r) % 2 ? Rat(-t) : t;
               }
               o.require(g_poly(nu, n, k) == p_nu_prefactor(nu) * s, "nu = " + std::to_string(nu));
             }
         return o;
       }},
      {"bracket of 1/eta and eta equals P_nu / 24^nu for nu <= 6",
       [] {
         Outcome o;
         const long P = 30;
         QSeries24 inv = eta_inverse_expansion(24 * P), eta = eta_expansion(24 * P);
         for (int nu = 0; nu <= 6; ++nu) {
           IntQSeries br = to_int_series(rc_bracket(inv, Rat(-1, 2), eta, Rat(1, 2), nu));
           o.require(equal_through_precision(p_nu(nu, P - 1), rc_to_p_nu_scale(nu) * br), "nu = " + std::to_string(nu));
         }
         return o;
       }},
  };
}

// ------------------------------------------------------------- corollaries

const std::vector<std::pair<int, const char*>>& beta_table() {
  static const std::vector<std::pair<int, const char*>> t = {
      {6, "-33108590592/691"},
      {8, "-187167592415232/3617"},
      {9, "-28682634201661440/43867"},
      {10, "-8294726176465158144/174611"},
      {11, "-101475065073734516736/77683"},
      {13, "-1195065734266339700244480/657931"},
  };
  return t;
}

std::vector<NamedCheck> corollaries_checks() {
  return {
      {"no cusp part for nu in {2, 3, 4, 5, 7}",
       [] {
         Outcome o;
         for (int nu : {2, 3, 4, 5, 7}) {
           IntQSeries p = p_nu(nu, 51);
           Rat alpha = divisor_term_constant(nu);
           o.require(p.coeff(0) == Rat(binomial(2 * nu - 2, nu - 2)), "constant term, nu = " + std::to_string(nu));
           for (long n = 1; n <= 50; ++n)
             o.require(p.coeff(n) == alpha * Rat(sigma(static_cast<unsigned long>(2 * nu - 1), n)),
                       "nu = " + std::to_string(nu) + ", n = " + std::to_string(n));
         }
         return o;
       }},
      {"beta_nu table",
       [] {
         Outcome o;
         for (auto [nu, v] : beta_table()) {
           Rat got = corollary_beta(nu);
           o.require(got == parse_rat(v), "nu = " + std::to_string(nu) + " gives " + to_string(got));
         }
         return o;
       }},
      {"cusp part of P_nu is beta_nu Delta_2nu",
       [] {
         Outcome o;
         for (auto [nu, v] : beta_table()) {
           IntQSeries p = p_nu(nu, 40);
           IntQSeries cusp = p - Rat(binomial(2 * nu - 2, nu - 2)) * eisenstein(2 * nu, 40);
           o.require(equal_through_precision(cusp, parse_rat(v) * delta_2nu(nu, 40)), "nu = " + std::to_string(nu));
         }
         return o;
       }},
  };
}

// ----------------------------------------------------------- ramanujan-691

std::vector<NamedCheck> ramanujan_checks() {
  return {
      {"Tr_12(n) = beta_6 tau(n), n <= 50",
       [] {
         Outcome o;
         TraceSeries t = trace_series(6, 50);
         IntQSeries d = delta_series(51);
         Rat b = parse_rat("-33108590592/691");
         for (long n = 1; n <= 50; ++n)
           o.require(t.values[static_cast<std::size_t>(n)] == b * d.coeff(n), "n = " + std::to_string(n));
         return o;
       }},
      {"tau(n) = sigma_11(n) mod 691, n <= 50",
       [] {
         Outcome o;
         IntQSeries d = delta_series(51);
         for (long n = 1; n <= 50; ++n) {
           Int diff = d.coeff(n).get_num() - sigma(11, n);
           o.require(diff % 691 == 0, "n = " + std::to_string(n));
         }
         return o;
       }},
  };
}

// ------------------------------------------------------------------- hecke

std::vector<NamedCheck> hecke_checks() {
  return {
      {"eigenforms are T_m eigenvectors for m in {2, 3, 5, 7}",
       [] {
         Outcome o;
         for (int w : {12, 16, 18, 20, 22, 24, 26, 28, 30}) {
           for (const Eigenform& f : eigenforms(w, 71))
             for (long m : {2L, 3L, 5L, 7L}) {
               auto t = hecke_operator(f.coeffs, w, m);
               for (std::size_t n = 0; n < t.size(); ++n)
                 o.require(t[n] == f.coeffs[static_cast<std::size_t>(m)] * f.coeffs[n],
                           "w = " + std::to_string(w) + ", m = " + std::to_string(m));
             }
         }
         return o;
       }},
      {"eigenform coefficients are multiplicative",
       [] {
         Outcome o;
         for (int w : {12, 24}) {
           for (const Eigenform& f : eigenforms(w, 101))
             for (long p = 2; p <= 10; ++p)
               for (long q = 2; p * q <= 100; ++q)
                 if (std::gcd(p, q) == 1)
                   o.require(f.coeffs[static_cast<std::size_t>(p * q)] ==
                                 f.coeffs[static_cast<std::size_t>(p)] * f.coeffs[static_cast<std::size_t>(q)],
                             "w = " + std::to_string(w));
         }
         return o;
       }},
      {"Eisenstein part plus eigenform part rebuilds P_nu, nu <= 13",
       [] {
         Outcome o;
         for (int nu = 2; nu <= 13; ++nu) {
           int dim = dim_cusp_forms(2 * nu);
           IntQSeries p = p_nu(nu, 31);
           IntQSeries eis = Rat(binomial(2 * nu - 2, nu - 2)) * eisenstein(2 * nu, 31);
           if (dim == 0) {
             o.require(equal_through_precision(p, eis), "nu = " + std::to_string(nu));
             continue;
           }
           auto g = df_over_norm(nu);
           auto ef = eigenforms(2 * nu, 31);
           for (long n = 0; n < 31; ++n) {
             QuadNum s = QuadNum(eis.coeff(n));
             for (std::size_t i = 0; i < ef.size(); ++i) s += g[i] * ef[i].coeffs[static_cast<std::size_t>(n)];
             o.require(s == QuadNum(p.coeff(n)), "nu = " + std::to_string(nu) + ", n = " + std::to_string(n));
           }
         }
         return o;
       }},
      {"ratios in a two-dimensional space are Galois conjugate",
       [] {
         Outcome o;
         for (int nu : {12, 14, 15}) {
           auto g = df_over_norm(nu);
           o.require(g.size() == 2 && g[1] == g[0].conjugate(), "nu = " + std::to_string(nu));
         }
         return o;
       }},
      {"weight 24 trace and ratios",
       [] {
         Outcome o;
         TraceSeries t = trace_series(12, 2);
         o.require(t.values[1] == parse_rat("-11762326506193377107116032/236364091"), "Tr(1)");
         o.require(t.values[2] == parse_rat("-22599437869751987230702829568/236364091"), "Tr(2)");
         const Int d(144169);
         QuadNum want(parse_rat("-5881163253096688553558016/236364091"),
                      make_rat(Int("676990898183648483035840512"), Int("236364091") * d), d);
         auto g = df_over_norm(12);
         o.require(g[0] == want, "first ratio " + to_string(g[0]));
         o.require(g[1] == want.conjugate(), "second ratio " + to_string(g[1]));
         return o;
       }},
  };
}

// --------------------------------------------------------------- dirichlet

long double beta_float(int nu, int j, long m) {
  auto G = [](long double x) { return std::tgamma(x); };
  auto rising = [](long double x, long n) {
    long double r = 1;
    for (long i = 0; i < n; ++i) r *= x + i;
    return r;
  };
  const long double pi = std::numbers::pi_v<long double>;
  long double v = ((j + 1) % 2 ? -1.0L : 1.0L) * G(nu - 0.5L) * G(nu + 0.5L) / (2 * std::sqrt(pi) * G(2.5L));
  v *= std::pow(6 / pi, 2 * nu - 1);
  v *= G(2 * nu + m - 1) / (G(j + 1) * G(m + 1) * G(2 * nu - j - 1));
  v *= rising(nu - j - 1, nu) * rising(1.5L, j) / (rising(-0.5L - j, nu) * rising(2.5L, j));
  return v;
}

const Eigenform& delta_eigenform(long N) {
  static Eigenform f;
  if (f.prec() < dirichlet_coeffs_needed(N)) f = eigenforms(12, dirichlet_coeffs_needed(N)).front();
  return f;
}

std::vector<NamedCheck> dirichlet_checks() {
  return {
      {"(12/n) is periodic and multiplicative through 10^4",
       [] {
         Outcome o;
         for (long n = 1; n <= 10000; ++n) {
           o.require(kronecker12(n) == kronecker12(n + 12), "period at n = " + std::to_string(n));
           o.require(kronecker12(n) == kronecker_symbol(12, n), "symbol at n = " + std::to_string(n));
         }
         for (long a = 1; a <= 100; ++a)
           for (long b = 1; a * b <= 10000; ++b)
             if (std::gcd(a * b, 12L) == 1)
               o.require(kronecker12(a * b) == kronecker12(a) * kronecker12(b), "multiplicativity");
         return o;
       }},
      {"beta(nu, j, m) against floating Gamma, 12 digits",
       [] {
         Outcome o;
         for (int nu = 2; nu <= 8; ++nu)
           for (int j = 0; j <= nu - 2; ++j)
             for (long m = 0; m <= 5; ++m) {
               long double ref = beta_float(nu, j, m), got = beta_constant(nu, j, m).to_long_double();
               o.require(std::fabs(got - ref) <= 1e-12L * std::fabs(ref),
                         "nu = " + std::to_string(nu) + ", j = " + std::to_string(j) + ", m = " + std::to_string(m));
             }
         return o;
       }},
      {"|D^(100, 2N) - D^(100, N)| decreases for N in {250, 500, 1000, 2000}",
       [] {
         Outcome o;
         const Eigenform& f = delta_eigenform(4000);
         double prev = INFINITY;
         std::string trail;
         for (long N : {250L, 500L, 1000L, 2000L}) {
           double step = std::fabs(df_truncated(f, 6, 100, 2 * N) - df_truncated(f, 6, 100, N));
           trail += (trail.empty() ? "" : ", ") + str(step);
           o.require(step < prev, "");
           prev = step;
         }
         o.detail = "steps " + trail;
         return o;
       }},
      {"|D(Delta, 2N; 13) - D(Delta, N; 13)| decreases for N in {250, 500, 1000, 2000}",
       [] {
         Outcome o;
         const Eigenform& f = delta_eigenform(4000);
         double prev = INFINITY;
         std::string trail;
         for (long N : {250L, 500L, 1000L, 2000L}) {
           double tail = std::fabs(dirichlet_partial(f, 2 * N, 13) - dirichlet_partial(f, N, 13));
           trail += (trail.empty() ? "" : ", ") + str(tail);
           o.require(tail < prev, "");
           prev = tail;
         }
         o.detail = "tails " + trail;
         return o;
       }},
      {"Petersson norm estimate of Delta in [1.0353e-6, 1.0354e-6]",
       [] {
         Outcome o;
         NormEstimate e = petersson_norm_estimate(6, 100, 2000);
         double v = e.norms.at(0);
         o.require(v >= 1.0353e-6 && v <= 1.0354e-6, "");
         o.detail = "norm " + str(v);
         return o;
       }},
  };
}

// -------------------------------------------------------------- rademacher

struct Sl2 {
  long a, b, c, d;
};

Sl2 random_sl2(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long c = dist(rng), d = dist(rng);
    if (c == 0 && d == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Int(d).get_mpz_t(), Int(c).get_mpz_t());
    if (g != 1) continue;
    return {s.get_si(), -t.get_si(), c, d};
  }
}

std::vector<NamedCheck> rademacher_checks() {
  return {
      {"partial sums round to p(n) from some C0 <= 50 on, n <= 50",
       [] {
         Outcome o;
         PartitionTable t = partition_table(50);
         long worst_c0 = 0;
         for (long n = 1; n <= 50; ++n) {
           auto runs = rademacher_convergence(n, 50);
           long c0 = 0;
           for (long C = 50; C >= 1 && runs[static_cast<std::size_t>(C - 1)].nearest == t(n); --C) c0 = C;
           o.require(c0 >= 1, "n = " + std::to_string(n) + " never rounds correctly");
           o.require(runs.back().gap < 0.5, "gap at n = " + std::to_string(n));
           o.require(runs.back().imag_residual < 1e-6, "imaginary residual at n = " + std::to_string(n));
           worst_c0 = std::max(worst_c0, c0);
         }
         if (o.ok) o.detail = "largest C0 = " + std::to_string(worst_c0);
         return o;
       }},
      {"eps(gamma)^24 = 1 for 200 random gamma",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 7);
         for (int i = 0; i < 200; ++i) {
           Sl2 g = random_sl2(rng, 10000);
           o.require(eta_multiplier(g.a, g.b, g.c, g.d).pow(24) == Root24{1, 0}, "power");
         }
         return o;
       }},
      {"multiplier cocycle at tau = i for 100 random pairs",
       [] {
         Outcome o;
         std::mt19937_64 rng(kSeed + 8);
         const std::complex<double> tau(0, 1);
         auto j = [](const Sl2& m, std::complex<double> z) {
           return std::sqrt(static_cast<double>(m.c) * z + static_cast<double>(m.d));
         };
         auto act = [](const Sl2& m, std::complex<double> z) {
           return (static_cast<double>(m.a) * z + static_cast<double>(m.b)) /
                  (static_cast<double>(m.c) * z + static_cast<double>(m.d));
         };
         for (int i = 0; i < 100; ++i) {
           Sl2 g1 = random_sl2(rng, 30), g2 = random_sl2(rng, 30);
           Sl2 g{g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d, g1.c * g2.a + g1.d * g2.c,
                 g1.c * g2.b + g1.d * g2.d};
           auto whole = eta_multiplier(g.a, g.b, g.c, g.d).value() * j(g, tau);
           auto split = eta_multiplier(g1.a, g1.b, g1.c, g1.d).value() * j(g1, act(g2, tau)) *
                        eta_multiplier(g2.a, g2.b, g2.c, g2.d).value() * j(g2, tau);
           o.require(std::abs(whole - split) < 1e-10 * std::abs(whole), "pair " + std::to_string(i));
         }
         return o;
       }},
      {"optimized and literal Kloosterman phases agree",
       [] {
         Outcome o;
         for (long c = 1; c <= 20; ++c)
           o.require(kloosterman(c, -24, 96).histogram == kloosterman_literal(c, -24, 96).histogram,
                     "c = " + std::to_string(c));
         return o;
       }},
  };
}

struct Suite {
  std::string name;
  std::vector<NamedCheck> (*make)();
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s = {
      {"exactnum", exactnum_checks},       {"qseries", qseries_checks},
      {"euler", euler_checks},             {"partitions", partitions_checks},
      {"forms", forms_checks},             {"rankincohen", rankincohen_checks},
      {"corollaries", corollaries_checks}, {"ramanujan-691", ramanujan_checks},
      {"hecke", hecke_checks},             {"dirichlet", dirichlet_checks},
      {"rademacher", rademacher_checks},
  };
  return s;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const std::function<void(const CheckResult&)>& on_result) {
  bool found = suite == "all";
  std::vector<CheckResult> out;
  for (const auto& s : suites()) {
    if (suite != "all" && suite != s.name) continue;
    found = true;
    for (const auto& c : s.make()) {
      CheckResult r{s.name, c.name, false, "", 0.0};
      auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = c.run();
        r.passed = o.ok;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (on_result) on_result(r);
      out.push_back(std::move(r));
    }
  }
  if (!found) throw DomainError("unknown verify suite '" + suite + "'");
  return out;
}

}  // namespace pentarec
