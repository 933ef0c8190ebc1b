#include "pentarec/dirichlet.hpp"

#include <cmath>
#include <map>

namespace pentarec {

int kronecker12(long n) {
  if (n < 1) throw DomainError("kronecker12 needs n >= 1");
  switch (n % 12) {
    case 1:
    case 11: return 1;
    case 5:
    case 7: return -1;
    default: return 0;
  }
}

PiScalar beta_constant(int nu, int j, long m) {
  if (nu < 2) throw DomainError("beta needs nu >= 2");
  if (j < 0 || j > nu - 2) throw DomainError("beta needs 0 <= j <= nu - 2");
  if (m < 0) throw DomainError("beta needs m >= 0");
  const Rat half(1, 2);
  PiScalar g = gamma_exact(Rat(nu) - half) * gamma_exact(Rat(nu) + half) /
               (PiScalar(Rat(2), 1) * gamma_exact(Rat(5, 2)));
  PiScalar six_over_pi(Rat(int_pow(6, static_cast<unsigned long>(2 * nu - 1))), -2 * (2 * nu - 1));
  Rat fact = make_rat(factorial(static_cast<unsigned long>(2 * nu + m - 2)),
                      factorial(static_cast<unsigned long>(j)) * factorial(static_cast<unsigned long>(m)) *
                          factorial(static_cast<unsigned long>(2 * nu - j - 2)));
  Rat rising = rising_factorial(Rat(nu - j - 1), nu) * rising_factorial(Rat(3, 2), j) /
               (rising_factorial(Rat(-1, 2) - j, nu) * rising_factorial(Rat(5, 2), j));
  Rat sign = (j + 1) % 2 ? -1 : 1;
  return g * six_over_pi * (sign * fact * rising);
}

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) comp_ += (sum_ - t) + x;
  else comp_ += (x - t) + sum_;
  sum_ = t;
}

long dirichlet_coeffs_needed(long N) { return (N * N - 1) / 24 + 1; }

namespace {

// Real embedding of every coefficient the sums touch, indexed by n.
struct TwistedTerms {
  std::vector<long> n;
  std::vector<double> a;       // (12/n) a_f((n^2-1)/24) in binary64
  std::vector<mpf_class> ax;   // same in extended precision, when requested
};

TwistedTerms twisted_terms(const Eigenform& f, long N, const FloatConfig& cfg) {
  if (N < 1) throw DomainError("Dirichlet sums need N >= 1");
  if (f.prec() < dirichlet_coeffs_needed(N)) throw PrecisionError("eigenform too short for this N");
  TwistedTerms t;
  for (long n = 1; n <= N; ++n) {
    int chi = kronecker12(n);
    if (chi == 0) continue;
    if ((n * n - 1) % 24 != 0) throw InternalError("24 does not divide n^2 - 1 for n coprime to 12");
    const QuadNum& c = f.coeffs[static_cast<std::size_t>((n * n - 1) / 24)];
    if (c.is_zero()) continue;
    t.n.push_back(n);
    t.a.push_back(chi * c.to_double());
    if (cfg.mode == FloatMode::Extended) {
      mpf_class v = c.to_mpf(cfg.bits);
      if (chi < 0) v = -v;
      t.ax.push_back(v);
    }
  }
  return t;
}

double partial_from_terms(const TwistedTerms& t, long s) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < t.n.size(); ++i)
    acc.add(t.a[i] * std::pow(static_cast<double>(t.n[i]), -static_cast<double>(s)));
  return acc.value();
}

mpf_class partial_from_terms_ext(const TwistedTerms& t, long s, unsigned long bits) {
  mpf_class acc(0, bits), p(0, bits);
  for (std::size_t i = 0; i < t.n.size(); ++i) {
    mpf_class base(static_cast<double>(t.n[i]), bits);
    mpf_pow_ui(p.get_mpf_t(), base.get_mpf_t(), static_cast<unsigned long>(s));
    acc += t.ax[i] / p;
  }
  return acc;
}

}  // namespace

double dirichlet_partial(const Eigenform& f, long N, long s) {
  if (s < f.weight + 1) throw DomainError("dirichlet_partial needs s >= weight + 1");
  return partial_from_terms(twisted_terms(f, N, {}), s);
}

double df_truncated(const Eigenform& f, int nu, long M, long N, FloatConfig cfg) {
  if (f.weight != 2 * nu) throw DomainError("eigenform weight must be 2 nu");
  if (M < 0) throw DomainError("df_truncated needs M >= 0");
  TwistedTerms t = twisted_terms(f, N, cfg);
  if (cfg.mode == FloatMode::Extended) {
    std::map<long, mpf_class> cache;
    mpf_class total(0, cfg.bits);
    for (int j = 0; j <= nu - 2; ++j) {
      for (long m = 0; m <= M; ++m) {
        long s = 2 * nu + 1 + 2 * m + 2 * j;
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, partial_from_terms_ext(t, s, cfg.bits)).first;
        total += beta_constant(nu, j, m).to_mpf(cfg.bits) * it->second;
      }
    }
    return total.get_d();
  }
  std::map<long, double> cache;
  CompensatedSum total;
  for (int j = 0; j <= nu - 2; ++j) {
    for (long m = 0; m <= M; ++m) {
      long s = 2 * nu + 1 + 2 * m + 2 * j;
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, partial_from_terms(t, s)).first;
      total.add(beta_constant(nu, j, m).to_double() * it->second);
    }
  }
  return total.value();
}

NormEstimate petersson_norm_estimate(int nu, long M, long N, FloatConfig cfg) {
  NormEstimate est;
  est.nu = nu;
  est.M = M;
  est.N = N;
  est.df_over_norm = df_over_norm(nu);
  auto ef = eigenforms(2 * nu, dirichlet_coeffs_needed(N));
  for (std::size_t i = 0; i < ef.size(); ++i) {
    double d = df_truncated(ef[i], nu, M, N, cfg);
    est.df_hat.push_back(d);
    est.norms.push_back(d / est.df_over_norm[i].to_double());
  }
  return est;
}

}  // namespace pentarec
