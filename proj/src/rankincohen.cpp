#include "pentarec/rankincohen.hpp"

#include <vector>

namespace pentarec {

Rat p_nu_prefactor(int nu) {
  if (nu < 0) throw DomainError("nu must be nonnegative");
  Rat ff = falling_factorial(Rat(2 * nu - 2), nu - 1);
  Rat pw = nu >= 1 ? Rat(int_pow(2, static_cast<unsigned long>(2 * nu - 2))) : Rat(1, 4);
  return Rat(2 * nu - 1) * ff * ff / pw;
}

Rat rc_to_p_nu_scale(int nu) {
  if (nu < 0) throw DomainError("nu must be nonnegative");
  return Rat(int_pow(24, static_cast<unsigned long>(nu)));
}

IntQSeries p_nu(int nu, long prec) {
  if (nu < 0) throw DomainError("nu must be nonnegative");
  if (prec < 2) throw PrecisionError("p_nu needs prec >= 2");
  const long prec24 = 24 * prec;
  QSeries24 inv = eta_inverse_expansion(prec24);
  QSeries24 eta = eta_expansion(prec24);

  std::vector<QSeries24> dinv{inv}, deta{eta};
  for (int i = 1; i <= nu; ++i) {
    dinv.push_back(d_operator(dinv.back()));
    deta.push_back(d_operator(deta.back()));
  }

  // weight of D^r(1/eta) D^s(eta) is (-1)^r (2r - 1) / ((2r)! (2s)!)
  const Rat scale = p_nu_prefactor(nu) * rc_to_p_nu_scale(nu);
  QSeries24 total;
  bool first = true;
  for (int r = 0; r <= nu; ++r) {
    int s = nu - r;
    Rat w = scale * Rat(2 * r - 1) /
            Rat(factorial(static_cast<unsigned long>(2 * r)) * factorial(static_cast<unsigned long>(2 * s)));
    if (r % 2) w = -w;
    QSeries24 term = w * mul(dinv[static_cast<std::size_t>(r)], deta[static_cast<std::size_t>(s)]);
    total = first ? term : total + term;
    first = false;
  }
  return to_int_series(total).truncated(prec);
}

Rat g_poly(int nu, long n, long k) {
  if (nu < 0) throw DomainError("nu must be nonnegative");
  const Int x2 = Int(6 * k + 1) * Int(6 * k + 1);
  const Int y = Int(24 * n) - x2;
  Rat sum = 0;
  Int xp = 1;  // (6k+1)^(2r)
  for (int r = 0; r <= nu; ++r) {
    Int yp;
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(nu - r));
    Rat t = make_rat(Int(2 * nu - 2 * r - 1) * xp * yp,
                     factorial(static_cast<unsigned long>(2 * r)) * factorial(static_cast<unsigned long>(2 * nu - 2 * r)));
    if ((nu + r) % 2) sum -= t;
    else sum += t;
    xp *= x2;
  }
  return p_nu_prefactor(nu) * sum;
}

IntQSeries p_nu_series_side(int nu, long prec) {
  return p_nu_series_side(nu, prec, partition_table(prec));
}

IntQSeries p_nu_series_side(int nu, long prec, const PartitionTable& ptable) {
  if (prec < 2) throw PrecisionError("p_nu_series_side needs prec >= 2");
  std::vector<Rat> v(static_cast<std::size_t>(prec));
  for (long n = 0; n < prec; ++n) {
    Rat s = g_poly(nu, n, 0) * Rat(ptable(n));  // k = 0 belongs to the sum here
    for_each_pentagonal(n, [&](long k, long w) {
      Rat t = g_poly(nu, n, k) * Rat(ptable(n - w));
      if (k % 2) s -= t;
      else s += t;
    });
    v[static_cast<std::size_t>(n)] = std::move(s);
  }
  return IntQSeries(0, prec, std::move(v));
}

namespace {

void require_no_pole(const Rat& x) {
  if (x.get_den() == 1 && x <= 0) throw DomainError("Gamma pole at " + to_string(x));
}

}  // namespace

QSeries24 rc_bracket(const QSeries24& f, const Rat& wf, const QSeries24& g, const Rat& wg, int nu) {
  if (nu < 0) throw DomainError("nu must be nonnegative");
  require_no_pole(wf + nu);
  require_no_pole(wg + nu);
  std::vector<QSeries24> df{f}, dg{g};
  for (int i = 1; i <= nu; ++i) {
    df.push_back(d_operator(df.back()));
    dg.push_back(d_operator(dg.back()));
  }
  QSeries24 total;
  for (int r = 0; r <= nu; ++r) {
    int s = nu - r;
    // Gamma(w + nu) / Gamma(w + nu - j) = (w + nu - j)^(rising j)
    Rat c = rising_factorial(wf + nu - s, s) * rising_factorial(wg + nu - r, r) /
            Rat(factorial(static_cast<unsigned long>(s)) * factorial(static_cast<unsigned long>(r)));
    if (r % 2) c = -c;
    QSeries24 term = c * mul(df[static_cast<std::size_t>(r)], dg[static_cast<std::size_t>(s)]);
    total = r == 0 ? term : total + term;
  }
  return total;
}

}  // namespace pentarec
