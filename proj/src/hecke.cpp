#include "pentarec/hecke.hpp"

#include <numeric>

#include "pentarec/forms.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/rankincohen.hpp"

namespace pentarec {

namespace {

template <class T, class Get>
std::vector<T> hecke_apply(Get a, long in_len, int weight, long m) {
  if (m < 1) throw DomainError("Hecke index must be positive");
  if (weight < 1) throw DomainError("Hecke weight must be positive");
  long out_len = in_len / m;
  if (out_len < 1) throw PrecisionError("series too short for T_m");
  std::vector<T> out(static_cast<std::size_t>(out_len));
  for (long n = 0; n < out_len; ++n) {
    long g = std::gcd(m, n);
    T s{};
    for (long d = 1; d <= g; ++d) {
      if (g % d) continue;
      s += T(Rat(int_pow(d, static_cast<unsigned long>(weight - 1)))) * a(m * n / (d * d));
    }
    out[static_cast<std::size_t>(n)] = s;
  }
  return out;
}

}  // namespace

IntQSeries hecke_operator(const IntQSeries& f, int weight, long m) {
  if (f.offset() < 0) throw DomainError("hecke_operator needs nonnegative exponents");
  auto v = hecke_apply<Rat>([&](long e) { return f.coeff(e); }, f.prec(), weight, m);
  const auto len = static_cast<long>(v.size());
  return IntQSeries(0, len, std::move(v));
}

std::vector<QuadNum> hecke_operator(const std::vector<QuadNum>& coeffs, int weight, long m) {
  return hecke_apply<QuadNum>([&](long e) { return coeffs[static_cast<std::size_t>(e)]; },
                              static_cast<long>(coeffs.size()), weight, m);
}

namespace {

std::vector<QuadNum> as_quad(const IntQSeries& f, long prec) {
  std::vector<QuadNum> v(static_cast<std::size_t>(prec));
  for (long n = 0; n < prec; ++n) v[static_cast<std::size_t>(n)] = QuadNum(f.coeff(n));
  return v;
}

}  // namespace

std::vector<Eigenform> eigenforms(int weight, long prec) {
  if (weight < 12 || weight % 2) throw DomainError("eigenforms needs an even weight >= 12");
  if (prec < 3) throw PrecisionError("eigenforms needs prec >= 3");
  int dim = dim_cusp_forms(weight);
  if (dim == 1) {
    // The normalized generator is Delta times the unique monomial of weight - 12.
    IntQSeries g = delta_series(prec);
    if (weight > 12) {
      MFSpace rest = space_basis(weight - 12, std::max(prec, 5L));
      g = mul(g, rest.basis.front().truncated(prec)).truncated(prec);
    }
    return {Eigenform{weight, Int(1), as_quad(g, prec)}};
  }
  if (dim != 2) throw UnsupportedFieldError("unsupported Hecke field degree (dim S = " + std::to_string(dim) + ")");

  MFSpace sp = space_basis(weight, std::max(prec, 8L));
  const IntQSeries& b1 = sp.cusp_basis[0];
  const IntQSeries& b2 = sp.cusp_basis[1];
  // T2 in the echelon basis: column j holds (T2 b_j)(1), (T2 b_j)(2).
  IntQSeries t1 = hecke_operator(b1, weight, 2), t2 = hecke_operator(b2, weight, 2);
  Rat m11 = t1.coeff(1), m21 = t1.coeff(2), m12 = t2.coeff(1), m22 = t2.coeff(2);
  Rat tr = m11 + m22, det = m11 * m22 - m12 * m21;
  Rat disc = tr * tr - 4 * det;
  if (sgn(disc) < 0) throw UnsupportedFieldError("T2 has non-real eigenvalues");
  // sqrt(disc) = s sqrt(d) / den with num * den = s^2 d
  Int num = disc.get_num(), den = disc.get_den();
  std::vector<Eigenform> out;
  QuadNum lam_minus, lam_plus;
  Int d(1);
  if (sgn(num) == 0) throw UnsupportedFieldError("T2 has a repeated eigenvalue");
  SquarefreeSplit split = squarefree_split(num * den);
  d = split.squarefree;
  Rat half_root = make_rat(split.square_root, 2 * den);
  if (d == 1) {
    lam_minus = QuadNum(tr / 2 - half_root);
    lam_plus = QuadNum(tr / 2 + half_root);
  } else {
    lam_minus = QuadNum(tr / 2, -half_root, d);
    lam_plus = QuadNum(tr / 2, half_root, d);
  }
  for (const QuadNum& lam : {lam_minus, lam_plus}) {
    // f = b1 + x b2 with a(2) = lam
    QuadNum x = lam - QuadNum(b1.coeff(2));
    std::vector<QuadNum> c(static_cast<std::size_t>(prec));
    for (long n = 0; n < prec; ++n)
      c[static_cast<std::size_t>(n)] = QuadNum(b1.coeff(n)) + x * QuadNum(b2.coeff(n));
    out.push_back(Eigenform{weight, d, std::move(c)});
  }
  return out;
}

TraceSeries trace_series(int nu, long N) {
  if (N < 1) throw DomainError("trace_series needs N >= 1");
  TraceSeries t{nu, std::vector<Rat>(static_cast<std::size_t>(N) + 1)};
  if (nu < 2 || dim_cusp_forms(2 * nu) == 0) return t;  // no cusp forms: the trace is zero
  IntQSeries p = p_nu(nu, N + 1);
  Rat alpha = divisor_term_constant(nu);
  for (long n = 1; n <= N; ++n)
    t.values[static_cast<std::size_t>(n)] =
        p.coeff(n) - alpha * Rat(sigma(static_cast<unsigned long>(2 * nu - 1), n));
  return t;
}

std::vector<QuadNum> df_over_norm(int nu) {
  int dim = nu >= 2 ? dim_cusp_forms(2 * nu) : 0;
  if (dim < 1 || dim > 2) throw UnsupportedFieldError("df_over_norm needs dim S_2nu in {1, 2}");
  TraceSeries tr = trace_series(nu, dim);
  if (dim == 1) return {QuadNum(tr.values[1])};
  auto ef = eigenforms(2 * nu, 3);
  QuadNum a1 = ef[0].coeffs[2], a2 = ef[1].coeffs[2];
  QuadNum gap = a1 - a2;
  if (gap.is_zero()) throw DivisionByZero("eigenforms share a(2)");
  // gamma1 + gamma2 = Tr(1), gamma1 a1 + gamma2 a2 = Tr(2)
  QuadNum g1 = (QuadNum(tr.values[2]) - a2 * QuadNum(tr.values[1])) / gap;
  QuadNum g2 = QuadNum(tr.values[1]) - g1;
  return {g1, g2};
}

TraceSeries trace_from_eigenforms(int nu, long N) {
  if (N < 1) throw DomainError("trace_from_eigenforms needs N >= 1");
  std::vector<QuadNum> gam = df_over_norm(nu);
  auto ef = eigenforms(2 * nu, N + 1);
  TraceSeries t{nu, std::vector<Rat>(static_cast<std::size_t>(N) + 1)};
  for (long n = 1; n <= N; ++n) {
    QuadNum s;
    for (std::size_t i = 0; i < ef.size(); ++i) s += gam[i] * ef[i].coeffs[static_cast<std::size_t>(n)];
    if (!s.is_rational()) throw InternalError("trace from eigenforms is irrational");
    t.values[static_cast<std::size_t>(n)] = s.a();
  }
  return t;
}

Rat corollary_beta(int nu) {
  if (nu < 2 || dim_cusp_forms(2 * nu) != 1) throw DomainError("corollary_beta needs dim S_2nu = 1");
  return df_over_norm(nu)[0].a();
}

}  // namespace pentarec
