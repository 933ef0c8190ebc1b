#include "pentarec/forms.hpp"

#include <algorithm>

#include "pentarec/kernels.hpp"

namespace pentarec {

namespace {

void require_even_weight(int weight, int min) {
  if (weight % 2 != 0 || weight < min)
    throw DomainError("weight must be even and at least " + std::to_string(min));
}

// sigma_m(n) for 1 <= n < len by a divisor sieve.
std::vector<Int> sigma_table(unsigned long m, long len) {
  std::vector<Int> s(static_cast<std::size_t>(std::max(len, 1L)));
  for (long d = 1; d < len; ++d) {
    Int dp = int_pow(d, m);
    for (long n = d; n < len; n += d) s[static_cast<std::size_t>(n)] += dp;
  }
  return s;
}

}  // namespace

IntQSeries eisenstein(int weight, long prec) {
  require_even_weight(weight, 2);
  if (prec < 1) throw PrecisionError("eisenstein needs prec >= 1");
  Rat c = Rat(-2 * weight) / bernoulli(static_cast<unsigned long>(weight));
  std::vector<Int> sig = sigma_table(static_cast<unsigned long>(weight - 1), prec);
  std::vector<Rat> v(static_cast<std::size_t>(prec));
  v[0] = 1;
  for (long n = 1; n < prec; ++n) v[static_cast<std::size_t>(n)] = c * Rat(sig[static_cast<std::size_t>(n)]);
  return IntQSeries(0, prec, std::move(v));
}

IntQSeries delta_series(long prec) {
  if (prec < 2) throw PrecisionError("delta_series needs prec >= 2");
  const auto len = static_cast<std::size_t>(prec - 1);
  std::vector<Int> f(len);
  for (long k = 0;; ++k) {
    long e = k * (k + 1) / 2;
    if (e >= static_cast<long>(len)) break;
    f[static_cast<std::size_t>(e)] = (k % 2 ? -1 : 1) * (2 * k + 1);
  }
  std::vector<Int> p = kernels::power_series_pow(f, 8, len);
  std::vector<Rat> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = Rat(p[i]);
  return IntQSeries(1, prec, std::move(v));
}

IntQSeries delta_2nu(int nu, long prec) {
  int a, b;
  switch (nu) {
    case 6: a = 0, b = 0; break;
    case 8: a = 1, b = 0; break;
    case 9: a = 0, b = 1; break;
    case 10: a = 2, b = 0; break;
    case 11: a = 1, b = 1; break;
    case 13: a = 2, b = 1; break;
    default: throw DomainError("delta_2nu is defined for nu in {6, 8, 9, 10, 11, 13}");
  }
  IntQSeries out = delta_series(prec);
  if (a) out = mul(out, pow(eisenstein(4, prec), static_cast<unsigned long>(a), prec));
  if (b) out = mul(out, eisenstein(6, prec));
  return out.truncated(prec);
}

int dim_modular_forms(int weight) {
  if (weight < 0 || weight % 2) return 0;
  if (weight == 2) return 0;
  return weight / 12 + (weight % 12 == 2 ? 0 : 1);
}

int dim_cusp_forms(int weight) {
  int d = dim_modular_forms(weight);
  return weight >= 4 ? std::max(d - 1, 0) : 0;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

MFSpace space_basis(int weight, long prec) {
  require_even_weight(weight, 4);
  MFSpace s;
  s.weight = weight;
  for (int a = 0; 4 * a <= weight; ++a)
    if ((weight - 4 * a) % 6 == 0) s.exponents.emplace_back(a, (weight - 4 * a) / 6);
  s.dim_total = static_cast<int>(s.exponents.size());
  s.dim_cusp = s.dim_total - 1;
  if (prec <= s.dim_total + 2) throw PrecisionError("space_basis needs prec > dim + 2");
  s.prec = prec;

  IntQSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  int max_a = s.exponents.back().first, max_b = s.exponents.front().second;
  std::vector<IntQSeries> p4{IntQSeries::one(prec)}, p6{IntQSeries::one(prec)};
  for (int i = 1; i <= max_a; ++i) p4.push_back(mul(p4.back(), e4));
  for (int i = 1; i <= max_b; ++i) p6.push_back(mul(p6.back(), e6));
  for (auto [a, b] : s.exponents)
    s.basis.push_back(mul(p4[static_cast<std::size_t>(a)], p6[static_cast<std::size_t>(b)]));

  if (s.dim_cusp > 0) {
    IntQSeries ew = eisenstein(weight, prec);
    std::vector<std::vector<Rat>> rows;
    for (const auto& m : s.basis) rows.push_back((m - ew).coeffs());
    std::vector<std::size_t> piv = rref(rows, static_cast<std::size_t>(prec));
    if (static_cast<int>(rows.size()) != s.dim_cusp)
      throw PrecisionError("cusp echelon form did not reach full rank");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (piv[i] != i + 1) throw InternalError("cusp basis is not in staircase form");
      s.cusp_basis.emplace_back(0, prec, std::move(rows[i]));
    }
  }
  return s;
}

std::vector<Rat> solve_in_span(const IntQSeries& f, std::span<const IntQSeries> basis) {
  long prec = f.prec();
  for (const auto& b : basis) prec = std::min(prec, b.prec());
  long lo = f.offset();
  for (const auto& b : basis) lo = std::min(lo, b.offset());
  if (prec <= lo) throw PrecisionError("no common precision");
  const auto k = basis.size();
  const auto nrows = static_cast<std::size_t>(prec - lo);
  // Augmented system: one row per exponent, columns = basis | f.
  std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < nrows; ++r) {
    long e = lo + static_cast<long>(r);
    for (std::size_t c = 0; c < k; ++c) m[r][c] = basis[c].coeff(e);
    m[r][k] = f.coeff(e);
  }
  std::vector<std::size_t> piv = rref(m, k + 1);
  if (!piv.empty() && piv.back() == k) throw NotInSpaceError("series is not in the span of the basis");
  std::vector<Rat> x(k);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][k];
  // residual check on the original data
  IntQSeries back = synthesize(x, basis);
  for (long e = lo; e < prec; ++e)
    if (back.coeff(e) != f.coeff(e)) throw NotInSpaceError("nonzero residual after solve");
  return x;
}

std::vector<Rat> decompose(const IntQSeries& f, const MFSpace& space) {
  if (f.offset() < 0) throw DomainError("decompose needs nonnegative exponents");
  if (f.prec() < space.dim_total + 1) throw PrecisionError("decompose needs f.prec >= dim + 1");
  return solve_in_span(f, space.basis);
}

IntQSeries synthesize(std::span<const Rat> coords, std::span<const IntQSeries> basis) {
  if (coords.size() != basis.size() || basis.empty()) throw DomainError("coordinate count mismatch");
  IntQSeries out = coords[0] * basis[0];
  for (std::size_t i = 1; i < basis.size(); ++i) out = out + coords[i] * basis[i];
  return out;
}

}  // namespace pentarec
