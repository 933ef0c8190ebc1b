#include "pentarec/qseries.hpp"

#include <algorithm>

#include "pentarec/kernels.hpp"

namespace pentarec {

template <long G>
Series<G>::Series(long offset, long prec, std::vector<Rat> coeffs)
    : offset_(offset), prec_(prec), coeffs_(std::move(coeffs)) {
  if (prec_ <= offset_) throw PrecisionError("series needs prec > offset");
  if (coeffs_.size() != static_cast<std::size_t>(prec_ - offset_))
    throw DomainError("series coefficient count must equal prec - offset");
}

template <long G>
Series<G> Series<G>::monomial(long exponent, const Rat& c, long prec) {
  if (prec <= exponent) throw PrecisionError("monomial exponent at or above precision");
  std::vector<Rat> v(static_cast<std::size_t>(prec - exponent));
  v[0] = c;
  return Series(exponent, prec, std::move(v));
}

template <long G>
Rat Series<G>::coeff(long exponent) const {
  if (exponent >= prec_) throw PrecisionError("coefficient requested beyond known precision");
  if (exponent < offset_) return Rat(0);
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

template <long G>
Series<G> Series<G>::truncated(long new_prec) const {
  if (new_prec > prec_) throw PrecisionError("cannot raise precision by truncation");
  if (new_prec <= offset_) return Series::zero(new_prec - 1, new_prec);
  std::vector<Rat> v(coeffs_.begin(), coeffs_.begin() + (new_prec - offset_));
  return Series(offset_, new_prec, std::move(v));
}

template <long G>
Series<G> Series<G>::normalized() const {
  std::size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) return Series::zero(prec_ - 1, prec_);
  std::vector<Rat> v(coeffs_.begin() + static_cast<long>(first), coeffs_.end());
  return Series(offset_ + static_cast<long>(first), prec_, std::move(v));
}

template <long G>
bool Series<G>::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) == 0; });
}

namespace {

template <long G, class Op>
Series<G> combine(const Series<G>& a, const Series<G>& b, Op op) {
  long off = std::min(a.offset(), b.offset());
  long prec = std::min(a.prec(), b.prec());
  if (prec <= off) throw PrecisionError("sum has no known coefficients");
  std::vector<Rat> v(static_cast<std::size_t>(prec - off));
  for (long e = off; e < prec; ++e) v[static_cast<std::size_t>(e - off)] = op(a.coeff(e), b.coeff(e));
  return Series<G>(off, prec, std::move(v));
}

template <long G, class Kernel>
Series<G> mul_with(const Series<G>& a, const Series<G>& b, Kernel kernel) {
  long off = a.offset() + b.offset();
  long prec = std::min(a.prec() + b.offset(), b.prec() + a.offset());
  if (prec <= off) throw PrecisionError("product has no known coefficients");
  auto len = static_cast<std::size_t>(prec - off);
  return Series<G>(off, prec, kernel(a.coeffs(), b.coeffs(), len));
}

}  // namespace

template <long G>
Series<G> operator+(const Series<G>& a, const Series<G>& b) {
  return combine(a, b, [](const Rat& x, const Rat& y) { return Rat(x + y); });
}

template <long G>
Series<G> operator-(const Series<G>& a, const Series<G>& b) {
  return combine(a, b, [](const Rat& x, const Rat& y) { return Rat(x - y); });
}

template <long G>
Series<G> operator-(const Series<G>& a) {
  std::vector<Rat> v = a.coeffs();
  for (auto& c : v) c = -c;
  return Series<G>(a.offset(), a.prec(), std::move(v));
}

template <long G>
Series<G> operator*(const Rat& c, const Series<G>& a) {
  std::vector<Rat> v = a.coeffs();
  for (auto& x : v) x *= c;
  return Series<G>(a.offset(), a.prec(), std::move(v));
}

template <long G>
Series<G> mul(const Series<G>& a, const Series<G>& b) {
  return mul_with(a, b, [](const auto& x, const auto& y, std::size_t n) { return kernels::convolve(x, y, n); });
}

template <long G>
Series<G> mul_serial(const Series<G>& a, const Series<G>& b) {
  return mul_with(a, b, [](const auto& x, const auto& y, std::size_t n) { return kernels::convolve_serial(x, y, n); });
}

template <long G>
Series<G> pow(const Series<G>& a, unsigned long e, long prec) {
  Series<G> result = Series<G>::one(prec);
  Series<G> base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result.prec() > prec ? result.truncated(prec) : result;
}

template <long G>
Series<G> invert(const Series<G>& a) {
  const auto& A = a.coeffs();
  if (sgn(A[0]) == 0) throw DivisionByZero("cannot invert a series with zero leading coefficient");
  std::size_t n = A.size();
  std::vector<std::size_t> nz;
  for (std::size_t i = 1; i < n; ++i)
    if (sgn(A[i]) != 0) nz.push_back(i);
  Rat inv0 = 1 / A[0];
  std::vector<Rat> B(n);
  B[0] = inv0;
  Rat sum;
  for (std::size_t k = 1; k < n; ++k) {
    sum = 0;
    for (std::size_t i : nz) {
      if (i > k) break;
      if (sgn(B[k - i]) != 0) sum += A[i] * B[k - i];
    }
    if (sgn(sum) != 0) B[k] = -inv0 * sum;
  }
  long off = -a.offset();
  return Series<G>(off, off + static_cast<long>(n), std::move(B));
}

template <long G>
Series<G> d_operator(const Series<G>& a) {
  std::vector<Rat> v = a.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    v[i] *= make_rat(a.offset() + static_cast<long>(i), G);
  }
  return Series<G>(a.offset(), a.prec(), std::move(v));
}

template <long G>
Series<G> d_operator(const Series<G>& a, unsigned r) {
  Series<G> out = a;
  for (unsigned i = 0; i < r; ++i) out = d_operator(out);
  return out;
}

template <long G>
bool equal_through_precision(const Series<G>& a, const Series<G>& b) {
  long prec = std::min(a.prec(), b.prec());
  long off = std::min(a.offset(), b.offset());
  for (long e = off; e < prec; ++e)
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

#define PENTAREC_INSTANTIATE(G)                                                      \
  template class Series<G>;                                                          \
  template Series<G> operator+(const Series<G>&, const Series<G>&);                  \
  template Series<G> operator-(const Series<G>&, const Series<G>&);                  \
  template Series<G> operator-(const Series<G>&);                                    \
  template Series<G> operator*(const Rat&, const Series<G>&);                        \
  template Series<G> mul(const Series<G>&, const Series<G>&);                        \
  template Series<G> mul_serial(const Series<G>&, const Series<G>&);                 \
  template Series<G> pow(const Series<G>&, unsigned long, long);                     \
  template Series<G> invert(const Series<G>&);                                       \
  template Series<G> d_operator(const Series<G>&);                                   \
  template Series<G> d_operator(const Series<G>&, unsigned);                         \
  template bool equal_through_precision(const Series<G>&, const Series<G>&);

PENTAREC_INSTANTIATE(1)
PENTAREC_INSTANTIATE(24)
#undef PENTAREC_INSTANTIATE

IntQSeries to_int_series(const QSeries24& a) {
  long off = a.offset() >= 0 ? (a.offset() + 23) / 24 : -((-a.offset()) / 24);
  long prec = a.prec() >= 0 ? (a.prec() + 23) / 24 : -((-a.prec()) / 24);
  for (long e = a.offset(); e < a.prec(); ++e) {
    if (((e % 24) + 24) % 24 != 0 && sgn(a.at(e)) != 0)
      throw InternalError("fractional exponent " + std::to_string(e) + "/24 has a nonzero coefficient");
  }
  if (prec <= off) throw PrecisionError("no integer exponents below precision");
  std::vector<Rat> v(static_cast<std::size_t>(prec - off));
  for (long n = off; n < prec; ++n) v[static_cast<std::size_t>(n - off)] = a.coeff(24 * n);
  return IntQSeries(off, prec, std::move(v));
}

QSeries24 to_series24(const IntQSeries& a) {
  long off = 24 * a.offset();
  // fractional exponents of an integer series are known zeros
  long prec = 24 * a.prec();
  std::vector<Rat> v(static_cast<std::size_t>(prec - off));
  for (long n = a.offset(); n < a.prec(); ++n) v[static_cast<std::size_t>(24 * n - off)] = a.at(n);
  return QSeries24(off, prec, std::move(v));
}

QSeries24 eta_expansion(long prec24) {
  if (prec24 <= 1) throw PrecisionError("eta_expansion needs prec24 > 1");
  std::vector<Rat> v(static_cast<std::size_t>(prec24 - 1));
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k - 1}) {
      long e = (6 * kk + 1) * (6 * kk + 1);
      if (e < prec24) {
        v[static_cast<std::size_t>(e - 1)] = (kk % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return QSeries24(1, prec24, std::move(v));
}

IntQSeries euler_product(long prec) {
  if (prec < 1) throw PrecisionError("euler_product needs prec >= 1");
  std::vector<Rat> v(static_cast<std::size_t>(prec));
  v[0] = 1;
  for (long n = 1; n < prec; ++n) {
    // multiply by (1 - q^n) in place, high exponents first
    for (long e = prec - 1; e >= n; --e) {
      auto i = static_cast<std::size_t>(e);
      if (sgn(v[i - static_cast<std::size_t>(n)]) != 0) v[i] -= v[i - static_cast<std::size_t>(n)];
    }
  }
  return IntQSeries(0, prec, std::move(v));
}

QSeries24 eta_product_expansion(long prec24) {
  if (prec24 <= 1) throw PrecisionError("eta_product_expansion needs prec24 > 1");
  // q^(1/24) * P(q): coefficient at e = 1 + 24 n
  long nmax = (prec24 - 2) / 24;  // largest n with 1 + 24 n < prec24
  IntQSeries p = euler_product(nmax + 1);
  std::vector<Rat> v(static_cast<std::size_t>(prec24 - 1));
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(24 * n)] = p.at(n);
  return QSeries24(1, prec24, std::move(v));
}

QSeries24 eta_inverse_expansion(long prec24) {
  if (prec24 <= -1) throw PrecisionError("eta_inverse_expansion needs prec24 > -1");
  QSeries24 inv = invert(eta_expansion(prec24 + 2));
  return inv;
}

}  // namespace pentarec
