#include "pentarec/partitions.hpp"

#include "pentarec/rankincohen.hpp"

namespace pentarec {

long pentagonal(long k) { return (3 * k * k + k) / 2; }

Int PartitionTable::operator()(long n) const {
  if (n < 0) return 0;
  if (n > max_index()) throw DomainError("partition table does not reach n = " + std::to_string(n));
  return values_[static_cast<std::size_t>(n)];
}

PartitionTable partition_table(long N) {
  if (N < 0) throw DomainError("partition_table needs N >= 0");
  std::vector<Int> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (long n = 1; n <= N; ++n) {
    Int s = 0;
    for_each_pentagonal(n, [&](long k, long w) {
      if (k % 2 != 0) s += p[static_cast<std::size_t>(n - w)];
      else s -= p[static_cast<std::size_t>(n - w)];
    });
    p[static_cast<std::size_t>(n)] = std::move(s);
  }
  return PartitionTable(std::move(p));
}

Int sigma(unsigned long m, long n) {
  if (n < 1) throw DomainError("sigma needs n >= 1");
  Int s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += int_pow(d, m);
    if (d * d != n) s += int_pow(n / d, m);
  }
  return s;
}

Rat divisor_term_constant(int nu) {
  if (nu < 2) throw DomainError("divisor term needs nu >= 2");
  return -Rat(4 * nu) / bernoulli(static_cast<unsigned long>(2 * nu)) * Rat(binomial(2 * nu - 2, nu - 2));
}

Rat theorem2_rhs(int nu, long n, const Rat& trace, const PartitionTable& ptable) {
  if (nu < 2) throw DomainError("theorem2_rhs needs nu >= 2");
  if (n < 1) throw DomainError("theorem2_rhs needs n >= 1");
  if (ptable.max_index() < n) throw DomainError("partition table too short");
  Rat g0 = g_poly(nu, n, 0);
  if (sgn(g0) == 0) throw DivisionByZero("g_nu(n, 0) vanishes");
  Rat total = divisor_term_constant(nu) * Rat(sigma(static_cast<unsigned long>(2 * nu - 1), n)) + trace;
  for_each_pentagonal(n, [&](long k, long w) {
    Rat term = g_poly(nu, n, k) * Rat(ptable(n - w));
    if (k % 2 != 0) total += term;  // (-1)^{k+1} = +1 for odd k
    else total -= term;
  });
  return total / g0;
}

}  // namespace pentarec
