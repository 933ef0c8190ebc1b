// Partition numbers, pentagonal numbers, divisor sums, and the right-hand
// side of the weighted pentagonal recurrences.
#pragma once

#include <vector>

#include "pentarec/exactnum.hpp"

namespace pentarec {

/// omega(k) = (3k^2 + k) / 2.
long pentagonal(long k);

/// p(0..N) from the signed pentagonal recurrence.
class PartitionTable {
 public:
  explicit PartitionTable(std::vector<Int> values) : values_(std::move(values)) {}

  /// p(n); zero for n < 0. Throws DomainError beyond the table.
  Int operator()(long n) const;
  long max_index() const { return static_cast<long>(values_.size()) - 1; }
  const std::vector<Int>& values() const { return values_; }

 private:
  std::vector<Int> values_;
};

PartitionTable partition_table(long N);

/// sum_{d | n} d^m.
Int sigma(unsigned long m, long n);

/// Calls visit(k, omega(k)) for k = 1, -1, 2, -2, ... while omega(k) <= n,
/// stopping at the first |k| where both omega(k) and omega(-k) exceed n.
template <class F>
void for_each_pentagonal(long n, F&& visit) {
  for (long k = 1;; ++k) {
    long wp = pentagonal(k), wm = pentagonal(-k);
    if (wp > n && wm > n) break;
    if (wp <= n) visit(k, wp);
    if (wm <= n) visit(-k, wm);
  }
}

/// -(4 nu / B_{2nu}) * C(2nu - 2, nu - 2): the Eisenstein weight of the
/// divisor-sum term in the recurrences (nu >= 2).
Rat divisor_term_constant(int nu);

/// (1/g_nu(n,0)) * ( alpha_nu sigma_{2nu-1}(n) + trace
///                   + sum_{k != 0} (-1)^{k+1} g_nu(n,k) p(n - omega(k)) ).
/// The k = 0 term is the unknown p(n) and is excluded here. Returned exactly
/// so that a wrong trace shows up as a non-integer.
Rat theorem2_rhs(int nu, long n, const Rat& trace, const PartitionTable& ptable);

}  // namespace pentarec
