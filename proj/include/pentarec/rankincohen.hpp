// P_nu = [1/eta, eta]_nu from its differential-operator definition, the
// weight polynomials g_nu(n, k), the series-side reconstruction from
// partition numbers, and the general Rankin-Cohen bracket.
#pragma once

#include "pentarec/exactnum.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/qseries.hpp"

namespace pentarec {

/// (2nu - 1) (2nu - 2)_{nu-1}^2 / 2^(2nu - 2), with the negative-index
/// falling factorial at nu = 0.
Rat p_nu_prefactor(int nu);

/// Scale between the bracket of rc_bracket(1/eta, -1/2, eta, 1/2, nu) and
/// p_nu(nu): p_nu = rc_to_p_nu_scale(nu) * bracket. Equals 24^nu.
Rat rc_to_p_nu_scale(int nu);

/// P_nu through q^(prec-1), built in q^(1/24) from D^r(1/eta) D^s(eta) and
/// then moved to integer exponents (non-integral exponents must cancel).
/// Normalized so that P_0 = 1 and the constant term is C(2nu-2, nu-2).
IntQSeries p_nu(int nu, long prec);

/// g_nu(n, k), exact.
Rat g_poly(int nu, long n, long k);

/// sum_n sum_k (-1)^k g_nu(n, k) p(n - omega(k)) q^n, with k = 0 included.
IntQSeries p_nu_series_side(int nu, long prec);
IntQSeries p_nu_series_side(int nu, long prec, const PartitionTable& ptable);

/// [f, g]_nu for f of weight wf and g of weight wg:
///   sum_{r+s=nu} (-1)^r Gamma(wf+nu) Gamma(wg+nu) / (s! r! Gamma(wf+nu-s) Gamma(wg+nu-r)) D^r f D^s g.
/// Gamma ratios are rising factorials. DomainError when wf + nu or wg + nu is
/// a pole of Gamma.
QSeries24 rc_bracket(const QSeries24& f, const Rat& wf, const QSeries24& g, const Rat& wg, int nu);

}  // namespace pentarec
