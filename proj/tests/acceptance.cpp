// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status
// is nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pentarec/dirichlet.hpp"
#include "pentarec/forms.hpp"
#include "pentarec/hecke.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/qseries.hpp"
#include "pentarec/rademacher.hpp"
#include "pentarec/rankincohen.hpp"
#include "pentarec/verify.hpp"

using namespace pentarec;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& why) {
    if (!cond && ok) note = why;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0 means no time limit
  std::function<Verdict()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Verdict euler_equivalence() {
  Verdict v;
  PartitionTable t = partition_table(500);
  IntQSeries gf = invert(euler_product(501));
  for (long n = 0; n <= 500; ++n) v.need(gf.coeff(n) == Rat(t(n)), "n = " + std::to_string(n));
  return v;
}

Verdict trivial_p_nu() {
  Verdict v;
  IntQSeries p0 = p_nu(0, 60), p1 = p_nu(1, 60);
  for (long n = 0; n < 60; ++n) {
    v.need(p0.coeff(n) == (n == 0 ? 1 : 0), "P_0 at n = " + std::to_string(n));
    v.need(sgn(p1.coeff(n)) == 0, "P_1 at n = " + std::to_string(n));
  }
  return v;
}

Verdict operator_series_identity() {
  Verdict v;
  PartitionTable t = partition_table(60);
  for (int nu = 0; nu <= 10; ++nu)
    v.need(equal_through_precision(p_nu(nu, 60), p_nu_series_side(nu, 60, t)), "nu = " + std::to_string(nu));
  return v;
}

Verdict pure_eisenstein() {
  Verdict v;
  for (int nu : {2, 3, 4, 5, 7}) {
    IntQSeries p = p_nu(nu, 51);
    MFSpace space = space_basis(2 * nu, 51);
    v.need(space.dim_cusp == 0, "cusp space nonzero at nu = " + std::to_string(nu));
    Rat alpha = divisor_term_constant(nu);
    for (long n = 1; n <= 50; ++n)
      v.need(p.coeff(n) == alpha * Rat(sigma(static_cast<unsigned long>(2 * nu - 1), n)),
             "nu = " + std::to_string(nu) + ", n = " + std::to_string(n));
  }
  return v;
}

Verdict beta_values() {
  Verdict v;
  const std::pair<int, const char*> table[] = {
      {6, "-33108590592/691"},
      {8, "-187167592415232/3617"},
      {9, "-28682634201661440/43867"},
      {10, "-8294726176465158144/174611"},
      {11, "-101475065073734516736/77683"},
      {13, "-1195065734266339700244480/657931"},
  };
  for (auto [nu, s] : table) v.need(corollary_beta(nu) == parse_rat(s), "nu = " + std::to_string(nu));
  return v;
}

Verdict weight12_example() {
  Verdict v;
  TraceSeries tr = trace_series(6, 50);
  IntQSeries delta = delta_series(51);
  Rat b = parse_rat("-33108590592/691");
  for (long n = 1; n <= 50; ++n) {
    v.need(tr.values[static_cast<std::size_t>(n)] == b * delta.coeff(n), "trace at n = " + std::to_string(n));
    Int diff = delta.coeff(n).get_num() - sigma(11, n);
    v.need(diff % 691 == 0, "congruence at n = " + std::to_string(n));
  }
  return v;
}

Verdict weight24_example() {
  Verdict v;
  TraceSeries tr = trace_series(12, 2);
  v.need(tr.values[1] == parse_rat("-11762326506193377107116032/236364091"), "Tr_24(1)");
  v.need(tr.values[2] == parse_rat("-22599437869751987230702829568/236364091"), "Tr_24(2)");
  const Int d(144169);
  QuadNum first(parse_rat("-5881163253096688553558016/236364091"),
                make_rat(Int("676990898183648483035840512"), Int("236364091") * d), d);
  auto ratios = df_over_norm(12);
  v.need(ratios.size() == 2, "expected two eigenforms");
  if (ratios.size() == 2) {
    v.need(ratios[0] == first, "D_f1 / |f1|");
    v.need(ratios[1] == first.conjugate(), "D_f2 / |f2|");
  }
  return v;
}

Verdict recurrence_round_trip() {
  Verdict v;
  PartitionTable t = partition_table(40);
  for (int nu = 6; nu <= 13; ++nu) {
    TraceSeries tr = trace_series(nu, 40);
    for (long n = 1; n <= 40; ++n)
      v.need(theorem2_rhs(nu, n, tr.values[static_cast<std::size_t>(n)], t) == Rat(t(n)),
             "nu = " + std::to_string(nu) + ", n = " + std::to_string(n));
  }
  return v;
}

Verdict numeric_dirichlet() {
  Verdict v;
  Eigenform delta = eigenforms(12, dirichlet_coeffs_needed(2000)).front();
  double d = df_truncated(delta, 6, 100, 2000);
  v.need(std::fabs(d - (-49.608382)) <= 1e-5, "off target");
  v.note = "D^ = " + fmt("%.10f", d);
  return v;
}

Verdict petersson_estimate() {
  Verdict v;
  NormEstimate e = petersson_norm_estimate(6, 100, 2000);
  double norm = e.norms.at(0);
  v.need(std::fabs(norm - 1.035362e-6) <= 1e-9, "off target");
  v.note = "norm = " + fmt("%.10e", norm);
  return v;
}

Verdict rademacher_rounding() {
  Verdict v;
  PartitionTable t = partition_table(50);
  double worst_gap = 0, worst_imag = 0;
  for (long n = 1; n <= 50; ++n) {
    RademacherResult r = rademacher_pn(n, 50);
    v.need(r.nearest == t(n), "n = " + std::to_string(n) + " rounds wrong");
    v.need(r.gap < 0.5, "gap at n = " + std::to_string(n));
    v.need(r.imag_residual < 1e-6, "imaginary part at n = " + std::to_string(n));
    worst_gap = std::max(worst_gap, r.gap);
    worst_imag = std::max(worst_imag, r.imag_residual);
  }
  if (v.ok) v.note = "max gap " + fmt("%.3g", worst_gap) + ", max imaginary residual " + fmt("%.3g", worst_imag);
  return v;
}

Verdict property_suites() {
  Verdict v;
  int failed = 0, total = 0;
  std::string names;
  run_verify("all", [&](const CheckResult& r) {
    ++total;
    std::printf("      %s %s / %s (%.2fs)%s%s\n", r.passed ? "ok  " : "FAIL", r.suite.c_str(), r.name.c_str(),
                r.seconds, r.detail.empty() ? "" : ": ", r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) {
      ++failed;
      names += (names.empty() ? "" : "; ") + r.suite + "/" + r.name;
    }
  });
  v.need(failed == 0, std::to_string(failed) + " of " + std::to_string(total) + " checks failed: " + names);
  if (v.ok) v.note = std::to_string(total) + " checks";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "partition table equals generating function through 500", 5, euler_equivalence},
      {2, "P_0 = 1 and P_1 = 0 through 60 coefficients", 0, trivial_p_nu},
      {3, "operator and series sides agree for nu <= 10", 60, operator_series_identity},
      {4, "pure Eisenstein P_nu for nu in {2, 3, 4, 5, 7}", 0, pure_eisenstein},
      {5, "six beta_nu values", 0, beta_values},
      {6, "weight 12 trace and the 691 congruence", 0, weight12_example},
      {7, "weight 24 traces and eigenform ratios", 0, weight24_example},
      {8, "weighted recurrences reproduce p(n) for nu = 6..13", 0, recurrence_round_trip},
      {9, "D^(100, 2000) = -49.608382 within 1e-5", 30, numeric_dirichlet},
      {10, "Petersson norm of Delta within 1e-9", 0, petersson_estimate},
      {11, "Rademacher sums round to p(n) for n <= 50", 60, rademacher_rounding},
      {12, "all property suites pass", 600, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      if (v.ok) v.note = "took longer than " + fmt("%.0f", c.budget_s) + " s";
      v.ok = false;
    }
    if (!v.ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                v.note.empty() ? "" : ": ", v.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
