#include "pentarec/serialize.hpp"

#include <cstdio>

namespace pentarec {

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json float_json(double x) {
  // re-parse the 17-digit rendering so the dump is stable across libraries
  return Json::parse(format_float(x));
}

Json to_json(const Rat& x) { return to_string(x); }
Json to_json(const Int& x) { return to_string(x); }

Json to_json(const QuadNum& x) {
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", to_string(x.d())}};
}

Json to_json(const PiScalar& x) {
  return Json{{"coeff", to_string(x.coeff())}, {"halfPiPow", x.half_pi_pow()}};
}

namespace {

template <long G>
Json series_json(const Series<G>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  // exponents in units of 1/24; consecutive coefficients are step24 apart
  constexpr long step = 24 / G;
  return Json{{"offset24", s.offset() * step},
              {"prec24", s.prec() * step},
              {"step24", step},
              {"coeffs", std::move(coeffs)}};
}

}  // namespace

Json to_json(const IntQSeries& s) { return series_json(s); }
Json to_json(const QSeries24& s) { return series_json(s); }

Json to_json(const Eigenform& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  return Json{{"weight", f.weight}, {"fieldDisc", to_string(f.field_disc)}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RademacherResult& r) {
  return Json{{"n", r.n},
              {"depthC", r.depth},
              {"estimate", float_json(r.estimate)},
              {"nearest", to_string(r.nearest)},
              {"gap", float_json(r.gap)},
              {"imagResidual", float_json(r.imag_residual)}};
}

}  // namespace pentarec
