// JSON encodings shared by the command-line tool and the tests. Exact values
// are strings; floats carry 17 significant digits.
#pragma once

#include <json.hpp>

#include "pentarec/exactnum.hpp"
#include "pentarec/hecke.hpp"
#include "pentarec/qseries.hpp"
#include "pentarec/rademacher.hpp"

namespace pentarec {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Json to_json(const Int& x);
Json to_json(const QuadNum& x);
Json to_json(const PiScalar& x);
Json to_json(const IntQSeries& s);
Json to_json(const QSeries24& s);
Json to_json(const Eigenform& f);
Json to_json(const RademacherResult& r);
/// Float with 17 significant digits, as a JSON number.
Json float_json(double x);
/// Shortest "%.17g" rendering, for text and csv output.
std::string format_float(double x);

}  // namespace pentarec
