#pragma once
// JSON and CSV serialization of series, jets, and remainder reports.
//
// Series JSON: {"order": N, "mode": "rational"|"float", "coeffs": [...]}
// with rational coefficients as lowest-terms strings ("p/q", or "p" for
// integers) and float coefficients as numbers. The same object is the
// on-disk format accepted by the CLI's --coeffs input.

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include <serinv/jet.hpp>
#include <serinv/remainder.hpp>
#include <serinv/series.hpp>

namespace serinv {

// Ordered JSON keeps key order deterministic for byte-identical reports.
using Json = nlohmann::ordered_json;

using AnySeries = std::variant<RationalSeries, FloatSeries>;

Json series_to_json(const RationalSeries& s);
Json series_to_json(const FloatSeries& s);
Json series_to_json(const AnySeries& s);

// Strict parse: all three keys required, mode must match the coeffs'
// representation, order must match the array length. Violations throw
// SerializationError.
AnySeries series_from_json(const Json& j);
AnySeries series_from_file(const std::string& path);

Json jet_to_json(const Jet& jet);
Json report_to_json(const RemainderReport& report);

// One series coefficient per CSV row ("k,coeff"); reports flatten to one row
// per sample point. A trailing newline is always present.
std::string series_to_csv(const AnySeries& s);
std::string report_to_csv(const RemainderReport& report);

// Shortest round-trip decimal rendering (what the CSV writers use).
std::string format_double(double v);

} // namespace serinv
