// JSON/CSV serialization. The JSON series object doubles as the on-disk
// --coeffs format, so parsing is strict: exactly the three declared keys,
// mode consistent with the coefficient representation, order consistent
// with the array length. Doubles render via shortest-round-trip to_chars,
// keeping reports byte-deterministic.

#include <serinv/serialize.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include <serinv/errors.hpp>

namespace serinv {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json series_to_json(const RationalSeries& s) {
    Json j;
    j["order"] = s.order();
    j["mode"] = "rational";
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(to_string(s[k]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json series_to_json(const FloatSeries& s) {
    Json j;
    j["order"] = s.order();
    j["mode"] = "float";
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(s[k]);
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json series_to_json(const AnySeries& s) {
    return std::visit([](const auto& v) { return series_to_json(v); }, s);
}

AnySeries series_from_json(const Json& j) {
    if (!j.is_object())
        throw SerializationError("series JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "order" && key != "mode" && key != "coeffs")
            throw SerializationError("unexpected key '" + key + "' in series JSON");
    }
    if (!j.contains("order") || !j.contains("mode") || !j.contains("coeffs"))
        throw SerializationError("series JSON needs keys order, mode, coeffs");
    if (!j["order"].is_number_integer())
        throw SerializationError("series order must be an integer");
    const long long order = j["order"].get<long long>();
    if (order < 0)
        throw SerializationError("series order must be >= 0");
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_array())
        throw SerializationError("series coeffs must be an array");
    if (static_cast<long long>(coeffs.size()) != order + 1)
        throw SerializationError("series order " + std::to_string(order) + " needs " +
                                 std::to_string(order + 1) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
    const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
    if (mode == "rational") {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (const auto& v : coeffs) {
            if (!v.is_string())
                throw SerializationError("rational coefficients must be strings");
            try {
                c.push_back(rational_from_string(v.get<std::string>()));
            } catch (const Error& e) {
                throw SerializationError(std::string("bad rational coefficient: ") + e.what());
            }
        }
        return RationalSeries(std::move(c));
    }
    if (mode == "float") {
        std::vector<double> c;
        c.reserve(coeffs.size());
        for (const auto& v : coeffs) {
            if (!v.is_number())
                throw SerializationError("float coefficients must be numbers");
            c.push_back(v.get<double>());
        }
        return FloatSeries(std::move(c));
    }
    throw SerializationError("series mode must be \"rational\" or \"float\"");
}

AnySeries series_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SerializationError("cannot open coefficient file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SerializationError("cannot parse '" + path + "' as JSON: " + e.what());
    }
    return series_from_json(j);
}

Json jet_to_json(const Jet& jet) {
    Json j = jet.source == JetSource::exact ? series_to_json(jet.exact)
                                            : series_to_json(jet.series);
    Json err = Json::array();
    for (double e : jet.per_coeff_error)
        err.push_back(e);
    j["per_coeff_error"] = std::move(err);
    j["source"] = to_string(jet.source);
    return j;
}

Json report_to_json(const RemainderReport& report) {
    Json j;
    j["poly_order"] = report.poly_order;
    j["window"] = Json::array({report.window.y_min, report.window.y_max});
    j["samples"] = report.sample_count;
    j["slope"] = report.slope;
    j["slope_stderr"] = report.slope_stderr;
    j["noise_floor_hit"] = report.noise_floor_hit;
    j["verdict"] = report.verdict;
    j["half_slopes"] = Json{{"outer", report.outer_half_slope},
                            {"inner", report.inner_half_slope}};
    Json points = Json::array();
    for (const auto& p : report.points)
        points.push_back(Json::array({p.y, p.remainder, p.usable}));
    j["points"] = std::move(points);
    return j;
}

std::string series_to_csv(const AnySeries& s) {
    std::ostringstream out;
    out << "k,coeff\n";
    if (std::holds_alternative<RationalSeries>(s)) {
        const auto& r = std::get<RationalSeries>(s);
        for (int k = 0; k <= r.order(); ++k)
            out << k << ',' << to_string(r[k]) << '\n';
    } else {
        const auto& f = std::get<FloatSeries>(s);
        for (int k = 0; k <= f.order(); ++k)
            out << k << ',' << format_double(f[k]) << '\n';
    }
    return out.str();
}

std::string report_to_csv(const RemainderReport& report) {
    std::ostringstream out;
    out << "y,remainder,usable\n";
    for (const auto& p : report.points)
        out << format_double(p.y) << ',' << format_double(p.remainder) << ','
            << (p.usable ? 1 : 0) << '\n';
    return out.str();
}

} // namespace serinv
