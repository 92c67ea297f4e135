// End-to-end tests of the series-invert binary: every subcommand, both output
// formats, the exit-code contract, and determinism of reports. The binary path
// arrives via the SERIES_INVERT_BIN compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <serinv/serialize.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using serinv::Json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "cli_capture_" + std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string cmd = std::string(SERIES_INVERT_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    CliResult r;
    if (status >= 0 && WIFEXITED(status))
        r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ','))
        fields.push_back(field);
    return fields;
}

const char* kCatalan[] = {"1",     "1",     "2",     "5",      "14",     "42",
                          "132",   "429",   "1430",  "4862",   "16796",  "58786",
                          "208012", "742900", "2674440", "9694845"};

} // namespace

TEST_CASE("revert emits the Catalan numbers with exact three-way agreement") {
    auto r = run_cli("revert \"x - x^2\" --order 16 --mode rational");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["command"] == "revert");
    CHECK(j["input"]["kind"] == "function");
    CHECK(j["input"]["source"] == "x - x^2");
    CHECK(j["input"]["mode"] == "rational");
    CHECK(j["input"]["order"] == 16);
    REQUIRE(j["inverse"]["coeffs"].size() == 17);
    CHECK(j["inverse"]["coeffs"][0] == "0");
    for (int k = 0; k < 16; ++k)
        CHECK(j["inverse"]["coeffs"][k + 1] == kCatalan[k]);
    CHECK(j["agreement"]["exact"] == true);
    CHECK(j["agreement"]["max_rel_diff"] == 0.0);
    CHECK(j["agreement"]["algorithms"].size() == 3);
    CHECK(j["timing"].contains("total_seconds"));
}

TEST_CASE("exit codes separate the documented failure classes") {
    struct Case {
        const char* args;
        int code;
    };
    const Case cases[] = {
        {"revert \"x^2\" --order 4", 2},                              // not revertible
        {"revert \"x +\" --order 4", 3},                              // syntax error
        {"revert \"foo(x)\" --order 4", 3},                           // unknown function
        {"jet --corpus nosuch --order 4", 3},                         // unknown corpus entry
        {"verify --corpus sine --order 5 --samples 4", 3},            // too few samples
        {"verify --corpus quadratic --order 4 --window 0.26 0.4", 5}, // y beyond the branch
        {"burmann \"x - x^2\" --order 4", 3},                         // missing --outer
        {"revert \"x - x^2\"", 3},                                    // missing --order
        {"revert --function x --corpus identity --order 4", 3},       // two sources
        {"revert x --function x --order 4", 3},                       // positional + flag
        {"verify \"x - x^2\" --order 4", 3},                          // no window, no default
        {"verify --corpus sine --order 5 --window 0.1 0.01", 3},      // empty window
        {"verify --corpus sine --order 5 --window 0 0.1", 3},         // zero lower edge
        {"revert \"1/x\" --order 4", 3},                              // pole: not expandable
        {"", 3},                                                      // subcommand required
    };
    for (const Case& c : cases) {
        CAPTURE(c.args);
        auto r = run_cli(c.args);
        CHECK(r.code == c.code);
        CHECK(r.out.empty());
        CHECK(!r.err.empty());
    }
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verify reports are deterministic once timing is stripped") {
    const char* args = "verify --corpus sine --order 5 --samples 12 --window 1e-2 1e-1 --window 1e-3 1e-2";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto ja = Json::parse(a.out);
    auto jb = Json::parse(b.out);
    ja.erase("timing");
    jb.erase("timing");
    CHECK(ja.dump() == jb.dump());

    REQUIRE(ja["reports"].size() == 2);
    CHECK(ja["classification"] == "polynomial-order-6");
    double outer = ja["reports"][0]["slope"].get<double>();
    double inner = ja["reports"][1]["slope"].get<double>();
    CHECK(outer == doctest::Approx(7.0).epsilon(0.05));
    CHECK(inner == doctest::Approx(7.0).epsilon(0.05));
    CHECK(ja["inverse_poly"]["mode"] == "float");
    CHECK(ja["jet"]["source"] == "exact");
}

TEST_CASE("verify splits a single window at its geometric midpoint") {
    auto r = run_cli("verify --corpus sine --order 5 --samples 8");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["reports"].size() == 2);
    const double mid = 0.03162277660168379; // sqrt(0.01 * 0.1)
    CHECK(j["reports"][0]["window"][0].get<double>() == doctest::Approx(mid).epsilon(1e-12));
    CHECK(j["reports"][0]["window"][1].get<double>() == 0.1);
    CHECK(j["reports"][1]["window"][0].get<double>() == 0.01);
    CHECK(j["reports"][1]["window"][1].get<double>() == doctest::Approx(mid).epsilon(1e-12));
}

TEST_CASE("verify CSV lists one row per sampled point per window") {
    auto r = run_cli("verify --corpus sine --order 5 --samples 8 --format csv");
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 33); // header + 2 windows x (2 sides x 8 samples)
    CHECK(lines[0] == "window_index,y,remainder,usable");
    int seen_outer = 0;
    int seen_inner = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 4);
        seen_outer += f[0] == "0";
        seen_inner += f[0] == "1";
        // Both sides of the window are sampled, so y covers +/- magnitudes.
        double y = std::stod(f[1]);
        CHECK(std::abs(y) >= 0.009999);
        CHECK(std::abs(y) <= 0.100001);
        CHECK(std::stod(f[2]) >= 0.0);
        CHECK((f[3] == "0" || f[3] == "1"));
    }
    CHECK(seen_outer == 16);
    CHECK(seen_inner == 16);
}

TEST_CASE("jet reports exact and finite-difference sources") {
    auto exact = run_cli("jet --corpus sine --order 6");
    REQUIRE(exact.code == 0);
    auto je = Json::parse(exact.out);
    CHECK(je["command"] == "jet");
    CHECK(je["input"]["measured"] == false);
    CHECK(je["jet"]["source"] == "exact");
    CHECK(je["jet"]["mode"] == "rational");
    CHECK(je["jet"]["coeffs"][3] == "-1/6");
    for (const auto& e : je["jet"]["per_coeff_error"])
        CHECK(e.get<double>() == 0.0);

    auto measured = run_cli("jet --corpus sine --order 6 --measured");
    REQUIRE(measured.code == 0);
    auto jm = Json::parse(measured.out);
    CHECK(jm["input"]["measured"] == true);
    CHECK(jm["jet"]["source"] == "finite-difference");
    CHECK(jm["jet"]["mode"] == "float");
    CHECK(jm["jet"]["coeffs"][3].get<double>() == doctest::Approx(-1.0 / 6.0).epsilon(1e-7));
    CHECK(jm["jet"]["per_coeff_error"][3].get<double>() > 0.0);
}

TEST_CASE("jet CSV carries the error column") {
    auto r = run_cli("jet --corpus identity --order 3 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out == "k,coeff,error\n0,0,0\n1,1,0\n2,0,0\n3,0,0\n");
}

TEST_CASE("burmann composes the outer function with the inverse") {
    auto r = run_cli("burmann \"x - x^2\" --order 4 --outer \"x^2\"");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["command"] == "burmann");
    CHECK(j["outer"] == "x^2");
    REQUIRE(j["result"]["coeffs"].size() == 5);
    CHECK(j["result"]["coeffs"] == Json::array({"0", "0", "1", "2", "5"}));
    CHECK(j["agreement"]["exact"] == true);
    CHECK(j["agreement"]["max_rel_diff"] == 0.0);

    auto csv = run_cli("burmann \"x - x^2\" --order 4 --outer \"x^2\" --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "k,coeff\n0,0\n1,0\n2,1\n3,2\n4,5\n");
}

TEST_CASE("corpus lists all built-in functions in both formats") {
    auto r = run_cli("corpus");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["entries"].size() == 7);
    const char* names[] = {"identity", "quadratic", "lambert", "sine",
                           "tangent",  "scaled",    "flat-identity"};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(j["entries"][i]["name"] == names[i]);
        CHECK(j["entries"][i]["window"].size() == 2);
        CHECK(j["entries"][i]["monotone_radius"].get<double>() > 0.0);
        CHECK(j["entries"][i]["domain_radius"].get<double>() > 0.0);
    }
    CHECK(j["entries"][6]["analytic"] == false);
    CHECK(j["entries"][2]["expression"] == "x*exp(x)");

    auto csv = run_cli("corpus --format csv");
    REQUIRE(csv.code == 0);
    auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "name,expression,analytic,window_min,window_max,monotone_radius,domain_radius");
    CHECK(lines[1] == "identity,\"x\",1,0.01,0.1,8,8");

    auto one = run_cli("corpus --corpus lambert");
    REQUIRE(one.code == 0);
    CHECK(Json::parse(one.out)["entries"].size() == 1);
}

TEST_CASE("coefficient files feed every source slot") {
    const char* path = "cli_series_in.json";
    {
        std::ofstream out(path);
        out << R"({"order":2,"mode":"rational","coeffs":["0","1","-1"]})";
    }

    auto r = run_cli(std::string("revert --coeffs ") + path);
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["input"]["kind"] == "coeffs");
    CHECK(j["input"]["order"] == 2);
    CHECK(j["inverse"]["coeffs"] == Json::array({"0", "1", "1"}));

    // --order pads the polynomial with zeros before reverting.
    auto ext = run_cli(std::string("revert --coeffs ") + path + " --order 4");
    REQUIRE(ext.code == 0);
    CHECK(Json::parse(ext.out)["inverse"]["coeffs"] == Json::array({"0", "1", "1", "2", "5"}));

    // Demotion to float is allowed; the inverse comes back as numbers.
    auto flt = run_cli(std::string("revert --coeffs ") + path + " --order 4 --mode float");
    REQUIRE(flt.code == 0);
    auto jf = Json::parse(flt.out);
    CHECK(jf["input"]["mode"] == "float");
    CHECK(jf["inverse"]["coeffs"][4].get<double>() == doctest::Approx(5.0).epsilon(1e-12));

    // Promotion from binary64 to rational is refused.
    const char* fpath = "cli_series_float.json";
    {
        std::ofstream out(fpath);
        out << R"({"order":2,"mode":"float","coeffs":[0.0,1.0,-1.0]})";
    }
    auto bad = run_cli(std::string("revert --coeffs ") + fpath + " --mode rational");
    CHECK(bad.code == 3);
    CHECK(bad.err.find("rational") != std::string::npos);

    // A coefficient file also denotes a polynomial function for verify.
    auto ver = run_cli(std::string("verify --coeffs ") + path +
                       " --order 4 --samples 8 --window 1e-3 1e-2");
    REQUIRE(ver.code == 0);
    CHECK(Json::parse(ver.out)["input"]["kind"] == "coeffs");

    std::remove(path);
    std::remove(fpath);
}

TEST_CASE("revert CSV renders one coefficient per line") {
    auto r = run_cli("revert \"x - x^2\" --order 5 --mode rational --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out == "k,coeff\n0,0\n1,1\n2,1\n3,2\n4,5\n5,14\n");
}

TEST_CASE("--out writes the report to a file instead of stdout") {
    const char* path = "cli_report_out.json";
    auto r = run_cli(std::string("revert \"x - x^2\" --order 4 --mode rational --out ") + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    auto j = Json::parse(slurp(path));
    CHECK(j["inverse"]["coeffs"] == Json::array({"0", "1", "1", "2", "5"}));
    std::remove(path);
}

TEST_CASE("bench emits the full algorithm/mode/order grid") {
    auto r = run_cli("bench");
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 25);
    CHECK(lines[0] == "algorithm,mode,order,wall_time,max_coeff_diff_vs_triangular");
    const char* algorithms[] = {"lagrange", "newton", "triangular"};
    const char* modes[] = {"rational", "float"};
    const char* orders[] = {"32", "64", "128", "256"};
    std::size_t row = 1;
    for (const char* algo : algorithms)
        for (const char* mode : modes)
            for (const char* order : orders) {
                auto f = fields_of(lines[row++]);
                REQUIRE(f.size() == 5);
                CHECK(f[0] == algo);
                CHECK(f[1] == mode);
                CHECK(f[2] == order);
                CHECK(std::stod(f[3]) >= 0.0);
                if (std::string(mode) == "rational")
                    CHECK(f[4] == "0");
                else
                    CHECK(std::stod(f[4]) <= 1e-10);
            }
}
