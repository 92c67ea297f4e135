#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <serinv/corpus.hpp>
#include <serinv/errors.hpp>
#include <serinv/root_finding.hpp>

#include <cmath>

using namespace serinv;

TEST_CASE("bracketing enclosures satisfy their invariant") {
    auto id = make_smooth_function(corpus_lookup("identity"));
    auto br = bracket_inverse(id, 0.3, 0.1);
    CHECK(br.lo < br.hi);
    CHECK(br.lo <= 0.3);
    CHECK(0.3 <= br.hi);
    CHECK((br.f_lo - 0.3) * (br.f_hi - 0.3) < 0);

    auto quad = make_smooth_function(corpus_lookup("quadratic"));
    auto br2 = bracket_inverse(quad, 0.21, 0.1);
    CHECK(br2.lo < br2.hi);
    CHECK(br2.lo <= 0.3);  // the true inverse (1 - sqrt(1 - 0.84))/2 = 0.3
    CHECK(0.3 <= br2.hi);
    CHECK((br2.f_lo - 0.21) * (br2.f_hi - 0.21) < 0);
}

TEST_CASE("bracket expansion gives up after sixty doublings") {
    SmoothFunction wide;
    wide.name = "wide-identity";
    wide.eval = [](double x) { return x; };
    wide.eval_q = [](QReal x) { return x; };
    wide.monotone_radius = 1e300;
    wide.domain_radius = 1e300;
    // y sits beyond seed * 2^60, so no doubling ever encloses it.
    double seed = 1.0;
    double y = std::ldexp(seed, 61);
    CHECK_THROWS_AS(bracket_inverse(wide, y, seed), NoBracket);
    CHECK_NOTHROW(bracket_inverse(wide, std::ldexp(seed, 59), seed));
}

TEST_CASE("bracket expansion respects the monotone radius") {
    auto quad = make_smooth_function(corpus_lookup("quadratic"));
    // max of x - x^2 on the monotone disc |x| <= 0.45 is below 0.25.
    CHECK_THROWS_AS(bracket_inverse(quad, 0.5, 0.1), NoBracket);
    CHECK_THROWS_AS(numeric_inverse(quad, 0.5), NoBracket);
    CHECK_THROWS_AS(bracket_inverse(quad, 0.21, -1.0), NoBracket);
}

TEST_CASE("numeric inverse on the documented examples") {
    auto id = make_smooth_function(corpus_lookup("identity"));
    CHECK(std::abs(numeric_inverse(id, 0.3) - 0.3) <= 1e-13);

    auto quad = make_smooth_function(corpus_lookup("quadratic"));
    CHECK(std::abs(numeric_inverse(quad, 0.21) - 0.3) <= 1e-12);

    // Lambert-type inverse is self-verifying: substitute back.
    auto lam = make_smooth_function(corpus_lookup("lambert"));
    double x = numeric_inverse(lam, 0.1);
    CHECK(std::abs(x * std::exp(x) - 0.1) <= 1e-12);
    CHECK(std::abs(x) < 0.2);  // the branch through the origin, not x < -1
}

TEST_CASE("an exact endpoint hit is widened into a strict enclosure") {
    // default_seed_radius(0.1) = 0.1, so f(hi) == y on the first attempt.
    auto id = make_smooth_function(corpus_lookup("identity"));
    CHECK(std::abs(numeric_inverse(id, 0.1) - 0.1) <= 1e-13);
    auto br = bracket_inverse(id, 0.1, 0.1);
    CHECK(br.lo < 0.1);
    CHECK(br.hi > 0.1);
    CHECK((br.f_lo - 0.1) * (br.f_hi - 0.1) < 0);
}

TEST_CASE("residual contract across the corpus windows") {
    const double tol = 1e-13;
    for (const auto& entry : corpus_entries()) {
        auto fun = make_smooth_function(entry);
        const double ratio = entry.window_max / entry.window_min;
        for (int i = 0; i < 64; ++i) {
            double y = entry.window_min * std::pow(ratio, i / 63.0);
            CAPTURE(entry.name);
            CAPTURE(y);
            double x = numeric_inverse(fun, y, tol);
            CHECK(std::abs(fun.eval(x) - y) <= tol * std::max(1.0, std::abs(y)));
        }
    }
}

TEST_CASE("negative targets work through the same branch") {
    for (const char* name : {"identity", "quadratic", "lambert", "sine", "scaled"}) {
        auto fun = make_smooth_function(corpus_lookup(name));
        double x = numeric_inverse(fun, -0.05);
        CHECK(std::abs(fun.eval(x) + 0.05) <= 1e-13);
        CHECK(x < 0);
    }
}

TEST_CASE("returned point lies inside the final bracket") {
    for (const char* name : {"quadratic", "lambert", "sine", "tangent", "flat-identity"}) {
        auto fun = make_smooth_function(corpus_lookup(name));
        for (double y : {0.02, 0.05, 0.09}) {
            auto br0 = detail::bracket_core<double>(fun.eval, y, default_seed_radius(y),
                                                    fun.monotone_radius);
            detail::RawBracket<double> fin{};
            double x = detail::hybrid_invert_core<double>(fun.eval, y, br0, 1e-13, 200, &fin);
            CHECK(fin.lo <= x);
            CHECK(x <= fin.hi);
            CHECK(fin.hi - fin.lo <= 1e-13);
        }
    }
}

TEST_CASE("the oracle is deterministic") {
    auto lam = make_smooth_function(corpus_lookup("lambert"));
    double a = numeric_inverse(lam, 0.123);
    double b = numeric_inverse(lam, 0.123);
    CHECK(a == b);
}

TEST_CASE("quad-precision oracle resolves below binary64") {
    auto quad = make_smooth_function(corpus_lookup("quadratic"));
    QReal y = QReal(21) / QReal(100);
    QReal x = numeric_inverse_q(quad, y, QReal(1e-30));
    // |x - 0.3| in quad precision: the closed form root is exactly 3/10.
    CHECK(to_double(real_abs(x - QReal(3) / QReal(10))) <= 1e-29);
}
