#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <argonaut/argument.hpp>
#include <argonaut/dirichlet.hpp>
#include <argonaut/lfunction.hpp>
#include <argonaut/zeros.hpp>

using namespace argonaut;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma1 = 14.134725141734693790;

// Independent route to S(t) for zeta: the counting formula N(t) =
// theta(t)/pi + 1 + S(t) with theta from its asymptotic expansion (good to
// ~1e-9 for t >= 10) and N read off a verified table.
double theta_asymptotic(double t) {
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t);
}

double s_from_count(double t, int n_zeros) {
    return double(n_zeros) - 1.0 - theta_asymptotic(t) / kPi;
}

}  // namespace

TEST_CASE("argument at height 15 matches the counting-formula route") {
    const auto zeta = zeta_descriptor();
    const SResult s = compute_s(zeta, 15.0);
    CHECK_FALSE(s.at_zero);
    CHECK(s.error < 1e-7);
    CHECK(std::abs(s.value - s_from_count(15.0, 1)) < 1e-6);
    const SResult s50 = compute_s(zeta, 50.0);
    CHECK(std::abs(s50.value - s_from_count(50.0, 10)) < 1e-6);
}

TEST_CASE("argument is odd for self-dual instances") {
    const auto zeta = zeta_descriptor();
    for (double t : {15.0, 23.7, 41.3}) {
        const SResult pos = compute_s(zeta, t);
        const SResult neg = compute_s(zeta, -t);
        CHECK(std::abs(pos.value + neg.value) < 1e-10);
    }
}

TEST_CASE("unit jump across a simple zero") {
    const auto zeta = zeta_descriptor();
    const double below = compute_s(zeta, kGamma1 - 1e-4).value;
    const double above = compute_s(zeta, kGamma1 + 1e-4).value;
    CHECK(std::abs((above - below) - 1.0) < 5e-3);

    const SResult at = compute_s(zeta, kGamma1);
    CHECK(at.at_zero);
    CHECK(at.value == doctest::Approx(0.5 * (at.below + at.above)).epsilon(1e-12));
    CHECK(std::abs(at.above - at.below - 1.0) < 1e-3);
}

TEST_CASE("symmetric limit at the pole height") {
    const auto zeta = zeta_descriptor();
    const SResult origin = compute_s(zeta, 0.0);
    CHECK(origin.at_zero);
    CHECK(std::abs(origin.above - (-1.0)) < 1e-4);
    CHECK(std::abs(origin.below - 1.0) < 1e-4);
    CHECK(std::abs(origin.value) < 1e-4);
}

TEST_CASE("winding counts are additive and match tables") {
    const auto zeta = zeta_descriptor();
    const CountResult a = count_zeros_by_argument(zeta, 0.0, 20.0);
    const CountResult b = count_zeros_by_argument(zeta, 20.0, 30.0);
    const CountResult c = count_zeros_by_argument(zeta, 0.0, 30.0);
    CHECK(a.value == doctest::Approx(1.0));
    CHECK(b.value == doctest::Approx(2.0));
    CHECK(c.value == doctest::Approx(3.0));
    CHECK(a.value + b.value == doctest::Approx(c.value));

    const auto chi4 = dirichlet_descriptor(dirichlet_character(4, 1));
    const ZeroTable t4 = find_zeros(chi4, 15.0);
    const CountResult c4 = count_zeros_by_argument(chi4, 0.0, 15.0);
    CHECK(c4.value == doctest::Approx(double(t4.size())));
}

TEST_CASE("classical counting formula at moderate height") {
    const CountingFormulaReport r = verify_counting_formula_zeta(30.0);
    CHECK(r.n == doctest::Approx(3.0));
    CHECK(std::abs(r.residual) <= r.threshold);
    CHECK(r.within);
    CHECK_THROWS_AS(verify_counting_formula_zeta(2.0), Error);
}

TEST_CASE("short-interval count against the argument difference") {
    const auto zeta = zeta_descriptor();
    const Lemma4Report r = verify_lemma4(zeta, 50.0, 60.0);
    CHECK(std::abs(r.count - std::round(r.count)) < 1e-6);
    CHECK(std::abs(r.residual) <= r.threshold);
    CHECK(r.within);
}

TEST_CASE("antiderivative difference equals the integral of S") {
    const auto zeta = zeta_descriptor();

    // clean interval: no zero in [15, 16], so trapezoid quadrature of S is an
    // independent check on the split-path integral
    const PrimitiveIdentityReport clean = verify_primitive_identity(zeta, 15.0, 16.0);
    CHECK(std::abs(clean.residual) < 1e-4);
    double trap = 0.0;
    const int n = 200;
    const double h = 1.0 / n;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        trap += w * compute_s(zeta, 15.0 + i * h).value;
    }
    trap *= h;
    CHECK(std::abs(clean.s_integral - trap) < 1e-5);

    // interval straddling the first zero ordinate
    const PrimitiveIdentityReport jump = verify_primitive_identity(zeta, 14.0, 14.3);
    CHECK(std::abs(jump.residual) < 1e-4);
}

TEST_CASE("profile rows align with pointwise evaluation") {
    const auto zeta = zeta_descriptor();
    const std::vector<double> heights{10.0, 12.0, 14.5};
    const ArgumentProfile p = compute_profile(zeta, heights);
    REQUIRE(p.heights == heights);
    REQUIRE(p.s_values.size() == 3);
    REQUIRE(p.s1_values.size() == 3);
    CHECK(p.s_values[1] == doctest::Approx(compute_s(zeta, 12.0).value).epsilon(1e-12));
    CHECK(p.s1_values[2] == doctest::Approx(compute_s1(zeta, 14.5).value).epsilon(1e-12));

    std::ostringstream os;
    write_profile_csv(p, os);
    const std::string text = os.str();
    CHECK(text.rfind("t,s,s_err,s1,s1_err\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("zero-sum representation of S1 at height 30") {
    const auto zeta = zeta_descriptor();
    const ZeroTable table = find_zeros(zeta, 1000.0);
    const Lemma1Report r = verify_lemma1(zeta, 30.0, table, 1000.0 - 30.0);
    CHECK(std::abs(r.residual) <= r.threshold);
    CHECK(r.within);
    CHECK(r.threshold == doctest::Approx(10.0));
}
