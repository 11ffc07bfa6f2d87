#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include <json.hpp>

#include <argonaut/dirichlet.hpp>
#include <argonaut/errors.hpp>
#include <argonaut/explicit_formula.hpp>
#include <argonaut/extremal.hpp>
#include <argonaut/lfunction.hpp>
#include <argonaut/special_functions.hpp>
#include <argonaut/zeros.hpp>

using namespace argonaut;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBalanceTailTolerance = 1e-3;  // matches tables of height 1000

const LFunctionDescriptor& zeta() {
    static const LFunctionDescriptor d = zeta_descriptor();
    return d;
}
const LFunctionDescriptor& chi4() {
    static const LFunctionDescriptor d = dirichlet_descriptor(dirichlet_character(4, 1));
    return d;
}
const LFunctionDescriptor& chi5() {
    static const LFunctionDescriptor d = dirichlet_descriptor(dirichlet_character(5, 1));
    return d;
}

const ZeroTable& table_for(const LFunctionDescriptor& d) {
    static const ZeroTable tz = find_zeros(zeta(), 1000.0);
    static const ZeroTable t4 = find_zeros(chi4(), 1000.0);
    static const ZeroTable t5 = find_zeros(chi5(), 1000.0);
    if (d.id() == "zeta") return tz;
    if (d.id() == chi4().id()) return t4;
    return t5;
}

// h(n) = delta_{n,1}: every Euler factor trivial, so any spectral data can be
// attached without breaking the sampled structural checks.
struct DeltaSource final : CoefficientSource {
    Complex lambda(std::uint64_t n) const override {
        return n == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
};

struct BoundedDeltaSource final : CoefficientSource {
    Complex lambda(std::uint64_t n) const override {
        return n == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    std::uint64_t max_index() const override { return 100; }
};

double right_side(const ExplicitFormulaReport& r) {
    double s = r.pole_term.value + r.conductor_term.value + r.prime_side.value +
               r.shift_interior.value + r.shift_boundary.value;
    for (const TermValue& a : r.archimedean_terms) s += a.value;
    return s;
}

double total_budget(const ExplicitFormulaReport& r) {
    double b = r.zero_side.bound + r.pole_term.bound + r.conductor_term.bound +
               r.prime_side.bound + r.shift_interior.bound + r.shift_boundary.bound;
    for (const TermValue& a : r.archimedean_terms) b += a.bound;
    return b;
}

}  // namespace

TEST_CASE("Fejer kernel: closed-form values and transform") {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    CHECK(h.value(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.band_limit() == 1.0);
    CHECK(h.integral() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(h.strip_half_width() == doctest::Approx(1.0));

    // h(i/2) = 2 (cosh pi - 1) / pi^2
    const double closed = 2.0 * (std::cosh(kPi) - 1.0) / (kPi * kPi);
    const Complex at_half = h.value(Complex(0.0, 0.5));
    CHECK(std::abs(at_half.real() - closed) < 1e-12);
    CHECK(std::abs(at_half.imag()) < 1e-13);
    CHECK(std::abs(h.value(Complex(0.0, -0.5)) - at_half) < 1e-13);

    // triangle transform
    CHECK(std::abs(h.transform(0.0) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(h.transform(0.25) - Complex(0.75, 0.0)) < 1e-14);
    CHECK(std::abs(h.transform(1.3)) == 0.0);
    CHECK(h.transform_sup() >= 1.0);

    CHECK_THROWS_AS(h.value(Complex(0.0, 1.2)), Error);
    CHECK_THROWS_AS(TestFunction::fejer(-1.0, 0.0), Error);
}

TEST_CASE("translation acts on values and adds a transform phase") {
    const TestFunction h = TestFunction::fejer(0.8, 0.0);
    const TestFunction g = h.translated(7.5);
    for (double x : {-3.0, 0.0, 7.5, 11.2})
        CHECK(std::abs(g.value(x) - h.value(x - 7.5)) < 1e-15);
    for (double xi : {0.0, 0.3, -0.55}) {
        const Complex phase = std::exp(Complex(0.0, -2.0 * kPi * 7.5 * xi));
        CHECK(std::abs(g.transform(xi) - phase * h.transform(xi)) < 1e-14);
    }
    CHECK(g.band_limit() == h.band_limit());
    CHECK(g.integral() == doctest::Approx(h.integral()).epsilon(1e-14));
}

TEST_CASE("combinations evaluate linearly") {
    const TestFunction a = TestFunction::fejer(1.2, 0.0);
    const TestFunction b = TestFunction::fejer(0.7, -4.2);
    const TestFunction c =
        TestFunction::combination({{0.8, a}, {0.3, b}});
    for (double x : {-6.0, -4.2, 0.0, 2.3}) {
        CHECK(std::abs(c.value(x) - (0.8 * a.value(x) + 0.3 * b.value(x))) < 1e-14);
        CHECK(std::abs(c.abs_envelope(x)) >= std::abs(c.value(x)));
    }
    CHECK(c.band_limit() == doctest::Approx(1.2));
    CHECK(std::abs(c.integral() - (0.8 * a.integral() + 0.3 * b.integral())) < 1e-14);

    const TestFunction z = TestFunction::zero_function();
    CHECK(z.value(3.0) == 0.0);
    CHECK(z.band_limit() == 0.0);
    CHECK(z.integral() == 0.0);
}

TEST_CASE("pointwise envelope really covers the function") {
    std::mt19937 rng(411u);
    std::uniform_real_distribution<double> wide(-500.0, 500.0);
    const TestFunction hs[] = {
        TestFunction::fejer(1.0, 0.0), TestFunction::fejer(0.6, 7.5),
        TestFunction::combination(
            {{0.8, TestFunction::fejer(1.2, 0.0)}, {0.3, TestFunction::fejer(0.7, -4.2)}})};
    for (const TestFunction& h : hs) {
        CHECK(h.decay_constant() > 0.0);
        for (int i = 0; i < 400; ++i) {
            const double x = wide(rng);
            CHECK(std::abs(h.value(x)) <= h.abs_envelope(x) * (1.0 + 1e-12) + 1e-300);
        }
    }
}

TEST_CASE("balance holds for three shapes on three instances") {
    const TestFunction shapes[] = {
        TestFunction::fejer(1.0, 0.0), TestFunction::fejer(0.6, 7.5),
        TestFunction::combination(
            {{0.8, TestFunction::fejer(1.2, 0.0)}, {0.3, TestFunction::fejer(0.7, -4.2)}})};
    const LFunctionDescriptor* ds[] = {&zeta(), &chi4(), &chi5()};
    for (const LFunctionDescriptor* d : ds) {
        for (const TestFunction& h : shapes) {
            const ExplicitFormulaReport r =
                evaluate_explicit_formula(*d, h, table_for(*d), kBalanceTailTolerance);
            CAPTURE(d->id());
            CHECK(std::abs(r.imbalance) <= r.budget);
            CHECK(r.budget <= 5e-3);
            // internal consistency of the report
            CHECK(r.imbalance ==
                  doctest::Approx(r.zero_side.value - right_side(r)).epsilon(1e-12));
            CHECK(r.budget == doctest::Approx(total_budget(r)).epsilon(1e-12));
        }
    }
}

TEST_CASE("pole and conductor terms take their closed forms") {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    const ExplicitFormulaReport rz =
        evaluate_explicit_formula(zeta(), h, table_for(zeta()), kBalanceTailTolerance);
    const double pole_closed = 4.0 * (std::cosh(kPi) - 1.0) / (kPi * kPi);
    CHECK(rz.pole_term.value == doctest::Approx(pole_closed).epsilon(1e-10));
    CHECK(rz.conductor_term.value == 0.0);  // conductor 1

    const ExplicitFormulaReport r4 =
        evaluate_explicit_formula(chi4(), h, table_for(chi4()), kBalanceTailTolerance);
    CHECK(r4.pole_term.value == 0.0);
    CHECK(r4.conductor_term.value ==
          doctest::Approx(std::log(4.0) / (2.0 * kPi) * h.integral()).epsilon(1e-12));
}

TEST_CASE("report is linear in the test function") {
    const TestFunction a = TestFunction::fejer(1.2, 0.0);
    const TestFunction b = TestFunction::fejer(0.7, -4.2);
    const TestFunction c = TestFunction::combination({{0.8, a}, {0.3, b}});
    const ExplicitFormulaReport ra =
        evaluate_explicit_formula(zeta(), a, table_for(zeta()), kBalanceTailTolerance);
    const ExplicitFormulaReport rb =
        evaluate_explicit_formula(zeta(), b, table_for(zeta()), kBalanceTailTolerance);
    const ExplicitFormulaReport rc =
        evaluate_explicit_formula(zeta(), c, table_for(zeta()), kBalanceTailTolerance);
    auto lin = [](double va, double vb, double vc) {
        return std::abs(vc - (0.8 * va + 0.3 * vb)) < 1e-9;
    };
    CHECK(lin(ra.zero_side.value, rb.zero_side.value, rc.zero_side.value));
    CHECK(lin(ra.pole_term.value, rb.pole_term.value, rc.pole_term.value));
    CHECK(lin(ra.prime_side.value, rb.prime_side.value, rc.prime_side.value));
    REQUIRE(rc.archimedean_terms.size() == 1);
    CHECK(lin(ra.archimedean_terms[0].value, rb.archimedean_terms[0].value,
              rc.archimedean_terms[0].value));
}

TEST_CASE("prime term: small band closed form and crude dominance") {
    // band 0.2 keeps only n = 2, 3
    const TestFunction h = TestFunction::fejer(0.2, 0.0);
    const double tri2 = 1.0 - std::log(2.0) / (0.4 * kPi);
    const double tri3 = 1.0 - std::log(3.0) / (0.4 * kPi);
    const PrimeSideSum pz = prime_side_sum(zeta(), h);
    const double closed_z =
        -(std::log(2.0) * tri2 / std::sqrt(2.0) + std::log(3.0) * tri3 / std::sqrt(3.0)) / kPi;
    CHECK(pz.value == doctest::Approx(closed_z).epsilon(1e-12));
    CHECK(std::abs(pz.value) <= pz.crude_bound);

    // chi mod 4: p = 2 is ramified, p = 3 carries chi(3) = -1
    const PrimeSideSum p4 = prime_side_sum(chi4(), h);
    const double closed_4 = std::log(3.0) * tri3 / (std::sqrt(3.0) * kPi);
    CHECK(p4.value == doctest::Approx(closed_4).epsilon(1e-12));

    CHECK(prime_side_sum(zeta(), TestFunction::zero_function()).value == 0.0);

    std::mt19937 rng(901u);
    std::uniform_real_distribution<double> widths(0.3, 1.9);
    std::uniform_real_distribution<double> centers(-5.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        const TestFunction g = TestFunction::fejer(widths(rng), centers(rng));
        const PrimeSideSum p = prime_side_sum(i % 2 ? chi4() : zeta(), g);
        CHECK(std::abs(p.value) <= p.crude_bound);
    }

    CHECK_THROWS_AS(prime_side_sum(zeta(), TestFunction::fejer(2.7, 0.0)), Error);
}

TEST_CASE("corrections for spectral parameters left of the half line") {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);

    const auto on_line = user_descriptor("shift-boundary", 1, 1, {Complex(-0.5, 0.0)},
                                         Complex(1.0, 0.0), 0.0, 0, true,
                                         std::make_shared<DeltaSource>());
    const SpectralCorrections cb = spectral_corrections(on_line, h);
    CHECK(cb.boundary.value == doctest::Approx(-1.0).epsilon(1e-14));  // -h(0)
    CHECK(cb.interior.value == 0.0);

    const auto inside = user_descriptor(
        "shift-interior", 2, 1, {Complex(-0.75, 0.0), Complex(-0.75, 0.0)}, Complex(1.0, 0.0),
        0.0, 0, true, std::make_shared<DeltaSource>());
    const SpectralCorrections ci = spectral_corrections(inside, h);
    const double sh = std::sinh(kPi / 4.0) / (kPi / 4.0);
    CHECK(ci.interior.value == doctest::Approx(-4.0 * sh * sh).epsilon(1e-12));
    CHECK(ci.boundary.value == 0.0);

    const SpectralCorrections none = spectral_corrections(zeta(), h);
    CHECK(none.interior.value == 0.0);
    CHECK(none.boundary.value == 0.0);
}

TEST_CASE("gamma-factor integral agrees with direct quadrature") {
    // direct route: panel quadrature of h(u) Re GammaR'/GammaR(1/2 + mu + iu)
    // out to |u| = X, accepting the O(log X / X) truncation
    auto brute = [](const TestFunction& h, Complex mu, double X) {
        auto f = [&](double u) {
            const Complex s(0.5 + mu.real(), mu.imag() + u);
            return h.value(u) * digamma_r(s).real();
        };
        double total = 0.0;
        const double panel = 2.0;
        for (double a = -X + 0.13; a < X; a += panel) {
            const double b = std::min(a + panel, X);
            // 15-point Gauss-Legendre on [a, b]
            static const double xs[] = {0.0, 0.2011940939974345, 0.3941513470775634,
                                        0.5709721726085388, 0.7244177313601701,
                                        0.8482065834104272, 0.9372733924007060,
                                        0.9879925180204854};
            static const double ws[] = {0.2025782419255613, 0.1984314853271116,
                                        0.1861610000155622, 0.1662692058169939,
                                        0.1395706779261543, 0.1071592204671719,
                                        0.0703660474881081, 0.0307532419961173};
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            double acc = ws[0] * f(mid);
            for (int i = 1; i < 8; ++i)
                acc += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
            total += half * acc;
        }
        return total / kPi;
    };

    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    for (Complex mu : {Complex(0.0, 0.0), Complex(0.25, 1.5)}) {
        const TermValue a = archimedean_term(h, mu);
        CHECK(a.bound < 1e-7);
        CHECK(std::abs(a.value - brute(h, mu, 30000.0)) < 1.5e-5);
    }
}

TEST_CASE("balance carries over to a stored extremal profile") {
    const BandlimitedFunction g = build_extremal(1.0, ApproximationSide::Minorant);
    const TestFunction h = TestFunction::from_profile(g, 30.0);
    CHECK(std::abs(h.value(30.0) - evaluate_bandlimited(g, 0.0)) < 1e-13);
    CHECK(std::abs(h.value(27.5) - evaluate_bandlimited(g, 2.5)) < 1e-13);
    CHECK(h.integral() == doctest::Approx(g.integral()).epsilon(1e-12));
    CHECK(h.band_limit() == doctest::Approx(g.delta));
    for (double xi : {0.0, 0.4, -0.9}) {
        const Complex phase = std::exp(Complex(0.0, -2.0 * kPi * 30.0 * xi));
        CHECK(std::abs(h.transform(xi) - phase * g.ft_value(-xi)) < 1e-12);
    }

    const ExplicitFormulaReport r = evaluate_explicit_formula(zeta(), h, table_for(zeta()), 0.05);
    CHECK(std::abs(r.imbalance) <= r.budget);
    CHECK(r.budget < 0.05);
}

TEST_CASE("degenerate and malformed inputs are rejected") {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);

    CHECK_THROWS_AS(
        evaluate_explicit_formula(zeta(), h, table_for(zeta()), 1e-9),
        IncompleteTable);

    ZeroTable empty;
    empty.descriptor_id = "zeta";
    CHECK_THROWS_AS(evaluate_explicit_formula(zeta(), h, empty, 1e-3), IncompleteTable);

    ZeroTable mislabeled = table_for(chi4());
    CHECK_THROWS_AS(evaluate_explicit_formula(zeta(), h, mislabeled, 1e-3), Error);

    const auto bounded = user_descriptor("ef-bounded", 1, 1, {Complex(0.0, 0.0)},
                                         Complex(1.0, 0.0), 0.0, 0, true,
                                         std::make_shared<BoundedDeltaSource>());
    ZeroTable fake;
    fake.descriptor_id = "ef-bounded";
    fake.height_max = 100.0;
    fake.count_verified = true;
    CHECK_THROWS_AS(evaluate_explicit_formula(bounded, h, fake, 1e-3), Unsupported);

    const ExplicitFormulaReport zr = evaluate_explicit_formula(
        zeta(), TestFunction::zero_function(), table_for(zeta()), 1e-3);
    CHECK(zr.zero_side.value == 0.0);
    CHECK(std::abs(zr.imbalance) <= zr.budget);
}

TEST_CASE("json serialization carries every term") {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    const ExplicitFormulaReport r =
        evaluate_explicit_formula(chi4(), h, table_for(chi4()), kBalanceTailTolerance);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("descriptor").get<std::string>() == chi4().id());
    CHECK(j.at("zero_side").at("value").get<double>() ==
          doctest::Approx(r.zero_side.value).epsilon(1e-15));
    CHECK(j.at("prime_side").at("bound").get<double>() ==
          doctest::Approx(r.prime_side.bound).epsilon(1e-15));
    CHECK(j.at("imbalance").get<double>() == doctest::Approx(r.imbalance).epsilon(1e-15));
    CHECK(j.at("budget").get<double>() == doctest::Approx(r.budget).epsilon(1e-15));
    CHECK(j.at("archimedean_terms").is_array());
}
