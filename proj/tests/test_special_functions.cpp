#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <argonaut/errors.hpp>
#include <argonaut/special_functions.hpp>

using namespace argonaut;
using std::numbers::egamma;
using std::numbers::pi;

namespace {

// Independent zeta(s) for real s by Euler-Maclaurin with five correction terms.
double em_zeta(double s) {
    const double n_cut = 40.0;
    double v = 0.0;
    for (int n = 1; n < 40; ++n) v += std::pow(double(n), -s);
    v += std::pow(n_cut, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n_cut, -s);
    const double b2k[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
    double poch = s;     // s (s+1) ... (s+2k-2)
    double fact = 2.0;   // (2k)!
    for (int k = 1; k <= 5; ++k) {
        v += b2k[k - 1] / fact * poch * std::pow(n_cut, -s - 2.0 * k + 1.0);
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return v;
}

}  // namespace

TEST_CASE("log gamma: known values, recurrence, poles") {
    CHECK(std::abs(std::exp(log_gamma(Complex(0.5, 0.0))) - std::sqrt(pi)) < 1e-13);
    for (double x : {0.3, 1.7, 6.2, 11.9})
        CHECK(std::abs(log_gamma(Complex(x, 0.0)).real() - std::lgamma(x)) < 1e-12 * (1.0 + std::abs(std::lgamma(x))));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-4.0, 6.0), im(-8.0, 8.0);
    for (int i = 0; i < 40; ++i) {
        Complex z(re(rng), im(rng));
        if (std::abs(z.imag()) < 0.05) z += Complex(0.0, 0.1);  // stay clear of poles
        const Complex lhs = std::exp(log_gamma(z + 1.0));
        const Complex rhs = z * std::exp(log_gamma(z));
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(lhs));
    }
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), PoleError);
}

TEST_CASE("digamma: special values and recurrence") {
    CHECK(std::abs(digamma(Complex(1.0, 0.0)).real() + egamma) < 1e-13);
    CHECK(std::abs(digamma(Complex(0.5, 0.0)).real() + egamma + 2.0 * std::numbers::ln2) < 1e-12);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(-3.5, 5.0), im(0.2, 9.0);
    for (int i = 0; i < 40; ++i) {
        const Complex z(re(rng), im(rng));
        CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-11 * (1.0 + std::abs(digamma(z))));
    }
}

TEST_CASE("half gamma factor: derivative of its log matches the quotient") {
    // digamma_r should be the logarithmic derivative of gamma_r; check against
    // a central difference of log_gamma_r, which exercises an independent path.
    for (Complex z : {Complex(0.8, 0.3), Complex(2.5, -1.2), Complex(0.5, 14.1)}) {
        const double h = 1e-5;
        const Complex num =
            (log_gamma_r(z + Complex(h, 0.0)) - log_gamma_r(z - Complex(h, 0.0))) / (2.0 * h);
        CHECK(std::abs(digamma_r(z) - num) < 1e-8);
    }
    CHECK_THROWS_AS(digamma_r(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(gamma_r(Complex(-2.0, 0.0)), PoleError);
}

TEST_CASE("hurwitz zeta: reference values") {
    CHECK(std::abs(hurwitz_zeta(Complex(2.0, 0.0), 1.0).real() - pi * pi / 6.0) < 1e-12);
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    CHECK(std::abs(hurwitz_zeta(Complex(2.0, 0.0), 0.5).real() - pi * pi / 2.0) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(Complex(-1.0, 0.0), 1.0).real() + 1.0 / 12.0) < 1e-12);
    for (double a : {0.3, 0.8, 1.0})
        CHECK(std::abs(hurwitz_zeta(Complex(0.0, 0.0), a).real() - (0.5 - a)) < 1e-12);
    for (double s : {0.5, 2.5, 3.5, -0.5})
        CHECK(std::abs(hurwitz_zeta(Complex(s, 0.0), 1.0).real() - em_zeta(s)) < 1e-10);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0, 0.0), 1.0), PoleError);
}

TEST_CASE("hurwitz zeta: half-shift multiplication identity") {
    // zeta(s, a/2) + zeta(s, (a+1)/2) = 2^s zeta(s, a), all shifts inside (0, 1]
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> sr(-1.0, 4.0), si(-30.0, 30.0), ar(0.1, 1.0);
    for (int i = 0; i < 30; ++i) {
        Complex s(sr(rng), si(rng));
        if (std::abs(s - Complex(1.0, 0.0)) < 0.1) s += 0.2;
        const double a = ar(rng);
        const Complex lhs = hurwitz_zeta(s, a / 2.0) + hurwitz_zeta(s, (a + 1.0) / 2.0);
        const Complex rhs = std::pow(Complex(2.0, 0.0), s) * hurwitz_zeta(s, a);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("hurwitz zeta: deflation removes the pole") {
    // lim_{s->1} [zeta(s,a) - 1/(s-1)] = -psi(a)
    for (double a : {0.4, 0.7, 1.0}) {
        const Complex at_one = hurwitz_zeta_deflated(Complex(1.0, 0.0), a).value;
        CHECK(std::abs(at_one + digamma(Complex(a, 0.0))) < 1e-9);
        const Complex s(1.0 + 1e-7, 0.0);
        const Complex off = hurwitz_zeta(s, a) - 1.0 / (s - 1.0);
        CHECK(std::abs(hurwitz_zeta_deflated(s, a).value - off) < 1e-6);
    }
}

TEST_CASE("hurwitz zeta: derivative against central differences") {
    for (Complex s : {Complex(2.3, 0.0), Complex(0.5, 12.0), Complex(-0.4, 3.3)}) {
        const double a = 1.0;
        const auto [value, deriv] = hurwitz_zeta_with_derivative(s, a);
        CHECK(std::abs(value - hurwitz_zeta(s, a)) < 1e-12 * (1.0 + std::abs(value)));
        const double h = 1e-5;
        const Complex num = (hurwitz_zeta(s + Complex(h, 0.0), a) - hurwitz_zeta(s - Complex(h, 0.0), a)) / (2.0 * h);
        CHECK(std::abs(deriv - num) < 1e-7 * (1.0 + std::abs(num)));
    }
}

TEST_CASE("von Mangoldt and the sieve") {
    CHECK(von_mangoldt(1) == 0.0);
    CHECK(von_mangoldt(2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(von_mangoldt(9) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(von_mangoldt(12) == 0.0);
    CHECK(von_mangoldt(97) == doctest::Approx(std::log(97.0)).epsilon(1e-14));

    const auto primes = primes_up_to(100);
    CHECK(primes.size() == 25);
    CHECK(primes.front() == 2);
    CHECK(primes.back() == 97);
    // trial division agrees everywhere below 1000
    auto is_prime = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    const auto p1000 = primes_up_to(1000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        if (is_prime(n)) {
            REQUIRE(idx < p1000.size());
            CHECK(p1000[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == p1000.size());

    // Chebyshev sum assembled two ways
    double direct = 0.0;
    for (std::uint64_t n = 2; n <= 1000; ++n) direct += von_mangoldt(n);
    double by_powers = 0.0;
    for (std::uint64_t p : p1000)
        for (std::uint64_t q = p; q <= 1000; q *= p) {
            by_powers += std::log(double(p));
            if (q > 1000 / p) break;
        }
    CHECK(direct == doctest::Approx(by_powers).epsilon(1e-12));
}
