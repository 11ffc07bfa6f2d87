#include "argonaut/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace argonaut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// B_{2k} / (2k(2k-1)), k = 1..14 (Stirling series for log Gamma).
constexpr std::array<double, 14> kStirlingCoeff = {
    0.083333333333333333333,
    -0.0027777777777777777778,
    0.00079365079365079365079,
    -0.0005952380952380952381,
    0.00084175084175084175084,
    -0.0019175269175269175269,
    0.0064102564102564102564,
    -0.02955065359477124183,
    0.17964437236883057316,
    -1.3924322169059011164,
    13.402864044168391994,
    -156.84828462600201731,
    2193.1033333333333333,
    -36108.771253724989357,
};

// B_{2k} / (2k), k = 1..14 (digamma asymptotic series).
constexpr std::array<double, 14> kDigammaCoeff = {
    0.083333333333333333333,
    -0.0083333333333333333333,
    0.003968253968253968254,
    -0.0041666666666666666667,
    0.0075757575757575757576,
    -0.021092796092796092796,
    0.083333333333333333333,
    -0.44325980392156862745,
    3.0539543302701197438,
    -26.456212121212121212,
    281.46014492753623188,
    -3607.510546398046398,
    54827.583333333333333,
    -974936.82385057471264,
};

// B_{2k} / (2k)!, k = 1..30 (Euler-Maclaurin correction weights).
constexpr std::array<double, 30> kEulerMaclaurinCoeff = {
    0.083333333333333333333,
    -0.0013888888888888888889,
    0.000033068783068783068783,
    -8.2671957671957671958e-7,
    2.0876756987868098979e-8,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.174868698558061873e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
    2.2679524523376830603e-24,
    -5.7447906688722024453e-26,
    1.4551724756148649019e-27,
    -3.6859949406653101782e-29,
    9.336734257095044672e-31,
    -2.3650224157006299346e-32,
    5.9906717624821343047e-34,
    -1.5174548844682902617e-35,
    3.8437581254541882322e-37,
    -9.7363530726466910353e-39,
    2.4662470442006809571e-40,
    -6.2470767418207436931e-42,
    1.5824030244644914298e-43,
    -4.0082736859489359685e-45,
    1.0153075855569556312e-46,
    -2.5718041582418717499e-48,
};

bool near_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

// Stirling tail, valid once Re z is comfortably positive.
Complex log_gamma_stirling(Complex z) {
    Complex result = (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
    const Complex w2 = 1.0 / (z * z);
    Complex w = 1.0 / z;
    for (double c : kStirlingCoeff) {
        result += c * w;
        w *= w2;
    }
    return result;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12)) {
        throw PoleError("log_gamma: pole at nonpositive integer z");
    }
    // Upward recurrence until the Stirling series converges fast.
    Complex shift{0.0, 0.0};
    while (z.real() < 14.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12)) {
        throw PoleError("digamma: pole at nonpositive integer z");
    }
    Complex shift{0.0, 0.0};
    while (z.real() < 14.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    Complex result = std::log(z) - 0.5 / z;
    const Complex w2 = 1.0 / (z * z);
    Complex w = w2;
    for (double c : kDigammaCoeff) {
        result -= c * w;
        w *= w2;
    }
    return result - shift;
}

Complex gamma_r(Complex z) {
    if (near_nonpositive_integer(z * 0.5, 1e-12)) {
        throw PoleError("gamma_r: pole at nonpositive even integer z");
    }
    return std::exp(log_gamma_r(z));
}

Complex log_gamma_r(Complex z) {
    return -0.5 * kLogPi * z + log_gamma(z * 0.5);
}

Complex digamma_r(Complex z) {
    if (near_nonpositive_integer(z * 0.5, 1e-12)) {
        throw PoleError("digamma_r: pole at nonpositive even integer z");
    }
    return -0.5 * kLogPi + 0.5 * digamma(z * 0.5);
}

namespace {

// log(n + 1) for n = 0..4095, shared by every zeta-style evaluation (a = 1).
const std::vector<double>& unit_log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(4096);
        for (std::size_t n = 0; n < t.size(); ++n) t[n] = std::log(double(n) + 1.0);
        return t;
    }();
    return table;
}

ValueAndDerivative hurwitz_euler_maclaurin(Complex s, double a, int m_terms, bool deflate) {
    const bool cached = (a == 1.0) && (std::size_t(m_terms) <= unit_log_table().size());
    const std::vector<double>& logs = unit_log_table();

    Complex sum{0.0, 0.0};
    Complex dsum{0.0, 0.0};
    for (int n = 0; n < m_terms; ++n) {
        const double lw = cached ? logs[std::size_t(n)] : std::log(double(n) + a);
        const Complex e = std::exp(-s * lw);
        sum += e;
        dsum -= lw * e;
    }

    const double w = double(m_terms) + a;
    const double lw = std::log(w);
    const Complex w_ms = std::exp(-s * lw);  // w^{-s}
    const Complex sm1 = s - 1.0;

    if (!deflate) {
        // w^{1-s}/(s-1) and its s-derivative.
        const Complex t1 = w * w_ms / sm1;
        sum += t1;
        dsum += t1 * (-lw - 1.0 / sm1);
    } else if (std::abs(sm1) * lw < 0.5) {
        // (w^{1-s} - 1)/(s-1) = sum_{k>=1} (-L)^k v^{k-1}/k! with L = log w,
        // v = s - 1; expanded so both value and derivative stay finite at v = 0.
        Complex c{-lw, 0.0};  // (-L)^k / k!
        Complex value = c;
        Complex deriv{0.0, 0.0};
        Complex vm{1.0, 0.0};  // v^{k-2}
        for (int kk = 2; kk <= 48; ++kk) {
            c *= -lw / double(kk);
            deriv += c * double(kk - 1) * vm;
            const Complex vterm = c * vm * sm1;
            value += vterm;
            vm *= sm1;
            if (std::abs(vterm) < 1e-18 * (std::abs(value) + 1.0)) break;
        }
        sum += value;
        dsum += deriv;
    } else {
        const Complex w1ms = w * w_ms;
        const Complex t1 = (w1ms - 1.0) / sm1;
        sum += t1;
        dsum += -lw * w1ms / sm1 - t1 / sm1;
    }

    sum += 0.5 * w_ms;
    dsum += -0.5 * lw * w_ms;

    // Correction terms c_k * (s)_{2k-1} * w^{-s-2k+1}, built incrementally.
    const double winv2 = 1.0 / (w * w);
    Complex poch = s;                       // (s)_{2k-1}
    Complex poch_h = 1.0 / s;               // sum 1/(s+j), j = 0..2k-2
    Complex wpow = w_ms / w;                // w^{-s-2k+1}
    double prev_mag = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (std::size_t k = 1; k <= kEulerMaclaurinCoeff.size(); ++k) {
        const Complex term = kEulerMaclaurinCoeff[k - 1] * poch * wpow;
        sum += term;
        dsum += kEulerMaclaurinCoeff[k - 1] * wpow * (poch * poch_h - poch * lw);
        const double mag = std::abs(term);
        if (mag <= 1e-17 * (std::abs(sum) + 1e-300)) {
            converged = true;
            break;
        }
        if (mag > prev_mag) break;  // asymptotic series turned; need larger m
        prev_mag = mag;
        // extend (s)_{2k-1} -> (s)_{2k+1} and the harmonic sum
        const Complex f1 = s + double(2 * k - 1);
        const Complex f2 = s + double(2 * k);
        poch_h = poch_h + 1.0 / f1 + 1.0 / f2;
        poch *= f1 * f2;
        wpow *= winv2;
    }
    if (!converged) {
        return {Complex(std::nan(""), 0.0), Complex(0.0, 0.0)};
    }
    return {sum, dsum};
}

}  // namespace

Complex hurwitz_zeta(Complex s, double a) {
    return hurwitz_zeta_with_derivative(s, a).value;
}

ValueAndDerivative hurwitz_zeta_with_derivative(Complex s, double a) {
    if (!(a > 0.0 && a <= 1.0)) {
        throw Error("hurwitz_zeta: a must lie in (0, 1]");
    }
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-13) {
        throw PoleError("hurwitz_zeta: pole at s = 1");
    }
    int m = int(std::ceil(0.35 * std::abs(s.imag()))) + 24;
    for (int attempt = 0; attempt < 6; ++attempt) {
        ValueAndDerivative r = hurwitz_euler_maclaurin(s, a, m, false);
        if (!std::isnan(r.value.real())) return r;
        m *= 2;
    }
    throw QuadratureFailure("hurwitz_zeta: Euler-Maclaurin did not converge");
}

ValueAndDerivative hurwitz_zeta_deflated(Complex s, double a) {
    if (!(a > 0.0 && a <= 1.0)) {
        throw Error("hurwitz_zeta_deflated: a must lie in (0, 1]");
    }
    int m = int(std::ceil(0.35 * std::abs(s.imag()))) + 24;
    for (int attempt = 0; attempt < 6; ++attempt) {
        ValueAndDerivative r = hurwitz_euler_maclaurin(s, a, m, true);
        if (!std::isnan(r.value.real())) return r;
        m *= 2;
    }
    throw QuadratureFailure("hurwitz_zeta_deflated: Euler-Maclaurin did not converge");
}

namespace {

std::once_flag sieve_once;
std::vector<std::uint32_t>* default_primes = nullptr;

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    std::vector<bool> composite(std::size_t(limit) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q <= limit; q += p) {
            composite[std::size_t(q)] = true;
        }
    }
    return primes;
}

}  // namespace

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit) {
    std::call_once(sieve_once, [] {
        default_primes = new std::vector<std::uint32_t>(sieve_primes(kDefaultSieveLimit));
    });
    if (limit <= kDefaultSieveLimit) return *default_primes;
    // Rare path: larger requests get their own cached sieve.
    static std::mutex big_mutex;
    static std::map<std::uint32_t, std::vector<std::uint32_t>> big;
    std::lock_guard<std::mutex> lock(big_mutex);
    auto it = big.find(limit);
    if (it == big.end()) it = big.emplace(limit, sieve_primes(limit)).first;
    return it->second;
}

double von_mangoldt(std::uint64_t n) {
    if (n < 2) return 0.0;
    const auto& primes = primes_up_to(kDefaultSieveLimit);
    std::uint64_t p = 0;
    for (std::uint32_t q : primes) {
        if (std::uint64_t(q) * q > n) break;
        if (n % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) {
        if (n <= std::uint64_t(kDefaultSieveLimit) * kDefaultSieveLimit) {
            return std::log(double(n));  // n itself is prime
        }
        // Beyond the sieve's reach: direct trial division.
        for (std::uint64_t q = std::uint64_t(kDefaultSieveLimit) + 1; q * q <= n; ++q) {
            if (n % q == 0) {
                p = q;
                break;
            }
        }
        if (p == 0) return std::log(double(n));
    }
    std::uint64_t r = n;
    while (r % p == 0) r /= p;
    return r == 1 ? std::log(double(p)) : 0.0;
}

}  // namespace argonaut
