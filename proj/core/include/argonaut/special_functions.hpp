#ifndef ARGONAUT_SPECIAL_FUNCTIONS_HPP
#define ARGONAUT_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "argonaut/errors.hpp"

namespace argonaut {

using Complex = std::complex<double>;

/// log Gamma(z), principal on the right half plane, computed by the
/// Stirling series after an upward recurrence shift.  Any z off the
/// poles {0, -1, -2, ...} is accepted.
Complex log_gamma(Complex z);

/// Digamma psi(z) = Gamma'/Gamma(z), same domain as log_gamma.
Complex digamma(Complex z);

/// Gamma_R(z) = pi^{-z/2} Gamma(z/2).  Throws PoleError at z in {0,-2,-4,...}.
Complex gamma_r(Complex z);

/// log Gamma_R(z) = -(z/2) log pi + log Gamma(z/2); continuous in t along
/// vertical lines in the right half plane.
Complex log_gamma_r(Complex z);

/// Gamma_R'/Gamma_R(z) = -(1/2) log pi + (1/2) psi(z/2), exact (no Stirling
/// truncation).  Throws PoleError at nonpositive even integers.
Complex digamma_r(Complex z);

/// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued by
/// Euler-Maclaurin.  Valid for a in (0,1], s != 1; tuned for Re s >= -1,
/// |Im s| <= 1e3.  Throws PoleError at s = 1.
Complex hurwitz_zeta(Complex s, double a);

/// Value and s-derivative of zeta(s, a) in one pass.
struct ValueAndDerivative {
    Complex value;
    Complex derivative;
};
ValueAndDerivative hurwitz_zeta_with_derivative(Complex s, double a);

// zeta(s, a) - 1/(s-1) and its s-derivative; entire in s, stable near s = 1.
// Callers re-add the simple pole analytically when their character sums do
// not cancel it.
ValueAndDerivative hurwitz_zeta_deflated(Complex s, double a);

/// Classical von Mangoldt Lambda(n): log p when n = p^k, else 0.
double von_mangoldt(std::uint64_t n);

/// Primes up to `limit`, from the shared sieve (built once, then read-only).
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit);

/// Default sieve limit used by von_mangoldt before falling back to direct
/// trial division.
constexpr std::uint32_t kDefaultSieveLimit = 1'000'000;

}  // namespace argonaut

#endif  // ARGONAUT_SPECIAL_FUNCTIONS_HPP
