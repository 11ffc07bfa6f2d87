#include "argonaut/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace argonaut {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = (result * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return result;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::uint32_t euler_phi_prime_power(std::uint32_t p, std::uint32_t e) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 1; i < e; ++i) q *= p;
    return q * (p - 1);
}

// Primitive root mod p^e for odd prime p.
std::uint32_t primitive_root_odd(std::uint32_t p, std::uint32_t e) {
    std::uint32_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p;
    const std::uint32_t phi_p = p - 1;
    std::vector<std::uint32_t> prime_divisors;
    {
        std::uint32_t n = phi_p;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
            if (n % d) continue;
            prime_divisors.push_back(d);
            while (n % d == 0) n /= d;
        }
        if (n > 1) prime_divisors.push_back(n);
    }
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t d : prime_divisors) {
            if (pow_mod(g, phi_p / d, p) == 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (e == 1) return g;
        // g lifts to p^e unless g^{p-1} = 1 mod p^2, in which case g+p works.
        if (pow_mod(g, phi_p, std::uint64_t(p) * p) != 1) return g;
        return g + p;
    }
    throw Error("primitive_root_odd: no generator found");
}

// Cyclic decomposition of (Z/q)^*: generators with their orders, CRT-lifted
// to modulus q. The factor for 2^e (e >= 3) contributes {-1, 5-ish} as the
// pair {2^e - 1, 3} of orders {2, 2^{e-2}}.
struct UnitGroup {
    std::vector<std::uint64_t> generators;  // residues mod q
    std::vector<std::uint32_t> orders;
};

UnitGroup unit_group(std::uint32_t q) {
    UnitGroup group;
    const auto factors = factorize(q);
    for (const auto& [p, e] : factors) {
        std::uint32_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> local;  // (gen mod pe, order)
        if (p == 2) {
            if (e == 1) continue;  // trivial
            if (e == 2) {
                local.emplace_back(3, 2);
            } else {
                local.emplace_back(pe - 1, 2);
                local.emplace_back(3, pe / 4);
            }
        } else {
            local.emplace_back(primitive_root_odd(p, e), euler_phi_prime_power(p, e));
        }
        // CRT lift: residue = gen mod pe, 1 mod q/pe.
        const std::uint32_t rest = q / pe;
        for (const auto& [gen, order] : local) {
            std::uint64_t lifted = 0;
            if (rest == 1) {
                lifted = gen;
            } else {
                for (std::uint64_t x = gen; x < std::uint64_t(q); x += pe) {
                    if (x % rest == 1) {
                        lifted = x;
                        break;
                    }
                }
            }
            group.generators.push_back(lifted);
            group.orders.push_back(order);
        }
    }
    return group;
}

}  // namespace

bool DirichletCharacter::is_real() const {
    for (const Complex& v : values) {
        if (std::abs(v.imag()) > 1e-12) return false;
    }
    return true;
}

int DirichletCharacter::parity() const {
    const Complex v = values[(modulus - 1) % modulus];
    return std::abs(v - Complex(1.0, 0.0)) < 1e-9 ? 0 : 1;
}

std::uint32_t DirichletCharacter::conductor() const {
    const std::uint32_t q = modulus;
    for (std::uint32_t d = 1; d < q; ++d) {
        if (q % d) continue;
        bool induced = true;
        for (std::uint32_t a = 1; a < q && induced; ++a) {
            if (a % d != 1 % d) continue;
            if (std::gcd(a, q) != 1) continue;
            if (std::abs(values[a] - Complex(1.0, 0.0)) > 1e-9) induced = false;
        }
        if (induced) return d;
    }
    return q;
}

std::vector<DirichletCharacter> primitive_characters(std::uint32_t q) {
    if (q == 0) throw Error("primitive_characters: modulus must be positive");
    std::vector<DirichletCharacter> result;
    if (q <= 2) return result;

    const UnitGroup group = unit_group(q);
    const std::size_t r = group.generators.size();

    // Discrete logs of every unit with respect to each generator.
    std::vector<std::vector<std::uint32_t>> dlog(r, std::vector<std::uint32_t>(q, 0));
    std::vector<bool> is_unit(q, false);
    for (std::uint32_t a = 1; a < q; ++a) is_unit[a] = std::gcd(a, q) == 1;
    is_unit[1 % q] = true;
    // Enumerate the group as products of generator powers.
    std::vector<std::uint32_t> exponents(r, 0);
    while (true) {
        std::uint64_t a = 1 % q;
        for (std::size_t i = 0; i < r; ++i) a = (a * pow_mod(group.generators[i], exponents[i], q)) % q;
        for (std::size_t i = 0; i < r; ++i) dlog[i][a] = exponents[i];
        std::size_t pos = 0;
        while (pos < r && ++exponents[pos] == group.orders[pos]) {
            exponents[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }

    // Characters indexed by exponent tuples (k_i), the first factor varying
    // fastest; chi(g_i) = exp(2 pi i k_i / n_i). The all-zero tuple is the
    // trivial character and never primitive for q > 1.
    std::vector<std::uint32_t> k(r, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < r && ++k[pos] == group.orders[pos]) {
            k[pos] = 0;
            ++pos;
        }
        if (pos == r) break;

        DirichletCharacter chi;
        chi.modulus = q;
        chi.values.assign(q, Complex(0.0, 0.0));
        for (std::uint32_t a = 1; a < q; ++a) {
            if (!is_unit[a]) continue;
            double angle = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                angle += kTwoPi * double(k[i]) * double(dlog[i][a]) / double(group.orders[i]);
            }
            chi.values[a] = Complex(std::cos(angle), std::sin(angle));
        }
        if (chi.is_primitive()) result.push_back(std::move(chi));
    }
    return result;
}

DirichletCharacter dirichlet_character(std::uint32_t q, std::uint32_t index) {
    auto all = primitive_characters(q);
    if (all.empty()) {
        throw NotPrimitive("dirichlet_character: no primitive characters mod " + std::to_string(q));
    }
    if (index == 0 || index > all.size()) {
        throw Error("dirichlet_character: index " + std::to_string(index) + " out of range for modulus " +
                    std::to_string(q) + " (have " + std::to_string(all.size()) + ")");
    }
    return all[index - 1];
}

Complex gauss_sum(const DirichletCharacter& chi) {
    const std::uint32_t q = chi.modulus;
    Complex sum{0.0, 0.0};
    for (std::uint32_t a = 1; a <= q; ++a) {
        const double angle = kTwoPi * double(a) / double(q);
        sum += chi.values[a % q] * Complex(std::cos(angle), std::sin(angle));
    }
    return sum;
}

}  // namespace argonaut
