#pragma once

#include <cstdint>
#include <vector>

#include "argonaut/errors.hpp"
#include "argonaut/special_functions.hpp"

namespace argonaut {

// A Dirichlet character mod q, stored as its full value table chi(0..q-1).
struct DirichletCharacter {
    std::uint32_t modulus = 1;
    std::vector<Complex> values;

    Complex operator()(std::uint64_t n) const { return values[n % modulus]; }
    bool is_real() const;
    // Parity exponent: 0 when chi(-1) = 1, 1 when chi(-1) = -1.
    int parity() const;
    // Smallest modulus whose character induces this one.
    std::uint32_t conductor() const;
    bool is_primitive() const { return conductor() == modulus; }
};

// All primitive characters mod q in a fixed enumeration order (see README
// for the generator convention). Empty for q in {1, 2}.
std::vector<DirichletCharacter> primitive_characters(std::uint32_t q);

// The index-th primitive character mod q, 1-based in enumeration order.
// Throws NotPrimitive when q admits none, Error when index is out of range.
DirichletCharacter dirichlet_character(std::uint32_t q, std::uint32_t index);

Complex gauss_sum(const DirichletCharacter& chi);

}  // namespace argonaut
