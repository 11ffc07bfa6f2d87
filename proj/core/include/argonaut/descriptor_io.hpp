#pragma once

#include <filesystem>
#include <string>

#include "argonaut/lfunction.hpp"

namespace argonaut {

// Parse "a+bi" style complex literals: "2", "-0.5", "3i", "1-2i", "i", "1e-3+2.5i".
Complex parse_complex(const std::string& text);

// Built-in instance selector: "zeta" or "dirichlet:q:index" (index 1-based in
// the primitive-character enumeration order).
LFunctionDescriptor descriptor_from_builtin(const std::string& name);

// Coefficient table from CSV rows "n, Re lambda, Im lambda" (Im optional).
// Every nonzero coefficient up to the largest listed n must be present; rows
// may appear in any order and omitted indices are taken as zero. Lines starting
// with '#' and a leading header row are skipped.
std::shared_ptr<const CoefficientSource> load_coefficient_csv(const std::filesystem::path& file);

// Descriptor from a plain-text "key = value" file. Keys: builtin (exclusive
// shortcut), or degree, conductor, mu (comma-separated complex list), kappa,
// theta, pole_order, self_dual, coefficients (CSV path, relative to the
// descriptor file), id (defaults to the file stem).
LFunctionDescriptor load_descriptor(const std::filesystem::path& file);

}  // namespace argonaut
