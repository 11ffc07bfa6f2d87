#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "argonaut/lfunction.hpp"
#include "argonaut/zeros.hpp"

namespace argonaut {

// S(t): the argument of L at 1/2 + it, normalized by pi, obtained by
// integrating Im L'/L along the horizontal ray. At a zero ordinate (and at
// t = 0 when L has a pole) the value is the symmetric limit, the average of
// the one-sided values at distance 1e-6, both of which are exposed.
struct SResult {
    double value = 0.0;
    double error = 0.0;     // quadrature + series-truncation bound
    bool at_zero = false;   // symmetric-limit path taken
    double below = 0.0;     // S just under t (equals value when !at_zero)
    double above = 0.0;     // S just over t
};

struct S1Result {
    double value = 0.0;
    double error = 0.0;
};

// Zero count over heights (t, u] from the winding of the completed function
// around the rectangle [-0.6, 1.6] x [t, u]. Boundary zeros enter with half
// their multiplicity, so value lands on the half-integer grid.
struct CountResult {
    double raw = 0.0;    // winding number plus pole and boundary corrections
    double value = 0.0;  // raw snapped to the nearest half-integer
};

struct Lemma1Report {
    double residual = 0.0;          // pi S1(t) + sum F1(t - gamma) - log C(t)
    double tail_bound = 0.0;        // zeros beyond the table height
    double quadrature_bound = 0.0;  // from compute_s1
    double threshold = 0.0;         // K * degree the caller asked about
    bool within = false;
};

struct PrimitiveIdentityReport {
    double s1_difference = 0.0;  // S1(u) - S1(t)
    double s_integral = 0.0;     // integral of S over [t, u]
    double residual = 0.0;
    double bound = 0.0;
};

struct CountingFormulaReport {
    double n = 0.0;          // zero count on (0, t]
    double s = 0.0;          // S(t)
    double residual = 0.0;   // n - smooth main term - s
    double threshold = 0.0;  // K'/t
    bool within = false;
};

// Zero count over (t, u] against S(u) - S(t) + ((u-t)/2pi) log C(t); the
// remainder is bounded only up to a degree multiple, checked empirically.
struct Lemma4Report {
    double count = 0.0;
    double s_difference = 0.0;
    double main_term = 0.0;
    double residual = 0.0;
    double threshold = 0.0;  // K * degree
    bool within = false;
};

struct ArgumentProfile {
    std::string descriptor_id;
    std::vector<double> heights;    // ascending
    std::vector<double> s_values;
    std::vector<double> s_errors;
    std::vector<double> s1_values;
    std::vector<double> s1_errors;
};

SResult compute_s(const LFunctionDescriptor& d, double t);
S1Result compute_s1(const LFunctionDescriptor& d, double t);
CountResult count_zeros_by_argument(const LFunctionDescriptor& d, double t, double u);

// Residual of the zero-sum representation of S1 against direct quadrature:
// pi S1(t) = -sum_gamma F1(t - gamma) + log C(t) + bounded remainder. The
// table must reach |t| + tail_height; beyond it the zero sum is bounded
// analytically through the tail decay of F1 and the zero density.
Lemma1Report verify_lemma1(const LFunctionDescriptor& d, double t, const ZeroTable& table,
                           double tail_height = 1000.0, double threshold_per_degree = 10.0);

// S1(u) - S1(t) against the integral of S, split at interior zeros.
PrimitiveIdentityReport verify_primitive_identity(const LFunctionDescriptor& d, double t, double u);

// The classical counting formula at height t: zero count versus
// (t/2pi) log(t/2pi) - t/2pi + 7/8 + S(t). Requires t >= 5.
CountingFormulaReport verify_counting_formula_zeta(double t, double k_prime = 1.0);

Lemma4Report verify_lemma4(const LFunctionDescriptor& d, double t, double u,
                           double threshold_per_degree = 10.0);

ArgumentProfile compute_profile(const LFunctionDescriptor& d, const std::vector<double>& heights);
// Columns t, S, S_err, S1, S1_err.
void write_profile_csv(const ArgumentProfile& profile, std::ostream& out);

}  // namespace argonaut
