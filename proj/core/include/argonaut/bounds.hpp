#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "argonaut/lfunction.hpp"
#include "argonaut/zeros.hpp"

namespace argonaut {

// Leading terms of the unconditional bounds on S and S1. Everything here is a
// pure function of the analytic conductor C(t) through x = (3/m) log C and
// log x; the error terms of the underlying theorems carry non-effective
// constants and are displayed symbolically, never added to the numbers.

struct Theorem1Bounds {
    double upper = 0.0;  // (1+2theta)^2 pi/48 * log C / (log x)^2
    double lower = 0.0;  // exactly -2 * upper
};

// Window for S1(t). Requires C(t)^{3/m} > e^e; NotApplicable below that.
Theorem1Bounds theorem1_bounds(const LFunctionDescriptor& d, double t);

// Bound for |S(t)|: (1+2theta)/4 * log C / log x. Same applicability gate.
double theorem2_bound(const LFunctionDescriptor& d, double t);

struct Corollary3Bounds {
    double multiplicity_bound = 0.0;  // exactly 2 * theorem2_bound
    double gap_bound = 0.0;           // (1+2theta) pi / log x
    // The gap bound is proven only beyond a conductor threshold whose size is
    // not effective, so finite-height comparisons must allow an unknown
    // universal slack. Always true; kept as a field so exports carry the
    // caveat next to the number.
    bool gap_threshold_unknown = true;
};
Corollary3Bounds corollary3_bounds(const LFunctionDescriptor& d, double gamma);

// Resonance-method comparison line: (1+2theta) log2/2 * log C / log x.
double chandee_soundararajan_bound(const LFunctionDescriptor& d, double t);

// Band width used in the proof of the S1 window:
// max{ (x - 5 log x) / ((1+2theta) pi), 1 }.
double proof_parameter_delta(const LFunctionDescriptor& d, double t);

// Exponential shift in the proof of the |S| bound:
// (1+2theta) pi / (2 log x); valid while <= 5, NotApplicable above.
double proof_parameter_nu(const LFunctionDescriptor& d, double t);

struct BoundComparison {
    std::string descriptor_id;
    double t = 0.0;
    double conductor = 0.0;  // analytic conductor C(t)
    double s_value = 0.0;
    double s_error = 0.0;
    double s1_value = 0.0;
    double s1_error = 0.0;
    double thm1_upper = 0.0;
    double thm1_lower = 0.0;
    double thm2_bound = 0.0;
    double cor3_multiplicity_bound = 0.0;
    double cor3_gap_bound = 0.0;
    double cs_bound = 0.0;
    double margin_s = 0.0;         // |S| - thm2_bound
    double margin_s1_upper = 0.0;  // S1 - thm1_upper
    double margin_s1_lower = 0.0;  // thm1_lower - S1
    // A positive margin at desk heights means the asymptotic regime is not
    // reached (the dropped error terms dominate), not a contradiction.
    bool leading_term_exceeded = false;
};

// One record per height. The table acts as a guard (it must belong to d and
// reach max(heights)); S and S1 come from the argument engine directly, and
// the bound columns are pure functions of C.
std::vector<BoundComparison> empirical_comparison(const LFunctionDescriptor& d,
                                                  const std::vector<double>& heights,
                                                  const ZeroTable& table);

// Columns: descriptor,t,conductor,s,s_err,s1,s1_err,thm1_upper,thm1_lower,
// thm2,cor3_mult,cor3_gap,cs,margin_s,margin_s1_upper,margin_s1_lower,exceeded
void write_bound_comparisons_csv(std::ostream& out, const std::vector<BoundComparison>& rows);
std::string bound_comparisons_to_json(const std::vector<BoundComparison>& rows);

}  // namespace argonaut
