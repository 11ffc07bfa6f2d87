#include "argonaut/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "argonaut/argument.hpp"
#include "argonaut/errors.hpp"

namespace argonaut {
namespace {

constexpr double kPi = std::numbers::pi;

struct ConductorScale {
    double log_c = 0.0;   // log C(t)
    double x = 0.0;       // (3/m) log C(t), i.e. log of C^{3/m}
    double log_x = 0.0;   // log log C^{3/m}
    double factor = 0.0;  // 1 + 2 theta
};

ConductorScale scale_at(const LFunctionDescriptor& d, double t) {
    ConductorScale s;
    s.log_c = std::log(analytic_conductor(d, t));
    s.x = 3.0 * s.log_c / static_cast<double>(d.degree());
    s.log_x = std::log(s.x);
    s.factor = 1.0 + 2.0 * d.ramanujan_exponent();
    return s;
}

// The theorems ask for C^{3/m} > e^e. Every constructible descriptor clears
// this (each archimedean factor of C is at least 3), but the guard stays.
void require_theorem_range(const ConductorScale& s) {
    if (!(s.x > std::numbers::e))
        throw NotApplicable("conductor too small: C^{3/m} must exceed e^e");
}

}  // namespace

Theorem1Bounds theorem1_bounds(const LFunctionDescriptor& d, double t) {
    const ConductorScale s = scale_at(d, t);
    require_theorem_range(s);
    Theorem1Bounds b;
    b.upper = s.factor * s.factor * (kPi / 48.0) * s.log_c / (s.log_x * s.log_x);
    b.lower = -2.0 * b.upper;
    return b;
}

double theorem2_bound(const LFunctionDescriptor& d, double t) {
    const ConductorScale s = scale_at(d, t);
    require_theorem_range(s);
    return s.factor * 0.25 * s.log_c / s.log_x;
}

Corollary3Bounds corollary3_bounds(const LFunctionDescriptor& d, double gamma) {
    const ConductorScale s = scale_at(d, gamma);
    require_theorem_range(s);
    Corollary3Bounds b;
    b.multiplicity_bound = 2.0 * theorem2_bound(d, gamma);
    b.gap_bound = s.factor * kPi / s.log_x;
    return b;
}

double chandee_soundararajan_bound(const LFunctionDescriptor& d, double t) {
    const ConductorScale s = scale_at(d, t);
    require_theorem_range(s);
    return s.factor * 0.5 * std::numbers::ln2 * s.log_c / s.log_x;
}

double proof_parameter_delta(const LFunctionDescriptor& d, double t) {
    const ConductorScale s = scale_at(d, t);
    if (!(s.x > 1.0)) throw NotApplicable("conductor too small: C^{3/m} must exceed e");
    return std::max((s.x - 5.0 * s.log_x) / (s.factor * kPi), 1.0);
}

double proof_parameter_nu(const LFunctionDescriptor& d, double t) {
    const ConductorScale s = scale_at(d, t);
    if (!(s.log_x > 0.0)) throw NotApplicable("conductor too small: C^{3/m} must exceed e");
    const double nu = s.factor * kPi / (2.0 * s.log_x);
    if (nu > 5.0) throw NotApplicable("shift parameter exceeds 5 at this conductor");
    return nu;
}

std::vector<BoundComparison> empirical_comparison(const LFunctionDescriptor& d,
                                                  const std::vector<double>& heights,
                                                  const ZeroTable& table) {
    if (!d.builtin()) throw Unsupported("empirical_comparison requires a built-in instance");
    if (table.descriptor_id != d.id())
        throw Error("empirical_comparison: table belongs to " + table.descriptor_id);
    if (!heights.empty()) {
        const double top = *std::max_element(heights.begin(), heights.end());
        if (table.height_max < top)
            throw IncompleteTable("zero table stops below the requested heights");
    }

    std::vector<BoundComparison> rows;
    rows.reserve(heights.size());
    for (double t : heights) {
        BoundComparison row;
        row.descriptor_id = d.id();
        row.t = t;
        row.conductor = analytic_conductor(d, t);

        const SResult s = compute_s(d, t);
        const S1Result s1 = compute_s1(d, t);
        row.s_value = s.value;
        row.s_error = s.error;
        row.s1_value = s1.value;
        row.s1_error = s1.error;

        const Theorem1Bounds t1 = theorem1_bounds(d, t);
        row.thm1_upper = t1.upper;
        row.thm1_lower = t1.lower;
        row.thm2_bound = theorem2_bound(d, t);
        const Corollary3Bounds c3 = corollary3_bounds(d, t);
        row.cor3_multiplicity_bound = c3.multiplicity_bound;
        row.cor3_gap_bound = c3.gap_bound;
        row.cs_bound = chandee_soundararajan_bound(d, t);

        row.margin_s = std::abs(row.s_value) - row.thm2_bound;
        row.margin_s1_upper = row.s1_value - row.thm1_upper;
        row.margin_s1_lower = row.thm1_lower - row.s1_value;
        row.leading_term_exceeded =
            row.margin_s > 0.0 || row.margin_s1_upper > 0.0 || row.margin_s1_lower > 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bound_comparisons_csv(std::ostream& out, const std::vector<BoundComparison>& rows) {
    out << "descriptor,t,conductor,s,s_err,s1,s1_err,thm1_upper,thm1_lower,thm2,"
           "cor3_mult,cor3_gap,cs,margin_s,margin_s1_upper,margin_s1_lower,exceeded\n";
    char buf[512];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%.12g,%.12g,%.12g,%.3g,%.12g,%.3g,%.12g,%.12g,%.12g,%.12g,%.12g,"
                      "%.12g,%.12g,%.12g,%.12g,%d\n",
                      r.descriptor_id.c_str(), r.t, r.conductor, r.s_value, r.s_error, r.s1_value,
                      r.s1_error, r.thm1_upper, r.thm1_lower, r.thm2_bound,
                      r.cor3_multiplicity_bound, r.cor3_gap_bound, r.cs_bound, r.margin_s,
                      r.margin_s1_upper, r.margin_s1_lower, r.leading_term_exceeded ? 1 : 0);
        out << buf;
    }
}

std::string bound_comparisons_to_json(const std::vector<BoundComparison>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"descriptor", r.descriptor_id},
                       {"t", r.t},
                       {"conductor", r.conductor},
                       {"s", {{"value", r.s_value}, {"bound", r.s_error}}},
                       {"s1", {{"value", r.s1_value}, {"bound", r.s1_error}}},
                       {"thm1_upper", r.thm1_upper},
                       {"thm1_lower", r.thm1_lower},
                       {"thm2", r.thm2_bound},
                       {"cor3_multiplicity", r.cor3_multiplicity_bound},
                       {"cor3_gap", r.cor3_gap_bound},
                       {"cor3_gap_threshold_unknown", true},
                       {"cs", r.cs_bound},
                       {"margin_s", r.margin_s},
                       {"margin_s1_upper", r.margin_s1_upper},
                       {"margin_s1_lower", r.margin_s1_lower},
                       {"leading_term_exceeded", r.leading_term_exceeded}});
    }
    return arr.dump(2);
}

}  // namespace argonaut
