#pragma once

#include <string>
#include <utility>
#include <vector>

#include "argonaut/extremal.hpp"
#include "argonaut/lfunction.hpp"
#include "argonaut/zeros.hpp"

namespace argonaut {

// Admissible test function for the Guinand-Weil balance: band-limited,
// real-valued on the real axis, analytic on |Im z| <= 1, with |h(x)|
// decaying at least like (1+|x|)^{-(1+decay_exponent)}.  Three shapes are
// supported and compose linearly:
//   - the Fejer kernel h(z) = w * sinc^2(pi w (z - c)), whose transform is
//     the triangle (1 - |xi|/w)^+ times a recentering phase;
//   - a stored band-limited profile G recentred as h(z) = G(c - z);
//   - finite real linear combinations of the above.
class TestFunction {
public:
    static TestFunction fejer(double width, double center);
    static TestFunction from_profile(BandlimitedFunction profile, double center);
    static TestFunction combination(std::vector<std::pair<double, TestFunction>> parts);
    static TestFunction zero_function();

    // Same shape shifted right: z -> z - shift.
    TestFunction translated(double shift) const;

    // Transform support radius: hat h vanishes outside [-band_limit, band_limit].
    double band_limit() const { return band_; }
    // Decay hypothesis exponent (1 for every supported shape).
    double decay_exponent() const { return decay_exponent_; }
    // Recorded sup of |h(x)| (1+|x|)^{1+decay_exponent} over the check grid.
    double decay_constant() const { return decay_constant_; }
    // Evaluation strip: value(z) requires |Im z| <= strip_half_width.
    double strip_half_width() const { return strip_; }

    double value(double x) const;
    // Band-limited integral representation; throws Error outside the strip.
    Complex value(Complex z) const;
    // hat h(xi) = int h(x) e^{-2 pi i x xi} dx; identically zero off the band.
    Complex transform(double xi) const;
    // int h = hat h(0) (real since h is real and even-profiled on the line).
    double integral() const;
    // Upper bound for sup |hat h|.
    double transform_sup() const;
    // Rigorous pointwise envelope: |h(x)| <= abs_envelope(x) for all real x.
    double abs_envelope(double x) const;

private:
    struct Part {
        bool fejer = true;  // else stored profile
        double coefficient = 1.0;
        double width = 1.0;        // Fejer band limit
        double center = 0.0;       // Fejer peak, or G(center - z) for profiles
        BandlimitedFunction profile;
        double far_scale = 0.0;    // |part(x)| <= far_scale / (x - center)^2
        double sup_bound = 0.0;    // |part(x)| <= sup_bound everywhere
    };

    TestFunction() = default;
    void finalize();

    std::vector<Part> parts_;
    double band_ = 0.0;
    double decay_exponent_ = 1.0;
    double decay_constant_ = 0.0;
    double strip_ = 1.0;
};

struct TermValue {
    double value = 0.0;
    double bound = 0.0;  // certified absolute uncertainty of value
};

// Itemized two-sided balance for one descriptor and test function.  The
// identity being checked: the sum of h over the zero ordinates equals
//   pole_term + conductor_term + sum(archimedean_terms) + prime_side
//     + shift_interior + shift_boundary,
// so imbalance = zero_side - (that sum) and |imbalance| <= budget whenever
// every input is what it claims to be.
struct ExplicitFormulaReport {
    std::string descriptor_id;
    TermValue zero_side;       // sum of mult * h(gamma); bound covers the
                               // beyond-table tail and ordinate uncertainty
    TermValue pole_term;       // r * (h(1/(2i)) + h(-1/(2i)))
    TermValue conductor_term;  // (log N / 2 pi) * integral of h
    // Per spectral parameter mu_j:
    //   (1/pi) int h(u) Re GammaR'/GammaR(1/2 + mu_j + iu) du.
    std::vector<TermValue> archimedean_terms;
    TermValue prime_side;      // -(1/2 pi) sum_n (lambda_pi(n) hat h(log n/2 pi)
                               //   + conj lambda_pi(n) hat h(-log n/2 pi)) / sqrt n
    // Corrections for spectral parameters left of the -1/2 line: full weight
    // for -1 < Re mu < -1/2, half weight on Re mu = -1/2, both entering the
    // right side with a minus sign (signs already applied to the values).
    TermValue shift_interior;
    TermValue shift_boundary;
    double imbalance = 0.0;
    double budget = 0.0;  // sum of every bound above
};

// Evaluate every term.  The zero side uses the table's ordinates (critical
// line assumed) over [-height_max, height_max], with reflection for
// positive-only tables; the remaining density-weighted tail
// int_{|u|>H} (log C(u)/2 pi) |h(u)| du must fall below tail_tolerance or
// IncompleteTable is thrown.  The prime sum is finite by band limitation
// (n <= e^{2 pi band_limit}); user descriptors whose coefficients stop short
// of that cut raise Unsupported.
ExplicitFormulaReport evaluate_explicit_formula(const LFunctionDescriptor& d,
                                                const TestFunction& h, const ZeroTable& table,
                                                double tail_tolerance = 1e-4);

struct PrimeSideSum {
    double value = 0.0;
    // m * sum_{n <= cut} Lambda(n) n^{theta - 1/2} * sup|hat h| / pi; the
    // coarse a-priori estimate the exact sum must respect.
    double crude_bound = 0.0;
};

// The prime-power term alone, as an exact finite sum over n <= ceil(e^{2 pi
// band_limit}) together with the crude comparison bound.
PrimeSideSum prime_side_sum(const LFunctionDescriptor& d, const TestFunction& h);

struct SpectralCorrections {
    TermValue interior;  // -sum over -1 < Re mu < -1/2 of h(w) + h(-w)
    TermValue boundary;  // -(1/2) sum over Re mu = -1/2 of the same
};

// The left-of-critical-strip correction terms by themselves, exposed so a
// synthetic descriptor can exercise them without any zero data.  Here
// w = (mu + 1/2)/i for each qualifying spectral parameter.
SpectralCorrections spectral_corrections(const LFunctionDescriptor& d, const TestFunction& h);

// One gamma-factor integral (1/pi) int h(u) Re GammaR'/GammaR(1/2+mu+iu) du,
// computed on the compact transform side (the slowly decaying real-axis tail
// makes direct quadrature hopeless at the 1e-8 target).  Exposed so the
// reduction can be cross-checked against direct digamma_r quadrature.
TermValue archimedean_term(const TestFunction& h, Complex mu);

// JSON object with one {value, bound} member per term plus imbalance/budget.
std::string report_to_json(const ExplicitFormulaReport& r);

}  // namespace argonaut
