#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "argonaut/special_functions.hpp"

namespace argonaut {

/// Even kernel 1 - x*arctan(1/x), extended by continuity to 1 at x = 0.
/// Switches to an asymptotic series for large |x| to avoid cancellation.
double f1(double x);

/// Scaled kernel 2 - x*arctan(2/x) = 2*f1(x/2).  Integrates to 2*pi over R.
double big_f1(double x);

/// Tail integral of big_f1 over [X, infinity), X > 0.
double big_f1_tail(double x);

enum class ApproximationSide { Minorant, Majorant, Generic };

/// Entire function of exponential type 2*pi*delta represented by samples of
/// its Fourier transform on a uniform grid over [-delta, delta].  The
/// transform is interpreted as piecewise linear through the samples and zero
/// outside the band; evaluation integrates that profile exactly.
struct BandlimitedFunction {
    double delta = 1.0;
    ApproximationSide side = ApproximationSide::Generic;
    std::vector<Complex> ft_samples;  // length M+1, endpoints included
    double envelope_constant = 0.0;   // c with |G(x)| <= c/(1+x^2) off-window

    std::size_t grid_size() const { return ft_samples.empty() ? 0 : ft_samples.size() - 1; }
    double knot_spacing() const { return 2.0 * delta / double(grid_size()); }

    /// Piecewise-linear interpolation of the transform; zero outside the band.
    Complex ft_value(double xi) const;

    /// Total integral over the real line (= transform at frequency zero).
    double integral() const;
};

/// Evaluate on the real axis.  Exact for the stored piecewise-linear profile.
double evaluate_bandlimited(const BandlimitedFunction& g, double x);

/// Evaluate at a complex point with |Im z| <= 1.
Complex evaluate_bandlimited(const BandlimitedFunction& g, Complex z);

/// L1-optimal one-sided approximation to big_f1 of exponential type
/// 2*pi*delta, built by a discretized linear program over a piecewise-linear
/// transform profile.  delta in [1, 8].  Throws Infeasible when the program
/// has no solution and OptimalityGap when the achieved L1 distance misses the
/// certified value by more than five percent.
BandlimitedFunction build_extremal(double delta, ApproximationSide side);

/// The exact L1 distances achieved by the optimal one-sided approximations,
/// as two equivalent quadratures (a sigma-integral and its substituted
/// x-integral form).  Minorant: just below pi/(24 delta^2); majorant: just
/// below pi/(12 delta^2).
struct ClosedFormDistance {
    double sigma_form = 0.0;
    double x_form = 0.0;
};
ClosedFormDistance closed_form_distance(double delta, ApproximationSide side);

/// Limits of the defect integrals as delta grows: integral over [0, inf) of
/// log(1+e^{-x}) for the minorant (= pi^2/12) and of -log(1-e^{-x}) for the
/// majorant (= pi^2/6), computed numerically.
double limiting_defect_integral(ApproximationSide side);

/// Largest signed violation of the one-sided property against big_f1 over a
/// dense grid on [-50, 50] (positive means the sandwich fails).
double sandwich_violation(const BandlimitedFunction& g);

/// Smallest c with |G(x)| <= c/(1+x^2) over a grid on [-100, 100].
double empirical_envelope_constant(const BandlimitedFunction& g);

void write_bandlimited_csv(const BandlimitedFunction& g, std::ostream& os);
BandlimitedFunction load_bandlimited_csv(std::istream& is);

}  // namespace argonaut
