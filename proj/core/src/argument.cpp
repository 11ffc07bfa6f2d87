#include "argonaut/argument.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "argonaut/errors.hpp"
#include "argonaut/extremal.hpp"
#include "argonaut/special_functions.hpp"

namespace argonaut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
// The strip integrals run numerically up to this line; past it the Dirichlet
// series converges fast enough to integrate term by term.
constexpr double kSplit = 2.5;
constexpr std::uint32_t kSeriesCut = 10000;

double principal(double x) { return std::remainder(x, kTwoPi); }

// Term-by-term integrals of -L'/L resp. log L over the vertical tail
// sigma >= kSplit, truncated at kSeriesCut with a certified bound.
struct SeriesTails {
    Complex s_sum;   // sum Lambda(n) n^{-split-it} / log n
    Complex s1_sum;  // same with a second 1/log n
    double bound = 0.0;
};

SeriesTails series_tails(const LFunctionDescriptor& d, double t) {
    SeriesTails out;
    for (std::uint32_t p : primes_up_to(kSeriesCut)) {
        for (std::uint64_t pk = p; pk <= kSeriesCut; pk *= p) {
            const Complex lam = lambda_pi(d, pk);
            const double ln = std::log(double(pk));
            const Complex z =
                lam * std::pow(double(pk), -kSplit) * std::exp(Complex(0.0, -t * ln));
            out.s_sum += z / ln;
            out.s1_sum += z / (ln * ln);
            if (pk > kSeriesCut / p) break;
        }
    }
    const double theta = d.ramanujan_exponent();
    const double lx = std::log(double(kSeriesCut));
    out.bound = d.degree() * std::pow(double(kSeriesCut), theta + 1.0 - kSplit) /
                ((kSplit - 1.0 - theta) * kPi * lx);
    return out;
}

struct SCore {
    double value = 0.0;
    double error = 0.0;
};

// S(t) with the argument integral regularized by the zeros near the ray and
// the pole at s = 1; their contributions are re-added in closed form.
SCore s_core(const LFunctionDescriptor& d, double t, const std::vector<double>& local_zeros) {
    const int r = d.pole_order();
    const bool pole_near = r > 0 && std::abs(t) <= 1.0;
    std::vector<double> sub;
    for (double g : local_zeros)
        if (std::abs(g - t) <= 1.0) sub.push_back(g);

    auto f_reg = [&](double sigma) {
        const Complex s{sigma, t};
        Complex v = log_derivative(d, s);
        for (double g : sub) v -= 1.0 / (s - Complex{0.5, g});
        if (pole_near) v += double(r) / (s - 1.0);
        return v.imag();
    };
    double gk_err = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f_reg, 0.5, kSplit, 12, 1e-10, &gk_err);

    double analytic = 0.0;
    for (double g : sub) analytic -= std::atan(2.0 / (t - g));
    if (pole_near) analytic += double(r) * (std::atan(1.5 / t) + std::atan(0.5 / t));

    const SeriesTails tails = series_tails(d, t);
    SCore out;
    out.value = (tails.s_sum.imag() - integral - analytic) / kPi;
    out.error = gk_err / kPi + tails.bound + 1e-10 * double(1 + sub.size());
    return out;
}

SResult s_with_zeros(const LFunctionDescriptor& d, double t, const std::vector<double>& local) {
    double nearest = 1e300;
    for (double g : local) nearest = std::min(nearest, std::abs(g - t));
    const bool on_pole_height = d.pole_order() > 0 && std::abs(t) < 1e-9;
    SResult out;
    if (nearest < 1e-9 || on_pole_height) {
        const SCore lo = s_core(d, t - 1e-6, local);
        const SCore hi = s_core(d, t + 1e-6, local);
        out.at_zero = true;
        out.below = lo.value;
        out.above = hi.value;
        out.value = 0.5 * (lo.value + hi.value);
        out.error = std::max(lo.error, hi.error) +
                    1e-6 * std::log(analytic_conductor(d, t));
    } else {
        const SCore c = s_core(d, t, local);
        out.value = out.below = out.above = c.value;
        out.error = c.error;
    }
    return out;
}

double smooth_counting_term(double t) {
    const double x = t / kTwoPi;
    return x * std::log(x) - x + 7.0 / 8.0;
}

}  // namespace

SResult compute_s(const LFunctionDescriptor& d, double t) {
    if (!d.builtin()) throw Unsupported("compute_s requires a built-in instance");
    return s_with_zeros(d, t, locate_zeros(d, t - 1.2, t + 1.2));
}

S1Result compute_s1(const LFunctionDescriptor& d, double t) {
    if (!d.builtin()) throw Unsupported("compute_s1 requires a built-in instance");
    boost::math::quadrature::tanh_sinh<double> integrator;
    const int r = d.pole_order();
    auto f = [&](double sigma) {
        const Complex s{sigma, t};
        if (r > 0) {
            // Leading behavior at the pole; only reachable where the
            // quadrature weight is already negligible.
            const double dist = std::abs(s - 1.0);
            if (dist < 1e-12) return -double(r) * std::log(dist);
        }
        const double a = std::abs(evaluate_l(d, s));
        return std::log(std::max(a, 1e-300));
    };
    double e1 = 0.0, e2 = 0.0;
    double total;
    if (r > 0 && std::abs(t) < 0.5) {
        // The pole at s = 1 puts a log singularity inside the ray.
        total = integrator.integrate(f, 0.5, 1.0, 1e-10, &e1) +
                integrator.integrate(f, 1.0, kSplit, 1e-10, &e2);
    } else {
        total = integrator.integrate(f, 0.5, kSplit, 1e-10, &e1);
    }
    const SeriesTails tails = series_tails(d, t);
    S1Result out;
    out.value = (total + tails.s1_sum.real()) / kPi;
    out.error = (e1 + e2) * std::max(1.0, std::abs(total)) / kPi + tails.bound;
    if (out.error > 1e-6)
        throw QuadratureFailure("compute_s1: error bound " + std::to_string(out.error) +
                                " at t = " + std::to_string(t));
    return out;
}

CountResult count_zeros_by_argument(const LFunctionDescriptor& d, double t, double u) {
    if (!d.builtin()) throw Unsupported("count_zeros_by_argument requires a built-in instance");
    if (!(u > t)) throw Error("count_zeros_by_argument: need u > t");
    const int r = d.pole_order();
    double lo = t, hi = u;
    // Dodge the real-axis poles of the completed function.
    if (r > 0 && std::abs(lo) < 1e-9) lo = 1e-6;
    if (r > 0 && std::abs(hi) < 1e-9) hi = 1e-6;

    // A zero ordinate sitting on an edge is pushed inside and counted half.
    double adjust = 0.0;
    auto dodge = [&](double& h, double direction) {
        for (double g : locate_zeros(d, h - 1e-4, h + 1e-4, 2000.0))
            if (std::abs(g - h) <= 1e-7) {
                h = g + direction * 1e-5;
                adjust -= 0.5;
            }
    };
    dodge(hi, +1.0);
    dodge(lo, -1.0);

    const double logn = std::log(double(d.conductor()));
    auto phase = [&](Complex s) {
        Complex w = 0.5 * s * logn;
        for (const Complex& mu : d.spectral_params()) w += log_gamma_r(s + mu);
        w += std::log(evaluate_l(d, s));
        return w.imag();
    };

    std::function<double(Complex, Complex, double, double, int)> walk =
        [&](Complex a, Complex b, double fa, double fb, int depth) -> double {
        const double direct = principal(fb - fa);
        const Complex m = 0.5 * (a + b);
        const double fm = phase(m);
        const double d1 = principal(fm - fa);
        const double d2 = principal(fb - fm);
        if (std::abs(d1) <= 0.5 * kPi && std::abs(d2) <= 0.5 * kPi &&
            std::abs(d1 + d2 - direct) < 1e-9)
            return direct;
        if (depth <= 0)
            throw PathThroughZero("argument contour stalls near " + std::to_string(m.real()) +
                                  " + i*" + std::to_string(m.imag()));
        return walk(a, m, fa, fm, depth - 1) + walk(m, b, fm, fb, depth - 1);
    };

    double total = 0.0;
    auto edge = [&](Complex a, Complex b, int segments) {
        Complex prev = a;
        double fprev = phase(a);
        for (int i = 1; i <= segments; ++i) {
            const Complex next = a + (b - a) * (double(i) / double(segments));
            const double fnext = phase(next);
            total += walk(prev, next, fprev, fnext, 48);
            prev = next;
            fprev = fnext;
        }
    };
    const double logc = std::log(analytic_conductor(d, std::max(std::abs(lo), std::abs(hi))));
    const int vseg = std::max(8, int(std::ceil((hi - lo) * (0.5 * logc + 2.0))));
    const double xl = -0.6, xr = 1.6;
    edge(Complex{xr, lo}, Complex{xr, hi}, vseg);
    edge(Complex{xr, hi}, Complex{xl, hi}, 8);
    edge(Complex{xl, hi}, Complex{xl, lo}, vseg);
    edge(Complex{xl, lo}, Complex{xr, lo}, 8);

    CountResult out;
    out.raw = total / kTwoPi + adjust;
    if (r > 0 && lo < 0.0 && hi > 0.0) out.raw += 2.0 * r;
    out.value = std::round(2.0 * out.raw) / 2.0;
    if (std::abs(out.raw - out.value) > 1e-3)
        throw NonIntegerResult("zero count lands off the half-integer grid", out.raw);
    return out;
}

Lemma1Report verify_lemma1(const LFunctionDescriptor& d, double t, const ZeroTable& table,
                           double tail_height, double threshold_per_degree) {
    if (table.descriptor_id != d.id())
        throw Error("verify_lemma1: table belongs to " + table.descriptor_id);
    if (table.height_max < std::abs(t) + tail_height)
        throw IncompleteTable("verify_lemma1: table stops at " +
                              std::to_string(table.height_max));

    const S1Result s1 = compute_s1(d, t);
    double zero_sum = 0.0;
    for (const auto& [g, mult] : table.zeros_in(-table.height_max, table.height_max))
        zero_sum += double(mult) * big_f1(t - g);

    // Zeros beyond the table contribute at most a density-weighted tail.
    auto density = [&](double h) { return std::log(analytic_conductor(d, h)) / kTwoPi + 1.0; };
    const double h0 = table.height_max;
    double gk_err = 0.0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    double tail = gk::integrate([&](double x) { return big_f1(x - t) * density(x); }, h0, 1e7,
                                10, 1e-9, &gk_err);
    tail += gk::integrate([&](double x) { return big_f1(x + t) * density(-x); }, h0, 1e7, 10,
                          1e-9, &gk_err);
    tail += (8.0 / 3.0) * (density(1e7) + density(-1e7)) / 1e7;

    Lemma1Report rep;
    rep.residual = kPi * s1.value + zero_sum - std::log(analytic_conductor(d, t));
    rep.tail_bound = tail;
    rep.quadrature_bound = kPi * s1.error;
    rep.threshold = threshold_per_degree * double(d.degree());
    rep.within = std::abs(rep.residual) <= rep.threshold;
    return rep;
}

PrimitiveIdentityReport verify_primitive_identity(const LFunctionDescriptor& d, double t,
                                                  double u) {
    if (!d.builtin()) throw Unsupported("verify_primitive_identity requires a built-in instance");
    if (u == t) return {};
    if (!(u > t)) throw Error("verify_primitive_identity: need u >= t");
    if (u - t > 10.0) throw Error("verify_primitive_identity: interval longer than 10");

    const std::vector<double> local = locate_zeros(d, t - 1.3, u + 1.3);
    const S1Result s1a = compute_s1(d, t);
    const S1Result s1b = compute_s1(d, u);

    // S jumps at each zero ordinate; integrate between them.
    std::vector<double> cuts{t};
    for (double g : local)
        if (g > t + 1e-12 && g < u - 1e-12) cuts.push_back(g);
    cuts.push_back(u);

    double integral = 0.0, quad_err = 0.0, eval_err = 0.0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double e = 0.0;
        integral += gk::integrate(
            [&](double tau) {
                const SCore c = s_core(d, tau, local);
                eval_err = std::max(eval_err, c.error);
                return c.value;
            },
            cuts[i], cuts[i + 1], 8, 1e-9, &e);
        quad_err += e;
    }

    PrimitiveIdentityReport rep;
    rep.s1_difference = s1b.value - s1a.value;
    rep.s_integral = integral;
    rep.residual = rep.s1_difference - rep.s_integral;
    rep.bound = s1a.error + s1b.error + quad_err + eval_err * (u - t);
    return rep;
}

CountingFormulaReport verify_counting_formula_zeta(double t, double k_prime) {
    if (!(t >= 5.0)) throw Error("verify_counting_formula_zeta: need t >= 5");
    const LFunctionDescriptor zeta = zeta_descriptor();
    CountingFormulaReport rep;
    rep.n = count_zeros_by_argument(zeta, 0.0, t).value;
    rep.s = compute_s(zeta, t).value;
    rep.residual = rep.n - smooth_counting_term(t) - rep.s;
    rep.threshold = k_prime / t;
    rep.within = std::abs(rep.residual) <= rep.threshold;
    return rep;
}

Lemma4Report verify_lemma4(const LFunctionDescriptor& d, double t, double u,
                           double threshold_per_degree) {
    Lemma4Report rep;
    rep.count = count_zeros_by_argument(d, t, u).value;
    rep.s_difference = compute_s(d, u).value - compute_s(d, t).value;
    rep.main_term = (u - t) / kTwoPi * std::log(analytic_conductor(d, t));
    rep.residual = rep.count - rep.s_difference - rep.main_term;
    rep.threshold = threshold_per_degree * double(d.degree());
    rep.within = std::abs(rep.residual) <= rep.threshold;
    return rep;
}

ArgumentProfile compute_profile(const LFunctionDescriptor& d,
                                const std::vector<double>& heights) {
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        if (!(heights[i] < heights[i + 1]))
            throw MonotonicityError("compute_profile: heights must ascend");
    ArgumentProfile profile;
    profile.descriptor_id = d.id();
    profile.heights = heights;
    for (double t : heights) {
        const SResult s = compute_s(d, t);
        const S1Result s1 = compute_s1(d, t);
        profile.s_values.push_back(s.value);
        profile.s_errors.push_back(s.error);
        profile.s1_values.push_back(s1.value);
        profile.s1_errors.push_back(s1.error);
    }
    return profile;
}

void write_profile_csv(const ArgumentProfile& profile, std::ostream& out) {
    out << "t,s,s_err,s1,s1_err\n";
    char buf[160];
    for (std::size_t i = 0; i < profile.heights.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", profile.heights[i],
                      profile.s_values[i], profile.s_errors[i], profile.s1_values[i],
                      profile.s1_errors[i]);
        out << buf;
    }
}

}  // namespace argonaut
