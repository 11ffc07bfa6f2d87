#pragma once

#include "argonaut/dirichlet.hpp"
#include "argonaut/special_functions.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace argonaut {

// Supplies normalized Dirichlet coefficients lambda(n) for a user-defined
// L-function. lambda(1) must be 1. max_index() bounds the range over which
// coefficients are available; evaluation never reads past it and the error
// bound reported to callers accounts for the forced truncation.
class CoefficientSource {
public:
    virtual ~CoefficientSource() = default;
    virtual Complex lambda(std::uint64_t n) const = 0;
    virtual std::uint64_t max_index() const { return std::numeric_limits<std::uint64_t>::max(); }
};

// Degree-m L-function data: conductor, archimedean parameters, root number,
// coefficient bound exponent, order of the poles at s = 0 and 1. Instances are
// built through zeta_descriptor / dirichlet_descriptor / user_descriptor, which
// enforce the structural requirements (|kappa| = 1, conjugation-closed mu set,
// lambda(1) = 1, sampled Euler-root bound |alpha(p)| <= p^theta).
class LFunctionDescriptor {
public:
    enum class Kind { Zeta, Dirichlet, User };

    int degree() const { return degree_; }
    std::int64_t conductor() const { return conductor_; }
    const std::vector<Complex>& spectral_params() const { return mu_; }
    Complex root_number() const { return kappa_; }
    double ramanujan_exponent() const { return theta_; }
    int pole_order() const { return pole_order_; }
    bool self_dual() const { return self_dual_; }
    Kind kind() const { return kind_; }
    // True when an analytic continuation is wired in (zeta and Dirichlet
    // instances); user-supplied data is usable only where its series converges.
    bool builtin() const { return kind_ != Kind::User; }
    // Stable name used for cache directories and report labels.
    const std::string& id() const { return id_; }

    Complex coefficient(std::uint64_t n) const;
    // Largest n for which coefficient(n) is available (unbounded for built-ins).
    std::uint64_t coefficient_limit() const;
    const DirichletCharacter& character() const;

    friend LFunctionDescriptor zeta_descriptor();
    friend LFunctionDescriptor dirichlet_descriptor(const DirichletCharacter& chi);
    friend LFunctionDescriptor user_descriptor(std::string id, int degree, std::int64_t conductor,
                                               std::vector<Complex> spectral_params,
                                               Complex root_number, double ramanujan_exponent,
                                               int pole_order, bool self_dual,
                                               std::shared_ptr<const CoefficientSource> source);

private:
    LFunctionDescriptor() = default;

    Kind kind_ = Kind::Zeta;
    std::string id_;
    int degree_ = 1;
    std::int64_t conductor_ = 1;
    std::vector<Complex> mu_;
    Complex kappa_{1.0, 0.0};
    double theta_ = 0.0;
    int pole_order_ = 0;
    bool self_dual_ = true;
    DirichletCharacter chi_;  // meaningful only for Kind::Dirichlet
    std::shared_ptr<const CoefficientSource> source_;
};

LFunctionDescriptor zeta_descriptor();
LFunctionDescriptor dirichlet_descriptor(const DirichletCharacter& chi);
LFunctionDescriptor user_descriptor(std::string id, int degree, std::int64_t conductor,
                                    std::vector<Complex> spectral_params, Complex root_number,
                                    double ramanujan_exponent, int pole_order, bool self_dual,
                                    std::shared_ptr<const CoefficientSource> source);

struct ValueWithBound {
    Complex value;
    double bound;  // certified absolute error of value
};

// L(s). Built-in instances evaluate anywhere (Hurwitz-zeta continuation);
// user-supplied data must satisfy Re s > 1 + theta + 0.05.
Complex evaluate_l(const LFunctionDescriptor& d, Complex s);
ValueWithBound evaluate_l_with_bound(const LFunctionDescriptor& d, Complex s);

// Completed function N^{s/2} prod_j GammaR(s + mu_j) L(s).
Complex evaluate_completed(const LFunctionDescriptor& d, Complex s);

// L'/L(s). Built-ins differentiate the continuation directly; user data falls
// back to the certified prime-power series (same gate as above).
Complex log_derivative(const LFunctionDescriptor& d, Complex s);
// Prime-power series mode regardless of instance, truncated so the discarded
// tail is below 1e-10. Requires Re s large enough for that certificate.
Complex log_derivative_series(const LFunctionDescriptor& d, Complex s);

// Coefficient of -L'/L: lambda_pi(p^k) = sum_j alpha_j(p)^k log p, zero off
// prime powers. Recovered from the lambda values by Newton's identities.
Complex lambda_pi(const LFunctionDescriptor& d, std::uint64_t n);

// N * prod_j (|it + mu_j| + 3).
double analytic_conductor(const LFunctionDescriptor& d, double t);

// Local factor at p written as prod_j (1 - alpha_j x): polynomial coefficients
// in x, constant term 1, degree at most m.
std::vector<Complex> euler_factor(const LFunctionDescriptor& d, std::uint64_t p);
// The inverse roots alpha_j themselves, zero-padded to length m when the local
// degree drops (ramified p).
std::vector<Complex> euler_roots(const LFunctionDescriptor& d, std::uint64_t p);

}  // namespace argonaut
