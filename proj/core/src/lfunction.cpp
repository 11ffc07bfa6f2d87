#include "argonaut/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "argonaut/errors.hpp"

namespace argonaut {

namespace {

constexpr double kUserGateMargin = 0.05;

bool conjugation_closed(const std::vector<Complex>& mu) {
    std::vector<bool> used(mu.size(), false);
    for (const Complex& m : mu) {
        const Complex target = std::conj(m);
        bool found = false;
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (!used[j] && std::abs(mu[j] - target) <= 1e-9) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Complex horner(const std::vector<Complex>& c, Complex x) {
    Complex v{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

// Durand-Kerner on a polynomial given by coefficients c[k] of x^k, c.back() != 0.
std::vector<Complex> poly_roots(const std::vector<Complex>& c) {
    const int n = int(c.size()) - 1;
    if (n <= 0) return {};
    std::vector<Complex> a(c);
    for (Complex& v : a) v /= c[std::size_t(n)];
    std::vector<Complex> x(std::size_t(n), Complex{0.0, 0.0});
    const Complex seed{0.4, 0.9};
    Complex cur{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        cur *= seed;
        x[std::size_t(i)] = cur;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex den{1.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i) den *= x[std::size_t(i)] - x[std::size_t(j)];
            if (std::abs(den) < 1e-300) den = Complex(1e-300, 0.0);
            const Complex step = horner(a, x[std::size_t(i)]) / den;
            x[std::size_t(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return x;
}

// lambda(p^0 .. p^kmax); stops early if p^k exceeds the coefficient range.
std::vector<Complex> local_h(const LFunctionDescriptor& d, std::uint64_t p, int kmax) {
    std::vector<Complex> h;
    h.reserve(std::size_t(kmax) + 1);
    h.emplace_back(1.0, 0.0);
    const std::uint64_t limit = d.coefficient_limit();
    std::uint64_t pk = 1;
    for (int k = 1; k <= kmax; ++k) {
        if (pk > limit / p) break;
        pk *= p;
        h.push_back(d.coefficient(pk));
    }
    return h;
}

// Power sums sum_j alpha_j(p)^k for k = 1..kmax, via Newton's identities from
// the complete homogeneous values h_i = lambda(p^i).
std::vector<Complex> local_power_sums(const LFunctionDescriptor& d, std::uint64_t p, int kmax) {
    std::vector<Complex> ps(std::size_t(kmax) + 1, Complex(0.0, 0.0));
    switch (d.kind()) {
        case LFunctionDescriptor::Kind::Zeta:
            for (int k = 1; k <= kmax; ++k) ps[std::size_t(k)] = Complex(1.0, 0.0);
            return ps;
        case LFunctionDescriptor::Kind::Dirichlet: {
            const Complex cp = d.character()(p);
            Complex pw{1.0, 0.0};
            for (int k = 1; k <= kmax; ++k) {
                pw *= cp;
                ps[std::size_t(k)] = pw;
            }
            return ps;
        }
        case LFunctionDescriptor::Kind::User:
            break;
    }
    const std::vector<Complex> h = local_h(d, p, kmax);
    const int avail = int(h.size()) - 1;
    for (int k = 1; k <= std::min(kmax, avail); ++k) {
        Complex acc = double(k) * h[std::size_t(k)];
        for (int i = 1; i < k; ++i) acc -= ps[std::size_t(i)] * h[std::size_t(k - i)];
        ps[std::size_t(k)] = acc;
    }
    return ps;
}

double real_zeta(double x) { return hurwitz_zeta(Complex(x, 0.0), 1.0).real(); }

// Tail of sum_{n > X} log(n) n^{-beta} by comparison with the integral.
double log_weighted_tail(double x, double beta) {
    const double b1 = beta - 1.0;
    return std::pow(x, -b1) * (std::log(x) / b1 + 1.0 / (b1 * b1));
}

void check_common(const LFunctionDescriptor& d) {
    if (d.degree() < 1) throw Error("descriptor: degree must be positive");
    if (d.conductor() < 1) throw Error("descriptor: conductor must be positive");
    if (int(d.spectral_params().size()) != d.degree())
        throw Error("descriptor: need exactly one spectral parameter per degree");
    if (std::abs(std::abs(d.root_number()) - 1.0) > 1e-12)
        throw Error("descriptor: root number must have unit modulus");
    if (d.ramanujan_exponent() < 0.0 || d.ramanujan_exponent() > 1.0)
        throw Error("descriptor: coefficient bound exponent must lie in [0, 1]");
    if (d.pole_order() < 0 || d.pole_order() > d.degree())
        throw Error("descriptor: pole order must lie in [0, degree]");
    for (const Complex& m : d.spectral_params())
        if (!(m.real() > -1.0))
            throw Error("descriptor: spectral parameters must have real part > -1");
    if (!conjugation_closed(d.spectral_params()))
        throw Error("descriptor: spectral parameters must be closed under conjugation");
}

// Sampled structural checks on user coefficient data: lambda(1) = 1, local
// factors of the declared degree, inverse roots within the p^theta bound.
void check_user_coefficients(const LFunctionDescriptor& d) {
    if (std::abs(d.coefficient(1) - Complex(1.0, 0.0)) > 1e-9)
        throw Error("descriptor: lambda(1) must equal 1");
    const int m = d.degree();
    const std::uint64_t cap = 100;
    for (std::uint32_t p : primes_up_to(cap)) {
        // Largest k with p^k inside the available coefficient range, up to m+2.
        const std::vector<Complex> h = local_h(d, p, m + 2);
        const int avail = int(h.size()) - 1;
        if (avail < m) continue;
        std::vector<Complex> c(std::size_t(avail) + 1, Complex(0.0, 0.0));
        c[0] = Complex(1.0, 0.0);
        for (int k = 1; k <= avail; ++k) {
            Complex acc{0.0, 0.0};
            for (int i = 1; i <= k; ++i) acc += h[std::size_t(i)] * c[std::size_t(k - i)];
            c[std::size_t(k)] = -acc;
        }
        double cmax = 1.0;
        for (const Complex& v : c) cmax = std::max(cmax, std::abs(v));
        for (int k = m + 1; k <= avail; ++k) {
            if (std::abs(c[std::size_t(k)]) > 1e-6 * cmax) {
                std::ostringstream os;
                os << "descriptor: local factor at p = " << p
                   << " exceeds the declared degree";
                throw Error(os.str());
            }
        }
        std::vector<Complex> trimmed(c.begin(), c.begin() + m + 1);
        while (trimmed.size() > 1 && std::abs(trimmed.back()) <= 1e-9 * cmax) trimmed.pop_back();
        const double limit = std::pow(double(p), d.ramanujan_exponent()) * (1.0 + 1e-8) + 1e-9;
        for (const Complex& x : poly_roots(trimmed)) {
            const double alpha = 1.0 / std::abs(x);
            if (alpha > limit) {
                std::ostringstream os;
                os << "descriptor: Euler root at p = " << p << " has modulus " << alpha
                   << ", above the p^theta bound " << limit;
                throw Error(os.str());
            }
        }
    }
}

}  // namespace

Complex LFunctionDescriptor::coefficient(std::uint64_t n) const {
    if (n == 0) throw Error("coefficient index must be positive");
    switch (kind_) {
        case Kind::Zeta:
            return Complex(1.0, 0.0);
        case Kind::Dirichlet:
            return chi_(n);
        case Kind::User:
            if (n > source_->max_index()) {
                std::ostringstream os;
                os << "coefficient " << n << " beyond available range " << source_->max_index();
                throw IncompleteTable(os.str());
            }
            return source_->lambda(n);
    }
    throw Error("unreachable");
}

std::uint64_t LFunctionDescriptor::coefficient_limit() const {
    if (kind_ == Kind::User) return source_->max_index();
    return std::numeric_limits<std::uint64_t>::max();
}

const DirichletCharacter& LFunctionDescriptor::character() const {
    if (kind_ != Kind::Dirichlet) throw Error("descriptor carries no character");
    return chi_;
}

LFunctionDescriptor zeta_descriptor() {
    LFunctionDescriptor d;
    d.kind_ = LFunctionDescriptor::Kind::Zeta;
    d.id_ = "zeta";
    d.degree_ = 1;
    d.conductor_ = 1;
    d.mu_ = {Complex(0.0, 0.0)};
    d.kappa_ = Complex(1.0, 0.0);
    d.theta_ = 0.0;
    d.pole_order_ = 1;
    d.self_dual_ = true;
    return d;
}

LFunctionDescriptor dirichlet_descriptor(const DirichletCharacter& chi) {
    if (chi.modulus < 3 || !chi.is_primitive())
        throw NotPrimitive("dirichlet_descriptor needs a primitive character of modulus > 2");
    LFunctionDescriptor d;
    d.kind_ = LFunctionDescriptor::Kind::Dirichlet;
    d.degree_ = 1;
    d.conductor_ = chi.modulus;
    const int a = chi.parity();
    d.mu_ = {Complex(double(a), 0.0)};
    const Complex tau = gauss_sum(chi);
    const Complex ia = (a == 0) ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    d.kappa_ = tau / (ia * std::sqrt(double(chi.modulus)));
    d.theta_ = 0.0;
    d.pole_order_ = 0;
    d.self_dual_ = chi.is_real();
    d.chi_ = chi;

    std::ostringstream os;
    os << "dirichlet_" << chi.modulus << "_";
    std::uint32_t index = 0;
    const auto all = primitive_characters(chi.modulus);
    for (std::uint32_t i = 0; i < all.size(); ++i) {
        double diff = 0.0;
        for (std::uint32_t r = 0; r < chi.modulus; ++r)
            diff = std::max(diff, std::abs(all[i].values[r] - chi.values[r]));
        if (diff < 1e-9) {
            index = i + 1;
            break;
        }
    }
    if (index == 0) throw Error("dirichlet_descriptor: character not in enumeration");
    os << index;
    d.id_ = os.str();

    check_common(d);
    return d;
}

LFunctionDescriptor user_descriptor(std::string id, int degree, std::int64_t conductor,
                                    std::vector<Complex> spectral_params, Complex root_number,
                                    double ramanujan_exponent, int pole_order, bool self_dual,
                                    std::shared_ptr<const CoefficientSource> source) {
    if (!source) throw Error("user_descriptor: coefficient source is required");
    if (id.empty()) throw Error("user_descriptor: id must be nonempty");
    LFunctionDescriptor d;
    d.kind_ = LFunctionDescriptor::Kind::User;
    d.id_ = std::move(id);
    d.degree_ = degree;
    d.conductor_ = conductor;
    d.mu_ = std::move(spectral_params);
    d.kappa_ = root_number;
    d.theta_ = ramanujan_exponent;
    d.pole_order_ = pole_order;
    d.self_dual_ = self_dual;
    d.source_ = std::move(source);
    check_common(d);
    check_user_coefficients(d);
    return d;
}

ValueWithBound evaluate_l_with_bound(const LFunctionDescriptor& d, Complex s) {
    switch (d.kind()) {
        case LFunctionDescriptor::Kind::Zeta: {
            const Complex v = hurwitz_zeta(s, 1.0);
            return {v, 1e-12 * (1.0 + std::abs(v))};
        }
        case LFunctionDescriptor::Kind::Dirichlet: {
            // q^{-s} sum_a chi(a) zeta(s, a/q); the deflated evaluations make the
            // pole terms cancel exactly since sum_a chi(a) = 0.
            const DirichletCharacter& chi = d.character();
            const double q = double(chi.modulus);
            Complex acc{0.0, 0.0};
            for (std::uint32_t a = 1; a < chi.modulus; ++a) {
                const Complex ca = chi.values[a];
                if (ca == Complex(0.0, 0.0)) continue;
                acc += ca * hurwitz_zeta_deflated(s, double(a) / q).value;
            }
            const Complex v = std::exp(-s * std::log(q)) * acc;
            return {v, 1e-12 * (1.0 + std::abs(v))};
        }
        case LFunctionDescriptor::Kind::User:
            break;
    }

    // Truncated Dirichlet series with the crude tail bound m d_m(n) n^theta.
    const double sigma = s.real();
    const double theta = d.ramanujan_exponent();
    if (!(sigma > 1.0 + theta + kUserGateMargin))
        throw OutsideConvergence("evaluate_l: need Re s > 1 + theta + margin for this descriptor");
    const int m = d.degree();
    const double eta = (sigma - 1.0 - theta) / 2.0;
    const double zf = real_zeta(sigma - theta - eta);
    const auto tail = [&](double x) { return double(m) * std::pow(x, -eta) * std::pow(zf, m); };

    const std::uint64_t cap = std::min<std::uint64_t>(std::uint64_t(1) << 20, d.coefficient_limit());
    std::uint64_t x = std::min<std::uint64_t>(1024, cap);
    while (tail(double(x)) > 1e-10 && 2 * x <= cap) x *= 2;
    Complex acc{0.0, 0.0};
    for (std::uint64_t n = 1; n <= x; ++n)
        acc += d.coefficient(n) * std::exp(-s * std::log(double(n)));
    return {acc, tail(double(x))};
}

Complex evaluate_l(const LFunctionDescriptor& d, Complex s) {
    const ValueWithBound r = evaluate_l_with_bound(d, s);
    if (r.bound > 1e-6 * (1.0 + std::abs(r.value)))
        throw IncompleteTable("evaluate_l: coefficient range too short to certify the value");
    return r.value;
}

Complex evaluate_completed(const LFunctionDescriptor& d, Complex s) {
    Complex g = 0.5 * s * std::log(double(d.conductor()));
    for (const Complex& mu : d.spectral_params()) g += log_gamma_r(s + mu);
    return std::exp(g) * evaluate_l(d, s);
}

Complex log_derivative(const LFunctionDescriptor& d, Complex s) {
    switch (d.kind()) {
        case LFunctionDescriptor::Kind::Zeta: {
            const ValueAndDerivative r = hurwitz_zeta_with_derivative(s, 1.0);
            if (std::abs(r.value) < 1e-14)
                throw ZeroOrPole("log_derivative: evaluation point sits on a zero");
            return r.derivative / r.value;
        }
        case LFunctionDescriptor::Kind::Dirichlet: {
            const DirichletCharacter& chi = d.character();
            const double q = double(chi.modulus);
            Complex a{0.0, 0.0}, da{0.0, 0.0};
            for (std::uint32_t r = 1; r < chi.modulus; ++r) {
                const Complex cr = chi.values[r];
                if (cr == Complex(0.0, 0.0)) continue;
                const ValueAndDerivative z = hurwitz_zeta_deflated(s, double(r) / q);
                a += cr * z.value;
                da += cr * z.derivative;
            }
            const double lq = std::log(q);
            if (std::abs(std::exp(-s.real() * lq)) * std::abs(a) < 1e-14)
                throw ZeroOrPole("log_derivative: evaluation point sits on a zero");
            return -lq + da / a;
        }
        case LFunctionDescriptor::Kind::User:
            return log_derivative_series(d, s);
    }
    throw Error("unreachable");
}

Complex log_derivative_series(const LFunctionDescriptor& d, Complex s) {
    const double theta = d.ramanujan_exponent();
    const double beta = s.real() - theta;
    if (!(beta > 1.0 + kUserGateMargin))
        throw OutsideConvergence("log_derivative_series: need Re s > 1 + theta + margin");
    const int m = d.degree();
    std::uint64_t x = 1024;
    while (double(m) * log_weighted_tail(double(x), beta) > 1e-10) {
        if (x >= (std::uint64_t(1) << 26))
            throw OutsideConvergence(
                "log_derivative_series: cannot certify the truncation at this abscissa");
        x *= 2;
    }
    if (d.coefficient_limit() < x)
        throw IncompleteTable("log_derivative_series: coefficient range too short to certify");
    Complex acc{0.0, 0.0};
    for (std::uint32_t p : primes_up_to(x)) {
        const double lp = std::log(double(p));
        int kmax = 1;
        std::uint64_t pk = p;
        while (pk <= x / p) {
            pk *= p;
            ++kmax;
        }
        const std::vector<Complex> ps = local_power_sums(d, p, kmax);
        pk = 1;
        for (int k = 1; k <= kmax; ++k) {
            pk *= p;
            acc += ps[std::size_t(k)] * lp * std::exp(-s * std::log(double(pk)));
        }
    }
    return -acc;
}

Complex lambda_pi(const LFunctionDescriptor& d, std::uint64_t n) {
    if (n < 2) return Complex(0.0, 0.0);
    // factor as p^k or bail
    std::uint64_t rem = n;
    std::uint64_t p = 0;
    const auto& primes = primes_up_to(std::uint64_t(std::sqrt(double(n))) + 2);
    for (std::uint32_t q : primes) {
        if (std::uint64_t(q) * q > rem) break;
        if (rem % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) p = rem;  // n itself prime
    int k = 0;
    while (rem % p == 0) {
        rem /= p;
        ++k;
    }
    if (rem != 1) return Complex(0.0, 0.0);
    const std::vector<Complex> ps = local_power_sums(d, p, k);
    return ps[std::size_t(k)] * std::log(double(p));
}

double analytic_conductor(const LFunctionDescriptor& d, double t) {
    double c = double(d.conductor());
    for (const Complex& mu : d.spectral_params()) c *= std::abs(Complex(0.0, t) + mu) + 3.0;
    return c;
}

std::vector<Complex> euler_factor(const LFunctionDescriptor& d, std::uint64_t p) {
    const int m = d.degree();
    const std::vector<Complex> h = local_h(d, p, m);
    if (int(h.size()) - 1 < m)
        throw IncompleteTable("euler_factor: coefficient range too short for this prime");
    std::vector<Complex> c(std::size_t(m) + 1, Complex(0.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= m; ++k) {
        Complex acc{0.0, 0.0};
        for (int i = 1; i <= k; ++i) acc += h[std::size_t(i)] * c[std::size_t(k - i)];
        c[std::size_t(k)] = -acc;
    }
    return c;
}

std::vector<Complex> euler_roots(const LFunctionDescriptor& d, std::uint64_t p) {
    const int m = d.degree();
    std::vector<Complex> c = euler_factor(d, p);
    double cmax = 1.0;
    for (const Complex& v : c) cmax = std::max(cmax, std::abs(v));
    while (c.size() > 1 && std::abs(c.back()) <= 1e-9 * cmax) c.pop_back();
    std::vector<Complex> roots;
    for (const Complex& x : poly_roots(c)) roots.push_back(Complex(1.0, 0.0) / x);
    while (int(roots.size()) < m) roots.emplace_back(0.0, 0.0);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace argonaut
