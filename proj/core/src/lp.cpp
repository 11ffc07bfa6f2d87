#include "argonaut/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "argonaut/errors.hpp"

namespace argonaut {

namespace {

// In-place dense Cholesky of the lower triangle of m (n x n, row-major).
bool cholesky(std::vector<double>& m, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = m[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k];
        if (!(d > 0.0)) return false;
        const double r = std::sqrt(d);
        m[j * n + j] = r;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = m[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= m[i * n + k] * m[j * n + k];
            m[i * n + j] = v / r;
        }
    }
    return true;
}

void cholesky_solve(const std::vector<double>& l, std::size_t n, std::vector<double>& rhs) {
    for (std::size_t i = 0; i < n; ++i) {
        double v = rhs[i];
        for (std::size_t k = 0; k < i; ++k) v -= l[i * n + k] * rhs[k];
        rhs[i] = v / l[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double v = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) v -= l[k * n + ii] * rhs[k];
        rhs[ii] = v / l[ii * n + ii];
    }
}

double step_to_boundary(const std::vector<double>& v, const std::vector<double>& dv) {
    double alpha = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
    return alpha;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Dense adapter, optionally holding equilibrated copies of the program.
class DenseView final : public LpProblem {
  public:
    std::size_t nrows = 0, ncols = 0;
    std::vector<double> a, b, c;

    std::size_t rows() const override { return nrows; }
    std::size_t cols() const override { return ncols; }
    const std::vector<double>& bound() const override { return b; }
    const std::vector<double>& objective() const override { return c; }

    void mat_vec(const std::vector<double>& x, std::vector<double>& out) const override {
        out.assign(nrows, 0.0);
        for (std::size_t i = 0; i < nrows; ++i) {
            double acc = 0.0;
            const double* row = &a[i * ncols];
            for (std::size_t j = 0; j < ncols; ++j) acc += row[j] * x[j];
            out[i] = acc;
        }
    }
    void t_mat_vec(const std::vector<double>& y, std::vector<double>& out) const override {
        out.assign(ncols, 0.0);
        for (std::size_t i = 0; i < nrows; ++i) {
            const double w = y[i];
            if (w == 0.0) continue;
            const double* row = &a[i * ncols];
            for (std::size_t j = 0; j < ncols; ++j) out[j] += w * row[j];
        }
    }
    void normal_matrix(const std::vector<double>& d, std::vector<double>& out) const override {
        out.assign(ncols * ncols, 0.0);
        for (std::size_t i = 0; i < nrows; ++i) {
            const double w = d[i];
            const double* row = &a[i * ncols];
            for (std::size_t j = 0; j < ncols; ++j) {
                const double wj = w * row[j];
                if (wj == 0.0) continue;
                double* o = &out[j * ncols];
                for (std::size_t k = 0; k <= j; ++k) o[k] += wj * row[k];
            }
        }
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
    const std::size_t m = problem.rows(), n = problem.cols();
    if (m == 0 || n == 0) throw Error("solve_lp: empty program");
    const std::vector<double>& b = problem.bound();
    const std::vector<double>& c = problem.objective();
    const double bnorm = 1.0 + inf_norm(b), cnorm = 1.0 + inf_norm(c);

    std::vector<double> x(n, 0.0), y(m, 1.0), s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = std::max(1.0, std::abs(b[i]));

    std::vector<double> rp(m), rd(n), d(m), t(m), rhs(n), resid(n);
    std::vector<double> dx(n), dy(m), ds(m), dxa(n), dya(m), dsa(m), ax(m), aty(n);
    std::vector<double> nm, fact;

    // Newton solve for complementarity target rc, reusing the factorization;
    // one pass of iterative refinement against the unfactored normal matrix.
    auto newton = [&](const std::vector<double>& rc, std::vector<double>& ox,
                      std::vector<double>& oy, std::vector<double>& os) {
        for (std::size_t i = 0; i < m; ++i) t[i] = d[i] * (rp[i] - rc[i] / y[i]);
        problem.t_mat_vec(t, rhs);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = -rd[j] - rhs[j];
        ox = rhs;
        cholesky_solve(fact, n, ox);
        for (std::size_t j = 0; j < n; ++j) {
            double acc = -rhs[j];
            for (std::size_t k = 0; k < n; ++k)
                acc += nm[std::max(j, k) * n + std::min(j, k)] * ox[k];
            resid[j] = -acc;
        }
        cholesky_solve(fact, n, resid);
        for (std::size_t j = 0; j < n; ++j) ox[j] += resid[j];
        problem.mat_vec(ox, ax);
        for (std::size_t i = 0; i < m; ++i) {
            oy[i] = d[i] * (ax[i] + rp[i] - rc[i] / y[i]);
            os[i] = -rc[i] / y[i] - (s[i] / y[i]) * oy[i];
        }
    };

    double mu = 0.0;
    int iter = 0;
    const int max_iter = 200;
    double best_mu = std::numeric_limits<double>::infinity();
    double snap_quality = std::numeric_limits<double>::infinity();
    std::vector<double> snap_x, snap_y;
    int stall = 0;
    bool converged = false;

    for (; iter < max_iter; ++iter) {
        problem.mat_vec(x, ax);
        for (std::size_t i = 0; i < m; ++i) rp[i] = ax[i] + s[i] - b[i];
        problem.t_mat_vec(y, aty);
        for (std::size_t j = 0; j < n; ++j) rd[j] = c[j] + aty[j];
        mu = 0.0;
        for (std::size_t i = 0; i < m; ++i) mu += y[i] * s[i];
        mu /= double(m);

        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += c[j] * x[j];
        const double rpn = inf_norm(rp), rdn = inf_norm(rd);
        if ((rpn < 1e-9 * bnorm && rdn < 1e-9 * cnorm && mu < 1e-10 * (1.0 + std::abs(obj))) ||
            (rpn < 1e-8 * bnorm && rdn < 1e-6 * cnorm && mu < 1e-9 * (1.0 + std::abs(obj)))) {
            converged = true;
            break;
        }
        // Keep the cleanest iterate seen; the endgame of the interior-point
        // iteration can blow up after the solution is already usable.
        if (rpn < 1e-7 * bnorm && rdn < 1e-4 * cnorm && mu < snap_quality) {
            snap_quality = mu;
            snap_x = x;
            snap_y = y;
        }

        if (mu < 0.999 * best_mu) {
            best_mu = mu;
            stall = 0;
        } else if (++stall > 15) {
            break;
        }
        if (inf_norm(y) > 1e12 * bnorm || inf_norm(x) > 1e12) break;

        for (std::size_t i = 0; i < m; ++i)
            d[i] = std::clamp(y[i] / s[i], 1e-14, 1e14);

        problem.normal_matrix(d, nm);
        double dmax = 0.0;
        for (std::size_t j = 0; j < n; ++j) dmax = std::max(dmax, nm[j * n + j]);
        double ridge = 0.0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            fact = nm;
            if (ridge > 0.0)
                for (std::size_t j = 0; j < n; ++j) fact[j * n + j] += ridge;
            if (cholesky(fact, n)) break;
            ridge = (ridge == 0.0) ? 1e-12 * dmax : ridge * 100.0;
            if (attempt == 7) throw Infeasible("solve_lp: normal matrix not factorizable");
        }

        // Affine-scaling predictor.
        std::vector<double> rc(m);
        for (std::size_t i = 0; i < m; ++i) rc[i] = y[i] * s[i];
        newton(rc, dxa, dya, dsa);
        const double apa = step_to_boundary(s, dsa), ada = step_to_boundary(y, dya);
        double mu_aff = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            mu_aff += (y[i] + ada * dya[i]) * (s[i] + apa * dsa[i]);
        mu_aff /= double(m);
        const double ratio = mu_aff / std::max(mu, 1e-300);
        const double sigma = std::clamp(ratio * ratio * ratio, 1e-8, 1.0);

        // Corrector with centering.
        for (std::size_t i = 0; i < m; ++i)
            rc[i] = y[i] * s[i] + dya[i] * dsa[i] - sigma * mu;
        newton(rc, dx, dy, ds);

        const double eta = (mu > 1e-6) ? 0.995 : 0.9995;
        const double ap = std::min(1.0, eta * step_to_boundary(s, ds));
        const double ad = std::min(1.0, eta * step_to_boundary(y, dy));
        for (std::size_t j = 0; j < n; ++j) x[j] += ap * dx[j];
        for (std::size_t i = 0; i < m; ++i) {
            s[i] += ap * ds[i];
            y[i] += ad * dy[i];
        }
    }
    if (!converged) {
        double ref = 1.0;
        for (std::size_t j = 0; j < n && !snap_x.empty(); ++j) ref += c[j] * snap_x[j];
        if (!snap_x.empty() && snap_quality < 1e-6 * std::abs(ref)) {
            x = snap_x;
            y = snap_y;
        } else {
            throw Infeasible("solve_lp: no convergence, program likely infeasible");
        }
    }

    LpSolution sol;
    sol.x = x;
    sol.dual = y;
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * x[j];
    sol.iterations = iter;
    return sol;
}

LpSolution solve_lp(const LinearProgram& lp) {
    const std::size_t m = lp.rows, n = lp.cols;
    if (m == 0 || n == 0 || lp.a.size() != m * n || lp.b.size() != m || lp.c.size() != n)
        throw Error("solve_lp: inconsistent program dimensions");

    // Equilibrate rows then columns toward unit inf-norm.  Scale factors are
    // clamped so nearly-empty rows cannot be amplified into noise.
    double amax = 0.0;
    for (double v : lp.a) amax = std::max(amax, std::abs(v));
    if (amax == 0.0) throw Error("solve_lp: zero constraint matrix");
    std::vector<double> rs(m, 1.0), cs(n, 1.0);
    DenseView dv;
    dv.nrows = m;
    dv.ncols = n;
    dv.a = lp.a;
    for (std::size_t i = 0; i < m; ++i) {
        double mx = 0.0;
        for (std::size_t j = 0; j < n; ++j) mx = std::max(mx, std::abs(dv.a[i * n + j]));
        if (mx == 0.0 && lp.b[i] < 0.0)
            throw Infeasible("solve_lp: zero row with negative bound");
        rs[i] = 1.0 / std::max(mx, 1e-8 * amax);
        for (std::size_t j = 0; j < n; ++j) dv.a[i * n + j] *= rs[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        double mx = 0.0;
        for (std::size_t i = 0; i < m; ++i) mx = std::max(mx, std::abs(dv.a[i * n + j]));
        cs[j] = 1.0 / std::max(mx, 1e-8);
        for (std::size_t i = 0; i < m; ++i) dv.a[i * n + j] *= cs[j];
    }
    dv.b.resize(m);
    dv.c.resize(n);
    for (std::size_t i = 0; i < m; ++i) dv.b[i] = lp.b[i] * rs[i];
    for (std::size_t j = 0; j < n; ++j) dv.c[j] = lp.c[j] * cs[j];

    LpSolution sol = solve_lp(static_cast<const LpProblem&>(dv));
    for (std::size_t j = 0; j < n; ++j) sol.x[j] *= cs[j];
    for (std::size_t i = 0; i < m; ++i) sol.dual[i] *= rs[i];
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += lp.c[j] * sol.x[j];
    return sol;
}

}  // namespace argonaut
