#pragma once

#include <cstddef>
#include <vector>

namespace argonaut {

/// Abstract view of a linear program  minimize c.x  subject to  A x <= b.
/// Implementations can exploit row structure to assemble the interior-point
/// normal matrix cheaply.
class LpProblem {
  public:
    virtual ~LpProblem() = default;
    virtual std::size_t rows() const = 0;
    virtual std::size_t cols() const = 0;
    virtual const std::vector<double>& bound() const = 0;      // b
    virtual const std::vector<double>& objective() const = 0;  // c
    virtual void mat_vec(const std::vector<double>& x, std::vector<double>& out) const = 0;
    virtual void t_mat_vec(const std::vector<double>& y, std::vector<double>& out) const = 0;
    /// Writes A^T diag(d) A into out (n x n row-major, lower triangle filled).
    virtual void normal_matrix(const std::vector<double>& d,
                               std::vector<double>& out) const = 0;
};

/// Dense linear program storage.
struct LinearProgram {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;  // row-major, rows x cols
    std::vector<double> b;
    std::vector<double> c;

    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct LpSolution {
    std::vector<double> x;
    std::vector<double> dual;  // multipliers for the rows, nonnegative
    double objective = 0.0;
    int iterations = 0;
};

/// Mehrotra predictor-corrector interior-point solve.  Throws Infeasible
/// when the iteration diverges or stalls on an inconsistent program.
LpSolution solve_lp(const LpProblem& problem);

/// Dense convenience overload; equilibrates rows and columns first.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace argonaut
