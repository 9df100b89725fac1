#pragma once

// Internal first-order solver for convex minimization over the convex hull of
// finitely many nonnegative weight vectors. Shared by the maximum entropy
// solver and both information projections; not part of the installed API.

#include <cstddef>
#include <vector>

namespace infomeas::detail {

/// Convex objective f over measures x (dense nonnegative weight vectors).
/// Gradients may be infinite at the boundary of the nonnegative orthant; the
/// solver handles the resulting infinities explicitly.
class HullObjective {
public:
    virtual ~HullObjective() = default;

    virtual double value(const std::vector<double>& x) const = 0;

    /// Per-coordinate gradient at x.
    virtual void gradient(const std::vector<double>& x, std::vector<double>& g) const = 0;

    /// Hessian in the form diag(d) + rho * 1 1^T, which covers every
    /// objective in this library. Coordinates with d = +inf are only ever
    /// multiplied by zero vertex weights.
    virtual void hessian(const std::vector<double>& x, std::vector<double>& diag,
                         double& rho) const = 0;
};

struct HullSolverOptions {
    double tol = 1e-9;       // duality-gap target, absolute (nats)
    int max_iter = 10000;    // first-order iterations
    bool use_away_steps = true;
    bool polish = true;      // Newton refinement on the identified support
    int line_search_iters = 60;
    std::size_t init_vertex = static_cast<std::size_t>(-1);  // -1 = uniform start
};

struct HullSolverResult {
    std::vector<double> p;       // mixture weights over the vertices
    std::vector<double> x;       // = sum_i p[i] * vertices[i]
    double value = 0.0;          // objective at x
    double gap = 0.0;            // final duality gap (certified upper bound)
    std::vector<double> scores;  // <grad f(x), v_i> per vertex at return
    double x_score = 0.0;        // <grad f(x), x> at return
    int iterations = 0;
    bool converged = false;
};

/// Frank-Wolfe with away steps and exact (bisection) line search, plus an
/// optional equality-constrained Newton polish once the active set settles.
/// The linear oracle breaks ties toward the lowest vertex index. Vertices
/// must share the coordinate dimension; the hull must contain at least one
/// point with finite objective or the result reports gap/value of +inf.
HullSolverResult minimize_over_hull(const HullObjective& objective,
                                    const std::vector<std::vector<double>>& vertices,
                                    const HullSolverOptions& options);

}  // namespace infomeas::detail
