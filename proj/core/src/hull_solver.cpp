#include "hull_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace infomeas::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// <g, v> with the convention inf * 0 = 0. A single +inf term dominates any
// -inf term: it marks a direction along which the objective blows up.
double inner(const std::vector<double>& g, const std::vector<double>& v) {
    double sum = 0.0;
    bool pos = false, neg = false;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] == 0.0) continue;
        const double t = g[a] * v[a];
        if (t == kInf) {
            pos = true;
        } else if (t == -kInf) {
            neg = true;
        } else {
            sum += t;
        }
    }
    if (pos) return kInf;
    if (neg) return -kInf;
    return sum;
}

std::vector<double> combine(const std::vector<std::vector<double>>& vertices,
                            const std::vector<double>& p) {
    std::vector<double> x(vertices[0].size(), 0.0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (p[i] == 0.0) continue;
        for (std::size_t a = 0; a < x.size(); ++a) x[a] += p[i] * vertices[i][a];
    }
    for (double& w : x) {
        if (w < 0.0) w = 0.0;
    }
    return x;
}

// phi'(t) for phi(t) = f(x + t d); handles boundary infinities.
double directional_derivative(const HullObjective& objective,
                              const std::vector<double>& x, const std::vector<double>& d,
                              double t, std::vector<double>& point,
                              std::vector<double>& grad) {
    point.resize(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        point[a] = x[a] + t * d[a];
        if (point[a] < 0.0) point[a] = 0.0;
    }
    objective.gradient(point, grad);
    return inner(grad, d);
}

// Exact line search by bisection on the monotone derivative of the convex
// one-dimensional restriction.
double line_search(const HullObjective& objective, const std::vector<double>& x,
                   const std::vector<double>& d, double t_max, int iters) {
    std::vector<double> point, grad;
    if (directional_derivative(objective, x, d, t_max, point, grad) <= 0.0) {
        return t_max;
    }
    double lo = 0.0, hi = t_max;
    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (directional_derivative(objective, x, d, mid, point, grad) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void renormalize(std::vector<double>& p) {
    double sum = 0.0;
    for (double& w : p) {
        if (w < 0.0) w = 0.0;
        sum += w;
    }
    if (sum > 0.0) {
        for (double& w : p) w /= sum;
    }
}

// Solves the dense linear system A z = b in place by Gaussian elimination
// with partial pivoting. Returns false on a vanishing pivot.
bool solve_linear(std::vector<std::vector<double>>& A, std::vector<double>& b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
        }
        if (std::abs(A[pivot][col]) < 1e-300) return false;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = A[r][col] / A[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (std::size_t row = n; row-- > 0;) {
        double acc = b[row];
        for (std::size_t c = row + 1; c < n; ++c) acc -= A[row][c] * b[c];
        b[row] = acc / A[row][row];
        if (!std::isfinite(b[row])) return false;
    }
    return true;
}

// Equality-constrained Newton refinement over the currently active vertices.
// Each accepted step strictly decreases the objective; returns true if any
// step was accepted. Leaves p, x, fx consistent.
bool newton_polish(const HullObjective& objective,
                   const std::vector<std::vector<double>>& vertices,
                   std::vector<double>& p, std::vector<double>& x, double& fx) {
    const std::size_t n = x.size();
    bool improved_any = false;
    std::vector<double> grad, hess_diag;

    for (int round = 0; round < 25; ++round) {
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] > 0.0) active.push_back(i);
        }
        const std::size_t k = active.size();
        if (k < 2) return improved_any;

        objective.gradient(x, grad);
        double rho = 0.0;
        objective.hessian(x, hess_diag, rho);

        std::vector<double> score(k, 0.0), mass(k, 0.0);
        for (std::size_t ii = 0; ii < k; ++ii) {
            const auto& v = vertices[active[ii]];
            score[ii] = inner(grad, v);
            for (double w : v) mass[ii] += w;
            if (!std::isfinite(score[ii])) return improved_any;
        }

        // KKT system [H 1; 1^T 0] [dp; lambda] = [-score; 0] over the active set,
        // H = B^T diag(hess_diag) B + rho m m^T. Coordinates where x vanishes are
        // untouched by active vertices and are skipped.
        std::vector<std::vector<double>> A(k + 1, std::vector<double>(k + 1, 0.0));
        for (std::size_t a = 0; a < n; ++a) {
            if (x[a] <= 0.0) continue;
            const double da = hess_diag[a];
            for (std::size_t ii = 0; ii < k; ++ii) {
                const double via = vertices[active[ii]][a];
                if (via == 0.0) continue;
                for (std::size_t jj = ii; jj < k; ++jj) {
                    A[ii][jj] += da * via * vertices[active[jj]][a];
                }
            }
        }
        for (std::size_t ii = 0; ii < k; ++ii) {
            for (std::size_t jj = ii; jj < k; ++jj) {
                A[ii][jj] += rho * mass[ii] * mass[jj];
                A[jj][ii] = A[ii][jj];
            }
        }
        double trace = 0.0;
        for (std::size_t ii = 0; ii < k; ++ii) trace += std::abs(A[ii][ii]);
        double damping = 1e-13 * (trace / static_cast<double>(k) + 1.0);

        std::vector<double> step;
        bool solved = false;
        for (int attempt = 0; attempt < 4 && !solved; ++attempt) {
            auto M = A;
            for (std::size_t ii = 0; ii < k; ++ii) {
                M[ii][ii] += damping;
                M[ii][k] = 1.0;
                M[k][ii] = 1.0;
            }
            M[k][k] = 0.0;
            std::vector<double> rhs(k + 1, 0.0);
            for (std::size_t ii = 0; ii < k; ++ii) rhs[ii] = -score[ii];
            if (solve_linear(M, rhs)) {
                step.assign(rhs.begin(), rhs.begin() + k);
                solved = true;
            } else {
                damping *= 1e4;
            }
        }
        if (!solved) return improved_any;

        // Longest feasible move, then backtrack until the objective drops.
        double t_max = 1.0;
        for (std::size_t ii = 0; ii < k; ++ii) {
            if (step[ii] < 0.0) t_max = std::min(t_max, -p[active[ii]] / step[ii]);
        }
        if (!(t_max > 0.0)) return improved_any;

        bool accepted = false;
        double t = t_max;
        for (int half = 0; half < 30 && !accepted; ++half, t *= 0.5) {
            std::vector<double> p_try = p;
            for (std::size_t ii = 0; ii < k; ++ii) {
                p_try[active[ii]] = std::max(0.0, p[active[ii]] + t * step[ii]);
            }
            renormalize(p_try);
            std::vector<double> x_try = combine(vertices, p_try);
            const double f_try = objective.value(x_try);
            if (f_try < fx) {
                const double gain = fx - f_try;
                p = std::move(p_try);
                x = std::move(x_try);
                fx = f_try;
                accepted = true;
                improved_any = true;
                if (gain <= 1e-16 * (1.0 + std::abs(fx))) return improved_any;
            }
        }
        if (!accepted) return improved_any;
    }
    return improved_any;
}

}  // namespace

HullSolverResult minimize_over_hull(const HullObjective& objective,
                                    const std::vector<std::vector<double>>& vertices,
                                    const HullSolverOptions& options) {
    if (vertices.empty()) {
        throw std::invalid_argument("hull solver requires at least one vertex");
    }
    const std::size_t k = vertices.size();

    std::vector<double> p(k, 0.0);
    if (options.init_vertex == static_cast<std::size_t>(-1)) {
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(k));
    } else {
        p.at(options.init_vertex) = 1.0;
    }

    std::vector<double> x = combine(vertices, p);
    double fx = objective.value(x);

    std::vector<double> grad, scores(k, 0.0);
    double x_score = 0.0;
    double gap = kInf;
    int iter = 0;

    auto refresh_scores = [&]() {
        objective.gradient(x, grad);
        x_score = inner(grad, x);
        std::size_t toward = 0;
        for (std::size_t i = 0; i < k; ++i) {
            scores[i] = inner(grad, vertices[i]);
            if (scores[i] < scores[toward]) toward = i;  // ties keep lowest index
        }
        gap = x_score - scores[toward];
        if (gap < 0.0) gap = 0.0;  // rounding: min_i <g,v_i> <= <g,x> always
        return toward;
    };

    std::size_t toward = refresh_scores();

    for (; iter < options.max_iter && gap > options.tol; ++iter) {
        // Away direction: worst active vertex.
        std::size_t away = k;
        if (options.use_away_steps) {
            for (std::size_t i = 0; i < k; ++i) {
                if (p[i] > 0.0 && (away == k || scores[i] > scores[away])) away = i;
            }
        }

        const double fw_improve = gap;
        const double away_improve =
            (away < k && p[away] < 1.0) ? scores[away] - x_score : -kInf;

        std::vector<double> direction(x.size());
        double t_max = 1.0;
        if (away_improve > fw_improve) {
            for (std::size_t a = 0; a < x.size(); ++a) {
                direction[a] = x[a] - vertices[away][a];
            }
            t_max = p[away] / (1.0 - p[away]);
        } else {
            away = k;
            for (std::size_t a = 0; a < x.size(); ++a) {
                direction[a] = vertices[toward][a] - x[a];
            }
        }

        const double t =
            line_search(objective, x, direction, t_max, options.line_search_iters);
        if (t <= 0.0) break;  // numerically stuck; the polish below may still finish

        if (away < k) {
            for (double& w : p) w *= 1.0 + t;
            p[away] -= t;
            if (p[away] < 1e-15 * (1.0 + t)) p[away] = 0.0;  // drop step
        } else {
            for (double& w : p) w *= 1.0 - t;
            p[toward] += t;
        }
        renormalize(p);
        x = combine(vertices, p);
        const double f_next = objective.value(x);
        assert(f_next <= fx + 1e-9 * (1.0 + std::abs(fx)));
        fx = f_next;

        toward = refresh_scores();

        const bool near = gap <= 1e3 * options.tol;
        if (options.polish && gap > options.tol && (near || (iter + 1) % 32 == 0)) {
            if (newton_polish(objective, vertices, p, x, fx)) {
                toward = refresh_scores();
            }
        }
    }

    if (gap > options.tol && options.polish) {
        if (newton_polish(objective, vertices, p, x, fx)) {
            toward = refresh_scores();
        }
    }

    HullSolverResult result;
    result.p = std::move(p);
    result.x = std::move(x);
    result.value = fx;
    result.gap = gap;
    result.scores = scores;
    result.x_score = x_score;
    result.iterations = iter;
    result.converged = gap <= options.tol;
    return result;
}

}  // namespace infomeas::detail
