#include "infomeas/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "infomeas/coding.hpp"
#include "infomeas/divergence.hpp"
#include "hull_solver.hpp"

namespace infomeas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Negative entropy: f(x) = sum_a x_a ln(x_a / |x|). Minimizing it over the
// hull maximizes entropy; <grad, v> is minus the total code length of v
// under the code matched to x, so the solver's duality gap is exactly
// max_i total_code_length(l, mu_i) - entropy(x).
class NegativeEntropy final : public detail::HullObjective {
public:
    double value(const std::vector<double>& x) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        if (mass <= 0.0) return 0.0;
        double f = 0.0;
        for (double w : x) {
            if (w > 0.0) f += w * std::log(w / mass);
        }
        return f;
    }

    void gradient(const std::vector<double>& x, std::vector<double>& g) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        g.resize(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) {
            g[a] = x[a] > 0.0 ? std::log(x[a] / mass) : -kInf;
        }
    }

    void hessian(const std::vector<double>& x, std::vector<double>& diag,
                 double& rho) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        diag.resize(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) {
            diag[a] = x[a] > 0.0 ? 1.0 / x[a] : kInf;
        }
        rho = mass > 0.0 ? -1.0 / mass : 0.0;
    }
};

// f(x) = D(x || m * |x|/|m|) for a fixed reference m: the divergence from
// the mass-matched rescaling of m. Convex; minimizing it over a subset of
// the hull recovers the subset's entropy maximizer when the reference's code
// is cost stable there.
class RescaledDivergence final : public detail::HullObjective {
public:
    explicit RescaledDivergence(const std::vector<double>& reference)
        : ref_(reference), ref_mass_(0.0) {
        for (double w : ref_) ref_mass_ += w;
    }

    double value(const std::vector<double>& x) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        if (mass <= 0.0) return 0.0;
        double f = 0.0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a] == 0.0) continue;
            if (ref_[a] == 0.0) return kInf;
            f += x[a] * std::log(x[a] / ref_[a]);
        }
        f -= mass * std::log(mass / ref_mass_);
        return f;
    }

    void gradient(const std::vector<double>& x, std::vector<double>& g) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        g.resize(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a] > 0.0) {
                g[a] = ref_[a] > 0.0
                           ? std::log((x[a] / mass) / (ref_[a] / ref_mass_))
                           : kInf;
            } else {
                g[a] = ref_[a] > 0.0 ? -kInf : 0.0;
            }
        }
    }

    void hessian(const std::vector<double>& x, std::vector<double>& diag,
                 double& rho) const override {
        double mass = 0.0;
        for (double w : x) mass += w;
        diag.resize(x.size());
        for (std::size_t a = 0; a < x.size(); ++a) {
            diag[a] = x[a] > 0.0 ? 1.0 / x[a] : kInf;
        }
        rho = mass > 0.0 ? -1.0 / mass : 0.0;
    }

private:
    std::vector<double> ref_;
    double ref_mass_;
};

std::vector<std::vector<double>> instance_vertices(const InstanceFamily& family) {
    std::vector<std::vector<double>> vertices;
    vertices.reserve(family.count());
    for (const auto& instance : family.instances()) {
        vertices.push_back(instance.as_measure().weights());
    }
    return vertices;
}

std::vector<std::size_t> supported_indices(const std::vector<double>& p) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > kSupportThreshold) support.push_back(i);
    }
    return support;
}

MaxEntSolution package_solution(const InstanceFamily& family,
                                const detail::HullSolverResult& solved) {
    DiscreteMeasure mu_star(family.alphabet(), solved.x);
    CodeLengthFunction ell_star = code_length_from_measure(mu_star);
    const double c = entropy(mu_star);
    return MaxEntSolution{std::move(mu_star),
                          std::move(ell_star),
                          c,
                          MixtureWeights(solved.p),
                          supported_indices(solved.p),
                          SolverDiagnostics{solved.iterations, solved.gap}};
}

}  // namespace

MixtureWeights::MixtureWeights(std::vector<double> w) : weights(std::move(w)) {
    if (weights.empty()) {
        throw std::invalid_argument("mixture weights must be nonempty");
    }
    double sum = 0.0;
    for (double x : weights) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw std::invalid_argument("mixture weights must be nonnegative and finite");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
}

MixtureWeights MixtureWeights::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("mixture weights must be nonempty");
    return MixtureWeights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

MixtureWeights MixtureWeights::point_mass(std::size_t n, std::size_t index) {
    if (index >= n) throw std::invalid_argument("point mass index out of range");
    std::vector<double> w(n, 0.0);
    w[index] = 1.0;
    return MixtureWeights(std::move(w));
}

InstanceFamily::InstanceFamily(AlphabetPtr alphabet,
                               std::vector<EmpiricalMeasure> instances,
                               std::vector<std::string> names)
    : alphabet_(std::move(alphabet)),
      instances_(std::move(instances)),
      names_(std::move(names)) {
    if (!alphabet_) throw std::invalid_argument("family requires an alphabet");
    if (instances_.empty()) {
        throw std::invalid_argument("family requires at least one instance");
    }
    if (!names_.empty() && names_.size() != instances_.size()) {
        throw std::invalid_argument("family name list does not match instance count");
    }
    bool any_mass = false;
    for (const auto& instance : instances_) {
        if (!same_alphabet(alphabet_, instance.alphabet())) {
            throw std::invalid_argument("family instances must share the alphabet");
        }
        any_mass = any_mass || instance.as_measure().total_mass() > 0.0;
    }
    if (!any_mass) {
        throw std::domain_error("family instances are all the zero measure");
    }
}

DiscreteMeasure InstanceFamily::mixture(const MixtureWeights& p) const {
    if (p.size() != instances_.size()) {
        throw std::invalid_argument("mixture weight count does not match family");
    }
    std::vector<double> w(alphabet_->size(), 0.0);
    for (std::size_t i = 0; i < instances_.size(); ++i) {
        if (p[i] == 0.0) continue;
        for (std::size_t a = 0; a < w.size(); ++a) {
            w[a] += p[i] * instances_[i].as_measure().weight(a);
        }
    }
    return DiscreteMeasure(alphabet_, std::move(w));
}

MaxEntSolution solve_maxent(const InstanceFamily& family, double tol, int max_iter,
                            MixtureInit init) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_maxent requires tol > 0");

    detail::HullSolverOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    options.init_vertex = init == MixtureInit::kUniform ? static_cast<std::size_t>(-1)
                                                        : std::size_t{0};

    NegativeEntropy objective;
    auto solved = detail::minimize_over_hull(objective, instance_vertices(family), options);
    MaxEntSolution solution = package_solution(family, solved);
    if (!solved.converged) {
        throw MaxEntConvergenceError("maximum entropy solver did not reach the requested "
                                     "duality gap within the iteration budget",
                                     std::move(solution));
    }
    return solution;
}

MaxEntSolution brute_force_maxent(const InstanceFamily& family, int grid_resolution) {
    if (family.count() > 4) {
        throw std::domain_error("brute_force_maxent enumerates at most 4 instances");
    }
    if (grid_resolution < 1) {
        throw std::invalid_argument("grid resolution must be at least 1");
    }

    const std::size_t k = family.count();
    const double res = static_cast<double>(grid_resolution);
    const auto vertices = instance_vertices(family);
    const std::size_t n = vertices[0].size();

    std::vector<int> ticks(k, 0);
    ticks[0] = grid_resolution;
    std::vector<double> best_p(k, 0.0);
    best_p[0] = 1.0;
    double best_entropy = -1.0;
    long evaluated = 0;

    std::vector<double> x(n);
    // Odometer over compositions of grid_resolution into k parts.
    std::vector<int> comp(k, 0);
    comp[k - 1] = grid_resolution;
    while (true) {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            if (comp[i] == 0) continue;
            const double pi = comp[i] / res;
            for (std::size_t a = 0; a < n; ++a) x[a] += pi * vertices[i][a];
        }
        double mass = 0.0;
        for (double w : x) mass += w;
        double h = 0.0;
        if (mass > 0.0) {
            for (double w : x) {
                if (w > 0.0) h += w * std::log(mass / w);
            }
        }
        ++evaluated;
        if (h > best_entropy) {
            best_entropy = h;
            for (std::size_t i = 0; i < k; ++i) best_p[i] = comp[i] / res;
        }

        // Next composition in lexicographic order.
        if (comp[0] == grid_resolution) break;
        std::size_t j = k - 1;
        while (comp[j] == 0) --j;
        if (j == 0) break;
        const int carry = comp[j];
        comp[j] = 0;
        comp[j - 1] += 1;
        comp[k - 1] = carry - 1;
    }

    detail::HullSolverResult packaged;
    packaged.p = best_p;
    MixtureWeights weights(best_p);
    DiscreteMeasure mu = family.mixture(weights);
    packaged.x = mu.weights();
    packaged.value = -best_entropy;
    packaged.iterations =
        static_cast<int>(std::min<long>(evaluated, std::numeric_limits<int>::max()));
    // Residual duality gap of the grid optimum, for the record.
    const CodeLengthFunction code = code_length_from_measure(mu);
    double worst = -kInf;
    for (const auto& instance : family.instances()) {
        worst = std::max(worst, total_code_length(code, instance.as_measure()));
    }
    packaged.gap = std::max(0.0, worst - best_entropy);
    packaged.converged = true;
    return package_solution(family, packaged);
}

CertificateReport verify_equilibrium(const MaxEntSolution& solution,
                                     const InstanceFamily& family, double tol) {
    CertificateReport report;
    const std::size_t k = family.count();

    CertificateCheck no_instance_above{"max_code_length_at_most_c", true, kInf, {}};
    no_instance_above.slacks.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double cost =
            total_code_length(solution.ell_star, family.instance(i).as_measure());
        no_instance_above.slacks[i] = solution.c - cost;
        no_instance_above.worst_slack =
            std::min(no_instance_above.worst_slack, no_instance_above.slacks[i]);
    }
    no_instance_above.pass = no_instance_above.worst_slack >= -tol;
    report.checks.push_back(std::move(no_instance_above));

    CertificateCheck kraft{"kraft_sum_equals_one", true, 0.0, {}};
    const double kraft_error = kraft_sum(solution.ell_star) - 1.0;
    kraft.slacks = {-std::abs(kraft_error)};
    kraft.worst_slack = kraft.slacks[0];
    kraft.pass = kraft.worst_slack >= -tol;
    report.checks.push_back(std::move(kraft));

    CertificateCheck stable{"cost_stable_on_support", true, kInf, {}};
    stable.slacks.assign(k, kInf);  // unsupported instances are unconstrained
    for (std::size_t i = 0; i < k; ++i) {
        if (solution.p[i] <= tol) continue;
        const double cost =
            total_code_length(solution.ell_star, family.instance(i).as_measure());
        stable.slacks[i] = -std::abs(cost - solution.c);
        stable.worst_slack = std::min(stable.worst_slack, stable.slacks[i]);
    }
    stable.pass = stable.worst_slack >= -tol;
    report.checks.push_back(std::move(stable));

    return report;
}

bool minimax_equals_mean_check(const InstanceFamily& family, const MixtureWeights& p,
                               const MaxEntSolution& solution, double tol) {
    const DiscreteMeasure mixed = family.mixture(p);
    double worst = 0.0;
    for (std::size_t a = 0; a < mixed.size(); ++a) {
        worst = std::max(worst, std::abs(mixed.weight(a) - solution.mu_star.weight(a)));
    }
    return worst <= tol;
}

MaxEntSolution maxent_on_subset(const InstanceFamily& sub_family,
                                const DiscreteMeasure& mu_star, double tol,
                                int max_iter) {
    require_same_alphabet(sub_family.alphabet(), mu_star.alphabet(), "maxent_on_subset");
    if (mu_star.total_mass() <= 0.0) {
        throw std::domain_error("maxent_on_subset requires a nonzero reference measure");
    }
    for (const auto& instance : sub_family.instances()) {
        if (!support_subset(instance.as_measure(), mu_star)) {
            throw std::domain_error(
                "maxent_on_subset: subset vertex uses a symbol absent from the reference");
        }
    }

    detail::HullSolverOptions options;
    options.tol = tol;
    options.max_iter = max_iter;

    RescaledDivergence objective(mu_star.weights());
    auto solved = detail::minimize_over_hull(objective, instance_vertices(sub_family), options);
    MaxEntSolution solution = package_solution(sub_family, solved);
    if (!solved.converged) {
        throw MaxEntConvergenceError(
            "subset entropy maximizer did not converge within the iteration budget",
            std::move(solution));
    }

    // Exchange identity H(mu**) = H(reference) - min divergence; holds when
    // the reference's code is cost stable on the subset vertices.
    const double minimized = divergence(
        solution.mu_star,
        scale(mu_star, solution.mu_star.total_mass() / mu_star.total_mass()));
    const double lhs = solution.c;
    const double rhs = entropy(mu_star) - minimized;
    const double identity_tol = std::max(100.0 * tol, 1e-9 * (1.0 + std::abs(rhs)));
    if (std::abs(lhs - rhs) > identity_tol) {
        throw std::domain_error(
            "maxent_on_subset: exchange identity violated; the reference code is not "
            "cost stable on the given subset");
    }
    return solution;
}

}  // namespace infomeas
