#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "infomeas/certificate.hpp"
#include "infomeas/coding.hpp"
#include "infomeas/measure.hpp"

namespace infomeas {

/// Probability vector over the instances of a family.
struct MixtureWeights {
    std::vector<double> weights;

    /// Throws std::invalid_argument unless all weights are >= 0 and sum to 1
    /// within 1e-12.
    explicit MixtureWeights(std::vector<double> w);

    static MixtureWeights uniform(std::size_t n);
    static MixtureWeights point_mass(std::size_t n, std::size_t index);

    std::size_t size() const noexcept { return weights.size(); }
    double operator[](std::size_t i) const { return weights.at(i); }
};

/// A finite set of texts given by their count tables, all over one alphabet.
/// The object of study is the convex hull of the instances.
class InstanceFamily {
public:
    /// Throws std::invalid_argument on structural problems (no instances,
    /// alphabet mismatch, name list of the wrong length) and
    /// std::domain_error when every instance is the zero measure.
    InstanceFamily(AlphabetPtr alphabet, std::vector<EmpiricalMeasure> instances,
                   std::vector<std::string> names = {});

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t count() const noexcept { return instances_.size(); }
    const EmpiricalMeasure& instance(std::size_t i) const { return instances_.at(i); }
    const std::vector<EmpiricalMeasure>& instances() const noexcept { return instances_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// sum_i p[i] * instance(i) as a real-valued measure.
    DiscreteMeasure mixture(const MixtureWeights& p) const;

private:
    AlphabetPtr alphabet_;
    std::vector<EmpiricalMeasure> instances_;
    std::vector<std::string> names_;
};

struct SolverDiagnostics {
    int iterations = 0;
    double gap = 0.0;  // final duality gap in nats
};

/// Entropy maximizer over the convex hull of a family, together with its
/// minimax-optimal code and equilibrium value.
struct MaxEntSolution {
    DiscreteMeasure mu_star;      // maximum entropy measure, = family.mixture(p)
    CodeLengthFunction ell_star;  // code_length_from_measure(mu_star)
    double c = 0.0;               // equilibrium value = entropy(mu_star), nats
    MixtureWeights p;
    std::vector<std::size_t> support;  // indices with p > support threshold
    SolverDiagnostics diagnostics;
};

/// Initial mixture for the solver; two choices are enough to probe
/// uniqueness of the optimum.
enum class MixtureInit { kUniform, kFirstInstance };

/// Thrown when an iterative solver exhausts its budget; carries the best
/// iterate so callers can inspect how close it got.
class MaxEntConvergenceError : public std::runtime_error {
public:
    MaxEntConvergenceError(const std::string& what, MaxEntSolution best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const MaxEntSolution& best() const noexcept { return best_; }

private:
    MaxEntSolution best_;
};

/// Weight below which an instance does not count as supported when reporting
/// cost stability (first-order solvers leave dust of this order).
inline constexpr double kSupportThreshold = 1e-8;

/// Maximizes entropy over the convex hull of the family's instances by
/// first-order optimization over mixture weights. Returns once the duality
/// gap max_i total_code_length(l, mu_i) - entropy(mu) drops to tol; throws
/// MaxEntConvergenceError after max_iter iterations without reaching it.
MaxEntSolution solve_maxent(const InstanceFamily& family, double tol = 1e-9,
                            int max_iter = 10000,
                            MixtureInit init = MixtureInit::kUniform);

/// Exhaustive oracle: evaluates entropy on a simplex grid of mixture weights
/// with the given resolution and returns the best grid point. Only for
/// families of at most 4 instances (the grid has resolution^(n-1) points);
/// throws std::domain_error beyond that.
MaxEntSolution brute_force_maxent(const InstanceFamily& family, int grid_resolution);

/// Equilibrium certificate for a solution:
///   (1) no instance has total code length above c + tol,
///   (2) the Kraft sum of the code equals 1 within tol,
///   (3) every instance with mixture weight above tol has total code length
///       within tol of c (cost stability on the support).
/// Failures are reported, never thrown.
CertificateReport verify_equilibrium(const MaxEntSolution& solution,
                                     const InstanceFamily& family, double tol);

/// True iff the mixture sum_i p[i] mu_i reproduces solution.mu_star within
/// tol per coordinate: exactly the condition under which minimizing maximal
/// code length coincides with minimizing p-mean code length.
bool minimax_equals_mean_check(const InstanceFamily& family, const MixtureWeights& p,
                               const MaxEntSolution& solution, double tol);

/// Entropy maximizer over a convex subset K of the original hull, computed
/// by minimizing nu -> divergence(nu, mu_star * |nu|/|mu_star|) over mixtures
/// of sub_family. Verifies the exchange identity
///   entropy(result) = entropy(mu_star) - minimized divergence
/// which holds when the optimal code is cost stable on K's vertices; throws
/// std::domain_error if it fails beyond tolerance.
MaxEntSolution maxent_on_subset(const InstanceFamily& sub_family,
                                const DiscreteMeasure& mu_star, double tol = 1e-9,
                                int max_iter = 10000);

}  // namespace infomeas
