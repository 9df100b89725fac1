#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "infomeas/certificate.hpp"
#include "infomeas/maxent.hpp"
#include "infomeas/measure.hpp"

namespace infomeas {

/// Convex hull of finitely many real-valued measures, given by its vertices.
class ConvexFamily {
public:
    /// Throws std::invalid_argument if there are no vertices or alphabets differ.
    ConvexFamily(AlphabetPtr alphabet, std::vector<DiscreteMeasure> vertices);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t count() const noexcept { return vertices_.size(); }
    const DiscreteMeasure& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<DiscreteMeasure>& vertices() const noexcept { return vertices_; }

    DiscreteMeasure mixture(const MixtureWeights& p) const;

private:
    AlphabetPtr alphabet_;
    std::vector<DiscreteMeasure> vertices_;
};

/// Outcome of projecting a measure onto a convex family. When no point of
/// the family is feasible (divergence identically +infinity) the optimum is
/// +infinity and minimizer/p are empty.
struct ProjectionResult {
    std::optional<DiscreteMeasure> minimizer;  // = family.mixture(p) when present
    std::optional<MixtureWeights> p;
    double optimum = 0.0;            // attained divergence in nats, may be +inf
    std::vector<double> certificate; // first-order slack per vertex at return
    SolverDiagnostics diagnostics;
};

class ProjectionConvergenceError : public std::runtime_error {
public:
    ProjectionConvergenceError(const std::string& what, ProjectionResult best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const ProjectionResult& best() const noexcept { return best_; }

private:
    ProjectionResult best_;
};

/// Information projection: argmin over mu in the hull of divergence(mu, nu).
ProjectionResult i_projection(const ConvexFamily& family, const DiscreteMeasure& nu,
                              double tol = 1e-9, int max_iter = 10000);

/// Reverse information projection: argmin over nu in the hull of
/// divergence(mu, nu). Generalizes maximum likelihood.
ProjectionResult reverse_i_projection(const ConvexFamily& family,
                                      const DiscreteMeasure& mu, double tol = 1e-9,
                                      int max_iter = 10000);

/// Samples n_samples hull members mu (Dirichlet(1) weights, fixed internal
/// seed) and checks the projection inequality
///   divergence(mu, nu) >= divergence(mu, result.minimizer) + result.optimum - tol.
CertificateReport verify_pythagorean(const ConvexFamily& family,
                                     const DiscreteMeasure& nu,
                                     const ProjectionResult& result, int n_samples,
                                     double tol);

/// First-order optimality certificate for a reverse projection candidate:
/// for every vertex v,
///   sum_a mu(a) v(a) / nu_hat(a)  <=  |v| + |mu| - |nu_hat| + tol
/// (terms with mu(a) = 0 contribute nothing). For probability measures this
/// is the classical e-variable bound. Throws std::domain_error if mu puts
/// mass outside the support of nu_hat.
CertificateReport evariable_certificate(const ConvexFamily& family,
                                        const DiscreteMeasure& mu,
                                        const DiscreteMeasure& nu_hat, double tol);

/// Exact value of the product-Poisson e-variable integral
///   E_{K ~ Po(nu)} [ Po(mu)(K) / Po(nu_hat)(K) ]
///     = exp( sum_a nu(a) r(a) - |nu| - |mu| + |nu_hat| ),
/// where r(a) = mu(a)/nu_hat(a) and the likelihood ratio is taken to vanish
/// where its numerator does (r(a) = 0 when mu(a) = 0). Throws
/// std::domain_error if mu puts mass outside the support of nu_hat.
double poisson_evalue_integral(const DiscreteMeasure& mu, const DiscreteMeasure& nu_hat,
                               const DiscreteMeasure& nu);

/// Checks poisson_evalue_integral(mu, nu_hat, v) <= 1 + tol at every vertex;
/// by linearity the bound then extends to the whole hull. Slack per vertex is
/// 1 - integral.
CertificateReport verify_ripr_poisson_lift(const ConvexFamily& family,
                                           const DiscreteMeasure& mu,
                                           const DiscreteMeasure& nu_hat, double tol);

/// Process-level restatement of verify_pythagorean through the identity
/// D(Po(mu) || Po(nu)) = divergence(mu, nu): samples hull members and checks
///   divergence(mu, nu) >= divergence(mu, nu_star) + optimum - tol.
CertificateReport verify_iproj_poisson_lift(const ConvexFamily& family,
                                            const DiscreteMeasure& nu,
                                            const ProjectionResult& result,
                                            int n_samples, double tol);

}  // namespace infomeas
