#pragma once

#include <cstdint>
#include <vector>

namespace infomeas {

/// ln(k!) from a cumulative table (exact summation of ln i); grows the table
/// on demand. Used by the Poisson pmf and the rejection sampler so both see
/// identical values.
double log_factorial(std::uint64_t k);

/// ln Po(lambda)(k) = -lambda + k ln lambda - ln k!, with the conventions
/// Po(0)(0) = 1 and Po(0)(k>0) = 0.
double poisson_log_pmf(std::uint64_t k, double lambda);

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a),
/// a > 0, x >= 0. Series for x < a+1, continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Survival function of the chi-square distribution with dof degrees of
/// freedom, P(X >= x).
double chi_square_survival(double x, int dof);

/// Pearson chi-square statistic and p-value for observed counts against
/// expected counts (same length, expected all positive); dof defaults to
/// bins - 1.
struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};
ChiSquareResult chi_square_test(const std::vector<double>& observed,
                                const std::vector<double>& expected,
                                int dof_reduction = 1);

}  // namespace infomeas
