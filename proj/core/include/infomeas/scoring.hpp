#pragma once

#include <cstdint>

#include "infomeas/maxent.hpp"
#include "infomeas/measure.hpp"

namespace infomeas {

/// Contract between a coder and an expert: the expert reveals a coding
/// measure Q and is paid f - k * (total code length of the realized text
/// under -ln Q). The prior weighs the texts when payoffs are averaged.
struct GameConfig {
    InstanceFamily family;
    double fee = 1.0;            // f, currency units
    double price_per_nat = 1.0;  // k > 0
    MixtureWeights prior;

    GameConfig(InstanceFamily family_, double fee_, double price_per_nat_,
               MixtureWeights prior_);
};

/// The measure the expert reveals. Admissible when its total mass is at most
/// 1 (Kraft), enforced at construction within 1e-12.
struct ExpertReport {
    DiscreteMeasure q;

    explicit ExpertReport(DiscreteMeasure q_);
};

/// f - k * sum_a (-ln Q(a)) * mu_i(a); -infinity when the instance uses a
/// symbol with Q(a) = 0. Throws std::out_of_range on a bad index and
/// std::domain_error on alphabet mismatch.
double payoff(const GameConfig& config, const ExpertReport& report,
              std::size_t instance_index);

/// Minimum payoff over all instances of the family.
double worst_case_payoff(const GameConfig& config, const ExpertReport& report);

/// Prior-weighted mean payoff; instances with zero prior weight are skipped
/// even if their payoff is -infinity.
double expected_payoff(const GameConfig& config, const ExpertReport& report);

/// The report that attains the equilibrium payoff: mu_star normalized.
ExpertReport honest_report(const MaxEntSolution& solution);

struct HonestyScanReport {
    double honest_expected = 0.0;
    double best_perturbed = 0.0;
    double gap = 0.0;  // best_perturbed - honest_expected, <= 0 when honesty wins
    int n = 0;
    double radius = 0.0;
};

/// Samples admissible reports within the given simplex radius of the honest
/// one and reports the best expected-payoff improvement found (never positive
/// beyond rounding: each dishonest report loses exactly
/// k * divergence(mu_star, |mu_star| Q) in expectation). The prior must
/// represent mu_star; throws std::domain_error otherwise.
HonestyScanReport honesty_gap_scan(const GameConfig& config, int n_perturbations,
                                   double radius, std::uint64_t seed);

}  // namespace infomeas
