#include "infomeas/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace infomeas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One term of the divergence sum. Nonnegative by convexity of
// x ln x - (x - 1); rounding dust below zero is clipped.
double divergence_term(double s, double t) {
    if (s == 0.0) return t;          // f(0) = 1, including the 0/0 term
    if (t == 0.0) return kInf;       // absolute continuity failure
    if (s == t) return 0.0;
    const double term = s * std::log(s / t) - s + t;
    return term > 0.0 ? term : 0.0;
}

}  // namespace

double scalar_divergence(double s, double t) {
    if (!(s >= 0.0) || !(t >= 0.0)) {
        throw std::domain_error("scalar_divergence requires nonnegative arguments");
    }
    return divergence_term(s, t);
}

double divergence(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    require_same_alphabet(mu.alphabet(), nu.alphabet(), "divergence");
    double sum = 0.0;
    for (std::size_t a = 0; a < mu.size(); ++a) {
        const double term = divergence_term(mu.weight(a), nu.weight(a));
        if (term == kInf) return kInf;
        sum += term;
    }
    return sum;
}

ChainRuleParts chain_rule_decompose(const DiscreteMeasure& nu, const DiscreteMeasure& mu) {
    require_same_alphabet(nu.alphabet(), mu.alphabet(), "chain_rule_decompose");
    if (mu.total_mass() <= 0.0) {
        throw std::domain_error("chain_rule_decompose requires a nonzero reference measure");
    }
    const double mass_term = scalar_divergence(nu.total_mass(), mu.total_mass());
    const DiscreteMeasure rescaled = scale(mu, nu.total_mass() / mu.total_mass());
    const double conditional_term = divergence(nu, rescaled);
    return ChainRuleParts{mass_term, conditional_term};
}

}  // namespace infomeas
