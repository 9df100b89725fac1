#pragma once

#include "infomeas/measure.hpp"

namespace infomeas {

/// Divergence between two nonnegative scalars:
///   d(s, t) = s ln(s/t) - s + t
/// with d(0, t) = t and d(s, 0) = +infinity for s > 0. d(0, 0) = 0.
double scalar_divergence(double s, double t);

/// Information divergence D(mu || nu) for general finite measures,
///   D(mu || nu) = sum_a [ mu(a) ln(mu(a)/nu(a)) - mu(a) + nu(a) ],
/// using the termwise conventions of scalar_divergence. The result is
/// +infinity exactly when mu puts mass on a symbol where nu has none, and is
/// 0 exactly when mu == nu. Throws std::domain_error on alphabet mismatch.
double divergence(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

struct ChainRuleParts {
    double mass_term;         // divergence between the two total masses
    double conditional_term;  // divergence after rescaling mu to nu's mass
};

/// Splits D(nu || mu) into a sample-size part and a composition part:
///   D(nu || mu) = d(|nu|, |mu|) + D(nu || mu * |nu|/|mu|).
/// Both parts are nonnegative and sum to divergence(nu, mu). Throws
/// std::domain_error when mu is the zero measure.
ChainRuleParts chain_rule_decompose(const DiscreteMeasure& nu, const DiscreteMeasure& mu);

}  // namespace infomeas
