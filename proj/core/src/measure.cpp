#include "infomeas/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace infomeas {

DiscreteMeasure::DiscreteMeasure(AlphabetPtr alphabet, std::vector<double> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)), mass_(0.0) {
    if (!alphabet_) {
        throw std::invalid_argument("measure requires an alphabet");
    }
    if (weights_.size() != alphabet_->size()) {
        throw std::invalid_argument("measure weight count does not match alphabet size");
    }
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("measure weights must be finite and nonnegative");
        }
        mass_ += w;
    }
}

EmpiricalMeasure::EmpiricalMeasure(AlphabetPtr alphabet, std::vector<std::uint64_t> counts)
    : measure_(std::move(alphabet),
               std::vector<double>(counts.begin(), counts.end())) {}

EmpiricalMeasure EmpiricalMeasure::from_measure(const DiscreteMeasure& measure) {
    for (double w : measure.weights()) {
        if (w != std::floor(w)) {
            throw std::invalid_argument("empirical measure weights must be integers");
        }
    }
    return EmpiricalMeasure(measure);
}

std::uint64_t EmpiricalMeasure::count(std::size_t i) const {
    return static_cast<std::uint64_t>(measure_.weight(i));
}

double total_mass(const DiscreteMeasure& mu) { return mu.total_mass(); }

DiscreteMeasure normalize(const DiscreteMeasure& mu) {
    if (mu.total_mass() <= 0.0) {
        throw std::domain_error("cannot normalize the zero measure");
    }
    return scale(mu, 1.0 / mu.total_mass());
}

DiscreteMeasure scale(const DiscreteMeasure& mu, double factor) {
    if (!std::isfinite(factor) || factor < 0.0) {
        throw std::invalid_argument("scale factor must be finite and nonnegative");
    }
    std::vector<double> w = mu.weights();
    for (double& x : w) x *= factor;
    return DiscreteMeasure(mu.alphabet(), std::move(w));
}

DiscreteMeasure mix(std::span<const DiscreteMeasure> measures, std::span<const double> p) {
    if (measures.empty() || measures.size() != p.size()) {
        throw std::invalid_argument("mix requires matching nonempty measure and weight lists");
    }
    const AlphabetPtr& alphabet = measures[0].alphabet();
    std::vector<double> w(alphabet->size(), 0.0);
    for (std::size_t i = 0; i < measures.size(); ++i) {
        require_same_alphabet(alphabet, measures[i].alphabet(), "mix");
        if (p[i] == 0.0) continue;
        for (std::size_t a = 0; a < w.size(); ++a) {
            w[a] += p[i] * measures[i].weight(a);
        }
    }
    // Mixtures of nonnegative vectors stay nonnegative; clip rounding dust.
    for (double& x : w) {
        if (x < 0.0) x = 0.0;
    }
    return DiscreteMeasure(alphabet, std::move(w));
}

double entropy(const DiscreteMeasure& mu) {
    const double mass = mu.total_mass();
    if (mass <= 0.0) return 0.0;
    double h = 0.0;
    for (double w : mu.weights()) {
        if (w > 0.0) h += w * std::log(mass / w);  // each term >= 0
    }
    return h < 0.0 ? 0.0 : h;
}

bool support_subset(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    require_same_alphabet(mu.alphabet(), nu.alphabet(), "support_subset");
    for (std::size_t a = 0; a < mu.size(); ++a) {
        if (mu.weight(a) > 0.0 && nu.weight(a) == 0.0) return false;
    }
    return true;
}

}  // namespace infomeas
