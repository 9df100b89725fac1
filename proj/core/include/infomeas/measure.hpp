#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infomeas/alphabet.hpp"

namespace infomeas {

/// Finite nonnegative measure on a finite alphabet, stored as a dense weight
/// vector parallel to the alphabet. Weights need not sum to one; the total
/// mass is an ordinary quantity of its own. Immutable after construction.
class DiscreteMeasure {
public:
    /// Throws std::invalid_argument on size mismatch, negative or non-finite
    /// weights.
    DiscreteMeasure(AlphabetPtr alphabet, std::vector<double> weights);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<double>& weights() const noexcept { return weights_; }

    /// Sum of all weights, cached at construction.
    double total_mass() const noexcept { return mass_; }

    bool is_zero() const noexcept { return mass_ == 0.0; }

    friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) && a.weights_ == b.weights_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<double> weights_;
    double mass_;
};

/// Measure with integer weights: a table of symbol counts for one text or one
/// realization of a point process.
class EmpiricalMeasure {
public:
    EmpiricalMeasure(AlphabetPtr alphabet, std::vector<std::uint64_t> counts);

    /// Validates that every weight is a nonnegative integer; throws
    /// std::invalid_argument otherwise.
    static EmpiricalMeasure from_measure(const DiscreteMeasure& measure);

    const DiscreteMeasure& as_measure() const noexcept { return measure_; }
    const AlphabetPtr& alphabet() const noexcept { return measure_.alphabet(); }
    std::size_t size() const noexcept { return measure_.size(); }
    std::uint64_t count(std::size_t i) const;

private:
    explicit EmpiricalMeasure(DiscreteMeasure measure) : measure_(std::move(measure)) {}

    DiscreteMeasure measure_;
};

/// Total mass of the measure.
double total_mass(const DiscreteMeasure& mu);

/// mu / total_mass(mu). Throws std::domain_error for the zero measure.
DiscreteMeasure normalize(const DiscreteMeasure& mu);

/// c * mu for c >= 0. Throws std::invalid_argument for negative or non-finite c.
DiscreteMeasure scale(const DiscreteMeasure& mu, double factor);

/// Convex or conic combination sum_i p[i] * measures[i]. All measures must
/// share an alphabet; p must be the same length as measures.
DiscreteMeasure mix(std::span<const DiscreteMeasure> measures, std::span<const double> p);

/// Entropy of a general measure in nats:
///   H(mu) = sum_a mu(a) * ln(total/mu(a)),  0 ln 0 = 0.
/// Scales linearly with the measure: H(c mu) = c H(mu). Zero measure has
/// entropy 0.
double entropy(const DiscreteMeasure& mu);

/// True if every symbol with positive mu-weight also has positive nu-weight.
bool support_subset(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace infomeas
