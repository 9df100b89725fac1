#pragma once

#include <vector>

#include "infomeas/measure.hpp"

namespace infomeas {

/// Per-symbol code lengths in nats, values in [0, +infinity]. A length of
/// +infinity marks a symbol the code cannot represent. The type itself does
/// not force Kraft admissibility; use kraft_sum / kraft_admissible.
class CodeLengthFunction {
public:
    /// Throws std::invalid_argument on size mismatch, NaN, or negative length.
    CodeLengthFunction(AlphabetPtr alphabet, std::vector<double> lengths_nats);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return lengths_.size(); }
    double length(std::size_t i) const { return lengths_.at(i); }
    const std::vector<double>& lengths() const noexcept { return lengths_; }

private:
    AlphabetPtr alphabet_;
    std::vector<double> lengths_;
};

/// The code matched to mu: l(a) = ln(total/mu(a)), +infinity where mu(a) = 0.
/// Its Kraft sum is 1 over the support of mu. Throws std::domain_error for
/// the zero measure.
CodeLengthFunction code_length_from_measure(const DiscreteMeasure& mu);

/// Lengths induced by a coding measure Q via l(a) = -ln Q(a). Requires
/// every Q(a) <= 1 so lengths stay nonnegative (any Q with total mass <= 1
/// qualifies); throws std::invalid_argument otherwise.
CodeLengthFunction code_length_from_coding_measure(const DiscreteMeasure& q);

/// sum_a l(a) * mu(a) with the convention infinity * 0 = 0. Returns
/// +infinity when mu uses a symbol of infinite length. Throws
/// std::domain_error on alphabet mismatch.
double total_code_length(const CodeLengthFunction& lengths, const DiscreteMeasure& mu);

/// sum_a exp(-l(a)); exp(-infinity) = 0.
double kraft_sum(const CodeLengthFunction& lengths);

/// kraft_sum <= 1 + tol.
bool kraft_admissible(const CodeLengthFunction& lengths, double tol = 1e-12);

}  // namespace infomeas
