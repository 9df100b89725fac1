#include "infomeas/coding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace infomeas {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CodeLengthFunction::CodeLengthFunction(AlphabetPtr alphabet, std::vector<double> lengths_nats)
    : alphabet_(std::move(alphabet)), lengths_(std::move(lengths_nats)) {
    if (!alphabet_) {
        throw std::invalid_argument("code length function requires an alphabet");
    }
    if (lengths_.size() != alphabet_->size()) {
        throw std::invalid_argument("code length count does not match alphabet size");
    }
    for (double l : lengths_) {
        if (std::isnan(l) || l < 0.0) {
            throw std::invalid_argument("code lengths must lie in [0, +inf]");
        }
    }
}

CodeLengthFunction code_length_from_measure(const DiscreteMeasure& mu) {
    const double mass = mu.total_mass();
    if (mass <= 0.0) {
        throw std::domain_error("code_length_from_measure requires positive total mass");
    }
    std::vector<double> lengths(mu.size());
    for (std::size_t a = 0; a < mu.size(); ++a) {
        const double w = mu.weight(a);
        lengths[a] = w > 0.0 ? std::log(mass / w) : kInf;
        if (lengths[a] < 0.0) lengths[a] = 0.0;  // w == mass up to rounding
    }
    return CodeLengthFunction(mu.alphabet(), std::move(lengths));
}

CodeLengthFunction code_length_from_coding_measure(const DiscreteMeasure& q) {
    std::vector<double> lengths(q.size());
    for (std::size_t a = 0; a < q.size(); ++a) {
        const double w = q.weight(a);
        if (w > 1.0) {
            throw std::invalid_argument(
                "coding measure has a weight above 1; lengths would be negative");
        }
        lengths[a] = w > 0.0 ? -std::log(w) : kInf;
        if (lengths[a] < 0.0) lengths[a] = 0.0;
    }
    return CodeLengthFunction(q.alphabet(), std::move(lengths));
}

double total_code_length(const CodeLengthFunction& lengths, const DiscreteMeasure& mu) {
    require_same_alphabet(lengths.alphabet(), mu.alphabet(), "total_code_length");
    double sum = 0.0;
    for (std::size_t a = 0; a < mu.size(); ++a) {
        const double w = mu.weight(a);
        if (w == 0.0) continue;  // inf * 0 = 0
        const double l = lengths.length(a);
        if (l == kInf) return kInf;
        sum += l * w;
    }
    return sum;
}

double kraft_sum(const CodeLengthFunction& lengths) {
    double sum = 0.0;
    for (double l : lengths.lengths()) {
        sum += std::exp(-l);  // exp(-inf) = 0
    }
    return sum;
}

bool kraft_admissible(const CodeLengthFunction& lengths, double tol) {
    return kraft_sum(lengths) <= 1.0 + tol;
}

}  // namespace infomeas
