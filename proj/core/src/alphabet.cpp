#include "infomeas/alphabet.hpp"

#include <stdexcept>

namespace infomeas {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must not be empty");
    }
    index_.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto [it, inserted] = index_.emplace(symbols_[i], i);
        if (!inserted) {
            throw std::invalid_argument("alphabet has duplicate symbol: " + symbols_[i]);
        }
    }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b,
                           const char* operation) {
    if (!same_alphabet(a, b)) {
        throw std::domain_error(std::string(operation) +
                                ": operands use different alphabets");
    }
}

}  // namespace infomeas
