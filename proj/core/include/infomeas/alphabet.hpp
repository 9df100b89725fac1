#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace infomeas {

/// Ordered set of distinct symbol identifiers.
///
/// Every measure, code length function and count vector in this library is a
/// dense vector indexed in alphabet order. Alphabets are immutable and shared
/// via AlphabetPtr; two values interoperate only if their alphabets compare
/// equal (same symbols in the same order).
class Alphabet {
public:
    /// Throws std::invalid_argument if symbols is empty or contains duplicates.
    explicit Alphabet(std::vector<std::string> symbols);

    static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols) {
        return std::make_shared<const Alphabet>(std::move(symbols));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    std::optional<std::size_t> index_of(std::string_view symbol) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// True if the two handles denote the same alphabet (pointer fast path,
/// element comparison otherwise).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Throws std::domain_error if the alphabets differ.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b,
                           const char* operation);

}  // namespace infomeas
