#pragma once

#include <filesystem>
#include <vector>

#include "infomeas/maxent.hpp"

namespace infomeas {

enum class TokenMode { kChar, kByte, kToken };

/// How text files become count tables. kChar counts Unicode scalar values
/// (each symbol is one code point, kept as its UTF-8 bytes), kByte counts
/// raw byte values (symbols "0x00".."0xff"), kToken counts
/// whitespace-separated tokens. Case folding is ASCII-only, applied before
/// tokenization, so results stay bit-exact across locales.
struct IngestionConfig {
    TokenMode mode = TokenMode::kChar;
    bool case_folding = false;
    std::vector<std::filesystem::path> files;
};

/// One empirical measure per file over the union alphabet, sorted
/// lexicographically; files missing a symbol get count 0. Instance names are
/// the file stems. Throws std::runtime_error naming the file on unreadable
/// input, invalid UTF-8 in kChar mode, or an empty corpus.
InstanceFamily ingest_corpus(const IngestionConfig& config);

}  // namespace infomeas
