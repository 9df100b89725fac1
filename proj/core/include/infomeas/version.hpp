#pragma once

namespace infomeas {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace infomeas
