#pragma once

namespace nearhex {

inline constexpr const char* kToolName = "nearhex";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace nearhex
