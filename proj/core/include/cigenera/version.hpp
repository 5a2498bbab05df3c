#pragma once

namespace cigenera {

inline constexpr const char* kToolName = "cigenera";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cigenera
