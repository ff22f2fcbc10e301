#pragma once

namespace fo2 {

inline constexpr const char* kToolName = "fo2alt";
inline constexpr const char* kVersion = "0.1.0";

}
