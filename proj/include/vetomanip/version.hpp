#pragma once

namespace vetomanip {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vetomanip
