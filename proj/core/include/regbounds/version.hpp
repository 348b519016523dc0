#pragma once

namespace regbounds {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace regbounds
