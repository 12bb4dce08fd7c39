#pragma once

namespace orex {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orex
