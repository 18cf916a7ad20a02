#pragma once

namespace eulercert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eulercert
