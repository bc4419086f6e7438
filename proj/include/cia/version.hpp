#pragma once

namespace cia {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cia
