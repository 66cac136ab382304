#pragma once

namespace vortex {
inline constexpr const char* kVersion = "0.3.0";
}
