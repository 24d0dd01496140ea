#pragma once

namespace cograph {
inline constexpr const char* kVersion = "0.1.0";
}
