#pragma once

namespace resint {
inline constexpr const char* kVersion = "0.1.0";
}
