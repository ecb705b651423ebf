#pragma once

namespace netmean {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace netmean
