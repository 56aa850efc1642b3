#pragma once

namespace tlab {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace tlab
