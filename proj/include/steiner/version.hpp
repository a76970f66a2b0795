#pragma once

namespace steiner {

inline constexpr const char* kToolkitVersion = "1.0.0";

}  // namespace steiner
