#pragma once

#include <string_view>

namespace chronoloop {

inline constexpr std::string_view kToolName = "chronoloop";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace chronoloop
