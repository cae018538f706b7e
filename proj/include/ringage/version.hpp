#pragma once

namespace ringage {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringage
