#pragma once

namespace strainwig {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace strainwig
