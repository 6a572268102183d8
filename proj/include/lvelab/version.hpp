#pragma once

namespace lvelab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lvelab
