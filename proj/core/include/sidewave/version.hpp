#pragma once

namespace sidewave {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sidewave
