#pragma once

namespace ufgdepth {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ufgdepth
