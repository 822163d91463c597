#pragma once

namespace skewgal {

inline constexpr const char* version = "0.1.0";

} // namespace skewgal
