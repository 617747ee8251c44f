#pragma once

namespace salem {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace salem
