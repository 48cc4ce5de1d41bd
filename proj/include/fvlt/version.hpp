#pragma once

namespace fvlt {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fvlt
