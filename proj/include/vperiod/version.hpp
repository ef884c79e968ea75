#pragma once

namespace vperiod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vperiod
