#pragma once

namespace teflow {

inline constexpr const char* kToolName = "teflow";
inline constexpr const char* kVersion = "0.1.0";

} // namespace teflow
