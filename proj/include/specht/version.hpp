#pragma once

namespace specht {

inline constexpr const char* kToolName = "specht-workbench";
inline constexpr const char* kVersion = "0.1.0";

} // namespace specht
