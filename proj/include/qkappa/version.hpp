#pragma once

namespace qkappa {

inline constexpr const char* kVersion = "qkappa 0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace qkappa
