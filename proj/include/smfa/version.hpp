#pragma once

namespace smfa {

inline constexpr const char* kToolName = "smfa";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace smfa
