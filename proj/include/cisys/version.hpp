#pragma once

namespace cisys {

inline constexpr const char* kCodeVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace cisys
