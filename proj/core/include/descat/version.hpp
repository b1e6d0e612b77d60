#pragma once

namespace descat {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace descat
