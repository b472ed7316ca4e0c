#pragma once

namespace ethm {

inline constexpr const char* version = "1.0.0";

}  // namespace ethm
