#pragma once

namespace ethm::constants {

inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact, SI 2019)
inline constexpr double hbar = 1.054571817e-34;               // J s

}  // namespace ethm::constants
