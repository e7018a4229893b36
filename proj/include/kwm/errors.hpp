#pragma once

#include <stdexcept>
#include <string>

namespace kwm {

// A request whose cost would exceed a configured brute-force or oracle cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maximum rank accepted by brute-force Weyl-group sweeps: (9+1)! = 3,628,800.
inline constexpr int kDefaultBruteCap = 9;

// Maximum sum of |coefficients| accepted by the backtracking partition oracle.
inline constexpr int kDefaultOracleCap = 20;

}  // namespace kwm
