#include "clusteredit/normal.hpp"

#include <cmath>
#include <numbers>

namespace clusteredit {

double std_normal_sf(double x) noexcept {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double std_normal_two_sided(double x) noexcept {
  return std::erfc(std::fabs(x) / std::numbers::sqrt2);
}

}  // namespace clusteredit
