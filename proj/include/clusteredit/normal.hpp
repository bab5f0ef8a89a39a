#pragma once

namespace clusteredit {

// Upper tail P(X >= x) of the standard normal distribution.
double std_normal_sf(double x) noexcept;

// P(|X| >= x) for x >= 0.
double std_normal_two_sided(double x) noexcept;

}  // namespace clusteredit
