#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace clusteredit {

using Vertex = std::uint32_t;

// Weights are doubles in [-inf, wmax]. -inf is stored exactly and marks a pair
// that can never share a cluster (non-overlapping reads). +inf is never stored:
// every producer caps at wmax so that sums never hit inf - inf.
inline constexpr double kDefaultWMax = 1e15;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

constexpr double cap_weight(double w, double wmax) noexcept {
  return w > wmax ? wmax : w;
}

// Cost of cutting the pair apart.
constexpr double positive_part(double w) noexcept { return w > 0.0 ? w : 0.0; }

// Cost of joining the pair; a -inf pair costs wmax.
constexpr double negative_part(double w, double wmax) noexcept {
  if (w >= 0.0) return 0.0;
  return -w > wmax ? wmax : -w;
}

// w clamped from below at -wmax, the form the DP running sums consume.
constexpr double floor_weight(double w, double wmax) noexcept {
  return w < -wmax ? -wmax : w;
}

inline bool is_edge(double w) noexcept { return w >= 0.0; }

}  // namespace clusteredit
