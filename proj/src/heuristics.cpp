#include "clusteredit/heuristics.hpp"

namespace clusteredit {

std::string_view to_string(HeuristicVariant v) noexcept {
  return v == HeuristicVariant::frontier_plus_one ? "h1" : "h2";
}

}  // namespace clusteredit
