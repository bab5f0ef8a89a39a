#include "clusteredit/read.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "clusteredit/error.hpp"
#include "clusteredit/normal.hpp"

namespace clusteredit {

void AlignParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InputError("sigma must be positive, got " + std::to_string(sigma));
  }
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InputError("threshold must lie in (0, 1], got " +
                     std::to_string(threshold));
  }
  if (!std::isfinite(mu)) throw InputError("mu must be finite");
  if (!(wmax > 0.0) || !std::isfinite(wmax)) {
    throw InputError("wmax must be positive and finite");
  }
}

double overlap(const Read& a, const Read& b) noexcept {
  const double lo = std::max(a.left, b.left);
  const double hi = std::min(a.right(), b.right());
  return hi > lo ? hi - lo : 0.0;
}

TailProbabilities tail_probabilities(const Read& a, const Read& b,
                                     const AlignParams& p) {
  const double delta = std::fabs(a.length - b.length);
  const double mean_length = 0.5 * (a.length + b.length);
  const double u = mean_length - overlap(a, b);
  return {
      std_normal_two_sided(delta / (std::numbers::sqrt2 * p.sigma)),
      std_normal_sf(std::numbers::sqrt2 * (u - p.mu) / p.sigma),
  };
}

double tail_weight(double p_value, const AlignParams& p) {
  const double log_p = p_value > 0.0 ? std::log(p_value) : -p.wmax;
  const double w = std::max(log_p, -p.wmax) - std::log(p.threshold);
  return cap_weight(p.sign == SignConvention::corrected ? w : -w, p.wmax);
}

double detail::pair_weight_unchecked(const Read& a, const Read& b,
                                     const AlignParams& p) {
  if (overlap(a, b) <= 0.0) return kNegInf;
  const auto tails = tail_probabilities(a, b, p);
  return std::min(tail_weight(tails.size_tail, p),
                  tail_weight(tails.overlap_tail, p));
}

double pair_weight(const Read& a, const Read& b, const AlignParams& p) {
  p.validate();
  return detail::pair_weight_unchecked(a, b, p);
}

void validate_reads(std::span<const Read> reads) {
  std::vector<std::int64_t> ids;
  ids.reserve(reads.size());
  for (std::size_t i = 0; i < reads.size(); ++i) {
    const Read& r = reads[i];
    if (!(r.length > 0.0) || !std::isfinite(r.length) ||
        !std::isfinite(r.left)) {
      throw InputError("read " + std::to_string(r.id) +
                       " has a non-positive or non-finite span");
    }
    if (i > 0) {
      const Read& prev = reads[i - 1];
      if (r.left < prev.left || (r.left == prev.left && r.id <= prev.id)) {
        throw InputError("reads must be sorted by left endpoint (ties by id); "
                         "violated at read " + std::to_string(r.id));
      }
    }
    ids.push_back(r.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("read ids must be unique");
  }
}

}  // namespace clusteredit
