#pragma once

#include <cstdint>
#include <span>

#include "clusteredit/weight.hpp"

namespace clusteredit {

// An aligned paired-end read: the span [left, left + length) on the reference.
// `length` is the apparent insert size.
struct Read {
  std::int64_t id = 0;
  double left = 0.0;
  double length = 0.0;

  double right() const noexcept { return left + length; }
};

// `corrected` gives w = ln p - ln T, so heavy edges join statistically close
// reads. `paper` negates both terms (w = ln T - ln p), so the polarity flips.
enum class SignConvention { corrected, paper };

struct AlignParams {
  double mu = 112.0;
  double sigma = 15.0;
  double threshold = 0.4;
  SignConvention sign = SignConvention::corrected;
  double wmax = kDefaultWMax;

  void validate() const;
};

// Length of the intersection of the two half-open spans; 0 when disjoint or
// touching.
double overlap(const Read& a, const Read& b) noexcept;

struct TailProbabilities {
  double size_tail;     // P(|X| >= delta / (sqrt(2) sigma))
  double overlap_tail;  // P(X >= sqrt(2) (U - mu) / sigma)
};

TailProbabilities tail_probabilities(const Read& a, const Read& b,
                                     const AlignParams& p);

// log p - log T under the corrected convention, saturating at -wmax when p
// underflows; negated under SignConvention::paper. Capped at wmax.
double tail_weight(double p_value, const AlignParams& p);

// min(w_size, w_overlap), or -inf when the spans do not overlap.
double pair_weight(const Read& a, const Read& b, const AlignParams& p);

namespace detail {
double pair_weight_unchecked(const Read& a, const Read& b,
                             const AlignParams& p);
}  // namespace detail

// Sorted by left ascending, ties by id; positive lengths; unique ids.
void validate_reads(std::span<const Read> reads);

}  // namespace clusteredit
