#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "clusteredit/clustering.hpp"
#include "clusteredit/read.hpp"

namespace clusteredit {

enum class VariantKind { insertion, deletion };

std::string_view to_string(VariantKind k) noexcept;
VariantKind parse_variant_kind(std::string_view s);

struct PredictionDraft {
  double start = 0.0;
  double end = 0.0;
  VariantKind kind = VariantKind::insertion;
  double deviation = 0.0;  // |mean insert size - mu|
  std::size_t support = 0;
};

struct Prediction {
  double start = 0.0;
  double end = 0.0;
  VariantKind kind = VariantKind::insertion;
  double p_value = 1.0;
  std::size_t support = 0;
  double deviation = 0.0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Benjamini-Hochberg step-up: the largest m such that the m-th smallest
// p-value is <= rate * m / total. Returns the original indices of those m
// p-values, ascending. `total` is the number of candidates the rate is
// spread over and may exceed pvalues.size().
std::vector<std::size_t> bh_select(std::span<const double> pvalues, double rate,
                                   std::size_t total);

// Greedy by ascending p-value (then start): keep a prediction iff its
// [start, end) misses every prediction kept so far. Output in that order.
std::vector<Prediction> remove_overlaps(std::span<const Prediction> preds);

// Span is the common intersection of the member reads, or the lower-median
// left and right endpoints when the intersection is empty. Mean insert size
// below mu reads as an insertion.
PredictionDraft summarize_cluster(std::span<const Vertex> cluster,
                                  std::span<const Read> reads,
                                  const AlignParams& p);

// p-values taken verbatim (external) or from a two-sided z-test of the mean
// deviation against sigma / sqrt(support). The z-test is a stand-in for the
// unpublished per-cluster statistics.
enum class PValueMode { external, placeholder };

std::vector<Prediction> attach_pvalues(std::span<const PredictionDraft> drafts,
                                       PValueMode mode,
                                       std::span<const double> external,
                                       const AlignParams& p);

double placeholder_pvalue(const PredictionDraft& d, const AlignParams& p);

// BH applied to insertions and deletions separately, each over its own
// candidate count.
std::vector<Prediction> fdr_filter(std::span<const Prediction> preds,
                                   double rate);

struct SimEvent {
  double position = 0.0;
  VariantKind kind = VariantKind::deletion;
  double length = 0.0;

  // Reference footprint: the deleted bases, or the insertion point.
  double footprint_end() const noexcept {
    return kind == VariantKind::deletion ? position + length : position;
  }
};

struct SimConfig {
  double genome_length = 1e6;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  // Place every read across a uniformly chosen event instead of uniformly
  // over the genome.
  bool force_span = false;
};

struct SimResult {
  std::vector<Read> reads;            // sorted by left, ids 0..n-1
  std::vector<double> true_length;    // fragment length before event shifts
  std::vector<std::int32_t> spanned;  // first event spanned, -1 for none
};

// Fragment lengths ~ N(mu, sigma), left endpoints uniform. A read whose span
// contains an event position looks longer by the event length (deletion) or
// shorter (insertion); draws that would end up non-positive are redrawn.
SimResult simulate_reads(const SimConfig& config,
                         std::span<const SimEvent> events,
                         const AlignParams& p);

}  // namespace clusteredit
