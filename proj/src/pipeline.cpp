#include "clusteredit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "clusteredit/error.hpp"
#include "clusteredit/normal.hpp"

namespace clusteredit {

std::string_view to_string(VariantKind k) noexcept {
  return k == VariantKind::insertion ? "insertion" : "deletion";
}

VariantKind parse_variant_kind(std::string_view s) {
  if (s == "insertion" || s == "INS" || s == "ins") return VariantKind::insertion;
  if (s == "deletion" || s == "DEL" || s == "del") return VariantKind::deletion;
  throw InputError("unknown variant kind '" + std::string(s) + "'");
}

std::vector<std::size_t> bh_select(std::span<const double> pvalues, double rate,
                                   std::size_t total) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw InputError("FDR rate must lie in (0, 1]");
  }
  if (total < pvalues.size()) {
    throw InputError("candidate count is smaller than the number of p-values");
  }
  std::vector<std::size_t> idx(pvalues.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pvalues[a] < pvalues[b];
  });
  std::size_t m = 0;
  for (std::size_t k = idx.size(); k > 0; --k) {
    const double bound = rate * static_cast<double>(k) / static_cast<double>(total);
    if (pvalues[idx[k - 1]] <= bound) {
      m = k;
      break;
    }
  }
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<Prediction> remove_overlaps(std::span<const Prediction> preds) {
  std::vector<Prediction> sorted(preds.begin(), preds.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Prediction& a, const Prediction& b) {
                     return a.p_value != b.p_value ? a.p_value < b.p_value
                                                   : a.start < b.start;
                   });
  // Kept intervals are pairwise disjoint, so keyed by start they are also
  // ordered by end; only the neighbours of a new start can collide with it.
  std::map<double, double> kept;
  std::vector<Prediction> out;
  for (const auto& p : sorted) {
    auto it = kept.lower_bound(p.start);
    if (it != kept.end() && it->first < p.end) continue;
    if (it != kept.begin() && std::prev(it)->second > p.start) continue;
    kept.emplace(p.start, p.end);
    out.push_back(p);
  }
  return out;
}

PredictionDraft summarize_cluster(std::span<const Vertex> cluster,
                                  std::span<const Read> reads,
                                  const AlignParams& p) {
  if (cluster.empty()) throw InputError("cannot summarize an empty cluster");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double length_sum = 0.0;
  std::vector<double> lefts, rights;
  lefts.reserve(cluster.size());
  rights.reserve(cluster.size());
  for (const Vertex v : cluster) {
    if (v >= reads.size()) throw InputError("cluster vertex out of range");
    const Read& r = reads[v];
    lo = std::max(lo, r.left);
    hi = std::min(hi, r.right());
    length_sum += r.length;
    lefts.push_back(r.left);
    rights.push_back(r.right());
  }
  PredictionDraft d;
  if (hi > lo) {
    d.start = lo;
    d.end = hi;
  } else {
    const std::size_t mid = (cluster.size() - 1) / 2;
    std::nth_element(lefts.begin(), lefts.begin() + mid, lefts.end());
    std::nth_element(rights.begin(), rights.begin() + mid, rights.end());
    d.start = lefts[mid];
    d.end = rights[mid];
  }
  const double mean = length_sum / static_cast<double>(cluster.size());
  d.kind = mean < p.mu ? VariantKind::insertion : VariantKind::deletion;
  d.deviation = std::fabs(mean - p.mu);
  d.support = cluster.size();
  return d;
}

double placeholder_pvalue(const PredictionDraft& d, const AlignParams& p) {
  const double z =
      d.deviation / (p.sigma / std::sqrt(static_cast<double>(d.support)));
  return std_normal_two_sided(z);
}

std::vector<Prediction> attach_pvalues(std::span<const PredictionDraft> drafts,
                                       PValueMode mode,
                                       std::span<const double> external,
                                       const AlignParams& p) {
  if (mode == PValueMode::external && external.size() != drafts.size()) {
    throw InputError("got " + std::to_string(external.size()) +
                     " p-values for " + std::to_string(drafts.size()) +
                     " clusters");
  }
  std::vector<Prediction> out;
  out.reserve(drafts.size());
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    const auto& d = drafts[i];
    const double pv = mode == PValueMode::external ? external[i]
                                                   : placeholder_pvalue(d, p);
    if (!(pv >= 0.0 && pv <= 1.0)) {
      throw InputError("p-value " + std::to_string(pv) + " outside [0, 1]");
    }
    out.push_back({d.start, d.end, d.kind, pv, d.support, d.deviation});
  }
  return out;
}

std::vector<Prediction> fdr_filter(std::span<const Prediction> preds,
                                   double rate) {
  std::vector<Prediction> out;
  for (const auto kind : {VariantKind::insertion, VariantKind::deletion}) {
    std::vector<std::size_t> members;
    std::vector<double> pv;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (preds[i].kind != kind) continue;
      members.push_back(i);
      pv.push_back(preds[i].p_value);
    }
    for (const std::size_t k : bh_select(pv, rate, pv.size())) {
      out.push_back(preds[members[k]]);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.start < b.start; });
  return out;
}

SimResult simulate_reads(const SimConfig& config,
                         std::span<const SimEvent> events,
                         const AlignParams& p) {
  p.validate();
  if (!(config.genome_length > 0.0)) throw InputError("genome length must be positive");
  std::vector<std::size_t> perm(events.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return events[a].position < events[b].position;
  });
  std::vector<SimEvent> sorted;
  sorted.reserve(events.size());
  for (const std::size_t k : perm) sorted.push_back(events[k]);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& e = sorted[i];
    if (!(e.length > 0.0)) throw InputError("event lengths must be positive");
    if (e.position < 0.0 || e.footprint_end() > config.genome_length) {
      throw InputError("event at " + std::to_string(e.position) +
                       " lies outside the genome");
    }
    if (i > 0 && e.position <= sorted[i - 1].footprint_end()) {
      throw InputError("events at " + std::to_string(sorted[i - 1].position) +
                       " and " + std::to_string(e.position) + " overlap");
    }
  }
  if (config.force_span && sorted.empty() && config.n > 0) {
    throw InputError("force_span needs at least one event");
  }

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> fragment(p.mu, p.sigma);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(
      0, sorted.empty() ? 0 : sorted.size() - 1);

  struct Draw {
    double left, apparent, true_length;
    std::int32_t event;
  };
  std::vector<Draw> draws;
  draws.reserve(config.n);
  while (draws.size() < config.n) {
    const double len = fragment(rng);
    if (!(len > 0.0) || len >= config.genome_length) continue;
    double left;
    if (config.force_span) {
      const auto& e = sorted[pick(rng)];
      left = e.position - len * unit(rng);
      if (left <= e.position - len) continue;
    } else {
      left = unit(rng) * (config.genome_length - len);
    }
    double apparent = len;
    std::int32_t first = -1;
    // Events are sorted and disjoint; scan the ones inside (left, left + len).
    auto it = std::upper_bound(
        sorted.begin(), sorted.end(), left,
        [](double x, const SimEvent& e) { return x < e.position; });
    for (; it != sorted.end() && it->position < left + len; ++it) {
      apparent += it->kind == VariantKind::deletion ? it->length : -it->length;
      if (first < 0) {
        first = static_cast<std::int32_t>(perm[it - sorted.begin()]);
      }
    }
    if (!(apparent > 0.0)) continue;
    draws.push_back({left, apparent, len, first});
  }
  std::sort(draws.begin(), draws.end(),
            [](const auto& a, const auto& b) { return a.left < b.left; });

  SimResult out;
  out.reads.reserve(draws.size());
  for (std::size_t i = 0; i < draws.size(); ++i) {
    out.reads.push_back({static_cast<std::int64_t>(i), draws[i].left,
                         draws[i].apparent});
    out.true_length.push_back(draws[i].true_length);
    out.spanned.push_back(draws[i].event);
  }
  return out;
}

}  // namespace clusteredit
