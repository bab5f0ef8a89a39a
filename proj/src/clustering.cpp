#include "clusteredit/clustering.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "clusteredit/error.hpp"

namespace clusteredit {

namespace detail {

ClusterIndex index_clusters(const Clustering& c, std::size_t n) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ClusterIndex idx{std::vector<std::uint32_t>(n, kUnset),
                   std::vector<std::uint32_t>(n, 0)};
  std::size_t seen = 0;
  for (std::size_t ci = 0; ci < c.clusters.size(); ++ci) {
    const auto& members = c.clusters[ci];
    if (members.empty()) throw InputError("clustering has an empty cluster");
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Vertex v = members[k];
      if (v >= n) {
        throw InputError("vertex " + std::to_string(v) +
                         " out of range in clustering");
      }
      if (idx.label[v] != kUnset) {
        throw InputError("vertex " + std::to_string(v) +
                         " appears in more than one cluster");
      }
      idx.label[v] = static_cast<std::uint32_t>(ci);
      idx.slot[v] = static_cast<std::uint32_t>(k);
      ++seen;
    }
  }
  if (seen != n) {
    throw InputError("clustering covers " + std::to_string(seen) + " of " +
                     std::to_string(n) + " vertices");
  }
  return idx;
}

}  // namespace detail

std::vector<std::uint32_t> cluster_labels(const Clustering& c, std::size_t n) {
  return detail::index_clusters(c, n).label;
}

Clustering canonical(Clustering c) {
  for (auto& members : c.clusters) std::sort(members.begin(), members.end());
  std::sort(c.clusters.begin(), c.clusters.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return c;
}

}  // namespace clusteredit
