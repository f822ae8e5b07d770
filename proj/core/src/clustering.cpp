#include "ktss/clustering.hpp"

#include <algorithm>
#include <limits>

#include "ktss/canonical.hpp"
#include "ktss/errors.hpp"

namespace ktss {

namespace {

void require_shared_k(std::span<const KTestVector> vectors) {
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].k() != vectors[0].k()) {
      throw KMismatch("vectors in one sample must share the window size");
    }
  }
}

// Growable strict-lower-triangle distance store plus a compatibility cache
// with the same shape. Node ids are stable across merges, so both caches
// stay valid for the whole run.
class PairTables {
 public:
  void add_node() {
    const std::size_t n = distances_.size();
    distances_.emplace_back(n, 0);
    compatible_.emplace_back(n, kUnknown);
  }

  std::size_t& dist(std::int32_t a, std::int32_t b) {
    auto [lo, hi] = ordered(a, b);
    return distances_[hi][lo];
  }

  std::int8_t& compat(std::int32_t a, std::int32_t b) {
    auto [lo, hi] = ordered(a, b);
    return compatible_[hi][lo];
  }

  static constexpr std::int8_t kUnknown = -1;

 private:
  static std::pair<std::size_t, std::size_t> ordered(std::int32_t a,
                                                     std::int32_t b) {
    auto lo = static_cast<std::size_t>(std::min(a, b));
    auto hi = static_cast<std::size_t>(std::max(a, b));
    return {lo, hi};
  }

  std::vector<std::vector<std::size_t>> distances_;
  std::vector<std::vector<std::int8_t>> compatible_;
};

struct Node {
  KTestVector vector;
  std::vector<std::int32_t> members;
  bool active = true;
};

class ChainClusterer {
 public:
  explicit ChainClusterer(std::span<const KTestVector> leaves) {
    nodes_.reserve(leaves.size() * 2);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      tables_.add_node();
      nodes_.push_back(
          Node{leaves[i], {static_cast<std::int32_t>(i)}, true});
      for (std::size_t j = 0; j < i; ++j) {
        tables_.dist(static_cast<std::int32_t>(i),
                     static_cast<std::int32_t>(j)) =
            distance(leaves[i], leaves[j]);
      }
    }
    active_count_ = leaves.size();
  }

  Linkage run() {
    Linkage linkage;
    linkage.leaf_count = static_cast<std::int32_t>(nodes_.size());
    while (active_count_ > 1) {
      if (chain_.empty() && !seed_chain()) break;
      const std::int32_t top = chain_.back();
      const std::int32_t prev =
          chain_.size() >= 2 ? chain_[chain_.size() - 2] : -1;
      const std::int32_t next = nearest_compatible(top, prev);
      if (next < 0) {
        // A merge can deactivate every partner the surviving chain head had;
        // reseed from scratch.
        chain_.clear();
        continue;
      }
      if (next == prev) {
        merge(top, prev, linkage);
      } else {
        chain_.push_back(next);
      }
    }
    return linkage;
  }

 private:
  // Starts a chain at the smallest active node that can merge with anything.
  bool seed_chain() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!nodes_[i].active) continue;
      const auto id = static_cast<std::int32_t>(i);
      if (nearest_compatible(id, -1) >= 0) {
        chain_.assign(1, id);
        return true;
      }
    }
    return false;
  }

  // argmin over active nodes of the lifted distance d*, preferring
  // `preferred` on ties and then the smallest id. Compatibility is only
  // evaluated in ascending distance order, so most pairs are never checked.
  std::int32_t nearest_compatible(std::int32_t from, std::int32_t preferred) {
    candidates_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto id = static_cast<std::int32_t>(i);
      if (!nodes_[i].active || id == from) continue;
      candidates_.push_back(id);
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [&](std::int32_t a, std::int32_t b) {
                const std::size_t da = tables_.dist(a, from);
                const std::size_t db = tables_.dist(b, from);
                if (da != db) return da < db;
                if ((a == preferred) != (b == preferred)) return a == preferred;
                return a < b;
              });
    for (std::int32_t id : candidates_) {
      if (is_compatible(id, from)) return id;
    }
    return -1;
  }

  bool is_compatible(std::int32_t a, std::int32_t b) {
    std::int8_t& cached = tables_.compat(a, b);
    if (cached == PairTables::kUnknown) {
      cached = union_is_exact(nodes_[static_cast<std::size_t>(a)].vector,
                              nodes_[static_cast<std::size_t>(b)].vector)
                   ? 1
                   : 0;
    }
    return cached == 1;
  }

  void merge(std::int32_t a, std::int32_t b, Linkage& linkage) {
    const auto merged_id = static_cast<std::int32_t>(nodes_.size());
    const std::int32_t left = std::min(a, b);
    const std::int32_t right = std::max(a, b);
    linkage.rows.push_back(
        {left, right, tables_.dist(left, right), merged_id});

    Node merged;
    merged.vector = join(nodes_[static_cast<std::size_t>(a)].vector,
                         nodes_[static_cast<std::size_t>(b)].vector);
    merged.members = nodes_[static_cast<std::size_t>(left)].members;
    merged.members.insert(merged.members.end(),
                          nodes_[static_cast<std::size_t>(right)].members.begin(),
                          nodes_[static_cast<std::size_t>(right)].members.end());
    std::sort(merged.members.begin(), merged.members.end());

    nodes_[static_cast<std::size_t>(a)].active = false;
    nodes_[static_cast<std::size_t>(b)].active = false;
    tables_.add_node();
    nodes_.push_back(std::move(merged));
    --active_count_;

    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      if (!nodes_[i].active) continue;
      tables_.dist(merged_id, static_cast<std::int32_t>(i)) =
          distance(nodes_.back().vector, nodes_[i].vector);
    }

    // Drop the merged pair and everything the merge invalidated behind it.
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      if (chain_[i] == a || chain_[i] == b) {
        chain_.resize(i);
        break;
      }
    }
  }

  std::vector<Node> nodes_;
  PairTables tables_;
  std::vector<std::int32_t> chain_;
  std::vector<std::int32_t> candidates_;
  std::size_t active_count_ = 0;
};

}  // namespace

std::vector<std::vector<std::size_t>> distance_matrix(
    std::span<const KTestVector> vectors) {
  require_shared_k(vectors);
  const std::size_t n = vectors.size();
  std::vector<std::vector<std::size_t>> matrix(
      n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      matrix[i][j] = matrix[j][i] = distance(vectors[i], vectors[j]);
    }
  }
  return matrix;
}

Linkage nn_chain_linkage(std::span<const KTestVector> vectors) {
  require_shared_k(vectors);
  if (vectors.empty()) return {};
  return ChainClusterer(vectors).run();
}

Clustering cut(std::span<const KTestVector> leaves, const Linkage& linkage,
               std::int32_t target) {
  if (target < 1) throw InvalidTarget("cluster target must be >= 1");
  require_shared_k(leaves);

  std::vector<Node> nodes;
  nodes.reserve(leaves.size() + linkage.rows.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    nodes.push_back(Node{leaves[i], {static_cast<std::int32_t>(i)}, true});
  }
  auto active = static_cast<std::int32_t>(leaves.size());

  for (const LinkageRow& row : linkage.rows) {
    if (active <= target) break;
    if (row.left < 0 || row.right < 0 ||
        row.merged != static_cast<std::int32_t>(nodes.size()) ||
        row.left >= row.merged || row.right >= row.merged) {
      throw Error("linkage row references unknown node ids");
    }
    auto& left = nodes[static_cast<std::size_t>(row.left)];
    auto& right = nodes[static_cast<std::size_t>(row.right)];
    if (!left.active || !right.active) {
      throw Error("linkage row reuses an already merged node");
    }
    Node merged;
    merged.vector = join(left.vector, right.vector);
    merged.members = left.members;
    merged.members.insert(merged.members.end(), right.members.begin(),
                          right.members.end());
    std::sort(merged.members.begin(), merged.members.end());
    left.active = false;
    right.active = false;
    nodes.push_back(std::move(merged));
    --active;
  }

  Clustering out;
  out.reached_target = active == target;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].active) {
      out.clusters.push_back(ClusterNode{static_cast<std::int32_t>(i),
                                         nodes[i].vector, nodes[i].members});
    }
  }
  return out;
}

Clustering learn_union(std::span<const Word> sample, int k,
                       std::optional<std::int32_t> target) {
  std::vector<KTestVector> leaves;
  leaves.reserve(sample.size());
  for (const Word& w : sample) {
    leaves.push_back(extract(k, std::span<const Word>(&w, 1)));
  }
  const Linkage linkage = nn_chain_linkage(leaves);
  if (target.has_value()) return cut(leaves, linkage, *target);
  Clustering out = cut(leaves, linkage, 1);
  out.reached_target = true;  // no cut requested: the natural stop is the answer
  return out;
}

std::vector<KTestVector> naive_union(std::span<const Word> sample, int k) {
  std::vector<KTestVector> out;
  for (const Word& w : sample) {
    KTestVector v = extract(k, std::span<const Word>(&w, 1));
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace ktss
