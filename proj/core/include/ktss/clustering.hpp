#ifndef KTSS_CLUSTERING_HPP
#define KTSS_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace ktss {

/// One merge record. Leaves are numbered 0..m-1 in input order; each merge
/// creates node m, m+1, ... The stored distance is the metric distance
/// between the two child vectors at merge time.
struct LinkageRow {
  std::int32_t left;
  std::int32_t right;
  std::size_t distance;
  std::int32_t merged;

  friend bool operator==(const LinkageRow&, const LinkageRow&) = default;
};

struct Linkage {
  std::int32_t leaf_count = 0;
  std::vector<LinkageRow> rows;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

/// A flat cluster: the node id it was cut at, the joined vector, and the
/// sorted original word indices it covers.
struct ClusterNode {
  std::int32_t id;
  KTestVector vector;
  std::vector<std::int32_t> members;

  friend bool operator==(const ClusterNode&, const ClusterNode&) = default;
};

struct Clustering {
  std::vector<ClusterNode> clusters;  // ascending id
  /// False when the requested cluster count was not achievable (fewer
  /// mergeable nodes remained, or the request exceeded the leaf count).
  bool reached_target = true;
};

/// Pairwise metric distances; M[i][j] = d(S[i], S[j]), zero diagonal.
std::vector<std::vector<std::size_t>> distance_matrix(
    std::span<const KTestVector> vectors);

/// Nearest-neighbor-chain agglomeration restricted to compatible merges.
/// The neighbor relation uses the lifted distance d*(x,y): the metric
/// distance when the union of x and y is exact, +infinity otherwise. Chains
/// follow the argmin (ties prefer the chain predecessor, then the smallest
/// id) until a reciprocal pair with finite d* is found; the pair is replaced
/// by its join and distances to the new node are recomputed from the joined
/// vector. Stops when one node remains or no active pair has finite d*.
Linkage nn_chain_linkage(std::span<const KTestVector> vectors);

/// Replays merges in order until `target` active nodes remain. target >= m
/// returns all singletons; if every row is consumed while still above the
/// target, the final clustering is returned with reached_target = false.
/// Throws InvalidTarget when target < 1.
Clustering cut(std::span<const KTestVector> leaves, const Linkage& linkage,
               std::int32_t target);

/// The full pipeline: per-word vectors, linkage, then a cut. Without a
/// target the natural stopping point is returned (all rows applied).
Clustering learn_union(std::span<const Word> sample, int k,
                       std::optional<std::int32_t> target = std::nullopt);

/// The baseline union learner: one vector per distinct word form, in first-
/// occurrence order. The represented language is the union of the members'
/// languages.
std::vector<KTestVector> naive_union(std::span<const Word> sample, int k);

}  // namespace ktss

#endif  // KTSS_CLUSTERING_HPP
