#ifndef KTSS_CANONICAL_HPP
#define KTSS_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace ktss {

enum class VertexColor : std::uint8_t { red, blue, white };
enum class VertexKind : std::uint8_t { start, segment, end };

/// One vertex of the overlap graph: •u for an allowed prefix, the segment
/// word itself, or u• for an allowed suffix. `word` stores u (the marker is
/// implied by the kind).
struct GraphVertex {
  VertexKind kind;
  Word word;
  VertexColor color;
};

/// The colored overlap graph of two canonical k-test vectors. Edges connect
/// au -> ub for a, b in Σ ∪ {•}; a word of length >= k-1 in the joined
/// language corresponds one-to-one to a start→end path. The union of the two
/// languages is itself strictly k-testable iff no path connects a red vertex
/// (left-only element) to a blue one (right-only element) in either
/// direction.
class CompatibilityGraph {
 public:
  /// Requires canonical inputs with equal k >= 2; throws NotCanonical or
  /// KMismatch otherwise.
  static CompatibilityGraph build(const KTestVector& left,
                                  const KTestVector& right);

  int k() const { return k_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const GraphVertex& vertex(std::size_t index) const {
    return vertices_[index];
  }
  const std::vector<std::uint32_t>& successors(std::size_t index) const {
    return adjacency_[index];
  }

  /// True iff no red vertex reaches a blue one and no blue vertex reaches a
  /// red one (two multi-source breadth-first passes).
  bool exact_union() const;

 private:
  static CompatibilityGraph build_unchecked(const KTestVector& left,
                                            const KTestVector& right);
  friend bool union_is_exact(const KTestVector&, const KTestVector&);

  int k_ = 2;
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// True iff the vector has no junk: every prefix, suffix, and segment occurs
/// in some word of the denoted language.
bool is_canonical(const KTestVector& vector);

/// Removes junk prefixes, suffixes, and segments: keeps exactly the elements
/// lying on a start→end path of the vector's own overlap graph. The result
/// denotes the same language, is below the input in the componentwise order,
/// and is the least vector with that language.
KTestVector canonicalize(const KTestVector& vector);

/// Decides whether the union of the two denoted languages equals the
/// language of the joined vector. Inputs are canonicalized internally; the
/// decision additionally rules out words manufactured purely by junk from
/// the two raw vectors combining in the join. k = 1 degenerates the graph
/// encoding and is decided by the DFA oracle instead.
bool union_is_exact(const KTestVector& lhs, const KTestVector& rhs);

}  // namespace ktss

#endif  // KTSS_CANONICAL_HPP
