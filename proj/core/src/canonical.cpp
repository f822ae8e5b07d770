#include "ktss/canonical.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ktss/dfa.hpp"
#include "ktss/errors.hpp"

namespace ktss {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<Word>{}(w); }
};

// Shared overlap-reachability core for one or two vectors. Vertices are laid
// out as [starts | segments | ends], each block sorted by word for stable
// ids. Successor lookup is by the source's trailing k-1 symbols: a source can
// be extended by any segment whose head matches, or closed by the matching
// end vertex.
struct OverlapGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::size_t start_count = 0;
  std::size_t segment_count = 0;

  std::size_t end_begin() const { return start_count + segment_count; }

  void build(const WordSet& starts, const WordSet& segments,
             const WordSet& ends, std::size_t overlap_len) {
    vertices.reserve(starts.size() + segments.size() + ends.size());
    for (const Word& w : starts) {
      vertices.push_back({VertexKind::start, w, VertexColor::white});
    }
    for (const Word& w : segments) {
      vertices.push_back({VertexKind::segment, w, VertexColor::white});
    }
    for (const Word& w : ends) {
      vertices.push_back({VertexKind::end, w, VertexColor::white});
    }
    start_count = starts.size();
    segment_count = segments.size();

    std::unordered_map<Word, std::vector<std::uint32_t>, WordHash> by_head;
    for (std::size_t i = 0; i < segment_count; ++i) {
      const std::size_t id = start_count + i;
      by_head[vertices[id].word.substr(0, overlap_len)].push_back(
          static_cast<std::uint32_t>(id));
    }
    std::unordered_map<Word, std::uint32_t, WordHash> end_ids;
    for (std::size_t i = end_begin(); i < vertices.size(); ++i) {
      end_ids.emplace(vertices[i].word, static_cast<std::uint32_t>(i));
    }

    adjacency.assign(vertices.size(), {});
    for (std::size_t id = 0; id < end_begin(); ++id) {
      const GraphVertex& v = vertices[id];
      const Word tail = v.kind == VertexKind::start
                            ? v.word
                            : v.word.substr(v.word.size() - overlap_len);
      auto seg = by_head.find(tail);
      if (seg != by_head.end()) adjacency[id] = seg->second;
      auto end = end_ids.find(tail);
      if (end != end_ids.end()) adjacency[id].push_back(end->second);
    }
  }

  // Iterative multi-source forward reachability.
  std::vector<bool> reach_forward(const std::vector<std::uint32_t>& sources)
      const {
    std::vector<bool> seen(vertices.size(), false);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : sources) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t w : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

  std::vector<bool> reach_backward(const std::vector<std::uint32_t>& sources)
      const {
    std::vector<std::vector<std::uint32_t>> reverse(vertices.size());
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
      for (std::uint32_t w : adjacency[v]) {
        reverse[w].push_back(static_cast<std::uint32_t>(v));
      }
    }
    std::vector<bool> seen(vertices.size(), false);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : sources) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t w : reverse[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }
};

}  // namespace

KTestVector canonicalize(const KTestVector& vector) {
  const auto overlap = static_cast<std::size_t>(vector.k() - 1);
  OverlapGraph graph;
  graph.build(vector.prefixes(), vector.segments(), vector.suffixes(),
              overlap);

  std::vector<std::uint32_t> starts, ends;
  for (std::uint32_t i = 0; i < graph.start_count; ++i) starts.push_back(i);
  for (auto i = static_cast<std::uint32_t>(graph.end_begin());
       i < graph.vertices.size(); ++i) {
    ends.push_back(i);
  }
  const std::vector<bool> forward = graph.reach_forward(starts);
  const std::vector<bool> backward = graph.reach_backward(ends);

  // A prefix survives iff its start vertex reaches some end (the direct
  // •u -> u• edge covers words of length exactly k-1); suffixes dually; a
  // segment must lie on a full start→end path. Short strings are always in
  // the language and never junk.
  WordSet prefixes, suffixes, segments;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const GraphVertex& v = graph.vertices[i];
    switch (v.kind) {
      case VertexKind::start:
        if (backward[i]) prefixes.push_back(v.word);
        break;
      case VertexKind::segment:
        if (forward[i] && backward[i]) segments.push_back(v.word);
        break;
      case VertexKind::end:
        if (forward[i]) suffixes.push_back(v.word);
        break;
    }
  }
  return KTestVector(KTestVector::Unchecked{}, vector.k(),
                     std::move(prefixes), std::move(suffixes),
                     std::move(segments), WordSet(vector.short_strings()));
}

bool is_canonical(const KTestVector& vector) {
  return canonicalize(vector) == vector;
}

CompatibilityGraph CompatibilityGraph::build_unchecked(
    const KTestVector& left, const KTestVector& right) {
  CompatibilityGraph out;
  out.k_ = left.k();
  const auto overlap = static_cast<std::size_t>(left.k() - 1);

  OverlapGraph graph;
  graph.build(set_union_of(left.prefixes(), right.prefixes()),
              set_union_of(left.segments(), right.segments()),
              set_union_of(left.suffixes(), right.suffixes()), overlap);

  auto color = [](const WordSet& in_left, const WordSet& in_right,
                  const Word& w) {
    const bool l = set_contains(in_left, w);
    const bool r = set_contains(in_right, w);
    return l && r ? VertexColor::white
                  : (l ? VertexColor::red : VertexColor::blue);
  };
  for (GraphVertex& v : graph.vertices) {
    switch (v.kind) {
      case VertexKind::start:
        v.color = color(left.prefixes(), right.prefixes(), v.word);
        break;
      case VertexKind::segment:
        v.color = color(left.segments(), right.segments(), v.word);
        break;
      case VertexKind::end:
        v.color = color(left.suffixes(), right.suffixes(), v.word);
        break;
    }
  }
  out.vertices_ = std::move(graph.vertices);
  out.adjacency_ = std::move(graph.adjacency);
  return out;
}

CompatibilityGraph CompatibilityGraph::build(const KTestVector& left,
                                             const KTestVector& right) {
  if (left.k() != right.k()) {
    throw KMismatch("window sizes differ: " + std::to_string(left.k()) +
                    " vs " + std::to_string(right.k()));
  }
  if (left.k() < 2) {
    throw NotCanonical("the overlap graph is defined for k >= 2");
  }
  if (!is_canonical(left) || !is_canonical(right)) {
    throw NotCanonical("compatibility graph requires canonical vectors");
  }
  return build_unchecked(left, right);
}

bool CompatibilityGraph::exact_union() const {
  auto reaches_color = [this](VertexColor from, VertexColor target) {
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<std::uint32_t> queue;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].color == from) {
        seen[i] = true;
        queue.push_back(static_cast<std::uint32_t>(i));
      }
    }
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      if (vertices_[v].color == target) return true;
      for (std::uint32_t w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return false;
  };
  return !reaches_color(VertexColor::red, VertexColor::blue) &&
         !reaches_color(VertexColor::blue, VertexColor::red);
}

bool union_is_exact(const KTestVector& lhs, const KTestVector& rhs) {
  if (lhs.k() != rhs.k()) {
    throw KMismatch("window sizes differ: " + std::to_string(lhs.k()) +
                    " vs " + std::to_string(rhs.k()));
  }
  if (lhs.k() == 1) {
    // Zero-length overlaps collapse the graph; the DFA oracle is cheap here.
    const Dfa joint = to_dfa(join(lhs, rhs));
    return dfa_equivalent(joint, dfa_union(to_dfa(lhs), to_dfa(rhs)));
  }
  const KTestVector left = canonicalize(lhs);
  const KTestVector right = canonicalize(rhs);
  // The hard part: γ(L)∪γ(R) ⊆ γ(left⊔right) ⊆ γ(L⊔R), so the union is
  // exact iff the canonical join adds nothing (graph coloring) and the raw
  // join adds nothing beyond the canonical join (junk from the two raw
  // vectors may combine into new words; equal kernels mean equal languages).
  if (!CompatibilityGraph::build_unchecked(left, right).exact_union()) {
    return false;
  }
  const KTestVector canonical_join = join(left, right);
  return canonicalize(join(lhs, rhs)) == canonicalize(canonical_join);
}

}  // namespace ktss
