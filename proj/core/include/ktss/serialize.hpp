#ifndef KTSS_SERIALIZE_HPP
#define KTSS_SERIALIZE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ktss/canonical.hpp"
#include "ktss/clustering.hpp"
#include "ktss/dfa.hpp"
#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace ktss {

/// All emitters produce byte-deterministic output: JSON with sorted keys and
/// lexicographically sorted string arrays, LF line endings, UTF-8, and a
/// trailing newline; DOT with stable node order.

std::string vector_to_json(const KTestVector& vector,
                           const SymbolCodec& codec);
std::string vectors_to_json(std::span<const KTestVector> vectors,
                            const SymbolCodec& codec);

/// Throws ParseError on malformed documents, LengthViolation on misfiled
/// component words.
KTestVector vector_from_json(std::string_view text, SymbolCodec& codec);
std::vector<KTestVector> vectors_from_json(std::string_view text,
                                           SymbolCodec& codec);

/// The learn result document: k, sorted alphabet, input words in file order,
/// linkage rows in merge order, and final clusters in ascending node id.
std::string result_to_json(int k, std::span<const std::string> word_lines,
                           std::span<const Word> words,
                           const Linkage& linkage,
                           const Clustering& clustering,
                           const SymbolCodec& codec);

std::string dfa_to_dot(const Dfa& dfa, const SymbolCodec& codec);
std::string graph_to_dot(const CompatibilityGraph& graph,
                         const SymbolCodec& codec);
/// Leaves keep their input strings as labels; merged nodes are labeled with
/// the merge distance.
std::string dendrogram_to_dot(std::span<const std::string> leaf_labels,
                              const Linkage& linkage);

}  // namespace ktss

#endif  // KTSS_SERIALIZE_HPP
