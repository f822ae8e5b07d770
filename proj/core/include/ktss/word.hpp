#ifndef KTSS_WORD_HPP
#define KTSS_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ktss/errors.hpp"

namespace ktss {

/// One atomic token: a Unicode scalar value in the default mode, or an
/// interned token id when a separator codec is in use. Only equality and
/// ordering matter to the algebra.
using Symbol = char32_t;

/// A finite sequence of symbols. The empty word has size 0.
using Word = std::u32string;
using WordView = std::u32string_view;

/// A finite set of words, stored sorted and duplicate-free so that
/// iteration order and serialization are deterministic.
using WordSet = std::vector<Word>;

/// Sorts and deduplicates in place.
WordSet& normalize_set(WordSet& set);

bool set_contains(const WordSet& set, WordView word);
bool is_subset(const WordSet& lhs, const WordSet& rhs);
WordSet set_union_of(const WordSet& lhs, const WordSet& rhs);
WordSet set_intersection_of(const WordSet& lhs, const WordSet& rhs);
WordSet set_symmetric_difference_of(const WordSet& lhs, const WordSet& rhs);
/// |lhs △ rhs| without building the set.
std::size_t symmetric_difference_size(const WordSet& lhs, const WordSet& rhs);

/// Orders by length first, then lexicographically by symbol value.
bool length_lex_less(WordView lhs, WordView rhs);

/// The element cap applied when an operation materializes a combinatorial
/// set (top vectors, bounded enumerations). Defaults to 10^6; the
/// KTSS_SIZE_GUARD environment variable overrides it.
std::size_t materialization_cap();

/// Strict UTF-8 decoding (rejects surrogates, overlong forms, stray bytes).
/// Throws ParseError on invalid input.
Word utf8_decode(std::string_view text);
std::string utf8_encode(WordView word);
std::string utf8_encode_symbol(Symbol symbol);

/// Maps between external strings and internal words. The default codec
/// treats every Unicode scalar as one symbol; a separator codec splits on a
/// delimiter character and interns each token, so multi-character symbols
/// (e.g. media-type names) become single alphabet elements.
class SymbolCodec {
 public:
  SymbolCodec() = default;
  explicit SymbolCodec(char separator) : separator_(separator) {}

  bool tokenized() const { return separator_.has_value(); }

  /// Interns unseen tokens in tokenized mode; throws ParseError on invalid
  /// UTF-8 or on empty tokens.
  Word decode(std::string_view text);

  std::string encode(WordView word) const;
  std::string encode_symbol(Symbol symbol) const;

 private:
  std::optional<char> separator_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> token_ids_;
};

}  // namespace ktss

#endif  // KTSS_WORD_HPP
