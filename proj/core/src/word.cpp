#include "ktss/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "ktss/errors.hpp"

namespace ktss {

WordSet& normalize_set(WordSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool set_contains(const WordSet& set, WordView word) {
  return std::binary_search(set.begin(), set.end(), word,
                            [](WordView a, WordView b) { return a < b; });
}

bool is_subset(const WordSet& lhs, const WordSet& rhs) {
  return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

WordSet set_union_of(const WordSet& lhs, const WordSet& rhs) {
  WordSet out;
  out.reserve(lhs.size() + rhs.size());
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                 std::back_inserter(out));
  return out;
}

WordSet set_intersection_of(const WordSet& lhs, const WordSet& rhs) {
  WordSet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(out));
  return out;
}

WordSet set_symmetric_difference_of(const WordSet& lhs, const WordSet& rhs) {
  WordSet out;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(),
                                rhs.end(), std::back_inserter(out));
  return out;
}

std::size_t symmetric_difference_size(const WordSet& lhs, const WordSet& rhs) {
  std::size_t count = 0;
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() && b != rhs.end()) {
    if (*a < *b) {
      ++count;
      ++a;
    } else if (*b < *a) {
      ++count;
      ++b;
    } else {
      ++a;
      ++b;
    }
  }
  count += static_cast<std::size_t>(lhs.end() - a);
  count += static_cast<std::size_t>(rhs.end() - b);
  return count;
}

bool length_lex_less(WordView lhs, WordView rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::size_t materialization_cap() {
  static constexpr std::size_t kDefault = 1'000'000;
  const char* env = std::getenv("KTSS_SIZE_GUARD");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) return kDefault;
  return static_cast<std::size_t>(value);
}

Word utf8_decode(std::string_view text) {
  Word out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t extra = 0;
    if (byte < 0x80) {
      cp = byte;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      extra = 1;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      extra = 2;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      extra = 3;
    } else {
      throw ParseError("invalid UTF-8 lead byte");
    }
    if (extra > 0 && i + extra >= text.size()) {
      throw ParseError("truncated UTF-8 sequence");
    }
    for (std::size_t j = 1; j <= extra; ++j) {
      const auto cont = static_cast<unsigned char>(text[i + j]);
      if ((cont & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation");
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Reject overlong encodings and surrogate code points.
    static constexpr char32_t kMinForLen[4] = {0, 0x80, 0x800, 0x10000};
    if (extra > 0 && cp < kMinForLen[extra]) {
      throw ParseError("overlong UTF-8 encoding");
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) throw ParseError("UTF-8 surrogate");
    if (cp > 0x10FFFF) throw ParseError("UTF-8 code point out of range");
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string utf8_encode_symbol(Symbol symbol) {
  std::string out;
  const auto cp = static_cast<std::uint32_t>(symbol);
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string utf8_encode(WordView word) {
  std::string out;
  for (Symbol s : word) out += utf8_encode_symbol(s);
  return out;
}

Word SymbolCodec::decode(std::string_view text) {
  if (!separator_) return utf8_decode(text);
  Word out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(*separator_, start);
    std::string_view token = text.substr(
        start, pos == std::string_view::npos ? std::string_view::npos
                                             : pos - start);
    if (token.empty()) throw ParseError("empty token between separators");
    std::string key(token);
    auto it = token_ids_.find(key);
    if (it == token_ids_.end()) {
      utf8_decode(token);  // token contents must still be valid UTF-8
      const auto id = static_cast<Symbol>(tokens_.size());
      tokens_.push_back(key);
      it = token_ids_.emplace(std::move(key), id).first;
    }
    out.push_back(it->second);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string SymbolCodec::encode(WordView word) const {
  if (!separator_) return utf8_encode(word);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out.push_back(*separator_);
    out += encode_symbol(word[i]);
  }
  return out;
}

std::string SymbolCodec::encode_symbol(Symbol symbol) const {
  if (!separator_) return utf8_encode_symbol(symbol);
  const auto id = static_cast<std::size_t>(symbol);
  if (id >= tokens_.size()) throw Error("symbol id outside codec table");
  return tokens_[id];
}

}  // namespace ktss
