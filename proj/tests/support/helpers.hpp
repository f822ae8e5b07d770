#ifndef KTSS_TESTS_SUPPORT_HELPERS_HPP
#define KTSS_TESTS_SUPPORT_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace ktss::testing {

inline Word word(const std::string& ascii) {
  return Word(ascii.begin(), ascii.end());
}

inline std::vector<Word> words(std::initializer_list<std::string> items) {
  std::vector<Word> out;
  for (const auto& s : items) out.push_back(word(s));
  return out;
}

inline WordSet word_set(std::initializer_list<std::string> items) {
  WordSet out;
  for (const auto& s : items) out.push_back(word(s));
  normalize_set(out);
  return out;
}

inline KTestVector vec(int k, std::initializer_list<std::string> prefixes,
                       std::initializer_list<std::string> suffixes,
                       std::initializer_list<std::string> segments,
                       std::initializer_list<std::string> shorts = {}) {
  return KTestVector::make(k, word_set(prefixes), word_set(suffixes),
                           word_set(segments), word_set(shorts));
}

inline KTestVector from_sample(int k,
                               std::initializer_list<std::string> sample) {
  const std::vector<Word> ws = words(sample);
  return extract(k, ws);
}

// ---- randomized input generation ------------------------------------------

using Rng = std::mt19937_64;

inline std::vector<Symbol> alphabet_of_size(std::size_t n) {
  std::vector<Symbol> sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back(U'a' + i);
  return sigma;
}

inline Word random_word(Rng& rng, std::span<const Symbol> sigma,
                        std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(sigma[pick(rng)]);
  return out;
}

inline Word random_word_up_to(Rng& rng, std::span<const Symbol> sigma,
                              std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word(rng, sigma, len(rng));
}

inline WordSet random_word_set(Rng& rng, std::span<const Symbol> sigma,
                               std::size_t word_length,
                               std::size_t max_elements) {
  std::uniform_int_distribution<std::size_t> count(0, max_elements);
  WordSet out;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(random_word(rng, sigma, word_length));
  }
  normalize_set(out);
  return out;
}

// A random syntactically valid vector; usually carries junk, which is what
// the canonicalization and oracle suites want to see.
inline KTestVector random_vector(Rng& rng, int k,
                                 std::span<const Symbol> sigma,
                                 std::size_t max_component = 6) {
  WordSet shorts;
  if (k >= 2) {
    std::uniform_int_distribution<std::size_t> count(0, max_component);
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> len(0,
                                                     static_cast<std::size_t>(k - 2));
      shorts.push_back(random_word(rng, sigma, len(rng)));
    }
    normalize_set(shorts);
  }
  return KTestVector::make(
      k,
      random_word_set(rng, sigma, static_cast<std::size_t>(k - 1),
                      max_component),
      random_word_set(rng, sigma, static_cast<std::size_t>(k - 1),
                      max_component),
      random_word_set(rng, sigma, static_cast<std::size_t>(k), max_component),
      std::move(shorts));
}

// A random vector obtained from a sample; canonical and junk-free.
inline KTestVector random_sample_vector(Rng& rng, int k,
                                        std::span<const Symbol> sigma,
                                        std::size_t max_words = 4,
                                        std::size_t max_len = 8) {
  std::uniform_int_distribution<std::size_t> count(1, max_words);
  std::vector<Word> sample;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    sample.push_back(random_word_up_to(rng, sigma, max_len));
  }
  return extract(k, sample);
}

// ---- independent oracle: exhaustive membership ----------------------------

// Every word over sigma with length <= max_len that the vector contains,
// length-lex sorted. Pure recursion over the raw membership predicate; no
// automaton involved.
inline std::vector<Word> brute_force_language(const KTestVector& vector,
                                              std::span<const Symbol> sigma,
                                              std::size_t max_len) {
  std::vector<Word> out;
  Word current;
  auto visit = [&](auto&& self) -> void {
    if (vector.contains(current)) out.push_back(current);
    if (current.size() == max_len) return;
    for (Symbol s : sigma) {
      current.push_back(s);
      self(self);
      current.pop_back();
    }
  };
  visit(visit);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return length_lex_less(a, b);
  });
  return out;
}

}  // namespace ktss::testing

#endif  // KTSS_TESTS_SUPPORT_HELPERS_HPP
