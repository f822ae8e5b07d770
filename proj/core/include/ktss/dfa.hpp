#ifndef KTSS_DFA_HPP
#define KTSS_DFA_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace ktss {

/// A deterministic finite automaton with partial transitions. Missing
/// transitions behave as an implicit rejecting sink; only states reachable
/// from the initial state are materialized. State 0 is the initial state.
class Dfa {
 public:
  using State = std::int32_t;
  static constexpr State kNoState = -1;

  explicit Dfa(std::vector<Symbol> alphabet);

  State add_state(bool accepting);
  void add_transition(State from, Symbol symbol, State to);

  State initial() const { return 0; }
  std::int32_t state_count() const {
    return static_cast<std::int32_t>(accepting_.size());
  }
  bool is_accepting(State s) const { return accepting_[static_cast<std::size_t>(s)]; }
  /// kNoState when the transition is absent.
  State step(State from, Symbol symbol) const;
  bool accepts(WordView word) const;

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  /// Sorted by symbol; deterministic iteration order.
  std::span<const std::pair<Symbol, State>> transitions_from(State s) const;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::pair<Symbol, State>>> transitions_;
};

/// The trimmed sliding-window acceptor for the vector's language: short
/// prefix states track the exact word read (up to length k-2) and window
/// states track the last k-1 symbols. Accepts exactly the words the vector
/// contains.
Dfa to_dfa(const KTestVector& vector);

/// Product automaton accepting L(lhs) ∪ L(rhs).
Dfa dfa_union(const Dfa& lhs, const Dfa& rhs);

/// Language equality via product reachability with implicit sinks.
bool dfa_equivalent(const Dfa& lhs, const Dfa& rhs);

/// Language equality restricted to words of length <= max_len.
bool dfa_equivalent_up_to(const Dfa& lhs, const Dfa& rhs, int max_len);

struct EnumerationLimits {
  /// Maximum permitted max_len when the vector uses more than one symbol.
  int max_len_guard = 12;
  /// Cap on the number of produced words.
  std::size_t max_words = materialization_cap();
};

/// All words of the vector's language up to max_len, in length-then-
/// lexicographic order, duplicate-free. Throws SizeGuardError when the
/// guard or the output cap is exceeded.
std::vector<Word> enumerate_language(const KTestVector& vector, int max_len,
                                     EnumerationLimits limits = {});

}  // namespace ktss

#endif  // KTSS_DFA_HPP
