#include "ktss/dfa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "ktss/errors.hpp"

namespace ktss {

Dfa::Dfa(std::vector<Symbol> alphabet) : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
}

Dfa::State Dfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  transitions_.emplace_back();
  return static_cast<State>(accepting_.size() - 1);
}

void Dfa::add_transition(State from, Symbol symbol, State to) {
  if (step(from, symbol) != kNoState) {
    throw Error("duplicate transition would make the automaton nondeterministic");
  }
  auto& row = transitions_[static_cast<std::size_t>(from)];
  row.emplace_back(symbol, to);
  // Rows are built in ascending symbol order by all constructors; keep the
  // invariant even for out-of-order callers.
  for (std::size_t i = row.size(); i > 1 && row[i - 2].first > row[i - 1].first;
       --i) {
    std::swap(row[i - 2], row[i - 1]);
  }
}

Dfa::State Dfa::step(State from, Symbol symbol) const {
  const auto& row = transitions_[static_cast<std::size_t>(from)];
  auto it = std::lower_bound(
      row.begin(), row.end(), symbol,
      [](const std::pair<Symbol, State>& t, Symbol s) { return t.first < s; });
  if (it == row.end() || it->first != symbol) return kNoState;
  return it->second;
}

bool Dfa::accepts(WordView word) const {
  State s = initial();
  for (Symbol c : word) {
    s = step(s, c);
    if (s == kNoState) return false;
  }
  return is_accepting(s);
}

std::span<const std::pair<Symbol, Dfa::State>> Dfa::transitions_from(
    State s) const {
  const auto& row = transitions_[static_cast<std::size_t>(s)];
  return {row.data(), row.size()};
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<Word>{}(w);
  }
};

}  // namespace

Dfa to_dfa(const KTestVector& vector) {
  const int k = vector.k();
  const auto km1 = static_cast<std::size_t>(k - 1);
  Dfa dfa(vector.symbols());
  const auto& sigma = dfa.alphabet();

  if (k == 1) {
    // The lone boundary word is λ; the window state is entered immediately.
    const bool has_entry = set_contains(vector.prefixes(), Word{});
    const bool accept_empty =
        has_entry && set_contains(vector.suffixes(), Word{});
    Dfa::State init = dfa.add_state(accept_empty);
    if (has_entry) {
      for (const Word& seg : vector.segments()) {
        dfa.add_transition(init, seg[0], init);
      }
    }
    return dfa;
  }

  // Short states exist only for prefixes of short strings and of allowed
  // prefixes; everything else is dead and never materialized.
  std::unordered_set<Word, WordHash> live_short;
  for (const WordSet* set : {&vector.short_strings(), &vector.prefixes()}) {
    for (const Word& w : *set) {
      for (std::size_t len = 0; len <= std::min(w.size(), km1 - 1); ++len) {
        live_short.insert(w.substr(0, len));
      }
    }
  }
  live_short.insert(Word{});

  // Window successor index: head (k-1 chars) -> sorted extending symbols.
  std::unordered_map<Word, std::vector<Symbol>, WordHash> window_next;
  for (const Word& seg : vector.segments()) {
    window_next[seg.substr(0, km1)].push_back(seg.back());
  }

  struct Key {
    bool window;
    Word word;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      return std::hash<Word>{}(key.word) * 2 + (key.window ? 1 : 0);
    }
  };

  std::unordered_map<Key, Dfa::State, KeyHash> ids;
  std::deque<Key> queue;
  auto intern = [&](Key key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const bool accepting =
        key.window ? set_contains(vector.suffixes(), key.word)
                   : set_contains(vector.short_strings(), key.word);
    Dfa::State s = dfa.add_state(accepting);
    ids.emplace(key, s);
    queue.push_back(std::move(key));
    return s;
  };

  intern(Key{false, Word{}});
  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    const Dfa::State from = ids.at(key);
    if (!key.window) {
      for (Symbol c : sigma) {
        Word next = key.word + Word(1, c);
        if (next.size() == km1) {
          if (set_contains(vector.prefixes(), next)) {
            dfa.add_transition(from, c, intern(Key{true, std::move(next)}));
          }
        } else if (live_short.contains(next)) {
          dfa.add_transition(from, c, intern(Key{false, std::move(next)}));
        }
      }
    } else {
      auto it = window_next.find(key.word);
      if (it == window_next.end()) continue;
      // Sorted and unique already: segments are a sorted set, so for a fixed
      // head the extending symbols arrive in ascending order.
      for (Symbol c : it->second) {
        Word next = key.word.substr(1) + Word(1, c);
        dfa.add_transition(from, c, intern(Key{true, std::move(next)}));
      }
    }
  }
  return dfa;
}

namespace {

std::vector<Symbol> merged_alphabet(const Dfa& lhs, const Dfa& rhs) {
  std::vector<Symbol> sigma = lhs.alphabet();
  sigma.insert(sigma.end(), rhs.alphabet().begin(), rhs.alphabet().end());
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  return sigma;
}

inline std::uint64_t pair_key(Dfa::State a, Dfa::State b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

Dfa dfa_union(const Dfa& lhs, const Dfa& rhs) {
  std::vector<Symbol> sigma = merged_alphabet(lhs, rhs);
  Dfa out(sigma);

  std::unordered_map<std::uint64_t, Dfa::State> ids;
  std::deque<std::pair<Dfa::State, Dfa::State>> queue;
  auto intern = [&](Dfa::State a, Dfa::State b) {
    const auto key = pair_key(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const bool accepting = (a != Dfa::kNoState && lhs.is_accepting(a)) ||
                           (b != Dfa::kNoState && rhs.is_accepting(b));
    Dfa::State s = out.add_state(accepting);
    ids.emplace(key, s);
    queue.emplace_back(a, b);
    return s;
  };

  intern(lhs.initial(), rhs.initial());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    const Dfa::State from = ids.at(pair_key(a, b));
    for (Symbol c : sigma) {
      const Dfa::State na = a == Dfa::kNoState ? Dfa::kNoState : lhs.step(a, c);
      const Dfa::State nb = b == Dfa::kNoState ? Dfa::kNoState : rhs.step(b, c);
      if (na == Dfa::kNoState && nb == Dfa::kNoState) continue;
      out.add_transition(from, c, intern(na, nb));
    }
  }
  return out;
}

namespace {

// Product reachability; reports the depth of the first acceptance mismatch,
// or -1 when the languages agree everywhere.
int first_mismatch_depth(const Dfa& lhs, const Dfa& rhs) {
  std::vector<Symbol> sigma = merged_alphabet(lhs, rhs);
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::tuple<Dfa::State, Dfa::State, int>> queue;
  queue.emplace_back(lhs.initial(), rhs.initial(), 0);
  seen.insert(pair_key(lhs.initial(), rhs.initial()));
  while (!queue.empty()) {
    auto [a, b, depth] = queue.front();
    queue.pop_front();
    const bool acc_a = a != Dfa::kNoState && lhs.is_accepting(a);
    const bool acc_b = b != Dfa::kNoState && rhs.is_accepting(b);
    if (acc_a != acc_b) return depth;
    for (Symbol c : sigma) {
      const Dfa::State na = a == Dfa::kNoState ? Dfa::kNoState : lhs.step(a, c);
      const Dfa::State nb = b == Dfa::kNoState ? Dfa::kNoState : rhs.step(b, c);
      if (na == Dfa::kNoState && nb == Dfa::kNoState) continue;
      if (seen.insert(pair_key(na, nb)).second) {
        queue.emplace_back(na, nb, depth + 1);
      }
    }
  }
  return -1;
}

}  // namespace

bool dfa_equivalent(const Dfa& lhs, const Dfa& rhs) {
  return first_mismatch_depth(lhs, rhs) < 0;
}

bool dfa_equivalent_up_to(const Dfa& lhs, const Dfa& rhs, int max_len) {
  const int depth = first_mismatch_depth(lhs, rhs);
  return depth < 0 || depth > max_len;
}

std::vector<Word> enumerate_language(const KTestVector& vector, int max_len,
                                     EnumerationLimits limits) {
  if (max_len < 0) return {};
  if (vector.symbols().size() > 1 && max_len > limits.max_len_guard) {
    throw SizeGuardError("enumeration length " + std::to_string(max_len) +
                         " exceeds guard " +
                         std::to_string(limits.max_len_guard));
  }
  const Dfa dfa = to_dfa(vector);

  // Distance from each state to the nearest accepting state, for pruning.
  const auto n = static_cast<std::size_t>(dfa.state_count());
  std::vector<std::vector<Dfa::State>> reverse(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& [symbol, to] : dfa.transitions_from(
             static_cast<Dfa::State>(s))) {
      (void)symbol;
      reverse[static_cast<std::size_t>(to)].push_back(
          static_cast<Dfa::State>(s));
    }
  }
  constexpr int kUnreachable = -1;
  std::vector<int> to_accept(n, kUnreachable);
  std::deque<Dfa::State> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (dfa.is_accepting(static_cast<Dfa::State>(s))) {
      to_accept[s] = 0;
      queue.push_back(static_cast<Dfa::State>(s));
    }
  }
  while (!queue.empty()) {
    const Dfa::State s = queue.front();
    queue.pop_front();
    for (Dfa::State p : reverse[static_cast<std::size_t>(s)]) {
      if (to_accept[static_cast<std::size_t>(p)] == kUnreachable) {
        to_accept[static_cast<std::size_t>(p)] =
            to_accept[static_cast<std::size_t>(s)] + 1;
        queue.push_back(p);
      }
    }
  }

  std::vector<Word> out;
  Word current;
  auto visit = [&](auto&& self, Dfa::State s) -> void {
    const int need = to_accept[static_cast<std::size_t>(s)];
    if (need == kUnreachable ||
        current.size() + static_cast<std::size_t>(need) >
            static_cast<std::size_t>(max_len)) {
      return;
    }
    if (dfa.is_accepting(s)) {
      if (out.size() >= limits.max_words) {
        throw SizeGuardError("enumeration exceeds cap of " +
                             std::to_string(limits.max_words) + " words");
      }
      out.push_back(current);
    }
    if (current.size() == static_cast<std::size_t>(max_len)) return;
    for (const auto& [symbol, to] : dfa.transitions_from(s)) {
      current.push_back(symbol);
      self(self, to);
      current.pop_back();
    }
  };
  visit(visit, dfa.initial());

  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return length_lex_less(a, b); });
  return out;
}

}  // namespace ktss
