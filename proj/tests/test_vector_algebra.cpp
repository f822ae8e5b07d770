#include <doctest.h>

#include "ktss/errors.hpp"
#include "ktss/test_vector.hpp"
#include "support/helpers.hpp"

using namespace ktss;
using namespace ktss::testing;

namespace {

// The eight running-example words and their 3-test vectors.
const std::vector<Word> kExampleWords = words({"baba", "abba", "abcabc",
                                               "cbacba", "abbbba",
                                               "cbacbacba", "abbba",
                                               "babababc"});

KTestVector example_vector(std::size_t index) {
  return extract(3, std::span<const Word>(&kExampleWords[index], 1));
}

}  // namespace

TEST_SUITE("test_vector") {
  TEST_CASE("make validates length classes") {
    CHECK(KTestVector::make(3, {}, {}, {}, {}) == KTestVector::bottom(3));
    const auto z1 = vec(3, {"ba"}, {"ba"}, {"bab", "aba"});
    CHECK(z1.k() == 3);
    CHECK(z1.prefixes() == word_set({"ba"}));

    // Syntactic validity does not imply a nonempty language.
    const auto empty_lang = vec(3, {"aa"}, {"ab"}, {"aaa"});
    const auto sigma = alphabet_of_size(2);
    CHECK(brute_force_language(empty_lang, sigma, 6).empty());

    CHECK_THROWS_AS(KTestVector::make(3, word_set({"a"}), {}, {}, {}),
                    LengthViolation);
    CHECK_THROWS_AS(KTestVector::make(3, {}, {}, word_set({"ab"}), {}),
                    LengthViolation);
    CHECK_THROWS_AS(KTestVector::make(3, {}, {}, {}, word_set({"ab"})),
                    LengthViolation);
    CHECK_THROWS_AS(KTestVector::make(0, {}, {}, {}, {}), LengthViolation);
  }

  TEST_CASE("extraction matches the worked example") {
    CHECK(example_vector(0) == vec(3, {"ba"}, {"ba"}, {"bab", "aba"}));
    CHECK(example_vector(1) == vec(3, {"ab"}, {"ba"}, {"abb", "bba"}));
    CHECK(example_vector(2) == vec(3, {"ab"}, {"bc"}, {"abc", "bca", "cab"}));
    CHECK(example_vector(3) == vec(3, {"cb"}, {"ba"}, {"cba", "bac", "acb"}));
    // The printed table lists {ab} as the suffix set here; the definition
    // and the distance matrix both give {ba}.
    CHECK(example_vector(4) == vec(3, {"ab"}, {"ba"}, {"abb", "bbb", "bba"}));
    CHECK(example_vector(5) == example_vector(3));
    CHECK(example_vector(6) == example_vector(4));
    CHECK(example_vector(7) == vec(3, {"ba"}, {"bc"}, {"bab", "aba", "abc"}));
  }

  TEST_CASE("extraction of short words and empty samples") {
    CHECK(from_sample(3, {"a", "aa", "aaa"}) ==
          vec(3, {"aa"}, {"aa"}, {"aaa"}, {"a"}));
    CHECK(extract(3, {}) == KTestVector::bottom(3));
    CHECK(from_sample(3, {"abcabc"}) ==
          vec(3, {"ab"}, {"bc"}, {"abc", "bca", "cab"}));
    // k = 1: the lone boundary word is the empty word.
    CHECK(from_sample(1, {"ab"}) == vec(1, {""}, {""}, {"a", "b"}));
    const auto empty_word_only = from_sample(1, {""});
    CHECK(empty_word_only == vec(1, {""}, {""}, {}));
  }

  TEST_CASE("membership follows the window semantics") {
    const auto z1 = example_vector(0);
    CHECK(z1.contains(word("bababa")));
    CHECK(z1.contains(word("baba")));
    CHECK(z1.contains(word("ba")));       // length k-1, in prefixes∩suffixes
    CHECK_FALSE(z1.contains(word("ab")));
    CHECK_FALSE(z1.contains(word("")));
    CHECK_FALSE(z1.contains(word("bab")));   // suffix ab not allowed
    CHECK_FALSE(z1.contains(word("baxa")));  // unknown symbol, no error
    const auto with_short = from_sample(3, {"a", "aa", "aaa"});
    CHECK(with_short.contains(word("a")));
    CHECK(with_short.contains(word("aa")));
    CHECK_FALSE(with_short.contains(word("b")));
  }

  TEST_CASE("ordering") {
    const auto z1 = example_vector(0);
    const auto z2 = example_vector(1);
    const auto z5 = example_vector(4);
    CHECK(leq(KTestVector::bottom(3), z1));
    CHECK(leq(z2, z5));
    CHECK_FALSE(leq(z5, z2));
    CHECK_FALSE(leq(z1, z2));
    CHECK_THROWS_AS(leq(KTestVector::bottom(2), z1), KMismatch);
  }

  TEST_CASE("join and meet") {
    const auto z1 = example_vector(0);
    const auto z2 = example_vector(1);
    const auto z3 = example_vector(2);
    const auto z4 = example_vector(3);
    const auto z5 = example_vector(4);
    const auto z6 = example_vector(5);
    CHECK(join(z4, z6) == z4);  // identical words give identical vectors
    CHECK(join(z1, KTestVector::bottom(3)) == z1);
    CHECK(join(z2, z5) == z5);
    CHECK(meet(z2, z5) == z2);
    CHECK(meet(z1, z3) == KTestVector::bottom(3));
    const auto sigma = alphabet_of_size(3);
    CHECK(meet(z1, KTestVector::top(3, sigma)) == z1);
    CHECK_THROWS_AS(join(z1, KTestVector::bottom(2)), KMismatch);
  }

  TEST_CASE("symmetric difference and distance") {
    const auto z1 = example_vector(0);
    const auto z8 = example_vector(7);
    CHECK(sym_diff(z1, KTestVector::bottom(3)) == z1);
    CHECK(sym_diff(z1, z1) == KTestVector::bottom(3));
    CHECK(sym_diff(z1, z8) == vec(3, {}, {"ba", "bc"}, {"abc"}));
    CHECK(distance(z1, z8) == 3);
    CHECK(distance(example_vector(4), example_vector(6)) == 0);
    CHECK(distance(example_vector(2), example_vector(3)) == 10);
    CHECK(distance(z1, z1) == 0);
  }

  TEST_CASE("cardinality counts stored components") {
    CHECK(KTestVector::bottom(4).cardinality() == 0);
    CHECK(example_vector(0).cardinality() == 4);
    CHECK(from_sample(3, {"a", "aa", "aaa"}).cardinality() == 4);
  }

  TEST_CASE("top materializes every allowed component") {
    const auto sigma2 = alphabet_of_size(2);
    const auto top2 = KTestVector::top(2, sigma2);
    CHECK(top2.prefixes() == word_set({"a", "b"}));
    CHECK(top2.suffixes() == word_set({"a", "b"}));
    CHECK(top2.segments() == word_set({"aa", "ab", "ba", "bb"}));
    CHECK(top2.short_strings() == word_set({""}));

    const auto sigma1 = alphabet_of_size(1);
    const auto top1 = KTestVector::top(1, sigma1);
    CHECK(top1 == vec(1, {""}, {""}, {"a"}));

    CHECK_THROWS_AS(KTestVector::top(10, alphabet_of_size(8)),
                    SizeGuardError);
  }

  TEST_CASE("symbols are collected from every component") {
    const auto v = vec(3, {"ab"}, {"ca"}, {"abc"}, {"d"});
    CHECK(v.symbols() == std::vector<Symbol>{U'a', U'b', U'c', U'd'});
  }
}
