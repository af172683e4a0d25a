#include <doctest.h>

#include <map>
#include <stdexcept>

#include "stacksort/word.hpp"
#include "test_util.hpp"

using namespace stacksort;
using stacksort::testing::WordGen;
using stacksort::testing::for_each_permutation;

TEST_CASE("word construction rejects bad values") {
  CHECK_THROWS_AS(Word({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Word({-3}), std::invalid_argument);
  CHECK(Word().empty());
}

TEST_CASE("word text form round-trips") {
  CHECK(Word::parse("3 7 5 2 4 1 6").str() == "3 7 5 2 4 1 6");
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("   ").empty());
  CHECK_THROWS_AS(Word::parse("1 x 3"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1 2 2"), std::invalid_argument);
}

TEST_CASE("permutation refinement validates the value set") {
  CHECK(Permutation({2, 1, 3}).size() == 3);
  CHECK(Permutation::identity(4).str() == "1 2 3 4");
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation().empty());
}

TEST_CASE("standardize") {
  CHECK(standardize(Word({3, 7, 2, 6})) == Permutation({2, 4, 1, 3}));
  CHECK(standardize(Word()) == Permutation());
  CHECK(standardize(Word({5, 4, 6, 7})) == Permutation({2, 1, 3, 4}));
}

TEST_CASE("relabel") {
  CHECK(relabel(Permutation({2, 1, 3, 4}), {4, 5, 6, 7}) == Word({5, 4, 6, 7}));
  CHECK(relabel(Permutation({3, 2, 1, 4, 5}), {1, 2, 7, 8, 9}) == Word({7, 2, 1, 8, 9}));
  const Permutation p({3, 1, 2});
  CHECK(relabel(p, {1, 2, 3}) == p.word());
  CHECK_THROWS_AS(relabel(p, {1, 2}), std::invalid_argument);
}

TEST_CASE("standardize and relabel are mutually inverse") {
  WordGen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = gen.next(12);
    const Permutation p = standardize(w);
    CHECK(relabel(p, w.sorted_values()) == w);
    CHECK(standardize(relabel(p, w.sorted_values())) == p);
  }
}

TEST_CASE("stack_sort on the named inputs") {
  CHECK(stack_sort(Word()) == Word());
  CHECK(stack_sort(Word({1, 2, 3})) == Word({1, 2, 3}));
  CHECK(stack_sort(Word({3, 7, 5, 2, 4, 1, 6})) == Word({3, 2, 1, 4, 5, 6, 7}));
  CHECK(stack_sort(Word({2, 3, 1})) == Word({2, 1, 3}));
}

TEST_CASE("stack_sort_machine on the named inputs") {
  CHECK(stack_sort_machine(Word({2, 3, 1})) == Word({2, 1, 3}));
  CHECK(stack_sort_machine(Word({2, 1})) == Word({1, 2}));
  CHECK(stack_sort_machine(Word({3, 7, 5, 2, 4, 1, 6})) == Word({3, 2, 1, 4, 5, 6, 7}));
}

TEST_CASE("the two stack-sorting implementations agree exhaustively") {
  for (std::size_t n = 0; n <= 8; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      REQUIRE(stack_sort(p.word()) == stack_sort_machine(p.word()));
    });
}

TEST_CASE("the two stack-sorting implementations agree on random words") {
  WordGen gen(20260823);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = gen.next(30);
    REQUIRE(stack_sort(w) == stack_sort_machine(w));
  }
}

TEST_CASE("stack_sort preserves values and ends with the maximum") {
  WordGen gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = gen.next(20);
    const Word s = stack_sort(w);
    CHECK(s.size() == w.size());
    CHECK(s.sorted_values() == w.sorted_values());
    if (!w.empty()) CHECK(s.values().back() == w.sorted_values().back());
  }
}

TEST_CASE("stack_sort commutes with standardize") {
  WordGen gen(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = gen.next(15);
    CHECK(standardize(stack_sort(w)) == Permutation(stack_sort(standardize(w).word())));
  }
}
