#include <doctest.h>

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "stacksort/counting.hpp"
#include "stacksort/trees.hpp"

using namespace stacksort;

namespace {

void check_labeling(const ZeroOneTree& t) {
  switch (t.kind()) {
    case ZeroOneTree::Kind::Leaf:
      CHECK(t.size() == 1);
      break;
    case ZeroOneTree::Kind::LeftOnly:
      check_labeling(t.left());
      break;
    case ZeroOneTree::Kind::RightOnly:
      check_labeling(t.right());
      break;
    case ZeroOneTree::Kind::Both:
      CHECK((t.label() == 0 || t.label() == 1));
      check_labeling(t.left());
      check_labeling(t.right());
      break;
  }
}

}  // namespace

TEST_CASE("tree construction and size") {
  CHECK(ZeroOneTree::leaf().size() == 1);
  CHECK(ZeroOneTree::left_only(ZeroOneTree::leaf()).size() == 2);
  CHECK(ZeroOneTree::both(0, ZeroOneTree::leaf(), ZeroOneTree::leaf()).size() == 3);
  CHECK_THROWS_AS(ZeroOneTree::both(2, ZeroOneTree::leaf(), ZeroOneTree::leaf()),
                  std::invalid_argument);
}

TEST_CASE("codec on small trees") {
  CHECK(ZeroOneTree::leaf().encode() == "o");
  CHECK(ZeroOneTree::both(1, ZeroOneTree::leaf(), ZeroOneTree::leaf()).encode() == "1oo");
  const ZeroOneTree t = ZeroOneTree::decode("l0oo");
  CHECK(t.size() == 4);
  CHECK(t.kind() == ZeroOneTree::Kind::LeftOnly);
  CHECK(t.left().kind() == ZeroOneTree::Kind::Both);
  CHECK(t.left().label() == 0);
}

TEST_CASE("decode rejects malformed codes with a position") {
  CHECK_THROWS_WITH_AS(ZeroOneTree::decode("x"), doctest::Contains("position 0"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ZeroOneTree::decode("l"), doctest::Contains("position 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ZeroOneTree::decode("0o"), doctest::Contains("truncated"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ZeroOneTree::decode("oo"), doctest::Contains("trailing"),
                       std::invalid_argument);
  CHECK_THROWS_AS(ZeroOneTree::decode(""), std::invalid_argument);
}

TEST_CASE("generation order is deterministic on small sizes") {
  CHECK(generate_trees(0).empty());
  REQUIRE(generate_trees(1).size() == 1);
  CHECK(generate_trees(1)[0].encode() == "o");
  std::vector<std::string> codes2;
  for (const auto& t : generate_trees(2)) codes2.push_back(t.encode());
  CHECK(codes2 == std::vector<std::string>{"lo", "ro"});
  std::vector<std::string> codes3;
  for (const auto& t : generate_trees(3)) codes3.push_back(t.encode());
  CHECK(codes3 == std::vector<std::string>{"llo", "lro", "rlo", "rro", "0oo", "1oo"});
}

TEST_CASE("tree counts match the recurrence") {
  const CountSequence a = boolean_catalan(9);
  for (std::size_t n = 0; n <= 9; ++n) {
    std::size_t count = 0;
    enumerate_trees(n, [&](const ZeroOneTree&) { ++count; });
    CHECK(BigInt(static_cast<unsigned long>(count)) == a.at(n));
  }
}

TEST_CASE("generated trees are distinct, well-labeled, and round-trip") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::unordered_set<std::string> codes;
    enumerate_trees(n, [&](const ZeroOneTree& t) {
      CHECK(t.size() == n);
      check_labeling(t);
      const std::string code = t.encode();
      CHECK(codes.insert(code).second);
      CHECK(ZeroOneTree::decode(code) == t);
      CHECK(ZeroOneTree::decode(code).encode() == code);
    });
  }
}
