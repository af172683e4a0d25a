#include "stacksort/trees.hpp"

#include <stdexcept>

namespace stacksort {

ZeroOneTree ZeroOneTree::leaf() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Leaf, 0, nullptr, nullptr, 1});
  return ZeroOneTree(node);
}

ZeroOneTree ZeroOneTree::left_only(ZeroOneTree child) {
  auto node = std::make_shared<const Node>(
      Node{Kind::LeftOnly, 0, child.node_, nullptr, child.size() + 1});
  return ZeroOneTree(std::move(node));
}

ZeroOneTree ZeroOneTree::right_only(ZeroOneTree child) {
  auto node = std::make_shared<const Node>(
      Node{Kind::RightOnly, 0, nullptr, child.node_, child.size() + 1});
  return ZeroOneTree(std::move(node));
}

ZeroOneTree ZeroOneTree::both(int label, ZeroOneTree left, ZeroOneTree right) {
  if (label != 0 && label != 1) throw std::invalid_argument("tree label must be 0 or 1");
  auto node = std::make_shared<const Node>(
      Node{Kind::Both, label, left.node_, right.node_, left.size() + right.size() + 1});
  return ZeroOneTree(std::move(node));
}

namespace {

void encode_node(const ZeroOneTree& t, std::string& out) {
  switch (t.kind()) {
    case ZeroOneTree::Kind::Leaf:
      out += 'o';
      break;
    case ZeroOneTree::Kind::LeftOnly:
      out += 'l';
      encode_node(t.left(), out);
      break;
    case ZeroOneTree::Kind::RightOnly:
      out += 'r';
      encode_node(t.right(), out);
      break;
    case ZeroOneTree::Kind::Both:
      out += static_cast<char>('0' + t.label());
      encode_node(t.left(), out);
      encode_node(t.right(), out);
      break;
  }
}

ZeroOneTree decode_at(const std::string& code, std::size_t& pos) {
  if (pos >= code.size())
    throw std::invalid_argument("tree code truncated at position " + std::to_string(pos));
  const char c = code[pos++];
  switch (c) {
    case 'o':
      return ZeroOneTree::leaf();
    case 'l':
      return ZeroOneTree::left_only(decode_at(code, pos));
    case 'r':
      return ZeroOneTree::right_only(decode_at(code, pos));
    case '0':
    case '1': {
      ZeroOneTree left = decode_at(code, pos);
      ZeroOneTree right = decode_at(code, pos);
      return ZeroOneTree::both(c - '0', std::move(left), std::move(right));
    }
    default:
      throw std::invalid_argument("bad tree code character '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos - 1));
  }
}

}  // namespace

std::string ZeroOneTree::encode() const {
  std::string out;
  out.reserve(size());
  encode_node(*this, out);
  return out;
}

ZeroOneTree ZeroOneTree::decode(const std::string& code) {
  std::size_t pos = 0;
  ZeroOneTree t = decode_at(code, pos);
  if (pos != code.size())
    throw std::invalid_argument("trailing tree code at position " + std::to_string(pos));
  return t;
}

namespace {

// Trees of each size up to the requested one, built once per call. Subtrees
// are shared, so the table holds one fresh node per tree.
std::vector<std::vector<ZeroOneTree>> tree_table(std::size_t n) {
  std::vector<std::vector<ZeroOneTree>> table(n + 1);
  if (n >= 1) table[1].push_back(ZeroOneTree::leaf());
  for (std::size_t m = 2; m <= n; ++m) {
    auto& out = table[m];
    for (const auto& child : table[m - 1]) out.push_back(ZeroOneTree::left_only(child));
    for (const auto& child : table[m - 1]) out.push_back(ZeroOneTree::right_only(child));
    for (int label = 0; label <= 1; ++label)
      for (std::size_t left_size = 1; left_size + 1 < m; ++left_size)
        for (const auto& left : table[left_size])
          for (const auto& right : table[m - 1 - left_size])
            out.push_back(ZeroOneTree::both(label, left, right));
  }
  return table;
}

}  // namespace

void enumerate_trees(std::size_t n, const std::function<void(const ZeroOneTree&)>& fn) {
  if (n == 0) return;
  auto table = tree_table(n);
  for (const auto& t : table[n]) fn(t);
}

std::vector<ZeroOneTree> generate_trees(std::size_t n) {
  if (n == 0) return {};
  auto table = tree_table(n);
  return std::move(table[n]);
}

}  // namespace stacksort
