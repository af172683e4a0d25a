#include "stacksort/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace stacksort {

Word::Word(std::vector<int> values) : values_(std::move(values)) {
  std::unordered_set<int> seen;
  for (int v : values_) {
    if (v <= 0) throw std::invalid_argument("word values must be positive, got " + std::to_string(v));
    if (!seen.insert(v).second)
      throw std::invalid_argument("word values must be distinct, repeated " + std::to_string(v));
  }
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse word token '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("cannot parse word token '" + token + "'");
    values.push_back(v);
  }
  return Word(std::move(values));
}

std::vector<int> Word::sorted_values() const {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation::Permutation(Word w) : word_(std::move(w)) {
  const int n = static_cast<int>(word_.size());
  for (int v : word_)
    if (v > n)
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}: contains " +
                                  std::to_string(v));
  // Values are distinct, positive and <= n, hence exactly {1..n}.
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation standardize(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return w.values()[a] < w.values()[b]; });
  std::vector<int> result(n);
  for (std::size_t rank = 0; rank < n; ++rank) result[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(result));
}

Word relabel(const Permutation& p, std::vector<int> values) {
  if (values.size() != p.size())
    throw std::invalid_argument("relabel: value set size " + std::to_string(values.size()) +
                                " does not match permutation length " + std::to_string(p.size()));
  std::sort(values.begin(), values.end());
  std::vector<int> result;
  result.reserve(p.size());
  for (int v : p) result.push_back(values[static_cast<std::size_t>(v) - 1]);
  return Word(std::move(result));
}

namespace {

void stack_sort_range(const std::vector<int>& in, std::size_t lo, std::size_t hi,
                      std::vector<int>& out) {
  if (lo >= hi) return;
  std::size_t max_pos = lo;
  for (std::size_t i = lo + 1; i < hi; ++i)
    if (in[i] > in[max_pos]) max_pos = i;
  stack_sort_range(in, lo, max_pos, out);
  stack_sort_range(in, max_pos + 1, hi, out);
  out.push_back(in[max_pos]);
}

}  // namespace

Word stack_sort(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  stack_sort_range(w.values(), 0, w.size(), out);
  return Word(std::move(out));
}

Word stack_sort_machine(const Word& w) {
  std::vector<int> out, stack;
  out.reserve(w.size());
  stack.reserve(w.size());
  for (int v : w) {
    while (!stack.empty() && stack.back() < v) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Word(std::move(out));
}

}  // namespace stacksort
