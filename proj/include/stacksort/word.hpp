#ifndef STACKSORT_WORD_HPP
#define STACKSORT_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace stacksort {

/// A finite sequence of distinct positive integers. The empty word is allowed.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> values);

  /// Parses the space-separated decimal text form; "" denotes the empty word.
  static Word parse(const std::string& text);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// 1-based access.
  int at(std::size_t pos) const { return values_.at(pos - 1); }
  const std::vector<int>& values() const { return values_; }

  /// Value set in increasing order.
  std::vector<int> sorted_values() const;

  /// Space-separated decimal text form.
  std::string str() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<int> values_;
};

/// A word whose value set is exactly {1..n}.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(Word w);
  explicit Permutation(std::vector<int> values) : Permutation(Word(std::move(values))) {}

  static Permutation identity(std::size_t n);
  static Permutation parse(const std::string& text) { return Permutation(Word::parse(text)); }

  const Word& word() const { return word_; }
  operator const Word&() const { return word_; }

  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  int at(std::size_t pos) const { return word_.at(pos); }
  const std::vector<int>& values() const { return word_.values(); }
  std::string str() const { return word_.str(); }

  auto begin() const { return word_.begin(); }
  auto end() const { return word_.end(); }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  Word word_;
};

/// The permutation order-isomorphic to w (i-th smallest value of w maps to i).
Permutation standardize(const Word& w);

/// The word on the given value set that is order-isomorphic to p.
/// standardize(relabel(p, values)) == p. Values need not be sorted;
/// their size must equal the length of p.
Word relabel(const Permutation& p, std::vector<int> values);

/// The stack-sorting map: s(eps) = eps, s(LmR) = s(L) s(R) m with m = max of w.
Word stack_sort(const Word& w);

/// The same map computed by a single pass through a stack: entries are pushed
/// left to right, popping while the stack top is smaller than the next entry,
/// then the stack is flushed. Independent of stack_sort; must agree with it.
Word stack_sort_machine(const Word& w);

}  // namespace stacksort

#endif
