#ifndef STACKSORT_PATTERNS_HPP
#define STACKSORT_PATTERNS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/word.hpp"

namespace stacksort {

/// A finite set of forbidden patterns defining Av_n(B).
class ClassSpec {
public:
  explicit ClassSpec(std::vector<Permutation> patterns);

  /// Parses "132,312" style comma-separated digit strings.
  static ClassSpec parse(const std::string& text);

  const std::vector<Permutation>& patterns() const { return patterns_; }

  /// Canonical text form, patterns sorted, e.g. "132,312".
  const std::string& name() const { return name_; }

  friend bool operator==(const ClassSpec& a, const ClassSpec& b) { return a.name_ == b.name_; }

private:
  std::vector<Permutation> patterns_;
  std::string name_;
};

/// True iff some subsequence of w is order-isomorphic to q.
bool contains(const Word& w, const Permutation& q);

/// True iff w contains none of the patterns in spec.
bool avoids_all(const Word& w, const ClassSpec& spec);

/// 1-based positions of left-to-right minima and maxima.
struct Extrema {
  std::vector<std::size_t> minima;
  std::vector<std::size_t> maxima;
};
Extrema lr_extrema(const Word& w);

/// True iff every entry of p is a left-to-right minimum or maximum.
/// Coincides with avoidance of {132, 312}.
bool is_minmax_permutation(const Permutation& p);

/// Layer lengths of a layered permutation (maximal descending runs whose
/// value blocks increase left to right).
struct LayerProfile {
  std::vector<std::size_t> layer_lengths;

  /// The layered permutation with these layers.
  Permutation to_permutation() const;

  friend bool operator==(const LayerProfile&, const LayerProfile&) = default;
};

/// The layer profile of p, or nullopt if p is not layered.
/// Succeeds exactly when p avoids {231, 312}.
std::optional<LayerProfile> layer_profile(const Permutation& p);

/// A predicate equivalent to avoids_all on the word with these values,
/// specialized to O(n) scans for the classes {21}, {132,312}, {231,312} and
/// {132,231}; falls back to the generic pattern check otherwise. Operates on
/// raw value vectors so exhaustive searches can skip Word construction.
using RawAvoider = std::function<bool(const std::vector<int>&)>;
RawAvoider class_avoider_values(const ClassSpec& spec);

/// Word-level wrapper around class_avoider_values.
std::function<bool(const Word&)> class_avoider(const ClassSpec& spec);

}  // namespace stacksort

#endif
