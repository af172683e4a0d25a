#ifndef STACKSORT_COUNTING_HPP
#define STACKSORT_COUNTING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace stacksort {

using BigInt = mpz_class;

/// An exact integer sequence a_0..a_N.
struct CountSequence {
  enum class Kind { BooleanCatalan, Catalan, PowerOfTwo, Measured };
  Kind kind;
  std::vector<BigInt> values;

  const BigInt& at(std::size_t n) const { return values.at(n); }
  std::size_t max_index() const { return values.size() - 1; }

  /// "n,value" lines with a header row.
  std::string to_csv() const;
  /// JSON array of decimal strings.
  std::string to_json() const;
};

/// Boolean-Catalan numbers a_0..a_N: a_0 = 0, a_1 = 1 and
/// a_n = 2 a_{n-1} + 2 sum_{i=2}^{n-1} a_{i-1} a_{n-i}.
CountSequence boolean_catalan(std::size_t N);

/// Catalan numbers C_0..C_N.
CountSequence catalan(std::size_t N);

/// Radius of convergence of the generating function: the positive root of
/// 1 - 4z - 4z^2, equal to (sqrt(2) - 1) / 2.
double convergence_radius();

/// A(z) = (1 - 2z - sqrt(1 - 4z - 4z^2)) / (4z); z must lie strictly inside
/// (0, convergence_radius()) or std::domain_error is thrown.
double closed_form(double z);

struct SeriesPoint {
  double z;
  std::size_t order;
  double partial_sum;
  double closed;

  double gap() const { return partial_sum - closed; }
};

/// Partial sum of a_n z^n for n <= N, next to the closed form at z.
SeriesPoint series_partial_sum(double z, std::size_t N);

/// |A - z - 2zA - 2zA^2| with A = closed_form(z).
double functional_equation_residual(double z);

}  // namespace stacksort

#endif
