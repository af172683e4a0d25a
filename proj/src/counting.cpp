#include "stacksort/counting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stacksort {

std::string CountSequence::to_csv() const {
  std::ostringstream out;
  out << "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].get_str() << '\n';
  return out.str();
}

std::string CountSequence::to_json() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (n > 0) out << ',';
    out << '"' << values[n].get_str() << '"';
  }
  out << ']';
  return out.str();
}

CountSequence boolean_catalan(std::size_t N) {
  CountSequence seq{CountSequence::Kind::BooleanCatalan, {}};
  auto& a = seq.values;
  a.resize(N + 1, 0);
  if (N >= 1) a[1] = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    BigInt sum = 0;
    for (std::size_t i = 2; i <= n - 1; ++i) sum += a[i - 1] * a[n - i];
    a[n] = 2 * a[n - 1] + 2 * sum;
  }
  return seq;
}

CountSequence catalan(std::size_t N) {
  CountSequence seq{CountSequence::Kind::Catalan, {}};
  auto& c = seq.values;
  c.resize(N + 1, 1);
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    // C_{n+1} = C_n * 2(2n+1) / (n+2), always exact.
    BigInt next = c[n] * (2 * (2 * static_cast<unsigned long>(n) + 1));
    next /= static_cast<unsigned long>(n) + 2;
    c[n + 1] = next;
  }
  return seq;
}

double convergence_radius() { return (std::sqrt(2.0) - 1.0) / 2.0; }

namespace {

void check_domain(double z) {
  if (!(z > 0.0 && z < convergence_radius()))
    throw std::domain_error("z must lie in (0, " + std::to_string(convergence_radius()) +
                            "), got " + std::to_string(z));
}

}  // namespace

double closed_form(double z) {
  check_domain(z);
  return (1.0 - 2.0 * z - std::sqrt(1.0 - 4.0 * z - 4.0 * z * z)) / (4.0 * z);
}

SeriesPoint series_partial_sum(double z, std::size_t N) {
  check_domain(z);
  const CountSequence a = boolean_catalan(N);
  double sum = 0.0;
  double zn = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    sum += a.values[n].get_d() * zn;
    zn *= z;
  }
  return SeriesPoint{z, N, sum, closed_form(z)};
}

double functional_equation_residual(double z) {
  const double a = closed_form(z);
  return std::abs(a - z - 2.0 * z * a - 2.0 * z * a * a);
}

}  // namespace stacksort
