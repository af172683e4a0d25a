#include "stacksort/patterns.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stacksort {

namespace {

std::string pattern_name(const Permutation& p) {
  bool digits = std::all_of(p.begin(), p.end(), [](int v) { return v <= 9; });
  if (!digits) return p.str();
  std::string out;
  for (int v : p) out += static_cast<char>('0' + v);
  return out;
}

}  // namespace

ClassSpec::ClassSpec(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("class spec needs at least one pattern");
  for (const auto& p : patterns_)
    if (p.empty()) throw std::invalid_argument("class spec patterns must be nonempty");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) name_ += ',';
    name_ += pattern_name(patterns_[i]);
  }
}

ClassSpec ClassSpec::parse(const std::string& text) {
  std::vector<Permutation> patterns;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("empty pattern in class spec '" + text + "'");
    std::vector<int> values;
    for (char c : token) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad character '" + std::string(1, c) + "' in pattern '" + token + "'");
      values.push_back(c - '0');
    }
    patterns.emplace_back(std::move(values));
    token.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (c != ' ')
      token += c;
  }
  flush();
  return ClassSpec(std::move(patterns));
}

namespace {

bool contains_from(const std::vector<int>& w, const std::vector<int>& q, std::size_t start,
                   std::vector<int>& chosen) {
  const std::size_t t = chosen.size();
  if (t == q.size()) return true;
  // Not enough entries left to finish the pattern.
  if (w.size() - start < q.size() - t) return false;
  for (std::size_t i = start; i + (q.size() - t) <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s)
      ok = (w[i] > chosen[s]) == (q[t] > q[s]);
    if (!ok) continue;
    chosen.push_back(w[i]);
    if (contains_from(w, q, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains(const Word& w, const Permutation& q) {
  if (q.empty()) return true;
  if (w.size() < q.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(q.size());
  return contains_from(w.values(), q.values(), 0, chosen);
}

bool avoids_all(const Word& w, const ClassSpec& spec) {
  for (const auto& q : spec.patterns())
    if (contains(w, q)) return false;
  return true;
}

Extrema lr_extrema(const Word& w) {
  Extrema e;
  int min_so_far = std::numeric_limits<int>::max();
  int max_so_far = 0;
  std::size_t pos = 0;
  for (int v : w) {
    ++pos;
    if (v < min_so_far) {
      e.minima.push_back(pos);
      min_so_far = v;
    }
    if (v > max_so_far) {
      e.maxima.push_back(pos);
      max_so_far = v;
    }
  }
  return e;
}

namespace {

bool is_minmax_word(const std::vector<int>& w) {
  int min_so_far = std::numeric_limits<int>::max();
  int max_so_far = 0;
  for (int v : w) {
    if (v > min_so_far && v < max_so_far) return false;
    min_so_far = std::min(min_so_far, v);
    max_so_far = std::max(max_so_far, v);
  }
  return true;
}

bool is_increasing(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) return false;
  return true;
}

// Layered iff the maximal descending runs satisfy max(run k) < min(run k+1);
// the chain makes every earlier run entirely below every later one.
bool is_layered_word(const std::vector<int>& w) {
  std::size_t i = 0;
  int prev_run_max = 0;
  while (i < w.size()) {
    const int run_max = w[i];
    std::size_t j = i + 1;
    while (j < w.size() && w[j] < w[j - 1]) ++j;
    // w[j-1] is the run minimum; every entry of the previous run must sit
    // below it, and the chain of such checks covers non-adjacent runs too.
    if (prev_run_max > w[j - 1]) return false;
    prev_run_max = run_max;
    i = j;
  }
  return true;
}

// Avoids {132, 231} iff no entry has a smaller entry both before and after it.
bool avoids_132_231(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<char> lr_min(n);
  int min_so_far = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < n; ++i) {
    lr_min[i] = w[i] < min_so_far;
    min_so_far = std::min(min_so_far, w[i]);
  }
  int suffix_min = std::numeric_limits<int>::max();
  for (std::size_t i = n; i-- > 0;) {
    if (!lr_min[i] && w[i] > suffix_min) return false;
    suffix_min = std::min(suffix_min, w[i]);
  }
  return true;
}

}  // namespace

bool is_minmax_permutation(const Permutation& p) { return is_minmax_word(p.values()); }

Permutation LayerProfile::to_permutation() const {
  std::vector<int> values;
  int base = 0;
  for (std::size_t len : layer_lengths) {
    for (std::size_t k = 0; k < len; ++k) values.push_back(base + static_cast<int>(len - k));
    base += static_cast<int>(len);
  }
  return Permutation(std::move(values));
}

std::optional<LayerProfile> layer_profile(const Permutation& p) {
  const auto& w = p.values();
  LayerProfile profile;
  std::size_t i = 0;
  int base = 0;
  while (i < w.size()) {
    // A layer starting above `base` must read m, m-1, ..., base+1.
    const int m = w[i];
    if (m <= base) return std::nullopt;
    const std::size_t len = static_cast<std::size_t>(m - base);
    if (i + len > w.size()) return std::nullopt;
    for (std::size_t k = 0; k < len; ++k)
      if (w[i + k] != m - static_cast<int>(k)) return std::nullopt;
    profile.layer_lengths.push_back(len);
    base = m;
    i += len;
  }
  return profile;
}

RawAvoider class_avoider_values(const ClassSpec& spec) {
  const std::string& name = spec.name();
  if (name == "21") return is_increasing;
  if (name == "132,312") return is_minmax_word;
  if (name == "231,312") return is_layered_word;
  if (name == "132,231") return avoids_132_231;
  return [spec](const std::vector<int>& w) {
    std::vector<int> chosen;
    for (const auto& q : spec.patterns()) {
      chosen.clear();
      if (w.size() >= q.size() && contains_from(w, q.values(), 0, chosen)) return false;
    }
    return true;
  };
}

std::function<bool(const Word&)> class_avoider(const ClassSpec& spec) {
  return [check = class_avoider_values(spec)](const Word& w) { return check(w.values()); };
}

}  // namespace stacksort
