#include "stacksort/preimage.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace stacksort {

namespace {

// Single stack pass on raw buffers, for the exhaustive-search inner loop.
void machine_sort_into(const std::vector<int>& in, std::vector<int>& out, std::vector<int>& stk) {
  out.clear();
  stk.clear();
  for (int v : in) {
    while (!stk.empty() && stk.back() < v) {
      out.push_back(stk.back());
      stk.pop_back();
    }
    stk.push_back(v);
  }
  for (std::size_t i = stk.size(); i-- > 0;) out.push_back(stk[i]);
}

void check_count_limit(std::size_t n, const SearchLimits& limits) {
  const std::size_t max_n = limits.allow_n12 ? std::max<std::size_t>(limits.count_limit, 12)
                                             : limits.count_limit;
  if (n < 1 || n > max_n)
    throw std::invalid_argument("exhaustive count over S_" + std::to_string(n) +
                                " refused: n must be in [1, " + std::to_string(max_n) +
                                "] (pass the n=12 override to go higher)");
}

// Counts permutations with a fixed first entry that satisfy pred, iterating
// the remaining entries in lexicographic order.
unsigned long long census_with_first(std::size_t n, int first,
                                     const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<int> rest;
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> perm(n);
  perm[0] = first;
  unsigned long long count = 0;
  do {
    std::copy(rest.begin(), rest.end(), perm.begin() + 1);
    if (pred(perm)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

// Parallel census over S_n: workers pull first-entry partitions from a shared
// queue; partial counts merge by addition, so the total is independent of the
// worker count and schedule.
BigInt parallel_census(std::size_t n, unsigned workers,
                       const std::function<bool(const std::vector<int>&)>& pred) {
  if (n == 0) return 0;
  if (n == 1) return pred(std::vector<int>{1}) ? 1 : 0;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  std::atomic<int> next_first{1};
  std::vector<unsigned long long> partial(workers, 0);
  auto run = [&](unsigned id) {
    for (int first = next_first.fetch_add(1); first <= static_cast<int>(n);
         first = next_first.fetch_add(1))
      partial[id] += census_with_first(n, first, pred);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  unsigned long long total = 0;
  for (auto c : partial) total += c;
  return BigInt(static_cast<unsigned long>(total));
}

}  // namespace

PreimageSet brute_force(std::size_t n, const ClassSpec& spec, const SearchLimits& limits) {
  if (n < 1 || n > limits.set_limit)
    throw std::invalid_argument("preimage set collection over S_" + std::to_string(n) +
                                " refused: n must be in [1, " + std::to_string(limits.set_limit) +
                                "]");
  const RawAvoider avoids = class_avoider_values(spec);
  PreimageSet result{n, spec.name(), PreimageSet::Method::Brute, {}};
  std::vector<int> perm(n), image, stack;
  std::iota(perm.begin(), perm.end(), 1);
  do {
    machine_sort_into(perm, image, stack);
    if (avoids(image)) result.members.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

BigInt brute_force_count(std::size_t n, const ClassSpec& spec, unsigned workers,
                         const SearchLimits& limits) {
  check_count_limit(n, limits);
  const RawAvoider avoids = class_avoider_values(spec);
  return parallel_census(n, workers, [&avoids](const std::vector<int>& perm) {
    thread_local std::vector<int> image, stack;
    machine_sort_into(perm, image, stack);
    return avoids(image);
  });
}

BigInt class_size(std::size_t n, const ClassSpec& spec, unsigned workers,
                  const SearchLimits& limits) {
  check_count_limit(n, limits);
  const RawAvoider avoids = class_avoider_values(spec);
  return parallel_census(n, workers, [&avoids](const std::vector<int>& perm) { return avoids(perm); });
}

namespace {

std::vector<int> int_range(int lo, int hi) {  // [lo, hi], possibly empty
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Permutation concat_parts(const Word& left, int top, const Word& right) {
  std::vector<int> values;
  values.reserve(left.size() + 1 + right.size());
  values.insert(values.end(), left.begin(), left.end());
  values.push_back(top);
  values.insert(values.end(), right.begin(), right.end());
  return Permutation(std::move(values));
}

void require_preimage(const Permutation& p, const ClassSpec& spec, const char* role) {
  if (p.empty())
    throw std::invalid_argument(std::string("combine: ") + role + " part must be nonempty");
  if (!avoids_all(stack_sort(p.word()), spec))
    throw std::invalid_argument(std::string("combine: stack_sort of ") + role + " part '" +
                                p.str() + "' does not avoid {" + spec.name() + "}");
}

const ClassSpec& spec_132_312() {
  static const ClassSpec spec = ClassSpec::parse("132,312");
  return spec;
}

const ClassSpec& spec_231_312() {
  static const ClassSpec spec = ClassSpec::parse("231,312");
  return spec;
}

}  // namespace

ClassSpec spec_for(ConstructiveClass cls) {
  return cls == ConstructiveClass::Av132_312 ? spec_132_312() : spec_231_312();
}

Permutation combine_132_312(const Permutation& l, const Permutation& r, MinMaxChoice choice) {
  require_preimage(l, spec_132_312(), "left");
  require_preimage(r, spec_132_312(), "right");
  const int a = static_cast<int>(l.size());
  const int b = static_cast<int>(r.size());
  const int n = a + b + 1;
  const Word sr = stack_sort(r.word());
  const int c = sr.values().front();
  const int below = static_cast<int>(std::count_if(sr.begin(), sr.end(), [c](int v) { return v < c; }));
  const int above = b - 1 - below;
  std::vector<int> vl, vr;
  if (choice == MinMaxChoice::Min) {
    // Leftmost entry of s(R) sits below everything in L.
    vr = int_range(1, below + 1);
    for (int v : int_range(n - above, n - 1)) vr.push_back(v);
    vl = int_range(below + 2, n - above - 1);
  } else {
    // Leftmost entry of s(R) sits above everything in L.
    vr = int_range(1, below);
    vr.push_back(below + a + 1);
    for (int v : int_range(n - above, n - 1)) vr.push_back(v);
    vl = int_range(below + 1, below + a);
  }
  return concat_parts(relabel(l, std::move(vl)), n, relabel(r, std::move(vr)));
}

Permutation combine_231_312(const Permutation& l, const Permutation& r, LayerChoice choice) {
  require_preimage(l, spec_231_312(), "left");
  require_preimage(r, spec_231_312(), "right");
  const int a = static_cast<int>(l.size());
  const int b = static_cast<int>(r.size());
  const int n = a + b + 1;
  std::vector<int> vl;
  if (choice == LayerChoice::Disjoint) {
    vl = int_range(1, a);
  } else {
    const auto sl_profile = layer_profile(Permutation(stack_sort(l.word())));
    const auto sr_profile = layer_profile(Permutation(stack_sort(r.word())));
    const int last_l = static_cast<int>(sl_profile->layer_lengths.back());
    const int first_r = static_cast<int>(sr_profile->layer_lengths.front());
    vl = int_range(1, a - last_l);
    for (int v : int_range(a - last_l + first_r + 1, a + first_r)) vl.push_back(v);
  }
  std::vector<int> vr;
  {
    std::vector<char> in_l(static_cast<std::size_t>(n), 0);
    for (int v : vl) in_l[static_cast<std::size_t>(v)] = 1;
    for (int v = 1; v <= n - 1; ++v)
      if (!in_l[static_cast<std::size_t>(v)]) vr.push_back(v);
  }
  return concat_parts(relabel(l, std::move(vl)), n, relabel(r, std::move(vr)));
}

Permutation extend_with_max(const Permutation& p, Side side) {
  if (p.empty()) throw std::invalid_argument("extend_with_max: permutation must be nonempty");
  const int n = static_cast<int>(p.size()) + 1;
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  if (side == Side::Front) values.push_back(n);
  values.insert(values.end(), p.begin(), p.end());
  if (side == Side::Back) values.push_back(n);
  return Permutation(std::move(values));
}

PreimageSet constructive_preimages(std::size_t n, ConstructiveClass cls) {
  if (n < 1) throw std::invalid_argument("constructive_preimages: n must be >= 1");
  const bool minmax = cls == ConstructiveClass::Av132_312;
  // sets[m] is the full preimage set of length m, in generation order.
  std::vector<std::vector<Permutation>> sets(n + 1);
  sets[1] = {Permutation::identity(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<Permutation> out;
    std::unordered_set<std::string> seen;
    auto emit = [&](Permutation p) {
      if (!seen.insert(p.str()).second)
        throw std::logic_error("constructive generator produced duplicate " + p.str() +
                               " at n=" + std::to_string(m));
      out.push_back(std::move(p));
    };
    for (const auto& p : sets[m - 1]) {
      emit(extend_with_max(p, Side::Front));
      emit(extend_with_max(p, Side::Back));
    }
    for (std::size_t i = 2; i + 1 <= m; ++i) {
      for (const auto& l : sets[i - 1]) {
        for (const auto& r : sets[m - i]) {
          if (minmax) {
            emit(combine_132_312(l, r, MinMaxChoice::Min));
            emit(combine_132_312(l, r, MinMaxChoice::Max));
          } else {
            emit(combine_231_312(l, r, LayerChoice::Disjoint));
            emit(combine_231_312(l, r, LayerChoice::Merged));
          }
        }
      }
    }
    sets[m] = std::move(out);
  }
  return PreimageSet{n, spec_for(cls).name(), PreimageSet::Method::Constructive,
                     std::move(sets[n])};
}

// --- verification report ---------------------------------------------------

namespace {

using nlohmann::json;

json row_to_json(const VerificationRow& row) {
  return json{{"n", row.n},
              {"a_n", row.a_n.get_str()},
              {"brute_132_312", row.brute_132_312.get_str()},
              {"brute_231_312", row.brute_231_312.get_str()},
              {"brute_132_231", row.brute_132_231.get_str()},
              {"constructive_132_312", row.constructive_132_312.get_str()},
              {"constructive_231_312", row.constructive_231_312.get_str()},
              {"brute_21", row.brute_21.get_str()},
              {"catalan", row.catalan_n.get_str()},
              {"av_132_312_size", row.av_132_312_size.get_str()},
              {"pow2", row.pow2.get_str()},
              {"pass", row.pass},
              {"millis", row.millis}};
}

}  // namespace

std::string VerificationReport::to_json() const {
  json j;
  j["rows"] = json::array();
  for (const auto& row : rows) j["rows"].push_back(row_to_json(row));
  j["overall"] = overall ? "pass" : "fail";
  return j.dump(2);
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "n,a_n,brute_132_312,brute_231_312,brute_132_231,constructive_132_312,"
         "constructive_231_312,brute_21,catalan,av_132_312_size,pow2,pass,millis\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.a_n << ',' << r.brute_132_312 << ',' << r.brute_231_312 << ','
        << r.brute_132_231 << ',' << r.constructive_132_312 << ',' << r.constructive_231_312 << ','
        << r.brute_21 << ',' << r.catalan_n << ',' << r.av_132_312_size << ',' << r.pow2 << ','
        << (r.pass ? "pass" : "fail") << ',' << r.millis << '\n';
  return out.str();
}

std::string VerificationReport::to_table() const {
  static const char* headers[] = {"n",       "a_n",     "b(132,312)", "b(231,312)", "b(132,231)",
                                  "c(132,312)", "c(231,312)", "b(21)",   "catalan",
                                  "|Av(132,312)|", "2^(n-1)", "status",  "ms"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.n), r.a_n.get_str(), r.brute_132_312.get_str(),
                     r.brute_231_312.get_str(), r.brute_132_231.get_str(),
                     r.constructive_132_312.get_str(), r.constructive_231_312.get_str(),
                     r.brute_21.get_str(), r.catalan_n.get_str(), r.av_132_312_size.get_str(),
                     r.pow2.get_str(), r.pass ? "pass" : "FAIL", std::to_string(r.millis)});
  const std::size_t cols = std::size(headers);
  std::vector<std::size_t> width(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < cols; ++c)
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    out << '\n';
  };
  emit_row(std::vector<std::string>(headers, headers + cols));
  for (const auto& row : cells) emit_row(row);
  out << "overall: " << (overall ? "pass" : "FAIL") << '\n';
  return out.str();
}

// --- count cache -------------------------------------------------------------

CountCache::CountCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // cold cache
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse cache file " + path_ + ": " + e.what());
  }
  const json entries = j.value("entries", json::object());
  for (const auto& [key, value] : entries.items())
    entries_.emplace_back(key, value.get<std::string>());
}

namespace {
std::string cache_key(const std::string& class_name, std::size_t n, const std::string& method) {
  return class_name + "|" + std::to_string(n) + "|" + method;
}
}  // namespace

std::optional<BigInt> CountCache::lookup(const std::string& class_name, std::size_t n,
                                         const std::string& method) const {
  const std::string key = cache_key(class_name, n, method);
  for (const auto& [k, v] : entries_)
    if (k == key) return BigInt(v);
  return std::nullopt;
}

void CountCache::store(const std::string& class_name, std::size_t n, const std::string& method,
                       const BigInt& value) {
  const std::string key = cache_key(class_name, n, method);
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value.get_str();
      return;
    }
  entries_.emplace_back(key, value.get_str());
}

void CountCache::save() const {
  if (path_.empty()) return;
  json j;
  j["entries"] = json::object();
  for (const auto& [k, v] : entries_) j["entries"][k] = v;
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write cache file " + path_);
  out << j.dump(2) << '\n';
}

// --- verify ------------------------------------------------------------------

namespace {

BigInt cached_count(CountCache* cache, const std::string& class_name, std::size_t n,
                    const std::string& method, const std::function<BigInt()>& compute) {
  if (cache && cache->enabled())
    if (auto hit = cache->lookup(class_name, n, method)) return *hit;
  BigInt value = compute();
  if (cache && cache->enabled()) cache->store(class_name, n, method, value);
  return value;
}

}  // namespace

VerificationReport verify(std::size_t maxN, const VerifyOptions& options) {
  if (maxN < 1 || maxN > options.limits.set_limit)
    throw std::invalid_argument("verify: maxN must be in [1, " +
                                std::to_string(options.limits.set_limit) + "]");
  const CountSequence a = boolean_catalan(maxN);
  const CountSequence cat = catalan(maxN);
  const ClassSpec cls_132_312 = ClassSpec::parse("132,312");
  const ClassSpec cls_231_312 = ClassSpec::parse("231,312");
  const ClassSpec cls_132_231 = ClassSpec::parse("132,231");
  const ClassSpec cls_21 = ClassSpec::parse("21");
  VerificationReport report;
  report.overall = true;
  for (std::size_t n = 1; n <= maxN; ++n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRow row;
    row.n = n;
    row.a_n = a.at(n);
    auto brute = [&](const ClassSpec& spec) {
      return cached_count(options.cache, spec.name(), n, "brute", [&] {
        return brute_force_count(n, spec, options.workers, options.limits);
      });
    };
    row.brute_132_312 = brute(cls_132_312);
    row.brute_231_312 = brute(cls_231_312);
    row.brute_132_231 = brute(cls_132_231);
    row.brute_21 = brute(cls_21);
    row.constructive_132_312 =
        cached_count(options.cache, cls_132_312.name(), n, "constructive", [&] {
          return constructive_preimages(n, ConstructiveClass::Av132_312).count();
        });
    row.constructive_231_312 =
        cached_count(options.cache, cls_231_312.name(), n, "constructive", [&] {
          return constructive_preimages(n, ConstructiveClass::Av231_312).count();
        });
    row.av_132_312_size = cached_count(options.cache, cls_132_312.name(), n, "classsize", [&] {
      return class_size(n, cls_132_312, options.workers, options.limits);
    });
    row.catalan_n = cat.at(n);
    row.pow2 = BigInt(1) << (n - 1);
    row.pass = row.brute_132_312 == row.a_n && row.brute_231_312 == row.a_n &&
               row.brute_132_231 == row.a_n && row.constructive_132_312 == row.a_n &&
               row.constructive_231_312 == row.a_n && row.brute_21 == row.catalan_n &&
               row.av_132_312_size == row.pow2;
    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    report.overall = report.overall && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace stacksort
