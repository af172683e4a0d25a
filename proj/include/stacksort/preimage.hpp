#ifndef STACKSORT_PREIMAGE_HPP
#define STACKSORT_PREIMAGE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/counting.hpp"
#include "stacksort/patterns.hpp"
#include "stacksort/word.hpp"

namespace stacksort {

/// Resource bounds for exhaustive search over S_n.
struct SearchLimits {
  std::size_t set_limit = 10;    // member collection
  std::size_t count_limit = 11;  // streaming counts
  bool allow_n12 = false;        // raises count_limit to 12
};

/// The permutations of length n whose stack-sorted image avoids a class.
struct PreimageSet {
  enum class Method { Brute, Constructive };
  std::size_t n;
  std::string class_name;
  Method method;
  std::vector<Permutation> members;

  BigInt count() const { return BigInt(static_cast<unsigned long>(members.size())); }
};

/// Enumerates all n! permutations and keeps those p with s(p) avoiding spec,
/// in lexicographic order. Refuses n above the configured limit.
PreimageSet brute_force(std::size_t n, const ClassSpec& spec, const SearchLimits& limits = {});

/// Same census, streaming and parallel; no member storage. The result does
/// not depend on the worker count.
BigInt brute_force_count(std::size_t n, const ClassSpec& spec, unsigned workers = 1,
                         const SearchLimits& limits = {});

/// Number of length-n permutations avoiding spec (the class itself, not its
/// stack-sorting preimage).
BigInt class_size(std::size_t n, const ClassSpec& spec, unsigned workers = 1,
                  const SearchLimits& limits = {});

/// The two ways to place the leftmost entry of s(R) relative to the entries
/// of L when combining preimages of Av(132,312).
enum class MinMaxChoice { Min, Max };

/// The two ways to interleave the value sets when combining preimages of
/// Av(231,312): layers stay disjoint, or the last layer of s(L) merges with
/// the first layer of s(R).
enum class LayerChoice { Disjoint, Merged };

/// Builds the length |l|+|r|+1 preimage L n R from preimages l and r of
/// Av(132,312). The two choices yield distinct permutations.
Permutation combine_132_312(const Permutation& l, const Permutation& r, MinMaxChoice choice);

/// Builds the length |l|+|r|+1 preimage L n R from preimages l and r of
/// Av(231,312). The two choices yield distinct permutations.
Permutation combine_231_312(const Permutation& l, const Permutation& r, LayerChoice choice);

enum class Side { Front, Back };

/// n p (Front) or p n (Back) for |p| = n-1; both have image s(p) n.
Permutation extend_with_max(const Permutation& p, Side side);

/// The two classes with a constructive generator.
enum class ConstructiveClass { Av132_312, Av231_312 };

ClassSpec spec_for(ConstructiveClass cls);

/// Generates the preimage set recursively: {1} for n = 1; for n >= 2 the
/// extensions of the (n-1)-sets by a new maximum on either side, plus every
/// combine of a pair from sizes (i-1, n-i) for i in [2, n-1] under both
/// choices. Throws std::logic_error if a duplicate is ever produced.
PreimageSet constructive_preimages(std::size_t n, ConstructiveClass cls);

struct VerificationRow {
  std::size_t n = 0;
  BigInt a_n;
  BigInt brute_132_312, brute_231_312, brute_132_231;
  BigInt constructive_132_312, constructive_231_312;
  BigInt brute_21, catalan_n;
  BigInt av_132_312_size, pow2;
  bool pass = false;
  long long millis = 0;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool overall = false;

  std::string to_table() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// On-disk JSON memo of exact counts keyed by (class, n, method).
class CountCache {
public:
  CountCache() = default;
  explicit CountCache(std::string path);  // loads if the file exists

  std::optional<BigInt> lookup(const std::string& class_name, std::size_t n,
                               const std::string& method) const;
  void store(const std::string& class_name, std::size_t n, const std::string& method,
             const BigInt& value);
  void save() const;
  bool enabled() const { return !path_.empty(); }

private:
  std::string path_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct VerifyOptions {
  unsigned workers = 1;
  SearchLimits limits;
  CountCache* cache = nullptr;
};

/// Checks, for every n <= maxN, that the tree count a_n equals the three
/// brute-force preimage counts and both constructive counts, that the Av(21)
/// preimage count is Catalan, and that |Av_n(132,312)| = 2^{n-1}. Row
/// failures are recorded, never thrown.
VerificationReport verify(std::size_t maxN, const VerifyOptions& options = {});

}  // namespace stacksort

#endif
