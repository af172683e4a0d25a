// Command-line front end: sort, trees, preimage, verify, series.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stacksort/counting.hpp"
#include "stacksort/preimage.hpp"
#include "stacksort/trees.hpp"
#include "stacksort/word.hpp"

namespace {

constexpr const char* kCacheEnvVar = "STACKSORT_CACHE";

struct RunConfig {
  std::string mode;  // count|list for trees/preimage
  std::size_t n = 0;
  std::size_t max_n = 10;
  std::string class_spec = "132,312";
  std::string method = "brute";
  unsigned workers = 1;
  std::string cache_path;
  bool no_cache = false;
  std::string format = "table";
  bool allow_n12 = false;
  std::string word_text;
  double z = 0.1;
  std::size_t order = 12;
};

std::string effective_cache_path(const RunConfig& cfg) {
  if (cfg.no_cache) return {};
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv(kCacheEnvVar)) return env;
  return {};
}

int run_sort(const RunConfig& cfg) {
  std::cout << stacksort::stack_sort(stacksort::Word::parse(cfg.word_text)).str() << '\n';
  return 0;
}

int run_trees(const RunConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("trees: --n must be >= 1");
  if (cfg.mode == "count") {
    std::cout << stacksort::boolean_catalan(cfg.n).at(cfg.n).get_str() << '\n';
    return 0;
  }
  if (cfg.n > 10) throw std::invalid_argument("trees list: --n must be <= 10");
  stacksort::enumerate_trees(cfg.n,
                             [](const stacksort::ZeroOneTree& t) { std::cout << t.encode() << '\n'; });
  return 0;
}

int run_preimage(const RunConfig& cfg) {
  const stacksort::ClassSpec spec = stacksort::ClassSpec::parse(cfg.class_spec);
  stacksort::SearchLimits limits;
  limits.allow_n12 = cfg.allow_n12;
  if (cfg.method == "recurrence") {
    if (cfg.mode != "count")
      throw std::invalid_argument("preimage list: method recurrence has no member list");
    const bool verified =
        spec.name() == "132,312" || spec.name() == "231,312" || spec.name() == "132,231";
    if (!verified)
      throw std::invalid_argument("method recurrence applies only to the classes 132,312 / "
                                  "231,312 / 132,231");
    std::cout << stacksort::boolean_catalan(cfg.n).at(cfg.n).get_str() << '\n';
    std::cerr << "note: recurrence-based count (Boolean-Catalan a_n for class " << spec.name()
              << ")\n";
    return 0;
  }
  if (cfg.mode == "count") {
    const std::string cache_path = effective_cache_path(cfg);
    stacksort::CountCache cache =
        cache_path.empty() ? stacksort::CountCache() : stacksort::CountCache(cache_path);
    const std::string method = cfg.method;
    std::optional<stacksort::BigInt> hit;
    if (cache.enabled()) hit = cache.lookup(spec.name(), cfg.n, method);
    stacksort::BigInt count;
    if (hit) {
      count = *hit;
    } else if (method == "brute") {
      count = stacksort::brute_force_count(cfg.n, spec, cfg.workers, limits);
    } else if (method == "constructive") {
      if (spec.name() == "132,312")
        count = stacksort::constructive_preimages(cfg.n, stacksort::ConstructiveClass::Av132_312)
                    .count();
      else if (spec.name() == "231,312")
        count = stacksort::constructive_preimages(cfg.n, stacksort::ConstructiveClass::Av231_312)
                    .count();
      else
        throw std::invalid_argument("no constructive generator for class " + spec.name());
    } else {
      throw std::invalid_argument("unknown method '" + method + "'");
    }
    if (cache.enabled() && !hit) {
      cache.store(spec.name(), cfg.n, method, count);
      cache.save();
    }
    std::cout << count.get_str() << '\n';
    return 0;
  }
  // list mode
  if (cfg.n > limits.set_limit)
    throw std::invalid_argument("preimage list: --n must be <= " +
                                std::to_string(limits.set_limit));
  stacksort::PreimageSet set = [&] {
    if (cfg.method == "brute") return stacksort::brute_force(cfg.n, spec, limits);
    if (cfg.method == "constructive") {
      if (spec.name() == "132,312")
        return stacksort::constructive_preimages(cfg.n, stacksort::ConstructiveClass::Av132_312);
      if (spec.name() == "231,312")
        return stacksort::constructive_preimages(cfg.n, stacksort::ConstructiveClass::Av231_312);
      throw std::invalid_argument("no constructive generator for class " + spec.name());
    }
    throw std::invalid_argument("unknown method '" + cfg.method + "'");
  }();
  for (const auto& p : set.members) std::cout << p.str() << '\n';
  return 0;
}

int run_verify(const RunConfig& cfg) {
  stacksort::VerifyOptions options;
  options.workers = cfg.workers;
  options.limits.allow_n12 = cfg.allow_n12;
  const std::string cache_path = effective_cache_path(cfg);
  stacksort::CountCache cache =
      cache_path.empty() ? stacksort::CountCache() : stacksort::CountCache(cache_path);
  if (cache.enabled()) options.cache = &cache;
  const stacksort::VerificationReport report = stacksort::verify(cfg.max_n, options);
  if (cache.enabled()) cache.save();
  if (cfg.format == "json")
    std::cout << report.to_json() << '\n';
  else if (cfg.format == "csv")
    std::cout << report.to_csv();
  else
    std::cout << report.to_table();
  return report.overall ? 0 : 1;
}

int run_series(const RunConfig& cfg) {
  const stacksort::SeriesPoint point = stacksort::series_partial_sum(cfg.z, cfg.order);
  const double residual = stacksort::functional_equation_residual(cfg.z);
  std::cout << "z            = " << cfg.z << '\n'
            << "closed form  = " << point.closed << '\n'
            << "partial sum  = " << point.partial_sum << " (N=" << point.order << ")\n"
            << "gap          = " << point.gap() << '\n'
            << "residual     = " << residual << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack-sorting preimage and 0-1-tree toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* sort_cmd = app.add_subcommand("sort", "Apply the stack-sorting map to a word");
  sort_cmd->add_option("word", cfg.word_text, "space-separated values; \"\" is the empty word");

  auto* trees_cmd = app.add_subcommand("trees", "Count or list 0-1-trees");
  trees_cmd->add_option("mode", cfg.mode, "count|list")
      ->required()
      ->check(CLI::IsMember({"count", "list"}));
  trees_cmd->add_option("--n", cfg.n, "number of vertices")->required();

  auto* pre_cmd = app.add_subcommand("preimage", "Count or list stack-sorting preimages");
  pre_cmd->add_option("mode", cfg.mode, "count|list")
      ->required()
      ->check(CLI::IsMember({"count", "list"}));
  pre_cmd->add_option("--n", cfg.n, "permutation length")->required();
  pre_cmd->add_option("--class", cfg.class_spec, "forbidden patterns, e.g. 132,312");
  pre_cmd->add_option("--method", cfg.method, "brute|constructive|recurrence")
      ->check(CLI::IsMember({"brute", "constructive", "recurrence"}));
  pre_cmd->add_option("--workers", cfg.workers, "worker threads for brute counting");
  pre_cmd->add_option("--cache", cfg.cache_path, "count cache file (or $STACKSORT_CACHE)");
  pre_cmd->add_flag("--no-cache", cfg.no_cache, "bypass the count cache");
  pre_cmd->add_flag("--allow-n12", cfg.allow_n12, "permit n = 12 counting runs");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all counts up to --max-n");
  verify_cmd->add_option("--max-n", cfg.max_n, "largest permutation length");
  verify_cmd->add_option("--workers", cfg.workers, "worker threads");
  verify_cmd->add_option("--cache", cfg.cache_path, "count cache file (or $STACKSORT_CACHE)");
  verify_cmd->add_flag("--no-cache", cfg.no_cache, "bypass the count cache");
  verify_cmd->add_option("--format", cfg.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify_cmd->add_flag("--allow-n12", cfg.allow_n12, "permit n = 12 counting runs");

  auto* series_cmd = app.add_subcommand("series", "Generating-function checks at a point");
  series_cmd->add_option("--z", cfg.z, "evaluation point, 0 < z < (sqrt(2)-1)/2")->required();
  series_cmd->add_option("--n,--order", cfg.order, "truncation order N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sort_cmd->parsed()) return run_sort(cfg);
    if (trees_cmd->parsed()) return run_trees(cfg);
    if (pre_cmd->parsed()) return run_preimage(cfg);
    if (verify_cmd->parsed()) return run_verify(cfg);
    if (series_cmd->parsed()) return run_series(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
