#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "piw/corpus.hpp"
#include "piw/pi_config.hpp"

namespace piw {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

/// Which check families to run. `basis` always runs.
struct CheckSelection {
  bool thm_a = true;
  bool thm_b = true;
  bool cor_c = true;
  bool awc = true;
  bool lemmas = true;
  bool basic = true;
  bool relative = true;

  /// Comma-separated subset of thmA,thmB,corC,awc,lemmas,basic,relative, or "all".
  /// Throws InputError on an unknown name.
  static CheckSelection parse(std::string_view text);
};

/// `--pi` argument: an explicit prime list, "all", or "each".
struct PiSelection {
  enum class Kind { List, All, Each };
  Kind kind = Kind::Each;
  PiConfig pi;
  std::string text = "each";

  /// Throws InputError unless the text is "all", "each", "none" or comma-separated primes.
  static PiSelection parse(std::string_view text);
};

/// All subsets of the prime divisors of |G|, in order of size then lexicographically.
std::vector<PiConfig> enumerate_pi_choices(std::uint64_t group_order);

struct VerifyOptions {
  CheckSelection checks;
  std::uint64_t limit_order = 2000;
  std::uint64_t subgroup_limit = 2000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct Tally {
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  bool resource_limited = false;

  void merge(const Tally& other);
  /// 0 pass, 1 verification failure, 3 resource limit.
  int exit_code() const;
};

/// All selected checks for one (G, pi). The result object follows the report schema;
/// skips carry a `reason` code such as `not_pi_separable`.
nlohmann::json verify_group_pi(const GroupSpec& spec, const PiConfig& pi, const VerifyOptions& options, Tally& tally);

/// The full report: {schema, tool, version, options, results, summary}. Byte-identical for identical inputs.
nlohmann::json verify_corpus(const std::vector<GroupSpec>& corpus, const PiSelection& pi, const VerifyOptions& options,
                             Tally& tally);

}  // namespace piw
