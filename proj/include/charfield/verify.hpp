#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "charfield/chartab.hpp"
#include "charfield/fov.hpp"

namespace charfield {

struct VerificationCase {
  enum class Compare { Equal, AtLeast };

  std::string group;
  std::size_t expected_f = 0;
  Compare compare = Compare::Equal;
  std::optional<std::size_t> expected_k;
  std::optional<std::size_t> expected_rational;
  std::uint64_t expected_order = 0;
  std::string claim;  // the statement being reproduced
};

/// The fourteen groups with f(G) <= 3, as (f = 2 list, f = 3 list).
const std::vector<VerificationCase>& theorem_a_cases();
/// Groups excluded from the classification by a computed f value.
const std::vector<VerificationCase>& exclusion_cases();

enum class Verdict { Pass, Warn, Fail };
const char* to_string(Verdict v);

struct CaseResult {
  std::string id;
  Verdict verdict = Verdict::Pass;
  std::string message;
};

struct SuiteResult {
  std::vector<CaseResult> cases;  // sorted by id
  std::vector<std::string> notes;

  std::size_t count(Verdict v) const;
  bool failed() const { return count(Verdict::Fail) > 0; }
};

/// Memoized character tables keyed by canonical group spec. Thread-safe.
class TableCache {
 public:
  explicit TableCache(DixonOptions options = {}) : options_(options) {}
  std::shared_ptr<const CharacterTable> get(const std::string& spec);

 private:
  DixonOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const CharacterTable>> tables_;
};

struct VerifyOptions {
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

/// Runs "theorem-a", "exclusions", "omega", "subfields", "bounds" or "all".
/// Throws SpecError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

std::string format_suite(const std::string& name, const SuiteResult& result);

}  // namespace charfield
