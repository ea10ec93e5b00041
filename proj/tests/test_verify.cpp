#include <algorithm>

#include "doctest.h"

#include "charfield/errors.hpp"
#include "charfield/verify.hpp"
#include "charfield/zoo.hpp"

using namespace charfield;

namespace {

const CaseResult* find_case(const SuiteResult& r, const std::string& id) {
  for (const auto& c : r.cases)
    if (c.id == id) return &c;
  return nullptr;
}

bool sorted_by_id(const SuiteResult& r) {
  return std::is_sorted(r.cases.begin(), r.cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

}  // namespace

TEST_CASE("fixture lists") {
  const auto& a = theorem_a_cases();
  REQUIRE(a.size() == 14);
  std::size_t f2 = 0, f3 = 0;
  for (const auto& c : a) {
    CHECK(c.compare == VerificationCase::Compare::Equal);
    CHECK(build_group(parse_spec(c.group)).order() == c.expected_order);
    (c.expected_f == 2 ? f2 : f3) += 1;
  }
  CHECK(f2 == 6);
  CHECK(f3 == 8);
  const auto& ex = exclusion_cases();
  CHECK(ex.size() == 8);
  for (const auto& c : ex)
    if (c.group == "C8" || c.group == "C9") CHECK(c.compare == VerificationCase::Compare::AtLeast);
}

TEST_CASE("theorem-a suite") {
  const auto r = run_suite("theorem-a");
  CHECK_FALSE(r.failed());
  CHECK(r.count(Verdict::Pass) == 16);
  CHECK(sorted_by_id(r));
  const auto* b2 = find_case(r, "theorem-a/b(2)");
  REQUIRE(b2 != nullptr);
  CHECK(b2->message.find("21 (F21)") != std::string::npos);
  const auto* b3 = find_case(r, "theorem-a/b(3)");
  REQUIRE(b3 != nullptr);
  CHECK(b3->message.find("29120 (Sz(8))") != std::string::npos);
  CHECK(std::find(r.notes.begin(), r.notes.end(), "14/14 groups match") != r.notes.end());
}

TEST_CASE("exclusions suite") {
  const auto r = run_suite("exclusions");
  CHECK_FALSE(r.failed());
  CHECK(r.count(Verdict::Pass) == 8);
}

TEST_CASE("omega suite warns only for r = 12") {
  const auto r = run_suite("omega");
  CHECK_FALSE(r.failed());
  CHECK(r.count(Verdict::Warn) == 1);
  const auto* q = find_case(r, "omega/3 quadratic");
  REQUIRE(q != nullptr);
  CHECK(q->verdict == Verdict::Warn);
  CHECK(q->message.find("{5,8,10,12}") != std::string::npos);
}

TEST_CASE("subfields and bounds suites") {
  CHECK_FALSE(run_suite("subfields").failed());
  const auto b = run_suite("bounds");
  CHECK_FALSE(b.failed());
  CHECK(find_case(b, "bounds/4 quotient D18/C3") != nullptr);
}

TEST_CASE("all suite is deterministic across job counts") {
  const auto serial = run_suite("all");
  const auto parallel = run_suite("all", VerifyOptions{4});
  CHECK(format_suite("all", serial) == format_suite("all", parallel));
  CHECK(sorted_by_id(serial));
  CHECK(serial.count(Verdict::Fail) == 0);
  CHECK(serial.count(Verdict::Warn) == 1);
  const auto text = format_suite("all", serial);
  CHECK(text.find("[WARN] omega/3 quadratic") != std::string::npos);
  CHECK(text.find("all: ") != std::string::npos);
}

TEST_CASE("suite names") {
  const auto& names = suite_names();
  for (const char* n : {"theorem-a", "exclusions", "omega", "subfields", "bounds", "all"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run_suite("nonsense"), SpecError);
  CHECK(std::string(to_string(Verdict::Warn)) == "WARN");
}

TEST_CASE("table cache") {
  TableCache cache;
  const auto a = cache.get("A5");
  CHECK(a->size() == 5);
  CHECK(cache.get("A5").get() == a.get());
}
