#include <random>

#include "doctest.h"

#include "charfield/errors.hpp"
#include "charfield/io.hpp"
#include "charfield/zoo.hpp"

using namespace charfield;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng) {
  const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 60);
  std::vector<std::pair<std::int64_t, Rational>> terms;
  const int count = static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) {
    Rational q(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6));
    q.canonicalize();
    terms.emplace_back(static_cast<std::int64_t>(rng() % n), q);
  }
  return Cyclo::from_terms(n, terms);
}

}  // namespace

TEST_CASE("cyclotomic JSON round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto c = random_cyclo(rng);
    CAPTURE(c.to_string());
    CHECK(io::cyclo_from_json(io::to_json(c)) == c);
  }
  CHECK(io::to_json(Cyclo(0L)).dump() == R"({"n":1,"c":[]})");
  CHECK(io::to_json(Cyclo(Rational(-3, 2))).dump() == R"({"n":1,"c":[[0,-3,2]]})");
  CHECK(io::to_json(Cyclo::root_of_unity(4, 1)).dump() == R"({"n":4,"c":[[1,1,1]]})");
}

TEST_CASE("cyclotomic JSON errors") {
  using io::Json;
  CHECK_THROWS_AS(io::cyclo_from_json(Json::parse(R"({"n":0,"c":[]})")), ValidationError);
  CHECK_THROWS_AS(io::cyclo_from_json(Json::parse(R"({"n":5,"c":[[1,1,0]]})")), ValidationError);
  CHECK_THROWS_AS(io::cyclo_from_json(Json::parse(R"({"n":5,"c":[[1,1]]})")), ValidationError);
  CHECK_THROWS_AS(io::cyclo_from_json(Json::parse(R"({"c":[]})")), ValidationError);
  CHECK_THROWS_AS(io::cyclo_from_json(Json::parse(R"({"n":"five","c":[]})")), ValidationError);
  // A coefficient too large for the wire format is refused.
  Rational big("123456789012345678901234567890");
  CHECK_THROWS_AS(io::to_json(Cyclo(big)), ValidationError);
}

TEST_CASE("table JSON") {
  const auto t = dixon_table(build_group(parse_spec("S3")));
  const auto j = io::table_to_json(t, "S3");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"group", "order", "classes", "exponent", "irreducibles"});
  CHECK(j["order"] == 6);
  CHECK(j["exponent"] == 6);
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][0]["size"] == 1);
  CHECK(j["classes"][0]["order"] == 1);
  REQUIRE(j["irreducibles"].size() == 3);
  CHECK(j["irreducibles"][2]["degree"] == 2);
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t i = 0; i < t.classes.count(); ++i)
      CHECK(io::cyclo_from_json(j["irreducibles"][r]["values"][i]) == t.values[r][i]);
  // Serialization is stable.
  CHECK(j.dump() == io::table_to_json(dixon_table(build_group(parse_spec("S3"))), "S3").dump());
}

TEST_CASE("CSV and pretty tables") {
  const auto t = dixon_table(build_group(parse_spec("C3")));
  const auto csv = io::table_to_csv(t);
  CHECK(csv.rfind("row,C0 (order 1, size 1),C1 (order 3, size 1),C2 (order 3, size 1)\n", 0) == 0);
  CHECK(csv.find("X.1,1,1,1\n") != std::string::npos);
  CHECK(csv.find("E(3)") != std::string::npos);
  const auto pretty = io::table_to_pretty(t, "C3");
  CHECK(pretty.rfind("C3 (order 3, 3 classes, exponent 3)\n", 0) == 0);
  CHECK(pretty.find("3a") != std::string::npos);
  CHECK(pretty.find("3b") != std::string::npos);
}

TEST_CASE("report JSON") {
  const auto r = f_value(dixon_table(build_group(parse_spec("C4"))), "C4");
  const auto j = io::report_to_json(r);
  CHECK(j["group"] == "C4");
  CHECK(j["k"] == 4);
  CHECK(j["f"] == 2);
  CHECK(j["rational"] == 2);
  REQUIRE(j["buckets"].size() == 2);
  CHECK(j["buckets"][0]["conductor"] == 1);
  CHECK(j["buckets"][1]["conductor"] == 4);
  CHECK(j["buckets"][1]["rows"].size() == 2);
  CHECK(j["bounds"]["omega"] == 2);
  CHECK(j["bounds"]["comparisons"].size() == 6);
  CHECK(io::report_to_pretty(r).rfind("C4: order 4, k = 4, f = 2", 0) == 0);
}

TEST_CASE("group files") {
  const std::string text = R"({"degree":5,"generators":[[1,2,3,4,0],[1,0,2,3,4]]})";
  const auto g = io::parse_group_file(text);
  CHECK(g.degree == 5);
  CHECK(g.generators.size() == 2);
  CHECK(io::write_group_file(g) == text);
  CHECK(io::build_group(g).order() == 120);

  // Round trip through a zoo group.
  for (const char* name : {"A5", "PSL(2,8)", "D18", "C2xC2"}) {
    const auto group = build_group(parse_spec(name));
    const auto file = io::group_file_of(group);
    const auto written = io::write_group_file(file);
    const auto back = io::parse_group_file(written);
    CHECK(back.degree == file.degree);
    CHECK(back.generators == file.generators);
    CHECK(io::write_group_file(back) == written);
    CHECK(io::build_group(back).order() == group.order());
  }

  // Whitespace and key order do not matter on input.
  const auto spaced = io::parse_group_file("{ \"generators\": [[1, 0]],\n  \"degree\": 2 }");
  CHECK(spaced.degree == 2);
  CHECK(io::build_group(io::parse_group_file(R"({"degree":3,"generators":[]})")).order() == 1);
}

TEST_CASE("group file errors") {
  CHECK_THROWS_AS(io::parse_group_file("{\"degree\": 3,"), ParseError);
  CHECK_THROWS_AS(io::parse_group_file("not json"), ParseError);
  CHECK_THROWS_AS(io::parse_group_file("[1,2]"), ValidationError);
  CHECK_THROWS_AS(io::parse_group_file(R"({"degree":3})"), ValidationError);
  CHECK_THROWS_AS(io::parse_group_file(R"({"degree":0,"generators":[]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_group_file(R"({"degree":3,"generators":[[0,1]]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_group_file(R"({"degree":3,"generators":[[0,1,"x"]]})"), ValidationError);
  CHECK_THROWS_AS(io::build_group(io::parse_group_file(R"({"degree":3,"generators":[[1,1,2]]})")), ValidationError);
  CHECK_THROWS_AS(io::build_group(io::parse_group_file(R"({"degree":3,"generators":[[0,1,7]]})")), ValidationError);
  EnumerationOptions small;
  small.max_order = 10;
  CHECK_THROWS_AS(io::build_group(io::parse_group_file(R"({"degree":5,"generators":[[1,2,3,4,0],[1,0,2,3,4]]})"),
                                  small),
                  GroupTooLarge);
}
