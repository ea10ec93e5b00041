#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "charfield/chartab.hpp"
#include "charfield/cyclo.hpp"
#include "charfield/errors.hpp"
#include "charfield/fov.hpp"
#include "charfield/io.hpp"
#include "charfield/verify.hpp"
#include "charfield/zoo.hpp"

using namespace charfield;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kConstruction = 3, kComputation = 4 };

constexpr std::uint32_t kRangeCap = 10'000;

class RangeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::uint32_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, std::uint32_t min) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoul(text, &used);
      if (used != text.size()) throw RangeError("");
      r.lo = r.hi = static_cast<std::uint32_t>(v);
    } else {
      const auto a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = static_cast<std::uint32_t>(std::stoul(a, &used));
      if (used != a.size()) throw RangeError("");
      r.hi = static_cast<std::uint32_t>(std::stoul(b, &used));
      if (used != b.size()) throw RangeError("");
    }
  } catch (const std::logic_error&) {
    throw RangeError("malformed range '" + text + "'; expected N or A..B");
  } catch (const RangeError&) {
    throw RangeError("malformed range '" + text + "'; expected N or A..B");
  }
  if (r.lo < min || r.hi < r.lo || r.hi > kRangeCap)
    throw RangeError("range " + text + " must satisfy " + std::to_string(min) + " <= A <= B <= " +
                     std::to_string(kRangeCap));
  return r;
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
  }
};

struct GroupInput {
  std::string spec;
  std::string group_file;

  std::pair<PermGroup, std::string> load() const {
    if (!group_file.empty()) {
      std::ifstream f(group_file, std::ios::binary);
      if (!f) throw ConstructionError("cannot read group file '" + group_file + "'");
      std::stringstream buffer;
      buffer << f.rdbuf();
      return {io::build_group(io::parse_group_file(buffer.str())), group_file};
    }
    if (spec.empty()) throw SpecError("a group spec or --group-file is required");
    const auto parsed = parse_spec(spec);
    return {build_group(parsed), to_string(parsed)};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, fields of values and f(G) for small finite groups"};
  app.require_subcommand(1);

  std::string format;
  Output out;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  unsigned prime_skip = 0;
  GroupInput input;

  auto add_group_options = [&](CLI::App* cmd) {
    cmd->add_option("spec", input.spec, "group spec, e.g. A5, D10, PSL(2,8), C2xC2");
    cmd->add_option("--group-file", input.group_file, "JSON file {\"degree\": n, \"generators\": [[...]]}");
    cmd->add_option("--out", out.path, "write output to FILE");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "reserved; output does not depend on it");
    cmd->add_option("--prime-skip", prime_skip, "use a later admissible modular prime");
  };

  auto* table_cmd = app.add_subcommand("table", "print the character table");
  add_group_options(table_cmd);
  table_cmd->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* fov_cmd = app.add_subcommand("fov", "fields of values and f(G)");
  add_group_options(fov_cmd);
  fov_cmd->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "theorem-a, exclusions, omega, subfields, bounds or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out.path, "write output to FILE");

  std::string range;
  auto* omega_cmd = app.add_subcommand("omega", "degree of E(r)+E(r)^-1 over Q for r in a range");
  omega_cmd->add_option("range", range, "R or A..B with 3 <= A <= B <= 10000")->required();
  omega_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  omega_cmd->add_option("--out", out.path, "write output to FILE");

  std::uint32_t degree = 2;
  auto* subfields_cmd = app.add_subcommand("subfields", "number of degree-d subfields of Q_n for n in a range");
  subfields_cmd->add_option("range", range, "N or A..B with 3 <= A <= B <= 10000")->required();
  subfields_cmd->add_option("--degree", degree, "2 or 3")->check(CLI::IsMember({2, 3}));
  subfields_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  subfields_cmd->add_option("--out", out.path, "write output to FILE");

  auto* group_cmd = app.add_subcommand("group", "emit a group as a generator file, or summarize it");
  add_group_options(group_cmd);
  group_cmd->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    DixonOptions dixon;
    dixon.jobs = jobs;
    dixon.prime_skip = prime_skip;

    if (table_cmd->parsed()) {
      const auto [group, name] = input.load();
      const auto table = dixon_table(group, dixon);
      if (format == "json") out.write(io::table_to_json(table, name).dump(2) + "\n");
      else if (format == "csv") out.write(io::table_to_csv(table));
      else out.write(io::table_to_pretty(table, name));
      return kOk;
    }
    if (fov_cmd->parsed()) {
      const auto [group, name] = input.load();
      const auto report = f_value(dixon_table(group, dixon), name);
      if (format == "json") out.write(io::report_to_json(report).dump(2) + "\n");
      else out.write(io::report_to_pretty(report));
      return kOk;
    }
    if (group_cmd->parsed()) {
      const auto [group, name] = input.load();
      if (format == "pretty") {
        const auto classes = conjugacy_classes(group);
        std::ostringstream s;
        s << name << ": order " << group.order() << ", degree " << group.degree() << ", " << classes.count()
          << " classes, exponent " << exponent(classes) << "\n";
        out.write(s.str());
      } else {
        out.write(io::write_group_file(io::group_file_of(group)) + "\n");
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto result = run_suite(suite, VerifyOptions{jobs});
      out.write(format_suite(suite, result));
      return result.failed() ? kVerifyFailed : kOk;
    }
    if (omega_cmd->parsed()) {
      const auto r = parse_range(range, 3);
      io::Json rows = io::Json::array();
      std::ostringstream csv;
      csv << "r,degree\n";
      for (std::uint32_t x = r.lo; x <= r.hi; ++x) {
        const auto d = omega_degree(x);
        csv << x << "," << d << "\n";
        rows.push_back({{"r", x}, {"degree", d}});
      }
      out.write(format == "json" ? rows.dump(2) + "\n" : csv.str());
      return kOk;
    }
    if (subfields_cmd->parsed()) {
      const auto r = parse_range(range, 3);
      io::Json rows = io::Json::array();
      std::ostringstream csv;
      csv << "n,degree,count\n";
      for (std::uint32_t x = r.lo; x <= r.hi; ++x) {
        const auto c = count_subfields(x, degree);
        csv << c.n << "," << c.degree << "," << c.count << "\n";
        rows.push_back({{"n", c.n}, {"degree", c.degree}, {"count", c.count}});
      }
      out.write(format == "json" ? rows.dump(2) + "\n" : csv.str());
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const SpecError& e) {
    std::cerr << "invalid group: " << e.what() << "\n";
    return kParse;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kParse;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kConstruction;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kConstruction;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
