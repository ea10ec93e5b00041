#include "charfield/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "charfield/errors.hpp"

namespace charfield::io {

Json to_json(const Cyclo& c) {
  Json terms = Json::array();
  for (const auto& [e, q] : c.terms()) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
      throw ValidationError("coefficient " + q.get_str() + " does not fit a 64-bit integer");
    terms.push_back({e, q.get_num().get_si(), q.get_den().get_si()});
  }
  Json j;
  j["n"] = c.conductor();
  j["c"] = std::move(terms);
  return j;
}

Cyclo cyclo_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::uint32_t>();
    if (n == 0) throw ValidationError("cyclotomic value with conductor 0");
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& t : j.at("c")) {
      if (!t.is_array() || t.size() != 3) throw ValidationError("cyclotomic term must be [exponent, num, den]");
      const auto den = t[2].get<long>();
      if (den == 0) throw ValidationError("zero denominator in cyclotomic term");
      Rational q(t[1].get<long>(), den);
      q.canonicalize();
      terms.emplace_back(t[0].get<std::int64_t>(), q);
    }
    return Cyclo::from_terms(n, terms);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed cyclotomic value: ") + e.what());
  }
}

Json table_to_json(const CharacterTable& table, const std::string& group) {
  Json j;
  j["group"] = group;
  j["order"] = table.group_order();
  Json classes = Json::array();
  for (std::size_t i = 0; i < table.classes.count(); ++i) {
    Json c;
    c["size"] = table.classes.sizes[i];
    c["order"] = table.classes.element_orders[i];
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  j["exponent"] = table.exponent;
  Json irr = Json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    Json row;
    row["degree"] = table.degrees[r];
    Json values = Json::array();
    for (const auto& v : table.values[r]) values.push_back(to_json(v));
    row["values"] = std::move(values);
    irr.push_back(std::move(row));
  }
  j["irreducibles"] = std::move(irr);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string table_to_csv(const CharacterTable& table) {
  std::ostringstream out;
  out << "row";
  for (std::size_t i = 0; i < table.classes.count(); ++i)
    out << ",C" << i << " (order " << table.classes.element_orders[i] << ", size " << table.classes.sizes[i] << ")";
  out << "\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << "X." << r + 1;
    for (const auto& v : table.values[r]) out << "," << csv_field(v.to_string());
    out << "\n";
  }
  return out.str();
}

std::string table_to_pretty(const CharacterTable& table, const std::string& group) {
  const std::size_t k = table.classes.count();
  std::vector<std::vector<std::string>> cells;
  // Class names "order + letter", lettered within each element order.
  std::vector<std::string> header{""}, sizes{"size"};
  std::map<std::uint32_t, int> seen;
  for (std::size_t i = 0; i < k; ++i) {
    const auto o = table.classes.element_orders[i];
    header.push_back(std::to_string(o) + static_cast<char>('a' + seen[o]++ % 26));
    sizes.push_back(std::to_string(table.classes.sizes[i]));
  }
  cells.push_back(header);
  cells.push_back(sizes);
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::vector<std::string> line{"X." + std::to_string(r + 1)};
    for (const auto& v : table.values[r]) line.push_back(v.to_string());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  out << group << " (order " << table.group_order() << ", " << k << " classes, exponent " << table.exponent << ")\n";
  for (std::size_t l = 0; l < cells.size(); ++l) {
    for (std::size_t c = 0; c < cells[l].size(); ++c) {
      out << (c ? "  " : "") << std::string(width[c] - cells[l][c].size(), ' ') << cells[l][c];
    }
    out << "\n";
    if (l == 1) out << "\n";
  }
  return out.str();
}

Json report_to_json(const FReport& report) {
  Json j;
  j["group"] = report.group;
  j["order"] = report.order;
  j["k"] = report.k;
  j["f"] = report.f;
  j["rational"] = report.rational;
  j["max_field_degree"] = report.max_field_degree;
  Json buckets = Json::array();
  for (const auto& b : report.buckets) {
    Json bj;
    bj["conductor"] = b.field.conductor;
    bj["stabilizer"] = b.field.stabilizer;
    bj["degree"] = b.field.degree;
    Json rows = Json::array();
    for (auto r : b.rows) {
      Json rj;
      rj["row"] = r;
      rj["degree"] = report.row_degrees.at(r);
      rows.push_back(std::move(rj));
    }
    bj["rows"] = std::move(rows);
    buckets.push_back(std::move(bj));
  }
  j["buckets"] = std::move(buckets);
  Json bounds;
  bounds["order"] = report.bounds.order;
  bounds["floor_log2_log2"] = report.bounds.floor_log2_log2;
  bounds["log3"] = report.bounds.log3;
  bounds["omega"] = report.bounds.omega;
  Json checks = Json::array();
  for (const auto& row : bounds_report(report)) {
    Json c;
    c["inequality"] = row.inequality;
    c["lhs"] = row.lhs;
    c["rhs"] = row.rhs;
    c["holds"] = row.holds;
    checks.push_back(std::move(c));
  }
  bounds["comparisons"] = std::move(checks);
  j["bounds"] = std::move(bounds);
  return j;
}

std::string report_to_pretty(const FReport& report) {
  std::ostringstream out;
  out << report.group << ": order " << report.order << ", k = " << report.k << ", f = " << report.f
      << ", rational = " << report.rational << ", max field degree = " << report.max_field_degree << "\n";
  for (const auto& b : report.buckets) {
    out << "  " << b.field.to_string() << ": " << b.rows.size() << " row" << (b.rows.size() == 1 ? "" : "s")
        << " (degrees";
    for (auto r : b.rows) out << " " << report.row_degrees.at(r);
    out << ")\n";
  }
  for (const auto& row : bounds_report(report))
    out << "  " << row.inequality << ": " << row.lhs << " vs " << row.rhs << (row.holds ? " holds" : " fails")
        << "\n";
  return out.str();
}

GroupFile parse_group_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid group file JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  GroupFile g;
  try {
    if (!j.is_object() || j.size() != 2) throw ValidationError("group file must have exactly the keys degree and generators");
    g.degree = j.at("degree").get<std::size_t>();
    if (g.degree == 0 || g.degree > 65536) throw ValidationError("group file degree must be in [1, 65536]");
    for (const auto& gen : j.at("generators")) {
      auto images = gen.get<std::vector<std::uint32_t>>();
      if (images.size() != g.degree)
        throw ValidationError("generator has " + std::to_string(images.size()) + " images, expected " +
                              std::to_string(g.degree));
      g.generators.push_back(std::move(images));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed group file: ") + e.what());
  }
  return g;
}

std::string write_group_file(const GroupFile& g) {
  Json j;
  j["degree"] = g.degree;
  j["generators"] = g.generators;
  return j.dump();
}

GroupFile group_file_of(const PermGroup& group) {
  GroupFile g;
  g.degree = group.degree();
  for (const auto& p : group.generators()) {
    auto images = p.images();
    g.generators.emplace_back(images.begin(), images.end());
  }
  return g;
}

PermGroup build_group(const GroupFile& g, const EnumerationOptions& options) {
  std::vector<Permutation> gens;
  for (const auto& images : g.generators) {
    std::vector<Point> pts;
    for (auto x : images) {
      if (x >= g.degree) throw ValidationError("generator image " + std::to_string(x) + " out of range");
      pts.push_back(static_cast<Point>(x));
    }
    gens.emplace_back(std::move(pts));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree));
  return PermGroup::enumerate(g.degree, std::move(gens), options);
}

}  // namespace charfield::io
