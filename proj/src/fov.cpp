#include "charfield/fov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "charfield/numtheory.hpp"

namespace charfield {

std::string FieldLabel::to_string() const {
  if (conductor == 1) return "Q";
  std::string s = "Q" + std::to_string(conductor) + "[";
  for (std::size_t i = 0; i < stabilizer.size(); ++i) s += (i ? "," : "") + std::to_string(stabilizer[i]);
  return s + "] (degree " + std::to_string(degree) + ")";
}

FieldLabel field_from_stabilizer(std::uint64_t n, const std::vector<std::uint64_t>& stabilizer) {
  const std::set<std::uint64_t> stab(stabilizer.begin(), stabilizer.end());
  std::vector<std::uint64_t> units;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k % n, n) == 1 || n == 1) units.push_back(k % n);
  // m is admissible when every unit k = 1 (mod m) lies in the stabilizer.
  auto admissible = [&](std::uint64_t m) {
    for (auto k : units)
      if (k % m == 1 % m && !stab.contains(k)) return false;
    return true;
  };
  std::uint64_t m = n;
  for (bool descended = true; descended && m > 1;) {
    descended = false;
    for (auto [p, a] : nt::factorize(m)) {
      (void)a;
      if (admissible(m / p)) {
        m /= p;
        descended = true;
        break;
      }
    }
  }
  FieldLabel label;
  label.conductor = m;
  if (m == 1) return label;
  std::set<std::uint64_t> image;
  for (auto k : stab) image.insert(k % m);
  label.stabilizer.assign(image.begin(), image.end());
  label.degree = nt::euler_phi(m) / label.stabilizer.size();
  return label;
}

namespace {

std::vector<std::uint64_t> units_mod(std::uint64_t e) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= e; ++k)
    if (std::gcd(k, e) == 1) out.push_back(k % e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FieldLabel field_of_values(const CharacterTable& table, std::size_t row) {
  const auto& values = table.values.at(row);
  const auto& cls = table.classes;
  std::vector<std::uint64_t> stab;
  for (auto k : units_mod(table.exponent)) {
    bool fixed = true;
    for (std::size_t i = 0; i < cls.count() && fixed; ++i)
      fixed = values[cls.power_map(i, static_cast<std::int64_t>(k))] == values[i];
    if (fixed) stab.push_back(k);
  }
  return field_from_stabilizer(table.exponent, stab);
}

FieldLabel field_of_values_by_galois(const CharacterTable& table, std::size_t row) {
  const auto& values = table.values.at(row);
  std::vector<std::uint64_t> stab;
  for (auto k : units_mod(table.exponent)) {
    bool fixed = true;
    for (std::size_t i = 0; i < values.size() && fixed; ++i)
      fixed = values[i].galois(static_cast<std::int64_t>(k)) == values[i];
    if (fixed) stab.push_back(k);
  }
  return field_from_stabilizer(table.exponent, stab);
}

FReport f_value(const CharacterTable& table, const std::string& group_name) {
  FReport r;
  r.group = group_name;
  r.order = table.group_order();
  r.k = table.size();
  std::map<FieldLabel, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto label = field_of_values(table, i);
    r.max_field_degree = std::max(r.max_field_degree, label.degree);
    buckets[label].push_back(i);
    r.row_degrees.push_back(table.degrees[i]);
  }
  for (auto& [label, rows] : buckets) {
    r.f = std::max(r.f, rows.size());
    if (label.is_rational()) r.rational = rows.size();
    r.buckets.push_back({label, std::move(rows)});
  }
  r.bounds.order = r.order;
  r.bounds.floor_log2_log2 = r.order >= 2 ? nt::floor_log2_log2(r.order) : 0;
  r.bounds.log3 = r.order >= 1 ? std::log(static_cast<double>(r.order)) / std::log(3.0) : 0;
  r.bounds.omega = nt::omega_with_multiplicity(r.order);
  return r;
}

std::size_t rational_count(const CharacterTable& table) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < table.size(); ++i) n += field_of_values(table, i).is_rational() ? 1 : 0;
  return n;
}

CheckResult degree_bound_check(const FReport& report) {
  CheckResult out;
  if (report.max_field_degree > report.f) {
    out.passed = false;
    out.witnesses.push_back("field degree " + std::to_string(report.max_field_degree) + " exceeds f = " +
                            std::to_string(report.f));
  }
  if (report.f <= 3)
    for (const auto& b : report.buckets)
      if (b.field.degree == 2 && b.rows.size() > 2) {
        out.passed = false;
        out.witnesses.push_back("quadratic field " + b.field.to_string() + " holds " +
                                std::to_string(b.rows.size()) + " rows");
      }
  return out;
}

MonotonicityResult monotonicity_check(const PermGroup& group, std::span<const ElementId> normal_subgroup,
                                      const DixonOptions& options) {
  const PermGroup q = quotient(group, normal_subgroup);
  MonotonicityResult r;
  r.f_group = f_value(dixon_table(group, options)).f;
  r.f_quotient = f_value(dixon_table(q, options)).f;
  r.passed = r.f_quotient <= r.f_group;
  return r;
}

std::vector<BoundRow> bounds_report(const FReport& report) {
  const auto& b = report.bounds;
  const double f = static_cast<double>(report.f), k = static_cast<double>(report.k);
  const double ll = b.floor_log2_log2, om = b.omega;
  return {
      {"k(G) >= floor(log2 log2 |G|)", k, ll, k >= ll},
      {"f(G) >= floor(log2 log2 |G|)", f, ll, f >= ll},
      {"k(G) > log3 |G|", k, b.log3, k > b.log3},
      {"f(G) > log3 |G|", f, b.log3, f > b.log3},
      {"k(G) >= omega(|G|)", k, om, k >= om},
      {"f(G) >= omega(|G|)", f, om, f >= om},
  };
}

}  // namespace charfield
