#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "charfield/chartab.hpp"

namespace charfield {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

ValidationCheck degree_sum(const CharacterTable& t) {
  std::uint64_t sum = 0;
  for (auto d : t.degrees) sum += d * d;
  ValidationCheck c{"degree sum", sum == t.group_order() && t.degrees.size() == t.classes.count(), ""};
  if (!c.passed)
    c.detail = "sum of squared degrees " + std::to_string(sum) + " over " + std::to_string(t.degrees.size()) +
               " rows, group order " + std::to_string(t.group_order()) + ", " +
               std::to_string(t.classes.count()) + " classes";
  return c;
}

ValidationCheck row_orthogonality(const CharacterTable& t) {
  const std::size_t k = t.classes.count();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b) {
      Cyclo sum;
      for (std::size_t i = 0; i < k; ++i)
        sum += Cyclo(Rational(static_cast<long>(t.classes.sizes[i]))) * t.values[a][i] * t.values[b][i].conj();
      const Cyclo expected = a == b ? Cyclo(Rational(static_cast<long>(t.group_order()))) : Cyclo(0L);
      if (sum != expected)
        return {"row orthogonality", false,
                "rows " + std::to_string(a) + " and " + std::to_string(b) + " give " + sum.to_string()};
    }
  return {"row orthogonality", true, ""};
}

ValidationCheck column_orthogonality(const CharacterTable& t) {
  const std::size_t k = t.classes.count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclo sum;
      for (std::size_t r = 0; r < t.size(); ++r) sum += t.values[r][i] * t.values[r][j].conj();
      const Cyclo expected =
          i == j ? Cyclo(Rational(static_cast<long>(t.group_order() / t.classes.sizes[i]))) : Cyclo(0L);
      if (sum != expected)
        return {"column orthogonality", false,
                "classes " + std::to_string(i) + " and " + std::to_string(j) + " give " + sum.to_string()};
    }
  return {"column orthogonality", true, ""};
}

ValidationCheck first_column(const CharacterTable& t) {
  if (t.classes.count() == 0 || t.classes.reps[0] != PermGroup::identity() || t.classes.sizes[0] != 1)
    return {"first column", false, "class 0 is not the identity class"};
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto& v = t.values[r][0];
    if (t.degrees[r] == 0 || !v.is_rational() || v.rational_value() != Rational(static_cast<long>(t.degrees[r])))
      return {"first column", false, "row " + std::to_string(r) + " has identity value " + v.to_string()};
  }
  return {"first column", true, ""};
}

ValidationCheck galois_closure(const CharacterTable& t) {
  const std::set<std::vector<Cyclo>> rows(t.values.begin(), t.values.end());
  if (rows.size() != t.size()) return {"Galois closure", false, "table has repeated rows"};
  for (std::uint64_t k = 2; k < t.exponent; ++k) {
    if (std::gcd(k, t.exponent) != 1) continue;
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::vector<Cyclo> image;
      image.reserve(t.values[r].size());
      for (const auto& v : t.values[r]) {
        if (t.exponent % v.conductor() != 0)
          return {"Galois closure", false,
                  "value " + v.to_string() + " has conductor not dividing " + std::to_string(t.exponent)};
        image.push_back(v.galois(static_cast<std::int64_t>(k)));
      }
      if (!rows.contains(image))
        return {"Galois closure", false,
                "sigma_" + std::to_string(k) + " maps row " + std::to_string(r) + " outside the table"};
    }
  }
  return {"Galois closure", true, ""};
}

ValidationCheck integrality(const CharacterTable& t) {
  const bool have_certs = t.multiplicities.size() == t.size();
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t i = 0; i < t.classes.count(); ++i) {
      const auto& v = t.values[r][i];
      const auto where = "row " + std::to_string(r) + ", class " + std::to_string(i);
      if (!v.is_integral()) return {"integrality", false, where + " is not an algebraic integer"};
      if (!have_certs) continue;
      const auto& m = t.multiplicities[r][i];
      const std::uint64_t o = t.classes.element_orders[i];
      if (m.size() != o) return {"integrality", false, where + " has a malformed certificate"};
      std::vector<std::pair<std::int64_t, Rational>> terms;
      std::uint64_t total = 0;
      for (std::uint64_t d = 0; d < o; ++d) {
        total += m[d];
        if (m[d] != 0) terms.emplace_back(static_cast<std::int64_t>(d), Rational(static_cast<long>(m[d])));
      }
      if (total != t.degrees[r] || Cyclo::from_terms(static_cast<std::uint32_t>(o), terms) != v)
        return {"integrality", false, where + " disagrees with its eigenvalue multiplicities"};
    }
  if (!have_certs) return {"integrality", true, "no multiplicity certificates attached"};
  return {"integrality", true, ""};
}

}  // namespace

ValidationReport validate_table(const CharacterTable& table) {
  ValidationReport report;
  report.checks.push_back(degree_sum(table));
  const bool square = table.size() == table.classes.count() &&
                      std::all_of(table.values.begin(), table.values.end(),
                                  [&](const auto& row) { return row.size() == table.classes.count(); });
  if (!square) {
    report.checks.push_back({"shape", false, "table is not square over the class list"});
    return report;
  }
  report.checks.push_back(row_orthogonality(table));
  report.checks.push_back(column_orthogonality(table));
  report.checks.push_back(first_column(table));
  report.checks.push_back(galois_closure(table));
  report.checks.push_back(integrality(table));
  return report;
}

}  // namespace charfield
