#include "charfield/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "charfield/errors.hpp"
#include "charfield/modp.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

void count_target(const PermGroup& group, const ClassData& classes, ElementId z,
                  std::vector<std::uint64_t>& out, std::size_t stride, std::size_t offset) {
  for (ElementId x = 0; x < group.order(); ++x) {
    const ElementId y = group.multiply(group.inverse(x), z);
    out[(classes.class_of[x] * classes.count() + classes.class_of[y]) * stride + offset] += 1;
  }
}

using Basis = std::vector<modp::Vector>;  // rows in reduced echelon form

Basis echelon(Basis rows, std::uint64_t p, std::size_t dim) {
  modp::Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  const auto pivots = modp::rref(m, p);
  Basis out(pivots.size(), modp::Vector(dim));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) out[r][c] = m(r, c);
  return out;
}

std::vector<std::size_t> pivot_columns(const Basis& b) {
  std::vector<std::size_t> pivots;
  for (const auto& row : b) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

// Splits `space` into eigenspaces of the class matrix `m` (acting on column vectors).
std::vector<Basis> split(const Basis& space, const modp::Matrix& m, std::uint64_t p) {
  const std::size_t k = m.rows, d = space.size();
  const auto pivots = pivot_columns(space);
  // Restriction: column r of `a` holds the coordinates of m * b_r.
  modp::Matrix a(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    modp::Vector image(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < k; ++j) s = (s + m(i, j) * space[r][j]) % p;
      image[i] = s;
    }
    for (std::size_t t = 0; t < d; ++t) a(t, r) = image[pivots[t]];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t s = 0;
      for (std::size_t t = 0; t < d; ++t) s = (s + a(t, r) * space[t][i]) % p;
      if (s != image[i]) throw ComputationError("eigenspace is not invariant under a class matrix");
    }
  }
  const auto roots = modp::roots(modp::charpoly(a, p), p);
  if (roots.with_multiplicity != d) throw ComputationError("class matrix does not split over the chosen prime");

  std::vector<Basis> parts;
  std::size_t total = 0;
  for (auto lambda : roots.distinct) {
    modp::Matrix shifted = a;
    for (std::size_t t = 0; t < d; ++t) shifted(t, t) = (shifted(t, t) + p - lambda) % p;
    Basis part;
    for (const auto& coords : modp::nullspace(shifted, p)) {
      modp::Vector v(k, 0);
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t i = 0; i < k; ++i) v[i] = (v[i] + coords[t] * space[t][i]) % p;
      part.push_back(std::move(v));
    }
    total += part.size();
    parts.push_back(echelon(std::move(part), p, k));
  }
  if (total != d) throw ComputationError("class matrix is not diagonalizable on an eigenspace");
  return parts;
}

}  // namespace

ClassCoefficients class_multiplication_coefficients(const PermGroup& group, const ClassData& classes,
                                                    unsigned jobs) {
  const std::size_t k = classes.count();
  ClassCoefficients a{k, std::vector<std::uint64_t>(k * k * k, 0)};
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(k)));
  if (jobs == 1) {
    for (std::size_t l = 0; l < k; ++l) count_target(group, classes, classes.reps[l], a.data, k, l);
    return a;
  }
  // Each worker owns whole target columns, so there are no shared writes.
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(k * k * k, 0));
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t l = w; l < k; l += jobs) count_target(group, classes, classes.reps[l], partial[w], k, l);
    });
  for (auto& t : workers) t.join();
  for (const auto& part : partial)
    for (std::size_t i = 0; i < part.size(); ++i) a.data[i] += part[i];
  return a;
}

std::vector<std::vector<std::uint64_t>> coefficients_at(const PermGroup& group, const ClassData& classes,
                                                        ElementId z) {
  const std::size_t k = classes.count();
  std::vector<std::uint64_t> flat(k * k, 0);
  count_target(group, classes, z, flat, 1, 0);
  std::vector<std::vector<std::uint64_t>> out(k, std::vector<std::uint64_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = flat[i * k + j];
  return out;
}

std::uint64_t exponent(const ClassData& classes) {
  std::uint64_t e = 1;
  for (auto o : classes.element_orders) e = nt::lcm(e, o);
  return e;
}

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t group_order, unsigned skip, std::uint64_t bound) {
  for (std::uint64_t p = e + 1; p < bound; p += e) {
    if (p * p <= 4 * group_order || !nt::is_prime(p)) continue;
    if (skip == 0) return p;
    --skip;
  }
  throw ComputationError("no prime p = 1 (mod " + std::to_string(e) + ") with p > 2 sqrt(" +
                         std::to_string(group_order) + ") below " + std::to_string(bound));
}

CharacterTable dixon_table(const PermGroup& group, const DixonOptions& options) {
  return dixon_table(group, conjugacy_classes(group), options);
}

CharacterTable dixon_table(const PermGroup& group, ClassData classes, const DixonOptions& options) {
  const std::size_t k = classes.count();
  if (k > options.max_classes)
    throw ComputationError("group has " + std::to_string(k) + " classes, more than the limit of " +
                           std::to_string(options.max_classes));
  const std::uint64_t order = classes.group_order;
  const std::uint64_t e = exponent(classes);
  const std::uint64_t p = dixon_prime(e, order, options.prime_skip, options.prime_bound);

  const auto coeff = class_multiplication_coefficients(group, classes, options.jobs);

  // Common eigenvectors of the class matrices (M_i)[j][l] = a(i, j, l).
  Basis full(k, modp::Vector(k, 0));
  for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
  std::vector<Basis> spaces{full};
  for (std::size_t i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Basis& b) { return b.size() == 1; })) break;
    modp::Matrix m(k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) m(j, l) = coeff(i, j, l) % p;
    std::vector<Basis> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw ComputationError("eigenspace splitting did not reach one-dimensional spaces");

  const std::uint64_t theta_e = nt::powmod(nt::primitive_root(p), (p - 1) / e, p);
  std::uint64_t sqrt_bound = 0;
  while ((sqrt_bound + 1) * (sqrt_bound + 1) <= order) ++sqrt_bound;

  struct Row {
    std::uint64_t degree;
    std::vector<Cyclo> values;
    std::vector<std::vector<std::uint64_t>> certs;
  };
  std::vector<Row> rows;
  for (const auto& space : spaces) {
    const auto& w = space[0];
    if (w[0] != 1) throw ComputationError("central character does not take the value 1 on the identity");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t term = nt::mulmod(w[i], w[classes.inverse_class(i)], p);
      s = (s + nt::mulmod(term, nt::invmod(classes.sizes[i] % p, p), p)) % p;
    }
    if (s == 0) throw ComputationError("degree equation is singular modulo p");
    const std::uint64_t target = nt::mulmod(order % p, nt::invmod(s, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= sqrt_bound; ++d)
      if (d * d % p == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw ComputationError("no integer degree matches the modular degree equation");

    std::vector<std::uint64_t> chi_p(k);
    for (std::size_t i = 0; i < k; ++i)
      chi_p[i] = nt::mulmod(nt::mulmod(w[i], degree, p), nt::invmod(classes.sizes[i] % p, p), p);

    Row row{degree, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t o = classes.element_orders[i];
      const std::uint64_t theta = nt::powmod(theta_e, e / o, p);
      const std::uint64_t theta_inv = nt::invmod(theta, p);
      const std::uint64_t o_inv = nt::invmod(o % p, p);
      std::vector<std::uint64_t> m(o);
      std::uint64_t total = 0;
      std::vector<std::pair<std::int64_t, Rational>> terms;
      for (std::uint64_t d = 0; d < o; ++d) {
        const std::uint64_t step = nt::powmod(theta_inv, d, p);
        std::uint64_t acc = 0, pw = 1;
        for (std::uint64_t t = 0; t < o; ++t) {
          acc = (acc + nt::mulmod(chi_p[classes.powers[i][t]], pw, p)) % p;
          pw = nt::mulmod(pw, step, p);
        }
        m[d] = nt::mulmod(acc, o_inv, p);
        if (m[d] > degree)
          throw ComputationError("lifted multiplicity exceeds the character degree; the modular table is inconsistent");
        total += m[d];
        if (m[d] != 0) terms.emplace_back(static_cast<std::int64_t>(d), Rational(static_cast<long>(m[d])));
      }
      if (total != degree) throw ComputationError("lifted multiplicities do not sum to the character degree");
      row.values.push_back(Cyclo::from_terms(static_cast<std::uint32_t>(o), terms));
      row.certs.push_back(std::move(m));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto trivial = [](const Row& r) {
      return std::all_of(r.values.begin(), r.values.end(), [](const Cyclo& v) { return v == Cyclo(1L); });
    };
    if (trivial(a) != trivial(b)) return trivial(a);
    return a.values < b.values;
  });

  CharacterTable table;
  table.classes = std::move(classes);
  table.exponent = e;
  table.prime = p;
  for (auto& r : rows) {
    table.degrees.push_back(r.degree);
    table.values.push_back(std::move(r.values));
    table.multiplicities.push_back(std::move(r.certs));
  }
  return table;
}

}  // namespace charfield
