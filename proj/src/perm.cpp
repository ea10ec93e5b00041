#include "charfield/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "charfield/errors.hpp"

namespace charfield {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw ValidationError("permutation is not a bijection on " + std::to_string(images_.size()) + " points");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 65536) throw ValidationError("degree exceeds 65536 points");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (p >= degree || used[p]) throw ValidationError("cycles are not disjoint or out of range");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw ValidationError("degree mismatch in permutation product");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

namespace {

// Scratch buffer for products; one per thread so const member functions stay reentrant.
std::vector<Point>& scratch(std::size_t degree) {
  thread_local std::vector<Point> buf;
  buf.resize(degree);
  return buf;
}

}  // namespace

std::uint64_t PermGroup::hash(std::span<const Point> images) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

void PermGroup::insert_index(ElementId id) {
  const std::size_t mask = index_.size() - 1;
  std::size_t slot = hash(element(id)) & mask;
  while (index_[slot] != 0) slot = (slot + 1) & mask;
  index_[slot] = id + 1;
}

void PermGroup::grow_index() {
  index_.assign(index_.empty() ? 64 : index_.size() * 2, 0);
  for (ElementId id = 0; id < count_; ++id) insert_index(id);
}

std::optional<ElementId> PermGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_ || index_.empty()) return std::nullopt;
  const std::size_t mask = index_.size() - 1;
  std::size_t slot = hash(images) & mask;
  while (index_[slot] != 0) {
    ElementId id = index_[slot] - 1;
    auto e = element(id);
    if (std::equal(e.begin(), e.end(), images.begin())) return id;
    slot = (slot + 1) & mask;
  }
  return std::nullopt;
}

PermGroup PermGroup::enumerate(std::size_t degree, std::vector<Permutation> generators,
                               const EnumerationOptions& options) {
  if (degree == 0 || degree > 65536) throw ValidationError("degree must be in [1, 65536]");
  for (const auto& g : generators)
    if (g.degree() != degree) throw ValidationError("generator degree does not match group degree");

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);
  G.grow_index();

  auto append = [&G](std::span<const Point> images) {
    G.storage_.insert(G.storage_.end(), images.begin(), images.end());
    ++G.count_;
    if (2 * G.count_ > G.index_.size())
      G.grow_index();
    else
      G.insert_index(static_cast<ElementId>(G.count_ - 1));
  };

  Permutation id = Permutation::identity(degree);
  append(id.images());

  std::vector<Point> product(degree);
  for (std::size_t next = 0; next < G.count_; ++next) {
    for (const auto& s : G.generators_) {
      auto g = G.element(static_cast<ElementId>(next));
      for (std::size_t i = 0; i < degree; ++i) product[i] = s(g[i]);
      if (G.find(product)) continue;
      if (G.count_ >= options.max_order)
        throw GroupTooLarge("group too large: closure exceeds " + std::to_string(options.max_order) + " elements");
      append(product);
    }
  }
  return G;
}

Permutation PermGroup::permutation(ElementId id) const {
  auto e = element(id);
  return Permutation(std::vector<Point>(e.begin(), e.end()));
}

ElementId PermGroup::id_of(const Permutation& p) const {
  auto id = find(p.images());
  if (!id) throw ValidationError("permutation is not an element of the group");
  return *id;
}

ElementId PermGroup::multiply(ElementId a, ElementId b) const {
  auto& buf = scratch(degree_);
  auto ea = element(a);
  auto eb = element(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = eb[ea[i]];
  return *find(buf);
}

ElementId PermGroup::inverse(ElementId a) const {
  auto& buf = scratch(degree_);
  auto ea = element(a);
  for (std::size_t i = 0; i < degree_; ++i) buf[ea[i]] = static_cast<Point>(i);
  return *find(buf);
}

ElementId PermGroup::conjugate(ElementId x, ElementId by) const {
  return multiply(multiply(inverse(by), x), by);
}

std::uint64_t PermGroup::element_order(ElementId a) const { return permutation(a).order(); }

std::vector<ElementId> PermGroup::generator_ids() const {
  std::vector<ElementId> ids;
  ids.reserve(generators_.size());
  for (const auto& g : generators_) ids.push_back(id_of(g));
  return ids;
}

// ---------------------------------------------------------------------------
// Conjugacy classes

std::uint32_t ClassData::power_map(std::size_t cls, std::int64_t k) const {
  const auto& row = powers.at(cls);
  const auto o = static_cast<std::int64_t>(row.size());
  std::int64_t r = k % o;
  if (r < 0) r += o;
  return row[static_cast<std::size_t>(r)];
}

std::vector<std::uint32_t> ClassData::power_map(std::int64_t k) const {
  std::vector<std::uint32_t> out(count());
  for (std::size_t i = 0; i < count(); ++i) out[i] = power_map(i, k);
  return out;
}

ClassData conjugacy_classes(const PermGroup& group) {
  const std::size_t n = group.order();
  const auto gens = group.generator_ids();
  std::vector<ElementId> gen_inverses;
  for (auto g : gens) gen_inverses.push_back(group.inverse(g));

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> raw_class(n, kUnassigned);
  struct Raw {
    ElementId min_id;
    std::uint64_t size;
    std::uint64_t order;
  };
  std::vector<Raw> raw;

  std::vector<ElementId> queue;
  for (ElementId x = 0; x < n; ++x) {
    if (raw_class[x] != kUnassigned) continue;
    const auto cls = static_cast<std::uint32_t>(raw.size());
    raw_class[x] = cls;
    queue.assign(1, x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementId y = queue[head];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        ElementId z = group.multiply(group.multiply(gen_inverses[s], y), gens[s]);
        if (raw_class[z] == kUnassigned) {
          raw_class[z] = cls;
          queue.push_back(z);
        }
      }
    }
    raw.push_back({x, queue.size(), group.element_order(x)});
  }

  std::vector<std::uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(raw[a].order, raw[a].size, raw[a].min_id) < std::tie(raw[b].order, raw[b].size, raw[b].min_id);
  });
  std::vector<std::uint32_t> rank(raw.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  ClassData cd;
  cd.group_order = n;
  cd.class_of.resize(n);
  for (ElementId x = 0; x < n; ++x) cd.class_of[x] = rank[raw_class[x]];
  for (auto r : perm) {
    cd.reps.push_back(raw[r].min_id);
    cd.sizes.push_back(raw[r].size);
    cd.element_orders.push_back(static_cast<std::uint32_t>(raw[r].order));
  }
  cd.powers.resize(cd.count());
  for (std::size_t i = 0; i < cd.count(); ++i) {
    const ElementId rep = cd.reps[i];
    ElementId acc = PermGroup::identity();
    auto& row = cd.powers[i];
    row.reserve(cd.element_orders[i]);
    for (std::uint32_t k = 0; k < cd.element_orders[i]; ++k) {
      row.push_back(cd.class_of[acc]);
      acc = group.multiply(acc, rep);
    }
  }
  return cd;
}

std::vector<std::uint64_t> element_order_spectrum(const PermGroup& group) {
  std::vector<std::uint64_t> orders;
  for (ElementId x = 1; x < group.order(); ++x) orders.push_back(group.element_order(x));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Closes `members` (a membership mask already holding `elements`) under right
// multiplication by `gens`.
void close_under(const PermGroup& group, std::span<const ElementId> gens, std::vector<bool>& members,
                 std::vector<ElementId>& elements) {
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (ElementId g : gens) {
      ElementId y = group.multiply(elements[head], g);
      if (!members[y]) {
        members[y] = true;
        elements.push_back(y);
      }
    }
  }
}

Subgroup make_subgroup(const PermGroup& group, std::vector<ElementId> gens, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> perms;
  for (ElementId g : gens) perms.push_back(group.permutation(g));
  return Subgroup{std::move(elements), PermGroup::enumerate(group.degree(), std::move(perms))};
}

}  // namespace

Subgroup generated_subgroup(const PermGroup& group, std::span<const ElementId> generators) {
  std::vector<bool> members(group.order(), false);
  std::vector<ElementId> elements{PermGroup::identity()};
  members[PermGroup::identity()] = true;
  std::vector<ElementId> gens;
  for (ElementId g : generators)
    if (g != PermGroup::identity()) gens.push_back(g);
  close_under(group, gens, members, elements);
  return make_subgroup(group, std::move(gens), std::move(elements));
}

Subgroup normal_closure(const PermGroup& group, std::span<const ElementId> generators) {
  const auto conjugators = group.generator_ids();
  std::vector<ElementId> gens;
  for (ElementId g : generators)
    if (g != PermGroup::identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

  std::vector<bool> members;
  std::vector<ElementId> elements;
  auto rebuild = [&] {
    members.assign(group.order(), false);
    members[PermGroup::identity()] = true;
    elements.assign(1, PermGroup::identity());
    close_under(group, gens, members, elements);
  };
  rebuild();

  // Stable once every generator's conjugates by the generators of G already lie in the subgroup.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (ElementId s : conjugators) {
      ElementId c = group.conjugate(gens[i], s);
      if (members[c]) continue;
      gens.push_back(c);
      rebuild();
    }
  }
  return make_subgroup(group, std::move(gens), std::move(elements));
}

Subgroup derived_subgroup(const PermGroup& group) {
  const auto gens = group.generator_ids();
  std::vector<ElementId> commutators;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      ElementId ab = group.multiply(gens[a], gens[b]);
      ElementId ba = group.multiply(gens[b], gens[a]);
      ElementId c = group.multiply(group.inverse(ba), ab);  // [a,b] = a^-1 b^-1 a b
      if (c != PermGroup::identity()) commutators.push_back(c);
    }
  return normal_closure(group, commutators);
}

bool is_normal(const PermGroup& group, std::span<const ElementId> subgroup) {
  std::vector<bool> members(group.order(), false);
  for (ElementId x : subgroup) members.at(x) = true;
  if (!members[PermGroup::identity()]) return false;
  for (ElementId x : subgroup)
    for (ElementId y : subgroup)
      if (!members[group.multiply(x, y)]) return false;
  for (ElementId g : group.generator_ids())
    for (ElementId x : subgroup)
      if (!members[group.conjugate(x, g)]) return false;
  return true;
}

PermGroup quotient(const PermGroup& group, std::span<const ElementId> normal_subgroup) {
  if (normal_subgroup.empty() || group.order() % normal_subgroup.size() != 0 || !is_normal(group, normal_subgroup))
    throw ValidationError("quotient requires a normal subgroup");

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> coset_of(group.order(), kUnassigned);
  std::vector<ElementId> coset_rep;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (coset_of[g] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(g);
    for (ElementId n : normal_subgroup) coset_of[group.multiply(n, g)] = c;
  }

  const std::size_t index = coset_rep.size();
  if (index > 65536) throw ConstructionError("quotient has too many cosets for a permutation action");
  std::vector<Permutation> gens;
  for (ElementId h : group.generator_ids()) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = static_cast<Point>(coset_of[group.multiply(coset_rep[c], h)]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::enumerate(index, std::move(gens));
}

}  // namespace charfield
