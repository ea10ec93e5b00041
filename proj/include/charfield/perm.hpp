#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace charfield {

using Point = std::uint16_t;
using ElementId = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless `images` is a bijection of {0..images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct EnumerationOptions {
  std::size_t max_order = 1'000'000;
};

/// A permutation group with its full element table. Element ids are assigned
/// breadth-first from the identity (id 0), applying generators in the given order.
/// Immutable after construction.
class PermGroup {
 public:
  static PermGroup enumerate(std::size_t degree, std::vector<Permutation> generators,
                             const EnumerationOptions& options = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return count_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::span<const Point> element(ElementId id) const {
    return {storage_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }
  Permutation permutation(ElementId id) const;

  std::optional<ElementId> find(std::span<const Point> images) const;
  /// Like find(), but throws ValidationError when the permutation is not in the group.
  ElementId id_of(const Permutation& p) const;

  static constexpr ElementId identity() { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId conjugate(ElementId x, ElementId by) const;  // by^-1 x by
  std::uint64_t element_order(ElementId a) const;

  std::vector<ElementId> generator_ids() const;

 private:
  PermGroup() = default;
  std::uint64_t hash(std::span<const Point> images) const;
  void insert_index(ElementId id);
  void grow_index();

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> storage_;
  std::vector<ElementId> index_;  // open addressing, stores id + 1, 0 = empty
};

/// Conjugacy classes. Class 0 is the identity class; classes are ordered by
/// (element order, class size, smallest element id). The representative of a
/// class is its smallest element id.
struct ClassData {
  std::uint64_t group_order = 0;
  std::vector<ElementId> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;        // element id -> class index
  std::vector<std::uint32_t> element_orders;  // class index -> order of representative
  std::vector<std::vector<std::uint32_t>> powers;  // powers[i][k] = class of rep_i^k, 0 <= k < order_i

  std::size_t count() const { return reps.size(); }
  std::uint32_t power_map(std::size_t cls, std::int64_t k) const;
  /// Image class of every class under g -> g^k.
  std::vector<std::uint32_t> power_map(std::int64_t k) const;
  std::uint32_t inverse_class(std::size_t cls) const { return power_map(cls, -1); }
};

ClassData conjugacy_classes(const PermGroup& group);

/// o(G): sorted orders of the nonidentity elements.
std::vector<std::uint64_t> element_order_spectrum(const PermGroup& group);

/// A subgroup given by its element ids in the parent (sorted) and as a group in its own right.
struct Subgroup {
  std::vector<ElementId> elements;
  PermGroup group;
};

Subgroup generated_subgroup(const PermGroup& group, std::span<const ElementId> generators);
Subgroup normal_closure(const PermGroup& group, std::span<const ElementId> generators);

/// G': normal closure of the commutators of generator pairs.
Subgroup derived_subgroup(const PermGroup& group);

bool is_normal(const PermGroup& group, std::span<const ElementId> subgroup);

/// Action of G on the right cosets of N. Cosets are numbered by their smallest element id.
/// Throws ValidationError when `normal_subgroup` is not a normal subgroup.
PermGroup quotient(const PermGroup& group, std::span<const ElementId> normal_subgroup);

}  // namespace charfield
