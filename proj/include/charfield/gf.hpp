#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace charfield::gf {

class FieldElem;

/// GF(p^m) realised as GF(p)[x]/(f) with f the lexicographically smallest monic
/// irreducible polynomial of degree m (coefficients compared from x^(m-1) down to x^0).
/// Specs are interned: field(p, m) always returns the same object.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, coefficients low to high (size m + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem scalar(std::int64_t c) const;
  /// The element whose base-p digits (low to high) are its coefficients.
  FieldElem from_index(std::uint32_t index) const;
  FieldElem generator() const;  // the class of x
  /// Smallest-index element of multiplicative order q - 1.
  FieldElem primitive_element() const;

 private:
  friend std::shared_ptr<const FieldSpec> field(std::uint32_t p, std::uint32_t m);
  FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
};

/// Throws ValidationError when p is not prime, m == 0 or p^m > 2^20.
std::shared_ptr<const FieldSpec> field(std::uint32_t p, std::uint32_t m);

/// Brute-force irreducibility test for a monic polynomial over GF(p) (coefficients low to high).
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

class FieldElem {
 public:
  FieldElem(std::shared_ptr<const FieldSpec> field, std::vector<std::uint32_t> coeffs);

  const FieldSpec& field() const { return *field_; }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  std::uint32_t index() const;
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  /// Throws std::domain_error for zero.
  FieldElem inverse() const;
  FieldElem pow(std::int64_t e) const;
  /// x -> x^(p^e).
  FieldElem frobenius(std::uint32_t e) const;

  bool operator==(const FieldElem& o) const;

 private:
  void check_same_field(const FieldElem& o) const;

  std::shared_ptr<const FieldSpec> field_;
  std::vector<std::uint32_t> coeffs_;
};

}  // namespace charfield::gf
