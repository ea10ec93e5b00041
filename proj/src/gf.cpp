#include "charfield/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "charfield/errors.hpp"
#include "charfield/numtheory.hpp"

namespace charfield::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - lead} * b[i]) % p);
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t value, std::uint32_t p, std::size_t len) {
  Poly d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return d;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t m = monic.size() - 1;
  if (m == 0) return false;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly divisor = digits(v, p, d);
      divisor.push_back(1);
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
}

std::shared_ptr<const FieldSpec> field(std::uint32_t p, std::uint32_t m) {
  if (!nt::is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw ValidationError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 20)) throw ValidationError("field order too large");
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldSpec>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({p, m}); it != cache.end()) return it->second;

  // Index order of the low coefficients equals lexicographic order read from x^(m-1) down.
  for (std::uint64_t v = 0; v < q; ++v) {
    Poly f = digits(v, p, m);
    f.push_back(1);
    if (!is_irreducible(f, p)) continue;
    auto spec = std::shared_ptr<const FieldSpec>(new FieldSpec(p, m, std::move(f)));
    cache.emplace(std::make_pair(p, m), spec);
    return spec;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::string FieldSpec::modulus_string() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

FieldElem FieldSpec::zero() const { return FieldElem(shared_from_this(), Poly(m_, 0)); }
FieldElem FieldSpec::one() const { return scalar(1); }

FieldElem FieldSpec::scalar(std::int64_t c) const {
  Poly coeffs(m_, 0);
  coeffs[0] = static_cast<std::uint32_t>(nt::reduce(c, p_));
  return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem FieldSpec::from_index(std::uint32_t index) const {
  if (index >= q_) throw ValidationError("field element index out of range");
  return FieldElem(shared_from_this(), digits(index, p_, m_));
}

FieldElem FieldSpec::generator() const {
  Poly x(2, 0);
  x[1] = 1;
  return FieldElem(shared_from_this(), poly_mod(x, modulus_, p_));
}

FieldElem FieldSpec::primitive_element() const {
  const auto factors = nt::factorize(q_ - 1);
  for (std::uint32_t i = 1; i < q_; ++i) {
    FieldElem a = from_index(i);
    bool primitive = true;
    for (auto [r, e] : factors)
      if (a.pow(static_cast<std::int64_t>((q_ - 1) / r)) == one()) {
        primitive = false;
        break;
      }
    if (primitive) return a;
  }
  throw std::logic_error("multiplicative group has no generator");
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(std::shared_ptr<const FieldSpec> field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)) {
  const std::uint32_t p = field_->characteristic();
  for (auto& c : coeffs) c %= p;
  coeffs = poly_mod(std::move(coeffs), field_->modulus(), p);
  coeffs.resize(field_->degree(), 0);
  coeffs_ = std::move(coeffs);
}

std::uint32_t FieldElem::index() const {
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_->characteristic() + coeffs_[i];
  return idx;
}

bool FieldElem::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (field_ != o.field_) throw ValidationError("operation mixes elements of different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(o);
  Poly r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeffs_[i] + o.coeffs_[i]) % field_->characteristic();
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-() const {
  const std::uint32_t p = field_->characteristic();
  Poly r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p - coeffs_[i]) % p;
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(o);
  const std::uint64_t p = field_->characteristic();
  Poly r(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{coeffs_[i]} * o.coeffs_[j]) % p);
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = field_->one();
  FieldElem base = *this;
  auto u = static_cast<std::uint64_t>(e);
  while (u) {
    if (u & 1) result = result * base;
    base = base * base;
    u >>= 1;
  }
  return result;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  return pow(static_cast<std::int64_t>(field_->order()) - 2);
}

FieldElem FieldElem::frobenius(std::uint32_t e) const {
  std::int64_t exponent = 1;
  for (std::uint32_t i = 0; i < e % field_->degree(); ++i) exponent *= field_->characteristic();
  return pow(exponent);
}

bool FieldElem::operator==(const FieldElem& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

}  // namespace charfield::gf
