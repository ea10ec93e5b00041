#include "charfield/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "charfield/errors.hpp"
#include "charfield/numtheory.hpp"

namespace charfield {

namespace {

// Largest conductor for which a basis layout is built (the layout has O(n) entries).
constexpr std::uint32_t kMaxConductor = 1u << 22;

struct Factor {
  std::uint32_t p, a, q, phi, stride;
};

struct Entry {
  std::uint32_t index;
  std::int32_t sign;
};

// Basis bookkeeping for one conductor. Immutable once published.
struct Layout {
  std::uint32_t n = 1;
  std::uint32_t dim = 1;
  std::vector<Factor> factors;
  std::vector<std::uint32_t> basis_exponent;  // basis index -> exponent of E(n)
  std::vector<std::uint32_t> offset;          // exponent -> range in `expand`
  std::vector<Entry> expand;                  // E(n)^e as a signed sum of basis elements

  std::uint32_t component(std::uint32_t index, const Factor& f) const { return index / f.stride % f.phi; }
};

std::unique_ptr<Layout> build_layout(std::uint32_t n) {
  auto L = std::make_unique<Layout>();
  L->n = n;
  for (auto [p, a] : nt::factorize(n)) {
    std::uint32_t q = 1;
    for (unsigned i = 0; i < a; ++i) q *= static_cast<std::uint32_t>(p);
    L->factors.push_back({static_cast<std::uint32_t>(p), a, q, q / static_cast<std::uint32_t>(p) * (static_cast<std::uint32_t>(p) - 1), 0});
  }
  L->dim = 1;
  for (std::size_t i = L->factors.size(); i-- > 0;) {
    L->factors[i].stride = L->dim;
    L->dim *= L->factors[i].phi;
  }

  // E(n) = prod E(q_i)^u_i with u_i = (n/q_i)^-1 mod q_i.
  std::vector<std::uint32_t> u;
  for (const auto& f : L->factors)
    u.push_back(static_cast<std::uint32_t>(f.q == 1 ? 0 : nt::invmod((n / f.q) % f.q, f.q)));

  L->basis_exponent.resize(L->dim);
  for (std::uint32_t idx = 0; idx < L->dim; ++idx) {
    std::uint64_t e = 0;
    for (const auto& f : L->factors) e += std::uint64_t{L->component(idx, f)} * (n / f.q);
    L->basis_exponent[idx] = static_cast<std::uint32_t>(e % n);
  }

  L->offset.resize(std::size_t{n} + 1);
  std::vector<Entry> partial, next;
  for (std::uint32_t e = 0; e < n; ++e) {
    L->offset[e] = static_cast<std::uint32_t>(L->expand.size());
    partial.assign(1, Entry{0, 1});
    for (std::size_t i = 0; i < L->factors.size(); ++i) {
      const auto& f = L->factors[i];
      const auto j = static_cast<std::uint32_t>(std::uint64_t{e} * u[i] % f.q);
      next.clear();
      if (j < f.phi) {
        for (auto en : partial) next.push_back({en.index + j * f.stride, en.sign});
      } else {
        // E(q)^j with j = (p-1) p^(a-1) + r equals -sum_{s < p-1} E(q)^(s p^(a-1) + r).
        const std::uint32_t block = f.q / f.p;
        const std::uint32_t r = j - f.phi;
        for (auto en : partial)
          for (std::uint32_t s = 0; s + 1 < f.p; ++s) next.push_back({en.index + (s * block + r) * f.stride, -en.sign});
      }
      partial.swap(next);
    }
    L->expand.insert(L->expand.end(), partial.begin(), partial.end());
  }
  L->offset[n] = static_cast<std::uint32_t>(L->expand.size());
  return L;
}

// Write-once cache shared by all threads.
const Layout& layout(std::uint32_t n) {
  if (n == 0 || n > kMaxConductor) throw ComputationError("cyclotomic conductor " + std::to_string(n) + " out of range");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<Layout>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_layout(n);
  return *slot;
}

void add_power(const Layout& L, std::vector<Rational>& out, std::uint64_t exponent, const Rational& c) {
  const auto e = static_cast<std::uint32_t>(exponent % L.n);
  for (std::uint32_t i = L.offset[e]; i < L.offset[e + 1]; ++i) {
    const Entry en = L.expand[i];
    if (en.sign > 0)
      out[en.index] += c;
    else
      out[en.index] -= c;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Cyclo::Cyclo(long value) : n_(1), c_{Rational(value)} {}
Cyclo::Cyclo(const Rational& value) : n_(1), c_{value} { c_[0].canonicalize(); }

Cyclo Cyclo::root_of_unity(std::uint32_t n, std::int64_t k) { return from_terms(n, {{k, Rational(1)}}); }

Cyclo Cyclo::from_terms(std::uint32_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  if (n == 0) throw std::domain_error("conductor must be positive");
  const Layout& L = layout(n);
  std::vector<Rational> c(L.dim);
  for (const auto& [e, v] : terms) add_power(L, c, nt::reduce(e, n), v);
  Cyclo out(n, std::move(c));
  out.normalize();
  return out;
}

const std::vector<std::uint32_t>& Cyclo::basis_exponents(std::uint32_t n) { return layout(n).basis_exponent; }

std::vector<std::pair<std::uint32_t, Rational>> Cyclo::terms() const {
  const auto& be = basis_exponents(n_);
  std::vector<std::pair<std::uint32_t, Rational>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(be[i], c_[i]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

const Rational& Cyclo::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

bool Cyclo::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

Cyclo Cyclo::lifted(std::uint32_t n) const {
  if (n == n_) return *this;
  const Layout& from = layout(n_);
  const Layout& to = layout(n);
  const std::uint64_t scale = n / n_;
  std::vector<Rational> c(to.dim);
  for (std::uint32_t i = 0; i < from.dim; ++i)
    if (c_[i] != 0) add_power(to, c, from.basis_exponent[i] * scale, c_[i]);
  return Cyclo(n, std::move(c));
}

void Cyclo::normalize() {
  while (n_ > 1) {
    const Layout& L = layout(n_);
    bool descended = false;
    for (const auto& f : L.factors) {
      bool inside = true;
      for (std::uint32_t i = 0; i < L.dim && inside; ++i) {
        if (c_[i] == 0) continue;
        const std::uint32_t j = L.component(i, f);
        inside = f.a >= 2 ? j % f.p == 0 : j == 0;
      }
      if (!inside) continue;
      // Every surviving basis exponent is divisible by p, and E(n)^(pe) = E(n/p)^e.
      const std::uint32_t m = n_ / f.p;
      const Layout& S = layout(m);
      std::vector<Rational> c(S.dim);
      for (std::uint32_t i = 0; i < L.dim; ++i)
        if (c_[i] != 0) add_power(S, c, L.basis_exponent[i] / f.p, c_[i]);
      n_ = m;
      c_ = std::move(c);
      descended = true;
      break;
    }
    if (!descended) break;
  }
  if (n_ == 1) c_.resize(1);
}

Cyclo Cyclo::galois(std::int64_t k) const {
  if (n_ == 1) return *this;
  const std::uint64_t kk = nt::reduce(k, n_);
  if (std::gcd(kk, std::uint64_t{n_}) != 1)
    throw std::domain_error("galois: k = " + std::to_string(k) + " is not coprime to the conductor " + std::to_string(n_));
  const Layout& L = layout(n_);
  std::vector<Rational> c(L.dim);
  for (std::uint32_t i = 0; i < L.dim; ++i)
    if (c_[i] != 0) add_power(L, c, std::uint64_t{L.basis_exponent[i]} * kk, c_[i]);
  return Cyclo(n_, std::move(c));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    const auto n = static_cast<std::uint32_t>(nt::lcm(n_, o.n_));
    Cyclo a = lifted(n);
    Cyclo b = o.lifted(n);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == 1 || b.n_ == 1) {
    const Cyclo& scalar = a.n_ == 1 ? a : b;
    Cyclo out = a.n_ == 1 ? b : a;
    if (scalar.c_[0] == 0) return Cyclo();
    for (auto& v : out.c_) v *= scalar.c_[0];
    return out;
  }
  const auto n = static_cast<std::uint32_t>(nt::lcm(a.n_, b.n_));
  const Cyclo x = a.lifted(n), y = b.lifted(n);
  const Layout& L = layout(n);
  std::vector<std::uint32_t> nx, ny;
  for (std::uint32_t i = 0; i < L.dim; ++i) {
    if (x.c_[i] != 0) nx.push_back(i);
    if (y.c_[i] != 0) ny.push_back(i);
  }
  std::vector<Rational> c(L.dim);
  Rational prod;
  for (auto i : nx)
    for (auto j : ny) {
      prod = x.c_[i] * y.c_[j];
      add_power(L, c, std::uint64_t{L.basis_exponent[i]} + L.basis_exponent[j], prod);
    }
  Cyclo out(n, std::move(c));
  out.normalize();
  return out;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const int s = cmp(a.c_[i], b.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclo::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::string out;
  for (const auto& [e, c] : terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (e == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "E(" + std::to_string(n_) + ")";
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint32_t degree_over_Q(const Cyclo& c) {
  const std::uint32_t n = c.conductor();
  if (n == 1) return 1;
  std::uint32_t stabilizer = 0;
  for (std::uint32_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1 && c.galois(k) == c) ++stabilizer;
  return static_cast<std::uint32_t>(nt::euler_phi(n) / stabilizer);
}

std::uint32_t omega_degree(std::uint32_t r) {
  if (r < 3) throw std::domain_error("omega_degree requires r >= 3");
  return degree_over_Q(Cyclo::root_of_unity(r, 1) + Cyclo::root_of_unity(r, -1));
}

SubfieldCount count_subfields(std::uint32_t n, std::uint32_t d) {
  if (n < 3) throw std::domain_error("count_subfields requires n >= 3");
  if (d != 2 && d != 3) throw std::domain_error("count_subfields supports d in {2, 3}");
  // d-rank of (Z/n)^* from its decomposition into cyclic factors.
  unsigned rank = 0;
  for (auto [p, a] : nt::factorize(n)) {
    if (p == 2) {
      if (d == 2) rank += a == 1 ? 0 : (a == 2 ? 1 : 2);
    } else {
      // (Z/p^a)^* is cyclic of order p^(a-1) (p-1).
      if ((p - 1) % d == 0 || (p == d && a >= 2)) ++rank;
    }
  }
  std::uint64_t power = 1;
  for (unsigned i = 0; i < rank; ++i) power *= d;
  return {n, d, (power - 1) / (d - 1)};
}

}  // namespace charfield
