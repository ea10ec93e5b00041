#include "charfield/modp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "charfield/numtheory.hpp"

namespace charfield::modp {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return nt::invmod(a, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Returns quotient, leaves remainder in a.
Poly poly_divmod(Poly& a, const Poly& b, std::uint64_t p) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back(), p);
  for (std::size_t i = a.size() - 1;; --i) {
    const std::uint64_t c = mul(a[i], lead_inv, p);
    q[i - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto& x = a[i - (b.size() - 1) + j];
        x = sub(x, mul(c, b[j], p), p);
      }
    if (i == b.size() - 1) break;
  }
  trim(a);
  return q;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  poly_divmod(a, b, p);
  return a;
}

Poly monic(Poly f, std::uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  const std::uint64_t c = inv(f.back(), p);
  for (auto& x : f) x = mul(x, c, p);
  return f;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_divmod(a, b, p);
    std::swap(a, b);
  }
  return monic(a, p);
}

// base^e mod m
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = poly_mod(poly_mul(base, base, p), m, p);
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i], p);
  trim(a);
  return a;
}

// f monic, squarefree, product of distinct linear factors.
void split_linear(const Poly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(sub(0, f[0], p));
    return;
  }
  if (p == 2) {
    // Only roots 0 and 1 possible.
    for (std::uint64_t x = 0; x < 2; ++x)
      if (evaluate(f, x, p) == 0) out.push_back(x);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    const Poly g{dist(rng), 1};  // x + a
    Poly h = poly_powmod(g, (p - 1) / 2, f, p);
    h = poly_sub(h, Poly{1}, p);
    Poly d = poly_gcd(f, h, p);
    const std::size_t dd = d.empty() ? 0 : d.size() - 1;
    if (dd == 0 || dd == deg) continue;
    Poly rest = f;
    Poly q = poly_divmod(rest, d, p);
    split_linear(d, p, rng, out);
    split_linear(monic(q, p), p, rng, out);
    return;
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::size_t> rref(Matrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t r = row;
    while (r < m.rows && m(r, col) == 0) ++r;
    if (r == m.rows) continue;
    if (r != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(row, j));
    const std::uint64_t c = inv(m(row, col), p);
    for (std::size_t j = 0; j < m.cols; ++j) m(row, j) = mul(m(row, j), c, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::uint64_t f = m(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = sub(m(i, j), mul(f, m(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vector> nullspace(const Matrix& m, std::uint64_t p) {
  Matrix r = m;
  const auto pivots = rref(r, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, r(i, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly charpoly(const Matrix& a, std::uint64_t p) {
  if (a.rows != a.cols) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::size_t n = a.rows;
  Matrix h = a;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const std::uint64_t pinv = inv(h(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const std::uint64_t f = mul(h(i, j), pinv, p);
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = sub(h(i, c), mul(f, h(j + 1, c), p), p);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = (h(r, j + 1) + mul(f, h(r, i), p)) % p;
    }
  }
  // Recurrence on leading principal submatrices.
  std::vector<Poly> c(n + 1);
  c[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    // c[m] = (x - h[m-1][m-1]) c[m-1] - sum_{i<m-1} h[i][m-1] * prod_{k=i+1}^{m-1} h[k][k-1] * c[i]
    Poly cur = poly_mul(Poly{sub(0, h(m - 1, m - 1), p), 1}, c[m - 1], p);
    std::uint64_t prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mul(prod, h(i + 1, i), p);
      const std::uint64_t coef = mul(prod, h(i, m - 1), p);
      if (coef == 0) continue;
      Poly term = c[i];
      for (auto& x : term) x = mul(x, coef, p);
      cur = poly_sub(cur, term, p);
    }
    cur.resize(m + 1, 0);
    c[m] = std::move(cur);
  }
  return c[n];
}

std::uint64_t evaluate(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (mul(r, x, p) + f[i]) % p;
  return r;
}

Roots roots(const Poly& f_in, std::uint64_t p) {
  Poly f = monic(f_in, p);
  if (f.empty()) throw std::domain_error("roots of the zero polynomial");
  Roots out;
  if (f.size() == 1) return out;
  // g = gcd(f, x^p - x) is the product of the distinct linear factors.
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  Poly g = poly_gcd(f, poly_sub(xp, Poly{0, 1}, p), p);
  std::mt19937_64 rng(0x5eed + p);
  if (g.size() > 1) split_linear(g, p, rng, out.distinct);
  std::sort(out.distinct.begin(), out.distinct.end());
  // Multiplicities by repeated division.
  for (auto r : out.distinct) {
    Poly rest = f;
    const Poly lin{sub(0, r, p), 1};
    for (;;) {
      Poly tmp = rest;
      Poly q = poly_divmod(tmp, lin, p);
      if (!tmp.empty()) break;
      ++out.with_multiplicity;
      rest = q;
      if (rest.size() <= 1) break;
    }
  }
  return out;
}

}  // namespace charfield::modp
