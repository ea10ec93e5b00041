#pragma once

#include <cstdint>
#include <vector>

namespace charfield::modp {

/// Dense row-major matrix over GF(p), p < 2^32.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static Matrix identity(std::size_t n);

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using Vector = std::vector<std::uint64_t>;
using Poly = std::vector<std::uint64_t>;  // coefficients low to high

/// Reduced row echelon form in place; returns pivot columns. Pivoting is
/// deterministic (first nonzero row in each column).
std::vector<std::size_t> rref(Matrix& m, std::uint64_t p);

/// Basis of {x : m x = 0}, one vector per free column, in RREF-derived order.
std::vector<Vector> nullspace(const Matrix& m, std::uint64_t p);

/// det(x I - a) via reduction to upper Hessenberg form.
Poly charpoly(const Matrix& a, std::uint64_t p);

std::uint64_t evaluate(const Poly& f, std::uint64_t x, std::uint64_t p);

/// Distinct roots in GF(p), sorted ascending, and the number of roots counted with multiplicity.
struct Roots {
  std::vector<std::uint64_t> distinct;
  std::size_t with_multiplicity = 0;
};
Roots roots(const Poly& f, std::uint64_t p);

}  // namespace charfield::modp
