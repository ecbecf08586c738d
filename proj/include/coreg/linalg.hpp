// Dense exact linear algebra over cyclotomic numbers: Gaussian elimination,
// kernels, subspace intersections, and joint eigenspace refinement for
// commuting-or-not families of finite-order operators.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coreg/cyclotomic.hpp"

namespace coreg {

struct CMat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Cyclotomic> a;  // row-major

  CMat() = default;
  CMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static CMat identity(size_t n);
  static CMat from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  Cyclotomic& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Cyclotomic& at(size_t i, size_t j) const { return a[i * cols + j]; }

  bool is_square() const { return rows == cols; }
  bool is_zero() const;
  bool is_identity() const;
  // lambda if *this == lambda * I, else nullopt.
  std::optional<Cyclotomic> scalar_value() const;

  CMat operator*(const CMat& b) const;
  CMat operator+(const CMat& b) const;
  CMat operator-(const CMat& b) const;
  CMat scaled(const Cyclotomic& s) const;
  CMat transpose() const;
  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

  Cyclotomic det() const;
  CMat inverse() const;       // fails NonInvertibleGenerator on singular input
  CMat kernel() const;        // columns form a basis of the null space
  size_t rank() const;

  // Embed every entry into Q(zeta_m).
  CMat embedded(std::uint32_t m) const;
  std::uint32_t common_conductor() const;

  friend bool operator==(const CMat& x, const CMat& y);
  friend bool operator!=(const CMat& x, const CMat& y) { return !(x == y); }
  int cmp(const CMat& b) const;  // deterministic total order, same shape
  std::uint64_t hash() const;
  std::string str() const;
};

// Projective normalization: divide by the first nonzero entry in row-major
// order.  Fails on the zero matrix.
CMat projective_canonical(const CMat& m);
std::vector<Cyclotomic> projective_canonical_vec(const std::vector<Cyclotomic>& v);

// Columns of the input reduced to a basis of their span.
CMat column_space_basis(const CMat& m);
// Basis of the intersection of two column spans (same row count).
CMat intersect_subspaces(const CMat& a, const CMat& b);
// S with m * basis == basis * S; requires the span to be m-invariant.
CMat restrict_operator(const CMat& m, const CMat& basis);
// Solve a * x = rhs for all rhs columns at once; nullopt when inconsistent.
std::optional<CMat> solve_linear(const CMat& a, const CMat& rhs);

// Smallest k >= 1 with m^k == I; fails OrderCapExceeded past cap.
std::uint32_t matrix_order(const CMat& m, std::uint32_t cap);

// Scale a finite-projective-order matrix to determinant one.  The scaled
// matrix has finite multiplicative order.  Fails ConductorOverflow when the
// determinant is not a root of unity (cannot happen for the built-ins).
CMat det_one_scaled(const CMat& m);

// One joint character subspace of a family of finite-order operators: every
// vector of span(basis) is a simultaneous eigenvector, with eigenvalue
// chars[i] for ops[i].
struct CharLeaf {
  CMat basis;
  std::vector<Cyclotomic> chars;
};

// All maximal joint character subspaces of the family (complete: every
// simultaneous eigenvector lies in exactly one leaf).  Operators must have
// finite order; they need not commute.
std::vector<CharLeaf> joint_eigenspaces(const std::vector<CMat>& ops, size_t dim,
                                        std::uint32_t order_cap = 10000);

}  // namespace coreg
