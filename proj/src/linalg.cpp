#include "coreg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "coreg/errors.hpp"

namespace coreg {

CMat CMat::identity(size_t n) {
  CMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1));
  return m;
}

CMat CMat::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  if (rows.empty()) return CMat();
  CMat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) fail(Errc::DimensionMismatch, "ragged matrix rows");
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool CMat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool CMat::is_identity() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Cyclotomic> CMat::scalar_value() const {
  if (!is_square() || rows == 0) return std::nullopt;
  const Cyclotomic& s = at(0, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return std::nullopt;
    }
  return s;
}

CMat CMat::operator*(const CMat& b) const {
  if (cols != b.rows) fail(Errc::DimensionMismatch, "matrix product shape");
  CMat r(rows, b.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const Cyclotomic& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += x * b.at(k, j);
      }
    }
  // Keep every entry in the operands' joint field: skipped accumulations
  // would otherwise leave low-conductor zeros and break the one-field
  // representation uniqueness that element hashing relies on.
  return r.embedded(lcm_u32_checked(common_conductor(), b.common_conductor()));
}

CMat CMat::operator+(const CMat& b) const {
  if (rows != b.rows || cols != b.cols) fail(Errc::DimensionMismatch, "matrix sum shape");
  CMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += b.a[i];
  return r;
}

CMat CMat::operator-(const CMat& b) const {
  if (rows != b.rows || cols != b.cols) fail(Errc::DimensionMismatch, "matrix difference shape");
  CMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= b.a[i];
  return r;
}

CMat CMat::scaled(const Cyclotomic& s) const {
  CMat r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Cyclotomic> CMat::apply(const std::vector<Cyclotomic>& v) const {
  if (v.size() != cols) fail(Errc::DimensionMismatch, "matrix-vector shape");
  std::vector<Cyclotomic> r(rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.  If `track_sign`
// is non-null it accumulates the permutation sign for determinants.
std::vector<size_t> row_reduce(CMat& m, int* track_sign = nullptr) {
  if (track_sign) *track_sign = 1;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr == SIZE_MAX) continue;
    if (pr != row) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
      if (track_sign) *track_sign = -*track_sign;
    }
    Cyclotomic inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Cyclotomic CMat::det() const {
  if (!is_square()) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
  CMat m = *this;
  Cyclotomic d(Rational(1));
  int sign = 1;
  size_t row = 0;
  for (size_t col = 0; col < m.cols; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr == SIZE_MAX) return Cyclotomic(Rational(0));
    if (pr != row) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
      sign = -sign;
    }
    d *= m.at(row, col);
    Cyclotomic inv = m.at(row, col).inverse();
    for (size_t i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col) * inv;
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  if (sign < 0) d = -d;
  return d;
}

CMat CMat::inverse() const {
  if (!is_square()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  CMat aug(rows, 2 * cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols + i) = Cyclotomic(Rational(1));
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() != rows || pivots.back() >= cols)
    fail(Errc::NonInvertibleGenerator, "singular matrix");
  for (size_t i = 0; i < rows; ++i)
    if (pivots[i] != i) fail(Errc::NonInvertibleGenerator, "singular matrix");
  CMat r(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(i, j) = aug.at(i, cols + j);
  return r;
}

CMat CMat::kernel() const {
  CMat m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  CMat k(cols, free_cols.size());
  for (size_t f = 0; f < free_cols.size(); ++f) {
    size_t fc = free_cols[f];
    k.at(fc, f) = Cyclotomic(Rational(1));
    for (size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], f) = -m.at(i, fc);
  }
  return k;
}

size_t CMat::rank() const {
  CMat m = *this;
  return row_reduce(m).size();
}

CMat CMat::embedded(std::uint32_t m) const {
  CMat r = *this;
  for (auto& x : r.a) x = x.embedded(m);
  return r;
}

std::uint32_t CMat::common_conductor() const {
  std::uint32_t m = 1;
  for (const auto& x : a) m = lcm_u32_checked(m, x.conductor());
  return m;
}

bool operator==(const CMat& x, const CMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

int CMat::cmp(const CMat& b) const {
  if (rows != b.rows) return rows < b.rows ? -1 : 1;
  if (cols != b.cols) return cols < b.cols ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = a[i].cmp(b.a[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::uint64_t CMat::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(rows);
  mix(cols);
  for (const auto& x : a) mix(x.hash());
  return h;
}

std::string CMat::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols; ++j) os << (j ? ", " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

CMat projective_canonical(const CMat& m) {
  // Pin the result to the input's field so equal matrices canonicalize to
  // identical representations regardless of how their entries were produced.
  std::uint32_t n = m.common_conductor();
  for (const auto& x : m.a) {
    if (x.is_zero()) continue;
    if (x.is_one()) return m.embedded(n);
    return m.scaled(x.inverse()).embedded(n);
  }
  fail(Errc::InvalidInput, "projective normalization of the zero matrix");
}

std::vector<Cyclotomic> projective_canonical_vec(const std::vector<Cyclotomic>& v) {
  std::uint32_t n = 1;
  for (const auto& x : v) n = lcm_u32_checked(n, x.conductor());
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    Cyclotomic inv = x.inverse();
    std::vector<Cyclotomic> r = v;
    for (auto& y : r) {
      y *= inv;
      y = y.embedded(n);
    }
    return r;
  }
  fail(Errc::InvalidInput, "projective normalization of the zero vector");
}

CMat column_space_basis(const CMat& m) {
  CMat t = m.transpose();
  auto pivots = row_reduce(t);
  CMat r(m.rows, pivots.size());
  // Rows of the reduced transpose are a basis of the column span.
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < m.rows; ++j) r.at(j, i) = t.at(i, j);
  return r;
}

CMat intersect_subspaces(const CMat& a, const CMat& b) {
  if (a.rows != b.rows) fail(Errc::DimensionMismatch, "subspace ambient mismatch");
  if (a.cols == 0 || b.cols == 0) return CMat(a.rows, 0);
  CMat stacked(a.rows, a.cols + b.cols);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < a.cols; ++j) stacked.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols; ++j) stacked.at(i, a.cols + j) = -b.at(i, j);
  }
  CMat k = stacked.kernel();
  if (k.cols == 0) return CMat(a.rows, 0);
  CMat xs(a.cols, k.cols);
  for (size_t i = 0; i < a.cols; ++i)
    for (size_t j = 0; j < k.cols; ++j) xs.at(i, j) = k.at(i, j);
  return column_space_basis(a * xs);
}

CMat restrict_operator(const CMat& m, const CMat& basis) {
  auto s = solve_linear(basis, m * basis);
  if (!s) fail(Errc::InvalidInput, "subspace is not operator-invariant");
  return *s;
}

std::optional<CMat> solve_linear(const CMat& a, const CMat& rhs) {
  if (a.rows != rhs.rows) fail(Errc::DimensionMismatch, "solve shape");
  CMat aug(a.rows, a.cols + rhs.cols);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < rhs.cols; ++j) aug.at(i, a.cols + j) = rhs.at(i, j);
  }
  auto pivots = row_reduce(aug);
  // Any pivot falling in the rhs block means inconsistency.
  for (size_t c : pivots)
    if (c >= a.cols) return std::nullopt;
  CMat x(a.cols, rhs.cols);
  for (size_t i = 0; i < pivots.size(); ++i)
    for (size_t j = 0; j < rhs.cols; ++j) x.at(pivots[i], j) = aug.at(i, a.cols + j);
  return x;
}

std::uint32_t matrix_order(const CMat& m, std::uint32_t cap) {
  if (!m.is_square()) fail(Errc::DimensionMismatch, "order of non-square matrix");
  CMat p = m;
  for (std::uint32_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  fail(Errc::OrderCapExceeded, "matrix order exceeds " + std::to_string(cap));
}

CMat det_one_scaled(const CMat& m) {
  Cyclotomic d = m.det();
  if (d.is_zero()) fail(Errc::NonInvertibleGenerator, "singular matrix has no unimodular scaling");
  if (d.is_one()) return m;
  Cyclotomic lambda = kth_root_of_unity_value(d.inverse(), static_cast<std::uint32_t>(m.rows));
  return m.scaled(lambda);
}

namespace {

// Replace span(basis) by its largest m-invariant subspace.
CMat invariant_core(const CMat& m, CMat basis) {
  while (basis.cols > 0) {
    CMat next = intersect_subspaces(basis, m * basis);
    if (next.cols == basis.cols) return basis;
    basis = std::move(next);
  }
  return basis;
}

}  // namespace

std::vector<CharLeaf> joint_eigenspaces(const std::vector<CMat>& ops, size_t dim,
                                        std::uint32_t order_cap) {
  std::vector<CharLeaf> leaves{CharLeaf{CMat::identity(dim), {}}};
  for (const CMat& op : ops) {
    if (op.rows != dim || op.cols != dim) fail(Errc::DimensionMismatch, "operator dimension");
    std::vector<CharLeaf> next;
    for (auto& leaf : leaves) {
      CMat core = invariant_core(op, leaf.basis);
      if (core.cols == 0) continue;
      CMat s = restrict_operator(op, core);
      std::uint32_t k = matrix_order(s, order_cap);
      // Spectral projectors of the finite-order restriction: the image of
      // P_j = (1/k) sum_l zeta_k^{-jl} S^l is the zeta_k^j eigenspace.
      std::vector<CMat> powers;
      powers.reserve(k);
      CMat p = CMat::identity(core.cols);
      for (std::uint32_t l = 0; l < k; ++l) {
        powers.push_back(p);
        if (l + 1 < k) p = p * s;
      }
      Rational inv_k(BigInt(1), BigInt(k));
      for (std::uint32_t j = 0; j < k; ++j) {
        CMat proj(core.cols, core.cols);
        for (std::uint32_t l = 0; l < k; ++l) {
          Cyclotomic w = Cyclotomic::zeta_pow(k, -static_cast<std::int64_t>(j) * l);
          proj = proj + powers[l].scaled(w);
        }
        proj = proj.scaled(Cyclotomic(inv_k));
        if (proj.is_zero()) continue;
        CMat image = column_space_basis(proj);
        if (image.cols == 0) continue;
        CharLeaf child;
        child.basis = core * image;
        child.chars = leaf.chars;
        child.chars.push_back(Cyclotomic::zeta_pow(k, j));
        next.push_back(std::move(child));
      }
    }
    leaves = std::move(next);
  }
  return leaves;
}

}  // namespace coreg
