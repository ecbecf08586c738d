#include "coreg/invariants.hpp"

#include <algorithm>
#include <map>

#include "coreg/errors.hpp"

namespace coreg {

std::vector<std::vector<std::uint32_t>> monomial_exponents(size_t vars, std::uint32_t d) {
  if (vars == 0) fail(Errc::WrongDimension, "monomials need at least one variable");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(vars, 0);
  // Descending lexicographic enumeration by recursion on the first slot.
  auto rec = [&](auto&& self, size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == vars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = left; e + 1 > 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

using Exponents = std::vector<std::uint32_t>;

// Dense homogeneous polynomial of one degree: coefficients over the
// monomial list of that degree.
struct HomPoly {
  std::uint32_t deg = 0;
  std::vector<Cyclotomic> c;
};

struct MonomialIndex {
  std::vector<Exponents> list;
  std::map<Exponents, std::uint32_t> pos;

  explicit MonomialIndex(size_t vars, std::uint32_t d) : list(monomial_exponents(vars, d)) {
    for (std::uint32_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
  }
};

HomPoly multiply(size_t vars, const HomPoly& a, const HomPoly& b, const MonomialIndex& target,
                 const MonomialIndex& ia, const MonomialIndex& ib) {
  HomPoly r;
  r.deg = a.deg + b.deg;
  r.c.assign(target.list.size(), Cyclotomic());
  Exponents sum(vars);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      for (size_t v = 0; v < vars; ++v) sum[v] = ia.list[i][v] + ib.list[j][v];
      r.c[target.pos.at(sum)] += a.c[i] * b.c[j];
    }
  }
  return r;
}

}  // namespace

CMat sym_power_matrix(const CMat& g, std::uint32_t d) {
  if (!g.is_square() || g.rows == 0) fail(Errc::WrongDimension, "symmetric power shape");
  size_t vars = g.rows;
  CMat sub = g.inverse();  // substitution uses x -> g^{-1} x
  std::vector<MonomialIndex> idx;
  for (std::uint32_t k = 0; k <= d; ++k) idx.emplace_back(vars, k);

  // Row i of the substitution gives the image of variable i as a linear form.
  std::vector<HomPoly> linear(vars);
  for (size_t i = 0; i < vars; ++i) {
    linear[i].deg = 1;
    linear[i].c.assign(vars, Cyclotomic());
    for (size_t j = 0; j < vars; ++j) {
      // Monomial list of degree 1 is x_0, x_1, ... in order.
      linear[i].c[idx[1].pos.at([&] {
        Exponents e(vars, 0);
        e[j] = 1;
        return e;
      }())] = sub.at(i, j);
    }
  }

  const MonomialIndex& basis = idx[d];
  CMat m(basis.list.size(), basis.list.size());
  for (std::uint32_t col = 0; col < basis.list.size(); ++col) {
    HomPoly acc;
    acc.deg = 0;
    acc.c = {Cyclotomic(1)};
    for (size_t v = 0; v < vars; ++v)
      for (std::uint32_t e = 0; e < basis.list[col][v]; ++e)
        acc = multiply(vars, acc, linear[v], idx[acc.deg + 1], idx[acc.deg], idx[1]);
    for (std::uint32_t row = 0; row < basis.list.size(); ++row) m.at(row, col) = acc.c[row];
  }
  return m;
}

std::vector<CharLeaf> semi_invariant_forms(const MatGroup& lift, std::uint32_t d) {
  if (lift.projective()) fail(Errc::InvalidConfiguration, "form action needs a linear group");
  std::vector<CMat> ops;
  for (std::uint32_t i : lift.generator_indices()) ops.push_back(sym_power_matrix(lift.elem(i), d));
  size_t n = monomial_exponents(lift.dim(), d).size();
  return joint_eigenspaces(ops, n);
}

size_t invariant_form_dimension(const MatGroup& lift, std::uint32_t d) {
  for (const CharLeaf& leaf : semi_invariant_forms(lift, d)) {
    bool trivial = true;
    for (const Cyclotomic& c : leaf.chars) trivial = trivial && c.is_one();
    if (trivial) return leaf.basis.cols;
  }
  return 0;
}

size_t invariant_form_dimension_by_trace(const MatGroup& lift, std::uint32_t d) {
  if (lift.projective()) fail(Errc::InvalidConfiguration, "form action needs a linear group");
  const GroupTable& t = lift.table();
  Cyclotomic total;
  for (size_t i = 0; i < lift.order(); ++i) {
    std::vector<Cyclotomic> p(d + 1);  // power sums tr(g^m)
    for (std::uint32_t m = 1; m <= d; ++m) {
      const CMat& gm = lift.elem(t.power(i, m));
      for (size_t r = 0; r < gm.rows; ++r) p[m] += gm.at(r, r);
    }
    std::vector<Cyclotomic> h(d + 1);  // complete homogeneous of eigenvalues
    h[0] = Cyclotomic(1);
    for (std::uint32_t k = 1; k <= d; ++k) {
      Cyclotomic s;
      for (std::uint32_t m = 1; m <= k; ++m) s += p[m] * h[k - m];
      h[k] = s * Cyclotomic(Rational(BigInt(1), BigInt(k)));
    }
    total += h[d];
  }
  total *= Cyclotomic(Rational(BigInt(1), BigInt(lift.order())));
  if (!total.is_rational()) fail(Errc::InvalidConfiguration, "trace average is irrational");
  Rational r = total.rational_value();
  if (!r.is_integer() || r.sign() < 0)
    fail(Errc::InvalidConfiguration, "trace average is not a dimension");
  return static_cast<size_t>(r.num());
}

CMat bilinear_form_operator(const CMat& g1, const CMat& g2, bool swap) {
  if (g1.rows != 2 || g1.cols != 2 || g2.rows != 2 || g2.cols != 2)
    fail(Errc::WrongDimension, "(1,1)-forms live on a product of lines");
  CMat a = g1.inverse().transpose();
  CMat b = g2.inverse();
  // Without swap C -> a C b; with swap C -> a C^T b.  Columns track the
  // images of the basis matrices E_rc.
  CMat op(4, 4);
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 2; ++c) {
      CMat e(2, 2);
      e.at(r, c) = Cyclotomic(1);
      if (swap) e = e.transpose();
      CMat img = a * e * b;
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) op.at(i * 2 + j, r * 2 + c) = img.at(i, j);
    }
  return op;
}

CMat ruled_linear_form_operator(const CMat& g1, const CMat& g2, bool swap) {
  if (g1.rows != 2 || g1.cols != 2 || g2.rows != 2 || g2.cols != 2)
    fail(Errc::WrongDimension, "ruling forms live on a product of lines");
  CMat a = g1.inverse().transpose();
  CMat b = g2.inverse().transpose();
  CMat op(4, 4);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      if (swap) {
        op.at(i, 2 + j) = a.at(i, j);      // (0,1)-covector -> (1,0) via g1^{-T}
        op.at(2 + i, j) = b.at(i, j);      // (1,0)-covector -> (0,1) via g2^{-T}
      } else {
        op.at(i, j) = a.at(i, j);
        op.at(2 + i, 2 + j) = b.at(i, j);
      }
    }
  return op;
}

std::optional<std::vector<Cyclotomic>> irreducible_11_form(const std::vector<CMat>& ops) {
  auto det_of = [](const std::vector<Cyclotomic>& v) {
    return v[0] * v[3] - v[1] * v[2];
  };
  for (const CharLeaf& leaf : joint_eigenspaces(ops, 4)) {
    // The determinant is a quadratic form on the leaf; it vanishes on the
    // whole span iff it vanishes on basis vectors and their pairwise sums.
    size_t k = leaf.basis.cols;
    auto col = [&](size_t j) {
      std::vector<Cyclotomic> v(4);
      for (size_t r = 0; r < 4; ++r) v[r] = leaf.basis.at(r, j);
      return v;
    };
    for (size_t i = 0; i < k; ++i) {
      std::vector<Cyclotomic> ci = col(i);
      if (!det_of(ci).is_zero()) return ci;
      for (size_t j = i + 1; j < k; ++j) {
        std::vector<Cyclotomic> s = col(i);
        std::vector<Cyclotomic> cj = col(j);
        for (size_t r = 0; r < 4; ++r) s[r] += cj[r];
        if (!det_of(s).is_zero()) return s;
      }
    }
  }
  return std::nullopt;
}

bool has_irreducible_11_curve(const std::vector<CMat>& ops) {
  return irreducible_11_form(ops).has_value();
}

namespace {

bool proportional(const std::vector<Cyclotomic>& u, const std::vector<Cyclotomic>& v) {
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  // Equal zero sets, not just matching ratios.
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i].is_zero() != v[i].is_zero()) return false;
  return true;
}

}  // namespace

bool forms_permuted_by(const std::vector<CMat>& ops,
                       const std::vector<std::vector<Cyclotomic>>& forms,
                       std::vector<std::vector<std::uint32_t>>* perms) {
  if (perms) perms->clear();
  for (const CMat& op : ops) {
    std::vector<std::uint32_t> perm(forms.size(), UINT32_MAX);
    std::vector<bool> taken(forms.size(), false);
    for (size_t f = 0; f < forms.size(); ++f) {
      std::vector<Cyclotomic> img = op.apply(forms[f]);
      for (size_t t = 0; t < forms.size(); ++t) {
        if (taken[t]) continue;
        if (proportional(img, forms[t])) {
          perm[f] = static_cast<std::uint32_t>(t);
          taken[t] = true;
          break;
        }
      }
      if (perm[f] == UINT32_MAX) return false;
    }
    if (perms) perms->push_back(std::move(perm));
  }
  return true;
}

}  // namespace coreg
