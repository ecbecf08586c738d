#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coreg/errors.hpp"
#include "coreg/invariants.hpp"

using namespace coreg;

namespace {

Cyclotomic q(long long n, long long d = 1) { return Cyclotomic(Rational(BigInt(n), BigInt(d))); }

CMat mat(const std::vector<std::vector<Cyclotomic>>& rows) { return CMat::from_rows(rows); }

CMat perm3() {
  return mat({{q(0), q(0), q(1)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
}

CMat swap3() {  // x <-> y
  return mat({{q(0), q(1), q(0)}, {q(1), q(0), q(0)}, {q(0), q(0), q(1)}});
}

}  // namespace

TEST_CASE("monomial bases") {
  auto m32 = monomial_exponents(3, 2);
  REQUIRE(m32.size() == 6);
  CHECK(m32[0] == std::vector<std::uint32_t>{2, 0, 0});
  CHECK(m32[1] == std::vector<std::uint32_t>{1, 1, 0});
  CHECK(m32.back() == std::vector<std::uint32_t>{0, 0, 2});
  CHECK(monomial_exponents(3, 3).size() == 10);
  CHECK(monomial_exponents(2, 5).size() == 6);
  CHECK(monomial_exponents(4, 1).size() == 4);
  CHECK(monomial_exponents(3, 0).size() == 1);
}

TEST_CASE("symmetric power matrices are multiplicative") {
  CMat g = mat({{q(2), q(1), q(0)}, {q(1), q(1), q(1)}, {q(0), q(3), q(-1)}});
  CMat h = mat({{q(1), q(0), q(1)}, {q(0), q(1), q(0)}, {q(1), q(1), q(0)}});
  for (std::uint32_t d : {1u, 2u, 3u}) {
    CHECK(sym_power_matrix(g * h, d) == sym_power_matrix(g, d) * sym_power_matrix(h, d));
  }
  CHECK(sym_power_matrix(CMat::identity(3), 4).is_identity());
  CHECK(sym_power_matrix(g, 1) == g.inverse().transpose());
}

TEST_CASE("symmetric power of a diagonal map") {
  Cyclotomic a = q(2), b = q(3), c = q(5);
  CMat g = mat({{a, q(0), q(0)}, {q(0), b, q(0)}, {q(0), q(0), c}});
  CMat s = sym_power_matrix(g, 2);
  // Monomial x^i y^j z^k picks up a^-i b^-j c^-k.
  auto exps = monomial_exponents(3, 2);
  for (size_t i = 0; i < exps.size(); ++i) {
    Cyclotomic want = q(1);
    want = want / (a.pow(exps[i][0]) * b.pow(exps[i][1]) * c.pow(exps[i][2]));
    CHECK(s.at(i, i) == want);
    for (size_t j = 0; j < exps.size(); ++j)
      if (j != i) CHECK(s.at(i, j).is_zero());
  }
}

TEST_CASE("invariant dimensions agree between eigenspaces and traces") {
  MatGroup c2 = MatGroup::closure({mat({{q(0), q(1)}, {q(1), q(0)}})}, false);
  CHECK(invariant_form_dimension(c2, 2) == 2);
  CHECK(invariant_form_dimension_by_trace(c2, 2) == 2);
  CHECK(invariant_form_dimension(c2, 1) == 1);
  CHECK(invariant_form_dimension_by_trace(c2, 1) == 1);

  MatGroup s3 = MatGroup::closure({perm3(), swap3()}, false);
  CHECK(s3.order() == 6);
  for (std::uint32_t d : {1u, 2u, 3u, 4u}) {
    size_t via_eigen = invariant_form_dimension(s3, d);
    CHECK(via_eigen == invariant_form_dimension_by_trace(s3, d));
  }
  // Symmetric polynomial dimensions: partitions of d into parts <= 3.
  CHECK(invariant_form_dimension(s3, 1) == 1);
  CHECK(invariant_form_dimension(s3, 2) == 2);
  CHECK(invariant_form_dimension(s3, 3) == 3);
  CHECK(invariant_form_dimension(s3, 4) == 4);
}

TEST_CASE("semi-invariant leaves carry characters") {
  Cyclotomic w = Cyclotomic::zeta(3);
  MatGroup c3 = MatGroup::closure({mat({{q(1), q(0), q(0)},
                                        {q(0), w, q(0)},
                                        {q(0), q(0), w * w}})},
                                  false);
  std::vector<CharLeaf> leaves = semi_invariant_forms(c3, 1);
  CHECK(leaves.size() == 3);
  size_t trivial = 0;
  for (const CharLeaf& leaf : leaves) {
    CHECK(leaf.basis.cols == 1);
    if (leaf.chars[0].is_one()) ++trivial;
  }
  CHECK(trivial == 1);

  // Degree 3: x^3, y^3, z^3, xyz are all invariant.
  CHECK(invariant_form_dimension(c3, 3) == 4);
  CHECK(invariant_form_dimension_by_trace(c3, 3) == 4);
}

TEST_CASE("bilinear form operators") {
  Cyclotomic a = Cyclotomic::zeta(3), b = Cyclotomic::zeta(4);
  CMat g1 = mat({{a, q(0)}, {q(0), q(1)}});
  CMat g2 = mat({{b, q(0)}, {q(0), q(1)}});
  CMat op = bilinear_form_operator(g1, g2, false);
  // Basis E00, E01, E10, E11: diagonal with entries 1/(ab), 1/a, 1/b, 1.
  CHECK(op.at(0, 0) == q(1) / (a * b));
  CHECK(op.at(1, 1) == q(1) / a);
  CHECK(op.at(2, 2) == q(1) / b);
  CHECK(op.at(3, 3) == q(1));
  CHECK(op.at(0, 1).is_zero());

  // Pure swap transposes the coefficient matrix.
  CMat sw = bilinear_form_operator(CMat::identity(2), CMat::identity(2), true);
  CHECK(sw.at(0, 0) == q(1));
  CHECK(sw.at(1, 2) == q(1));
  CHECK(sw.at(2, 1) == q(1));
  CHECK(sw.at(3, 3) == q(1));
  CHECK(sw.at(1, 1).is_zero());
}

TEST_CASE("irreducible (1,1) curves") {
  // Diagonal C2: x <-> y on both factors fixes x1 y1 + x2 y2 among others.
  CMat s = mat({{q(0), q(1)}, {q(1), q(0)}});
  CHECK(has_irreducible_11_curve({bilinear_form_operator(s, s, false)}));

  // Same matrix on both factors: the cross terms x1 y2 and x2 y1 share a
  // character, and generic members of their span have rank 2.
  CMat d1 = mat({{Cyclotomic::zeta(3), q(0)}, {q(0), q(1)}});
  CHECK(has_irreducible_11_curve({bilinear_form_operator(d1, d1, false)}));

  // Distinct characters on the two factors split the coefficient space into
  // single cells E_ij, so every semi-invariant form is a product of fibers.
  CMat d2 = mat({{Cyclotomic::zeta(5), q(0)}, {q(0), q(1)}});
  CHECK_FALSE(has_irreducible_11_curve({bilinear_form_operator(d1, d2, false)}));

  // Reflection pair whose trivial leaf is spanned by E00 and E11: the
  // determinant vanishes on both basis vectors but not on their sum, so
  // only the polarization step sees the irreducible member.
  CMat r = mat({{q(1), q(0)}, {q(0), q(-1)}});
  CHECK(has_irreducible_11_curve({bilinear_form_operator(r, r, false)}));
}

TEST_CASE("ruled covector operators") {
  CMat g1 = mat({{q(2), q(0)}, {q(0), q(1)}});
  CMat g2 = mat({{q(3), q(0)}, {q(0), q(1)}});
  CMat op = ruled_linear_form_operator(g1, g2, false);
  REQUIRE(op.rows == 4);
  CHECK(op.at(0, 0) == q(1, 2));
  CHECK(op.at(1, 1) == q(1));
  CHECK(op.at(2, 2) == q(1, 3));
  CHECK(op.at(2, 0).is_zero());

  CMat sw = ruled_linear_form_operator(CMat::identity(2), CMat::identity(2), true);
  CHECK(sw.at(0, 2) == q(1));
  CHECK(sw.at(2, 0) == q(1));
  CHECK(sw.at(0, 0).is_zero());
}

TEST_CASE("form permutation detection") {
  // The 3-cycle permutes the three coordinate lines of the plane.
  CMat rho = perm3().inverse().transpose();
  std::vector<std::vector<Cyclotomic>> lines{
      {q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
  std::vector<std::vector<std::uint32_t>> perms;
  CHECK(forms_permuted_by({rho}, lines, &perms));
  REQUIRE(perms.size() == 1);
  // x -> some coordinate, and the images form one 3-cycle.
  std::vector<std::uint32_t> p = perms[0];
  CHECK(p[p[p[0]]] == 0);
  CHECK(p[0] != 0);

  // Two lines are not enough to absorb a 3-cycle.
  std::vector<std::vector<Cyclotomic>> two{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}};
  CHECK_FALSE(forms_permuted_by({rho}, two));

  // Scalings are allowed: a diagonal map fixes each coordinate line.
  CMat d = mat({{q(5), q(0), q(0)}, {q(0), q(7), q(0)}, {q(0), q(0), q(1)}});
  CHECK(forms_permuted_by({d}, lines, &perms));
  CHECK(perms[0] == std::vector<std::uint32_t>{0, 1, 2});
}
