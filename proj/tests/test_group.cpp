#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coreg/errors.hpp"
#include "coreg/group.hpp"

using namespace coreg;

namespace {

Cyclotomic q(long long n, long long d = 1) { return Cyclotomic(Rational(BigInt(n), BigInt(d))); }

CMat mat(const std::vector<std::vector<Cyclotomic>>& rows) { return CMat::from_rows(rows); }

CMat diag2(const Cyclotomic& a, const Cyclotomic& b) {
  return mat({{a, Cyclotomic()}, {Cyclotomic(), b}});
}

CMat swap2() { return mat({{q(0), q(1)}, {q(1), q(0)}}); }

// Binary tetrahedral rotation; projectively an order-3 element of A4.
CMat omega() {
  Cyclotomic i = Cyclotomic::zeta(4);
  Cyclotomic h(Rational(BigInt(1), BigInt(2)));
  Cyclotomic m1(Rational(BigInt(-1)));
  return mat({{h * (m1 + i), h * (Cyclotomic(Rational(1)) + i)},
              {h * (m1 + i), h * (m1 - i)}});
}

MatGroup proj_a4() {
  return MatGroup::closure({diag2(Cyclotomic::zeta(4), Cyclotomic::zeta_pow(4, 3)),
                            mat({{q(0), q(1)}, {q(-1), q(0)}}), omega()},
                           true);
}

MatGroup proj_s4() {
  return MatGroup::closure({diag2(Cyclotomic::zeta(4), Cyclotomic::zeta_pow(4, 3)),
                            mat({{q(0), q(1)}, {q(-1), q(0)}}), omega(),
                            diag2(Cyclotomic::zeta(8), Cyclotomic::zeta_pow(8, 7))},
                           true);
}

MatGroup proj_a5() {
  Cyclotomic e = Cyclotomic::zeta(5);
  Cyclotomic rt5 = e - e.pow(2) - e.pow(3) + e.pow(4);  // sqrt(5)
  Cyclotomic inv5 = rt5 * Cyclotomic(Rational(BigInt(1), BigInt(5)));
  Cyclotomic a = (e.pow(4) - e) * inv5;
  Cyclotomic b = (e.pow(2) - e.pow(3)) * inv5;
  return MatGroup::closure({diag2(e.pow(3), e.pow(2)), mat({{a, b}, {b, Cyclotomic() - a}})},
                           true);
}

}  // namespace

TEST_CASE("multiplication table validation") {
  // C3 written as addition mod 3.
  std::vector<std::uint32_t> c3{0, 1, 2, 1, 2, 0, 2, 0, 1};
  GroupTable t = GroupTable::from_mul(3, std::vector<std::uint32_t>(c3));
  CHECK(t.is_abelian());
  CHECK(t.orders[1] == 3);
  CHECK(t.inv[1] == 2);
  CHECK(t.power(1, 5) == 2);
  CHECK(t.power(1, -1) == 2);

  // The identity can sit at any index.
  GroupTable flip = GroupTable::from_mul(2, {1, 0, 0, 1});
  CHECK(flip.id == 1);
  CHECK(flip.orders[0] == 2);
  // No row acts as an identity here.
  CHECK_THROWS_AS(GroupTable::from_mul(2, {1, 1, 1, 1}), Error);
  // Out-of-range entry.
  CHECK_THROWS_AS(GroupTable::from_mul(2, {0, 1, 1, 7}), Error);
  // Row 1 is not a bijection, so 1 has no inverse.
  CHECK_THROWS_AS(GroupTable::from_mul(2, {0, 1, 1, 1}), Error);
}

TEST_CASE("projective closure collapses scalars") {
  MatGroup c6 = MatGroup::closure({diag2(Cyclotomic::zeta(6), q(1))}, true);
  CHECK(c6.order() == 6);
  CHECK(c6.projective());
  CHECK(is_cyclic(c6.table()));

  MatGroup scalars = MatGroup::closure({CMat::identity(2).scaled(Cyclotomic::zeta(6))}, true);
  CHECK(scalars.order() == 1);

  MatGroup linear = MatGroup::closure({CMat::identity(2).scaled(Cyclotomic::zeta(6))}, false);
  CHECK(linear.order() == 6);
}

TEST_CASE("dihedral closures avoid the half-turn collapse") {
  MatGroup v4 = MatGroup::closure({diag2(q(1), q(-1)), swap2()}, true);
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(recognize(v4.table()).name == "C2xC2");
  CHECK(is_dihedral(v4.table()));

  MatGroup d8 = MatGroup::closure({diag2(Cyclotomic::zeta(4), q(1)), swap2()}, true);
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.is_abelian());
  CHECK(recognize(d8.table()).name == "D8");
  CHECK(cyclic_or_dihedral(d8.table()));

  // The quaternion group is not dihedral: one involution only.
  MatGroup q8 = MatGroup::closure(
      {diag2(Cyclotomic::zeta(4), Cyclotomic::zeta_pow(4, 3)), mat({{q(0), q(1)}, {q(-1), q(0)}})},
      false);
  CHECK(q8.order() == 8);
  CHECK_FALSE(is_dihedral(q8.table()));
  CHECK(recognize(q8.table()).name == "G8");
  CHECK(q8.table().center().size() == 2);
}

TEST_CASE("polyhedral groups in PGL2") {
  MatGroup a4 = proj_a4();
  CHECK(a4.order() == 12);
  GroupId id = recognize(a4.table());
  CHECK(id.family == GroupId::Family::Alt4);
  std::map<std::uint32_t, size_t> hist = a4.table().order_histogram();
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 8);

  MatGroup s4 = proj_s4();
  CHECK(s4.order() == 24);
  CHECK(recognize(s4.table()).family == GroupId::Family::Sym4);

  MatGroup a5 = proj_a5();
  CHECK(a5.order() == 60);
  CHECK(recognize(a5.table()).family == GroupId::Family::Alt5);
  CHECK(a5.table().is_simple());
}

TEST_CASE("subgroup machinery on S4") {
  MatGroup s4 = proj_s4();
  const GroupTable& t = s4.table();
  std::vector<std::vector<std::uint32_t>> normals = t.normal_subgroups();
  std::vector<size_t> sizes;
  for (const auto& s : normals) sizes.push_back(s.size());
  CHECK(sizes == std::vector<size_t>{1, 4, 12, 24});

  CHECK(t.derived_subgroup().size() == 12);
  CHECK(t.center().size() == 1);

  // Quotient by the Klein four subgroup is S3.
  GroupTable quo = t.quotient(normals[1]);
  CHECK(recognize(quo).name == "S3");
  std::vector<size_t> cls;
  for (const auto& c : quo.conjugacy_classes()) cls.push_back(c.size());
  std::sort(cls.begin(), cls.end());
  CHECK(cls == std::vector<size_t>{1, 2, 3});

  GroupTable v4t = t.subgroup_table(normals[1]);
  CHECK(v4t.is_abelian());
  CHECK(abelian_invariant_factors(v4t) == std::vector<std::uint32_t>{2, 2});
  CHECK(abelian_rank(v4t) == 2);

  // A non-normal order-2 subgroup: generated by a transposition-like element.
  for (std::uint32_t i = 0; i < t.n; ++i) {
    if (t.orders[i] != 2) continue;
    std::vector<std::uint32_t> sub = t.subgroup_closure({i});
    CHECK(t.is_subgroup(sub));
    if (std::find(normals[1].begin(), normals[1].end(), i) == normals[1].end()) {
      CHECK_FALSE(t.is_normal(sub));
      break;
    }
  }
}

TEST_CASE("abelian invariants") {
  MatGroup g = MatGroup::closure({CMat::identity(2).scaled(Cyclotomic::zeta(6)), diag2(q(1), q(-1))},
                                 false);
  CHECK(g.order() == 12);
  CHECK(g.is_abelian());
  CHECK(recognize(g.table()).name == "C6xC2");
  CHECK(abelian_invariant_factors(g.table()) == std::vector<std::uint32_t>{6, 2});
  CHECK(abelian_rank(g.table()) == 2);
}

TEST_CASE("element lookup across conductors") {
  MatGroup d8 = MatGroup::closure({diag2(Cyclotomic::zeta(4), q(1)), swap2()}, true);
  CHECK(d8.contains(diag2(q(-1), q(1))));          // conductor 1 query
  CHECK(d8.contains(diag2(q(1), Cyclotomic::zeta(4))));
  CHECK_FALSE(d8.contains(diag2(Cyclotomic::zeta(3), q(1))));  // conductor 3 query
  CHECK_FALSE(d8.contains(mat({{q(1), q(1)}, {q(0), q(1)}})));

  MatGroup v4 = MatGroup::closure({diag2(q(1), q(-1)), swap2()}, true);
  CHECK(d8.contains_group(v4));
  CHECK_FALSE(v4.contains_group(d8));
}

TEST_CASE("rebuilding a group from its elements") {
  MatGroup d8 = MatGroup::closure({diag2(Cyclotomic::zeta(4), q(1)), swap2()}, true);
  std::vector<CMat> elems = d8.elements();
  std::rotate(elems.begin(), elems.begin() + 3, elems.end());
  MatGroup again = MatGroup::from_elements(elems, true);
  CHECK(again.order() == 8);
  CHECK(again.elem(again.identity_index()).is_identity());
  CHECK(again.contains_group(d8));
  CHECK(d8.contains_group(again));

  elems.pop_back();
  CHECK_THROWS_AS(MatGroup::from_elements(elems, true), Error);
}

TEST_CASE("infinite groups hit the cap") {
  CHECK_THROWS_AS(MatGroup::closure({mat({{q(1), q(1)}, {q(0), q(1)}})}, false, 50), Error);
  try {
    MatGroup::closure({mat({{q(1), q(1)}, {q(0), q(1)}})}, false, 50);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderCapExceeded);
  }
}

TEST_CASE("unimodular lifts scale orders by the dimension") {
  MatGroup v4 = MatGroup::closure({diag2(q(1), q(-1)), swap2()}, true);
  MatGroup lift = sl_lift(v4);
  CHECK(lift.order() == 8);
  CHECK_FALSE(lift.projective());
  CHECK_FALSE(is_dihedral(lift.table()));  // binary lift of V4 is Q8
  for (const CMat& m : lift.elements()) CHECK(m.det().is_one());

  MatGroup triv = MatGroup::closure({CMat::identity(3)}, true);
  MatGroup tl = sl_lift(triv);
  CHECK(tl.order() == 3);  // the scalar mu_3

  MatGroup c2 = MatGroup::closure({mat({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(-1)}})},
                                  true);
  CHECK(sl_lift(c2).order() == 6);
}

TEST_CASE("projective diagonalizability tells tori from Heisenberg") {
  Cyclotomic w = Cyclotomic::zeta(3);
  CMat sigma = mat({{q(0), q(0), q(1)}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
  CMat d = mat({{q(1), q(0), q(0)},
                {q(0), w, q(0)},
                {q(0), q(0), w * w}});
  MatGroup h = MatGroup::closure({sigma, d}, true);
  CHECK(h.order() == 9);
  CHECK(h.is_abelian());  // projectively abelian, linearly Heisenberg

  std::vector<std::uint32_t> dsub = h.table().subgroup_closure({h.find(projective_canonical(d)).value()});
  CHECK(dsub.size() == 3);
  CHECK(projectively_diagonalizable(h, dsub));

  std::vector<std::uint32_t> all(h.order());
  for (std::uint32_t i = 0; i < h.order(); ++i) all[i] = i;
  CHECK_FALSE(projectively_diagonalizable(h, all));

  MatGroup torus = MatGroup::closure({d, mat({{w, q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}})},
                                     true);
  std::vector<std::uint32_t> tall(torus.order());
  for (std::uint32_t i = 0; i < torus.order(); ++i) tall[i] = i;
  CHECK(projectively_diagonalizable(torus, tall));
}
