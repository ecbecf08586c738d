// Coregularity reports with verified certificates.  Every coregularity-0
// report carries an invariant anticanonical cycle that is rebuilt and
// re-checked through the dual complex machinery before it is returned, and
// every coregularity-1 report carries an invariant curve whose
// semi-invariance is re-verified against the input generators.

#include "coreg/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "coreg/errors.hpp"
#include "coreg/invariants.hpp"
#include "coreg/presets.hpp"

namespace coreg {
namespace {

using Vec = std::vector<Cyclotomic>;

Vec basis_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Cyclotomic(1);
  return v;
}

// Scale to leading coefficient 1 and reduce every entry to its smallest
// conductor, so equal projective points have equal representations.
Vec canon_pt(const Vec& v) {
  Vec c = projective_canonical_vec(v);
  for (auto& x : c) x = x.reduced();
  return c;
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = a[i].cmp(b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

Vec column(const CMat& m, size_t c) {
  Vec v(m.rows);
  for (size_t r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
  return v;
}

Cyclotomic dot(const Vec& a, const Vec& b) {
  Cyclotomic s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// c with v == c * u, if u is nonzero and the vectors are proportional.
std::optional<Cyclotomic> proportionality(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return std::nullopt;
  size_t lead = u.size();
  for (size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == u.size()) return std::nullopt;
  Cyclotomic c = v[lead] / u[lead];
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] * c != v[i]) return std::nullopt;
  return c;
}

Vec apply_pt(const CMat& m, const Vec& v) { return canon_pt(m.apply(v)); }

// Covector of the line through two distinct points (the pairing is
// symmetric, so the kernel of the stacked points works on either side).
Vec line_through(const Vec& p, const Vec& q) {
  CMat k = CMat::from_rows({p, q}).kernel();
  if (k.cols != 1) fail(Errc::UnclassifiableGroup, "no unique line through coincident points");
  return canon_pt(column(k, 0));
}

bool independent3(const Vec& a, const Vec& b, const Vec& c) {
  return CMat::from_rows({a, b, c}).rank() == 3;
}

// Representatives with root-of-unity determinants for every element, built
// as products of the input generators along the Cayley graph.  Canonical
// projective elements carry arbitrary scalings and are useless for
// eigenvector work; these are the matrices to decompose.
std::vector<CMat> word_reps(const MatGroup& g) {
  std::vector<CMat> rep(g.order());
  std::vector<bool> have(g.order(), false);
  size_t id = g.identity_index();
  rep[id] = CMat::identity(g.dim());
  have[id] = true;
  std::vector<size_t> queue{id};
  const auto& gens = g.input_generators();
  const auto& gidx = g.generator_indices();
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (size_t k = 0; k < gidx.size(); ++k) {
      size_t y = g.mul(gidx[k], queue[qi]);
      if (!have[y]) {
        rep[y] = gens[k] * rep[queue[qi]];
        have[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (bool h : have)
    if (!h) fail(Errc::UnclassifiableGroup, "generators do not reach every element");
  return rep;
}

std::vector<CharLeaf> eigen_leaves(const CMat& rep) {
  return joint_eigenspaces({det_one_scaled(rep)}, rep.rows);
}

std::vector<Vec> leaf_points(const std::vector<CharLeaf>& leaves) {
  std::vector<Vec> pts;
  for (const auto& lf : leaves)
    for (size_t c = 0; c < lf.basis.cols; ++c) pts.push_back(canon_pt(column(lf.basis, c)));
  return pts;
}

// Covector of a 2-dimensional subspace of 3-space.
Vec plane_covector(const CMat& basis) {
  CMat k = CMat::from_rows({column(basis, 0), column(basis, 1)}).kernel();
  if (k.cols != 1) fail(Errc::UnclassifiableGroup, "degenerate eigenplane");
  return canon_pt(column(k, 0));
}

void sort_pair(std::array<Vec, 2>& p) {
  if (VecLess()(p[1], p[0])) std::swap(p[0], p[1]);
}

// ---------------------------------------------------------------------------
// Report invariants.  Every public entry point runs its finished report
// through this before returning it.

void check_report(const ClassificationReport& r) {
  bool c2 = (r.coregularity == 2);
  if (r.lct_gt_1 != c2) fail(Errc::UnclassifiableGroup, "lct flag inconsistent with coregularity");
  if (r.surface == "p2") {
    if ((r.exceptionality == Exceptionality::Exceptional) != c2)
      fail(Errc::UnclassifiableGroup, "exceptionality inconsistent with coregularity");
    if ((r.rigidity == Rigidity::SuperRigid) != c2)
      fail(Errc::UnclassifiableGroup, "rigidity inconsistent with coregularity");
  }
  if (r.torus_normalizer != (r.coregularity == 0))
    fail(Errc::UnclassifiableGroup, "torus flag inconsistent with coregularity");
  if ((r.coregularity == 0) != r.cycle.has_value())
    fail(Errc::UnclassifiableGroup, "coregularity 0 requires a cycle certificate");
  if ((r.coregularity == 1) != r.curve.has_value())
    fail(Errc::UnclassifiableGroup, "coregularity 1 requires a curve certificate");
}

// Rebuild the certificate from scratch and re-check every claim: the
// configuration is valid, its dual complex has the expected shape, the
// classes sum to -K, and the induced action passes the obstruction.
void verify_cycle(CycleWitness& w, const TopologyType& expect) {
  validate(w.config);
  w.topology = topology_type(build(w.config));
  if (!(w.topology == expect))
    fail(Errc::UnclassifiableGroup, "certificate topology is not " + expect.str());
  if (w.classes.size() != w.config.components.size())
    fail(Errc::UnclassifiableGroup, "certificate classes misaligned");
  if (!is_anticanonical(w.classes, w.lattice, 1))
    fail(Errc::UnclassifiableGroup, "certificate classes do not sum to -K");
  ComplexAction ca = act(w.config, w.action);
  Coreg0Check chk = coreg0_obstruction(ca);
  if (!chk.pass)
    fail(Errc::UnclassifiableGroup, "certificate fails the obstruction: " + chk.reason);
}

// ---------------------------------------------------------------------------
// Plane triangles.

// Abelian action with a fixed anchor point.  Scaling each input generator by
// the inverse of its eigenvalue on the anchor makes the lifts commute
// exactly: any commutator of the scaled lifts is a scalar matrix fixing the
// anchor with eigenvalue 1, hence the identity.  The joint eigenspace
// columns then contain three independent, individually fixed points.
std::vector<Vec> triangle_abelian(const MatGroup& g, const Vec& anchor) {
  std::vector<CMat> ops;
  for (const CMat& m : g.input_generators()) {
    auto lam = proportionality(anchor, m.apply(anchor));
    if (!lam || lam->is_zero()) fail(Errc::UnclassifiableGroup, "anchor point is not fixed");
    ops.push_back(m.scaled(lam->inverse()));
  }
  std::vector<Vec> pts = leaf_points(joint_eigenspaces(ops, 3));
  std::vector<Vec> chosen;
  std::vector<Vec> rows;
  auto try_add = [&](const Vec& v) {
    if (chosen.size() == 3) return;
    rows.push_back(v);
    if (CMat::from_rows(rows).rank() == rows.size())
      chosen.push_back(v);
    else
      rows.pop_back();
  };
  try_add(anchor);
  for (const auto& p : pts) try_add(p);
  if (chosen.size() != 3) fail(Errc::UnclassifiableGroup, "no joint eigenbasis triangle");
  return chosen;
}

// Fixed point plus an invariant point pair on the invariant line.  The pair
// is the fixed locus on the line of a normal cyclic subgroup of the
// restriction, so normality makes it invariant under the whole group.
std::vector<Vec> triangle_b1(const MatGroup& g, const P2Classification& cls) {
  Vec p = canon_pt(cls.fixed_point);
  CMat basis = CMat::from_rows({cls.invariant_line}).kernel();  // 3x2
  std::vector<CMat> rgens;
  for (const CMat& m : g.input_generators()) rgens.push_back(restrict_operator(m, basis));
  MatGroup r = MatGroup::closure(rgens, true);
  const GroupTable& t = r.table();

  std::vector<std::vector<std::uint32_t>> cands;
  if (is_cyclic(t)) {
    std::vector<std::uint32_t> all(t.n);
    std::iota(all.begin(), all.end(), 0);
    cands.push_back(all);
  } else {
    // Rotation subgroups first (index 2), then any other cyclic normal
    // subgroup; normal_subgroups is already sorted by size then members.
    for (const auto& sub : t.normal_subgroups())
      if (sub.size() == t.n / 2 && is_cyclic(t.subgroup_table(sub))) cands.push_back(sub);
    for (const auto& sub : t.normal_subgroups())
      if (sub.size() != t.n / 2 && sub.size() >= 2 && sub.size() < t.n &&
          is_cyclic(t.subgroup_table(sub)))
        cands.push_back(sub);
  }

  auto wreps = word_reps(g);
  for (const auto& sub : cands) {
    std::uint32_t j = sub[0];
    for (auto i : sub)
      if (t.orders[i] > t.orders[j]) j = i;
    if (t.orders[j] < 2) continue;
    // Any element upstairs restricting to the chosen rotation has the
    // rotation's two fixed points on the line among its eigenvectors.
    std::optional<size_t> up;
    for (size_t i = 0; i < g.order() && !up; ++i)
      if (auto f = r.find(restrict_operator(g.elem(i), basis)); f && *f == j) up = i;
    if (!up) fail(Errc::UnclassifiableGroup, "restriction element has no preimage");
    std::vector<Vec> online;
    for (const auto& lf : eigen_leaves(wreps[*up])) {
      CMat w = intersect_subspaces(lf.basis, basis);
      if (w.cols == 1) online.push_back(canon_pt(column(w, 0)));
    }
    if (online.size() != 2 || online[0] == online[1]) continue;
    bool ok = true;
    for (const CMat& m : g.input_generators()) {
      Vec i0 = apply_pt(m, online[0]), i1 = apply_pt(m, online[1]);
      if (!((i0 == online[0] && i1 == online[1]) || (i0 == online[1] && i1 == online[0]))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!independent3(p, online[0], online[1]))
      fail(Errc::UnclassifiableGroup, "fixed point lies on the invariant line");
    return {p, online[0], online[1]};
  }
  fail(Errc::UnclassifiableGroup, "no invariant point pair on the line");
}

// The diagonal normal subgroup of a type C or D action has pairwise distinct
// characters on its three eigenlines (two equal characters would propagate
// around the permuting quotient and force the subgroup to be scalar), so its
// joint eigenspaces are exactly the three vertices of the permuted triangle.
std::vector<Vec> triangle_cd(const MatGroup& g, const std::vector<std::uint32_t>& kernel) {
  auto wreps = word_reps(g);
  std::vector<CMat> ops;
  for (auto i : kernel)
    if (i != g.identity_index()) ops.push_back(det_one_scaled(wreps[i]));
  if (ops.empty()) fail(Errc::UnclassifiableGroup, "trivial torus kernel");
  auto leaves = joint_eigenspaces(ops, 3);
  if (leaves.size() != 3) fail(Errc::UnclassifiableGroup, "torus kernel is not regular");
  std::vector<Vec> tri;
  for (const auto& lf : leaves) {
    if (lf.basis.cols != 1) fail(Errc::UnclassifiableGroup, "torus kernel is not regular");
    tri.push_back(canon_pt(column(lf.basis, 0)));
  }
  if (!independent3(tri[0], tri[1], tri[2]))
    fail(Errc::UnclassifiableGroup, "degenerate kernel triangle");
  return tri;
}

// Triangle of lines spanned by an invariant vertex set, as a verified cycle.
CycleWitness triangle_cycle(const MatGroup& g, const std::vector<Vec>& tri,
                            const std::string& note) {
  std::array<Vec, 3> side{line_through(tri[1], tri[2]), line_through(tri[0], tri[2]),
                          line_through(tri[0], tri[1])};
  const char* comp_id[3] = {"L0", "L1", "L2"};
  const char* cross_id[3] = {"p0", "p1", "p2"};

  CycleWitness w;
  w.lattice = SurfaceLattice::p2();
  w.note = note;
  w.config.surface = "p2";
  for (size_t k = 0; k < 3; ++k) {
    w.config.components.push_back({comp_id[k], Rational(1), "side opposite vertex " + std::to_string(k)});
    w.classes.push_back({DivisorClass{1}, 1});
  }
  // Crossing k sits at vertex k, where the two sides through it meet.
  for (size_t k = 0; k < 3; ++k)
    w.config.crossings.push_back({cross_id[k], comp_id[(k + 1) % 3], comp_id[(k + 2) % 3]});

  for (const CMat& m : g.input_generators()) {
    std::array<size_t, 3> sigma{};
    std::array<bool, 3> hit{};
    for (size_t k = 0; k < 3; ++k) {
      Vec img = apply_pt(m, tri[k]);
      size_t j = 3;
      for (size_t c = 0; c < 3; ++c)
        if (tri[c] == img) {
          j = c;
          break;
        }
      if (j == 3 || hit[j]) fail(Errc::UnclassifiableGroup, "triangle is not invariant");
      sigma[k] = j;
      hit[j] = true;
    }
    ActionGenerator ag;
    for (size_t k = 0; k < 3; ++k) {
      ag.components[comp_id[k]] = comp_id[sigma[k]];
      ag.crossings[cross_id[k]] = cross_id[sigma[k]];
    }
    w.action.push_back(ag);
  }
  verify_cycle(w, TopologyType{TopologyType::Shape::Circle, 3});
  return w;
}

// Semi-invariant form of the given degree, re-verified against the raw
// input generators (any lift works, since proportionality is scale-free).
CurveWitness plane_curve(const MatGroup& g, std::uint32_t d, const std::string& note) {
  MatGroup lift = sl_lift(g);
  auto leaves = semi_invariant_forms(lift, d);
  if (leaves.empty() || leaves.front().basis.cols == 0)
    fail(Errc::UnclassifiableGroup, "expected a semi-invariant form of degree " + std::to_string(d));
  CurveWitness w;
  w.degree = d;
  w.monomials = monomial_exponents(3, d);
  w.form = canon_pt(column(leaves.front().basis, 0));
  w.lattice_class = {static_cast<std::int64_t>(d)};
  w.note = note;
  for (const CMat& m : g.input_generators())
    if (!proportionality(w.form, sym_power_matrix(m, d).apply(w.form)))
      fail(Errc::UnclassifiableGroup, "form is not semi-invariant");
  return w;
}

// ---------------------------------------------------------------------------
// Quadric fiber machinery.

// Invariant point pairs of one ruling image: the two fixed points of a
// maximal-order generator when the image is cyclic, and the fixed pair of
// each cyclic normal subgroup when it is dihedral (normality makes the pair
// invariant under the whole image).
std::vector<std::array<Vec, 2>> ruling_pairs(const QuadricGroup& q, bool first) {
  const MatGroup& a = first ? q.a1 : q.a2;
  std::vector<std::array<Vec, 2>> out;
  if (a.order() == 1) {
    std::array<Vec, 2> e{basis_vec(2, 0), basis_vec(2, 1)};
    sort_pair(e);
    out.push_back(e);
    return out;
  }
  const auto& reps = first ? q.a1_reps : q.a2_reps;
  auto rep_of = [&](std::uint32_t idx) -> const CMat& {
    for (const CMat& r : reps)
      if (auto f = a.find(r); f && *f == idx) return r;
    fail(Errc::UnclassifiableGroup, "missing ruling representative");
  };
  const GroupTable& t = a.table();
  auto eigen_pair_of = [&](std::uint32_t idx) -> std::optional<std::array<Vec, 2>> {
    auto pts = leaf_points(eigen_leaves(rep_of(idx)));
    if (pts.size() != 2 || pts[0] == pts[1]) return std::nullopt;
    std::array<Vec, 2> pr{pts[0], pts[1]};
    sort_pair(pr);
    return pr;
  };
  if (is_cyclic(t)) {
    for (std::uint32_t i = 0; i < t.n; ++i)
      if (t.orders[i] == t.n) {
        if (auto pr = eigen_pair_of(i)) out.push_back(*pr);
        break;
      }
  } else {
    for (const auto& sub : t.normal_subgroups()) {
      if (sub.size() < 2 || sub.size() >= t.n) continue;
      if (!is_cyclic(t.subgroup_table(sub))) continue;
      std::uint32_t best = sub[0];
      for (auto i : sub)
        if (t.orders[i] > t.orders[best]) best = i;
      if (t.orders[best] < 2) continue;
      if (auto pr = eigen_pair_of(best)) out.push_back(*pr);
    }
  }
  if (out.empty()) fail(Errc::UnclassifiableGroup, "no invariant point pair for a ruling");
  return out;
}

// Image of a fiber under one element; vertical means {x = pt}.
std::pair<bool, Vec> map_fiber(const QuadricElement& e, bool vertical, const Vec& pt) {
  if (!e.swap) return {vertical, apply_pt(vertical ? e.g1 : e.g2, pt)};
  return {!vertical, apply_pt(vertical ? e.g2 : e.g1, pt)};
}

std::optional<CycleWitness> try_fiber_cycle(const QuadricGroup& q, const std::array<Vec, 2>& P1,
                                            const std::array<Vec, 2>& P2) {
  if (P1[0] == P1[1] || P2[0] == P2[1]) return std::nullopt;
  struct Fib {
    bool vertical;
    Vec pt;
    const char* id;
  };
  std::array<Fib, 4> fib{Fib{true, P1[0], "V1"}, Fib{true, P1[1], "V2"}, Fib{false, P2[0], "H1"},
                         Fib{false, P2[1], "H2"}};
  // Crossing of V_i and H_j.
  const char* cross_id[2][2] = {{"x11", "x12"}, {"x21", "x22"}};

  std::vector<ActionGenerator> action;
  for (auto gi : q.gen_idx) {
    const QuadricElement& e = q.reps[gi];
    std::array<size_t, 4> img{};
    std::array<bool, 4> hit{};
    for (size_t i = 0; i < 4; ++i) {
      auto [vert, pt] = map_fiber(e, fib[i].vertical, fib[i].pt);
      size_t j = 4;
      for (size_t c = 0; c < 4; ++c)
        if (fib[c].vertical == vert && fib[c].pt == pt) {
          j = c;
          break;
        }
      if (j == 4 || hit[j]) return std::nullopt;
      img[i] = j;
      hit[j] = true;
    }
    ActionGenerator ag;
    for (size_t i = 0; i < 4; ++i) ag.components[fib[i].id] = fib[img[i]].id;
    for (size_t vi = 0; vi < 2; ++vi)
      for (size_t hj = 0; hj < 2; ++hj) {
        size_t a = img[vi], b = img[2 + hj];  // one vertical, one horizontal
        size_t v2 = fib[a].vertical ? a : b;
        size_t h2 = fib[a].vertical ? b : a;
        ag.crossings[cross_id[vi][hj]] = cross_id[v2][h2 - 2];
      }
    action.push_back(ag);
  }

  CycleWitness w;
  w.lattice = SurfaceLattice::quadric();
  w.note = "four invariant fibers, two from each ruling";
  w.config.surface = "quadric";
  for (const auto& f : fib) {
    w.config.components.push_back(
        {f.id, Rational(1), f.vertical ? "fiber of the first ruling" : "fiber of the second ruling"});
    w.classes.push_back({f.vertical ? DivisorClass{1, 0} : DivisorClass{0, 1}, 1});
  }
  for (size_t vi = 0; vi < 2; ++vi)
    for (size_t hj = 0; hj < 2; ++hj)
      w.config.crossings.push_back({cross_id[vi][hj], fib[vi].id, fib[2 + hj].id});
  w.action = std::move(action);
  verify_cycle(w, TopologyType{TopologyType::Shape::Circle, 4});
  return w;
}

CycleWitness quadric_cycle(const QuadricGroup& q) {
  auto p1cands = ruling_pairs(q, true);
  const QuadricElement* tau = nullptr;
  for (auto gi : q.gen_idx)
    if (q.reps[gi].swap) {
      tau = &q.reps[gi];
      break;
    }
  if (q.has_swap && !tau) fail(Errc::UnclassifiableGroup, "swap element without a swap generator");
  std::vector<std::array<Vec, 2>> p2cands;
  if (!tau) p2cands = ruling_pairs(q, false);

  for (const auto& P1 : p1cands) {
    std::vector<std::array<Vec, 2>> rhs;
    if (tau) {
      // A swap sends the vertical fibers over P1 to the horizontal fibers
      // over its second-factor image; conjugation keeps that image invariant.
      std::array<Vec, 2> im{apply_pt(tau->g2, P1[0]), apply_pt(tau->g2, P1[1])};
      sort_pair(im);
      rhs.push_back(im);
    } else {
      rhs = p2cands;
    }
    for (const auto& P2 : rhs)
      if (auto w = try_fiber_cycle(q, P1, P2)) return *w;
  }
  fail(Errc::UnclassifiableGroup, "no invariant fiber cycle");
}

// Two fibers of one ruling over an invariant point pair, as a binary form.
CurveWitness fiber_pair_curve(const QuadricGroup& q, bool pair_in_first) {
  const MatGroup& a = pair_in_first ? q.a1 : q.a2;
  auto mons = monomial_exponents(2, 2);
  auto idx_of = [&](std::uint32_t e0, std::uint32_t e1) -> size_t {
    for (size_t i = 0; i < mons.size(); ++i)
      if (mons[i][0] == e0 && mons[i][1] == e1) return i;
    fail(Errc::UnclassifiableGroup, "missing monomial");
  };
  for (const auto& pr : ruling_pairs(q, pair_in_first)) {
    bool ok = true;
    for (auto gi : q.gen_idx) {
      const QuadricElement& e = q.reps[gi];
      if (e.swap) fail(Errc::InvalidQuadricData, "factor swap joins non-matching rulings");
      const CMat& m = pair_in_first ? e.g1 : e.g2;
      Vec i0 = apply_pt(m, pr[0]), i1 = apply_pt(m, pr[1]);
      if (!((i0 == pr[0] && i1 == pr[1]) || (i0 == pr[1] && i1 == pr[0]))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    CurveWitness w;
    w.degree = 2;
    w.monomials = mons;
    w.form.resize(3);
    // (b1_1 x0 - b1_0 x1)(b2_1 x0 - b2_0 x1) vanishes exactly on the pair.
    w.form[idx_of(2, 0)] = pr[0][1] * pr[1][1];
    w.form[idx_of(1, 1)] = -(pr[0][1] * pr[1][0] + pr[0][0] * pr[1][1]);
    w.form[idx_of(0, 2)] = pr[0][0] * pr[1][0];
    w.form = canon_pt(w.form);
    w.lattice_class = pair_in_first ? DivisorClass{2, 0} : DivisorClass{0, 2};
    w.note = std::string("two fibers of the ") + (pair_in_first ? "first" : "second") +
             " ruling over an invariant point pair";
    for (const CMat& el : a.elements())
      if (!proportionality(w.form, sym_power_matrix(el, 2).apply(w.form)))
        fail(Errc::UnclassifiableGroup, "fiber pair form is not semi-invariant");
    return w;
  }
  fail(Errc::UnclassifiableGroup, "no invariant fiber pair");
}

// ---------------------------------------------------------------------------
// Blowup cycles.

// Cycle on the blowup of the plane at tri[0]: the exceptional curve, the
// transforms of the two lines joining tri[0] to the other vertices, and the
// line through those vertices.
CycleWitness f1_cycle(const MatGroup& g, const std::vector<Vec>& tri) {
  const Vec &p = tri[0], &q1 = tri[1], &q2 = tri[2];
  CycleWitness w;
  w.lattice = SurfaceLattice::blowup_of_p2(1);
  w.note = "exceptional curve, two transformed lines through the center, and the opposite line";
  w.config.surface = "f1";
  w.config.components = {
      {"E", Rational(1), "exceptional curve over the blown-up point"},
      {"A", Rational(1), "transform of a line through the blown-up point"},
      {"L", Rational(1), "line avoiding the blown-up point"},
      {"B", Rational(1), "transform of a line through the blown-up point"},
  };
  w.classes = {{DivisorClass{0, 1}, 1},
               {DivisorClass{1, -1}, 1},
               {DivisorClass{1, 0}, 1},
               {DivisorClass{1, -1}, 1}};
  w.config.crossings = {
      {"eA", "E", "A"}, {"q1", "A", "L"}, {"q2", "L", "B"}, {"eB", "B", "E"}};

  for (const CMat& m : g.input_generators()) {
    if (apply_pt(m, p) != p) fail(Errc::UnclassifiableGroup, "center moved");
    Vec i1 = apply_pt(m, q1), i2 = apply_pt(m, q2);
    ActionGenerator ag;
    if (i1 == q1 && i2 == q2) {
      // everything fixed
    } else if (i1 == q2 && i2 == q1) {
      ag.components = {{"A", "B"}, {"B", "A"}};
      ag.crossings = {{"q1", "q2"}, {"q2", "q1"}, {"eA", "eB"}, {"eB", "eA"}};
    } else {
      fail(Errc::UnclassifiableGroup, "triangle is not invariant");
    }
    w.action.push_back(ag);
  }
  verify_cycle(w, TopologyType{TopologyType::Shape::Circle, 4});
  return w;
}

std::vector<Vec> fixed_candidates(const MatGroup& g) {
  FixedLocus fl = fixed_locus(g);
  std::vector<Vec> out;
  if (fl.whole_space) {
    for (size_t i = 0; i < 3; ++i) out.push_back(basis_vec(3, i));
    return out;
  }
  for (const auto& p : fl.points) out.push_back(canon_pt(p));
  for (const CMat& b : fl.lines) {
    Vec c0 = column(b, 0), c1 = column(b, 1);
    out.push_back(canon_pt(c0));
    out.push_back(canon_pt(c1));
    Vec s(3);
    for (size_t i = 0; i < 3; ++i) s[i] = c0[i] + c1[i];
    out.push_back(canon_pt(s));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string exceptionality_name(Exceptionality e) {
  switch (e) {
    case Exceptionality::Exceptional: return "exceptional";
    case Exceptionality::WeaklyExceptionalOnly: return "weakly_exceptional_only";
    case Exceptionality::NotWeaklyExceptional: return "not_weakly_exceptional";
    default: return "not_applicable";
  }
}

std::string rigidity_name(Rigidity r) {
  switch (r) {
    case Rigidity::SuperRigid: return "super_rigid";
    case Rigidity::RigidNotSuper: return "rigid_not_super";
    case Rigidity::NotRigid: return "not_rigid";
    default: return "not_applicable";
  }
}

ClassificationReport coreg_p2(const MatGroup& g) {
  if (g.dim() != 3) fail(Errc::DimensionMismatch, "plane actions need 3x3 generators");
  P2Classification cls = classify_p2(g);

  ClassificationReport rep;
  rep.surface = "p2";
  rep.group_name = cls.group_name;
  rep.order = cls.order;
  rep.plane_type = cls.type;

  switch (cls.type) {
    case P2Type::A:
    case P2Type::B1:
    case P2Type::C:
    case P2Type::D: rep.coregularity = 0; break;
    case P2Type::B2:
    case P2Type::E:
    case P2Type::H: rep.coregularity = 1; break;
    default: rep.coregularity = 2; break;
  }
  rep.lct_gt_1 = (rep.coregularity == 2);
  if (cls.type == P2Type::I) rep.lct_annotation = "4/3";
  if (cls.type == P2Type::K) rep.lct_annotation = "2";

  bool named = false;
  if (cls.type == P2Type::C) named = recognize(g.table()).family == GroupId::Family::Alt4;
  if (cls.type == P2Type::D) named = recognize(g.table()).family == GroupId::Family::Sym4;
  switch (cls.type) {
    case P2Type::F:
    case P2Type::G:
    case P2Type::I:
    case P2Type::K:
      rep.exceptionality = Exceptionality::Exceptional;
      rep.rigidity = Rigidity::SuperRigid;
      break;
    case P2Type::E:
      rep.exceptionality = Exceptionality::WeaklyExceptionalOnly;
      rep.rigidity = Rigidity::RigidNotSuper;
      break;
    case P2Type::H:
      rep.exceptionality = Exceptionality::NotWeaklyExceptional;
      rep.rigidity = Rigidity::RigidNotSuper;
      break;
    case P2Type::C:
    case P2Type::D:
      rep.exceptionality =
          named ? Exceptionality::NotWeaklyExceptional : Exceptionality::WeaklyExceptionalOnly;
      rep.rigidity = named ? Rigidity::NotRigid : Rigidity::RigidNotSuper;
      break;
    default:
      rep.exceptionality = Exceptionality::NotWeaklyExceptional;
      rep.rigidity = Rigidity::NotRigid;
      break;
  }

  if (rep.coregularity == 0) {
    std::vector<Vec> tri;
    std::string note;
    if (cls.type == P2Type::A) {
      tri = triangle_abelian(g, canon_pt(cls.fixed_point));
      note = "triangle of joint eigenvector lines";
    } else if (cls.type == P2Type::B1) {
      tri = triangle_b1(g, cls);
      note = "fixed point joined to an invariant point pair on the invariant line";
    } else {
      tri = triangle_cd(g, cls.torus_kernel);
      note = "coordinate triangle of the diagonal normal subgroup";
    }
    rep.cycle = triangle_cycle(g, tri, note);
  } else if (rep.coregularity == 1) {
    if (cls.type == P2Type::B2)
      rep.curve = plane_curve(g, 1, "the invariant line");
    else if (cls.type == P2Type::H)
      rep.curve = plane_curve(g, 2, "the invariant conic");
    else
      rep.curve = plane_curve(g, 3, "an invariant cubic");
  }
  rep.torus_normalizer = (rep.coregularity == 0);
  check_report(rep);
  return rep;
}

ClassificationReport coreg_quadric(const QuadricGroup& g) {
  P1Classification c1 = classify_p1(g.a1), c2 = classify_p1(g.a2);
  if (g.has_swap && g.a1.order() != g.a2.order())
    fail(Errc::InvalidQuadricData, "factor swap joins non-matching rulings");

  ClassificationReport rep;
  rep.surface = "quadric";
  rep.group_name = recognize(g.table).name;
  rep.order = g.order();

  bool poly1 = is_polyhedral(c1.type), poly2 = is_polyhedral(c2.type);
  if (!poly1 && !poly2) {
    rep.coregularity = 0;
    rep.cycle = quadric_cycle(g);
  } else if (poly1 != poly2) {
    rep.coregularity = 1;
    rep.curve = fiber_pair_curve(g, !poly1);
  } else {
    // Both ruling images polyhedral: the coregularity is 1 exactly when the
    // group fixes an irreducible curve of bidegree (1,1).
    std::vector<CMat> ops;
    for (auto gi : g.gen_idx)
      ops.push_back(bilinear_form_operator(g.reps[gi].g1, g.reps[gi].g2, g.reps[gi].swap));
    if (auto form = irreducible_11_form(ops)) {
      rep.coregularity = 1;
      CurveWitness w;
      w.degree = 2;
      w.monomials = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
      w.form = canon_pt(*form);
      w.lattice_class = {1, 1};
      w.note = "irreducible invariant curve of bidegree (1,1)";
      CMat c(2, 2);
      c.at(0, 0) = w.form[0];
      c.at(0, 1) = w.form[1];
      c.at(1, 0) = w.form[2];
      c.at(1, 1) = w.form[3];
      if (c.det().is_zero()) fail(Errc::UnclassifiableGroup, "(1,1) form is reducible");
      for (const CMat& op : ops)
        if (!proportionality(w.form, op.apply(w.form)))
          fail(Errc::UnclassifiableGroup, "(1,1) form is not semi-invariant");
      rep.curve = w;
    } else {
      rep.coregularity = 2;
    }
  }
  rep.lct_gt_1 = (rep.coregularity == 2);
  rep.torus_normalizer = (rep.coregularity == 0);
  check_report(rep);
  return rep;
}

ClassificationReport coreg_f1(const MatGroup& g, const std::vector<Cyclotomic>* point) {
  if (g.dim() != 3) fail(Errc::DimensionMismatch, "plane actions need 3x3 generators");
  P2Classification cls = classify_p2(g);
  Vec p;
  if (point) {
    p = canon_pt(*point);
    for (const CMat& m : g.input_generators())
      if (apply_pt(m, p) != p) fail(Errc::NoFixedPoint, "the blown-up point is not fixed");
  } else {
    if (cls.fixed_point.empty())
      fail(Errc::NoFixedPoint, "the action has no fixed point to blow up");
    p = canon_pt(cls.fixed_point);
  }

  ClassificationReport rep;
  rep.surface = "f1";
  rep.group_name = cls.group_name;
  rep.order = cls.order;
  rep.plane_type = cls.type;
  rep.exceptionality = Exceptionality::NotApplicable;
  rep.rigidity = Rigidity::NotApplicable;

  if (cls.type == P2Type::A || cls.type == P2Type::B1) {
    rep.coregularity = 0;
    std::vector<Vec> tri =
        (cls.type == P2Type::A) ? triangle_abelian(g, p) : triangle_b1(g, cls);
    if (tri[0] != p) fail(Errc::UnclassifiableGroup, "triangle misses the blown-up point");
    rep.cycle = f1_cycle(g, tri);
  } else if (cls.type == P2Type::B2) {
    rep.coregularity = 1;
    SurfaceLattice lat = SurfaceLattice::blowup_of_p2(1);
    DivisorClass e{0, 1}, rest{3, -2};  // rest = -K - E
    std::int64_t a = pairing(rest, e, lat);
    std::int64_t b = pairing(rest, DivisorClass{1, -1}, lat);
    std::int64_t c = pairing(rest, DivisorClass{1, 0}, lat);
    if (a < 0 || b < 0 || c < 0) fail(Errc::UnclassifiableGroup, "residual divisor not nef");
    CurveWitness w;
    w.lattice_class = e;
    std::ostringstream os;
    os << "exceptional curve over the fixed point; (-K-E) pairings: E " << a << ", H-E " << b
       << ", H " << c;
    w.note = os.str();
    rep.curve = w;
  } else {
    fail(Errc::NoFixedPoint, "the action has no fixed point to blow up");
  }
  rep.torus_normalizer = (rep.coregularity == 0);
  check_report(rep);
  return rep;
}

ClassificationReport coreg_dp7(const DP7Data& data) {
  const MatGroup& g = data.group;
  if (g.dim() != 3) fail(Errc::InvalidDP7Data, "plane actions need 3x3 generators");
  Vec p1 = canon_pt(data.p1), p2 = canon_pt(data.p2);
  if (p1 == p2) fail(Errc::InvalidDP7Data, "blown-up points coincide");
  for (const CMat& m : g.input_generators()) {
    Vec i1 = apply_pt(m, p1), i2 = apply_pt(m, p2);
    if (!((i1 == p1 && i2 == p2) || (i1 == p2 && i2 == p1)))
      fail(Errc::InvalidDP7Data, "the blown-up pair is not invariant");
  }
  Vec l12 = line_through(p1, p2);
  Vec q;
  for (const auto& c : fixed_candidates(g))
    if (!dot(l12, c).is_zero()) {
      q = c;
      break;
    }
  if (q.empty()) fail(Errc::InvalidDP7Data, "no fixed point away from the line through the pair");

  ClassificationReport rep;
  rep.surface = "dp7";
  rep.group_name = recognize(g.table()).name;
  rep.order = g.order();
  rep.coregularity = 0;
  rep.exceptionality = Exceptionality::NotApplicable;
  rep.rigidity = Rigidity::NotApplicable;

  CycleWitness w;
  w.lattice = SurfaceLattice::blowup_of_p2(2);
  w.note = "pentagon over the blown-up pair and a fixed point off their line";
  w.config.surface = "dp7";
  w.config.components = {
      {"E1", Rational(1), "exceptional curve over the first blown-up point"},
      {"L", Rational(1), "transform of the line through the pair"},
      {"E2", Rational(1), "exceptional curve over the second blown-up point"},
      {"B", Rational(1), "line joining the second blown-up point to the fixed point"},
      {"A", Rational(1), "line joining the first blown-up point to the fixed point"},
  };
  w.classes = {{DivisorClass{0, 1, 0}, 1},
               {DivisorClass{1, -1, -1}, 1},
               {DivisorClass{0, 0, 1}, 1},
               {DivisorClass{1, 0, -1}, 1},
               {DivisorClass{1, -1, 0}, 1}};
  w.config.crossings = {{"e1L", "E1", "L"},
                        {"e2L", "L", "E2"},
                        {"e2B", "E2", "B"},
                        {"q", "B", "A"},
                        {"e1A", "A", "E1"}};
  for (const CMat& m : g.input_generators()) {
    ActionGenerator ag;
    if (apply_pt(m, p1) == p2) {
      ag.components = {{"E1", "E2"}, {"E2", "E1"}, {"A", "B"}, {"B", "A"}};
      ag.crossings = {{"e1L", "e2L"}, {"e2L", "e1L"}, {"e1A", "e2B"}, {"e2B", "e1A"}};
    }
    w.action.push_back(ag);
  }
  verify_cycle(w, TopologyType{TopologyType::Shape::Circle, 5});
  rep.cycle = std::move(w);
  rep.torus_normalizer = true;
  check_report(rep);
  return rep;
}

ClassificationReport coreg_dp6(const DP6Data& data) {
  std::vector<std::uint64_t> torus;
  for (auto f : data.torus_factors) {
    if (f == 0) fail(Errc::InvalidDP6Data, "torus factor must be positive");
    if (f > 1) torus.push_back(f);
  }
  if (torus.size() > 2) fail(Errc::InvalidDP6Data, "torus part must have rank at most two");

  static const char* comp_id[6] = {"E1", "L12", "E2", "L23", "E3", "L13"};
  static const char* cross_id[6] = {"x0", "x1", "x2", "x3", "x4", "x5"};
  static const std::int64_t cls[6][4] = {{0, 1, 0, 0},  {1, -1, -1, 0}, {0, 0, 1, 0},
                                         {1, 0, -1, -1}, {0, 0, 0, 1},  {1, -1, 0, -1}};

  CycleWitness w;
  w.lattice = SurfaceLattice::blowup_of_p2(3);
  w.note = "hexagon of the six lines of square -1";
  w.config.surface = "dp6";
  for (size_t i = 0; i < 6; ++i) {
    w.config.components.push_back({comp_id[i], Rational(1), ""});
    w.classes.push_back({DivisorClass(cls[i], cls[i] + 4), 1});
    w.config.crossings.push_back({cross_id[i], comp_id[i], comp_id[(i + 1) % 6]});
  }
  for (const auto& hg : data.hex_gens) {
    std::uint32_t k = hg.rotate % 6;
    ActionGenerator ag;
    for (std::uint32_t i = 0; i < 6; ++i) {
      std::uint32_t ci = hg.reflect ? (k + 6 - i) % 6 : (i + k) % 6;
      std::uint32_t xi = hg.reflect ? (k + 5 - i) % 6 : (i + k) % 6;
      ag.components[comp_id[i]] = comp_id[ci];
      ag.crossings[cross_id[i]] = cross_id[xi];
    }
    w.action.push_back(ag);
  }
  ComplexAction ca = act(w.config, w.action);
  verify_cycle(w, TopologyType{TopologyType::Shape::Circle, 6});

  std::uint64_t torus_order = 1;
  for (auto f : torus) torus_order *= f;
  std::string torus_name;
  if (torus.size() == 1) torus_name = "C" + std::to_string(torus[0]);
  if (torus.size() == 2) {
    std::uint64_t l = std::lcm(torus[0], torus[1]), d = std::gcd(torus[0], torus[1]);
    torus_name = "C" + std::to_string(l) + (d > 1 ? "xC" + std::to_string(d) : "");
  }
  GroupId hex = recognize(ca.induced);

  ClassificationReport rep;
  rep.surface = "dp6";
  if (torus_name.empty())
    rep.group_name = hex.name;
  else if (hex.family == GroupId::Family::Trivial)
    rep.group_name = torus_name;
  else
    rep.group_name = torus_name + " x " + hex.name;
  rep.order = torus_order * ca.group.n;
  rep.coregularity = 0;
  rep.exceptionality = Exceptionality::NotApplicable;
  rep.rigidity = Rigidity::NotApplicable;
  rep.cycle = std::move(w);
  rep.torus_normalizer = true;
  check_report(rep);
  return rep;
}

ConicBundleVerdict conic_bundle_obstruction(P1Type fiber, P1Type base) {
  return (is_polyhedral(fiber) || is_polyhedral(base)) ? ConicBundleVerdict::PositiveCertified
                                                       : ConicBundleVerdict::PossiblyZero;
}

std::optional<std::vector<std::vector<Cyclotomic>>> invariant_triangle(const MatGroup& g) {
  if (g.dim() != 3) fail(Errc::DimensionMismatch, "plane actions need 3x3 generators");
  if (g.order() == 1)
    return std::vector<Vec>{basis_vec(3, 0), basis_vec(3, 1), basis_vec(3, 2)};

  auto wreps = word_reps(g);
  std::set<Vec, VecLess> pts;
  std::set<Vec, VecLess> planes;  // keyed by covector
  for (size_t i = 0; i < g.order(); ++i) {
    if (i == g.identity_index()) continue;
    for (const auto& lf : eigen_leaves(wreps[i])) {
      if (lf.basis.cols == 1) {
        pts.insert(canon_pt(column(lf.basis, 0)));
      } else if (lf.basis.cols == 2) {
        planes.insert(plane_covector(lf.basis));
        pts.insert(canon_pt(column(lf.basis, 0)));
        pts.insert(canon_pt(column(lf.basis, 1)));
      }
    }
  }

  // Close the eigenplanes under the dual action; pairwise intersections are
  // candidate points too (a vertex whose eigenvalue always collides with a
  // neighbor shows up only this way).
  {
    std::vector<Vec> pl(planes.begin(), planes.end());
    std::vector<CMat> duals;
    for (const CMat& m : g.input_generators()) duals.push_back(m.inverse().transpose());
    for (size_t qi = 0; qi < pl.size(); ++qi) {
      for (const CMat& d : duals) {
        Vec img = apply_pt(d, pl[qi]);
        if (planes.insert(img).second) pl.push_back(img);
      }
      if (pl.size() > 512) fail(Errc::OrderCapExceeded, "eigenplane orbit too large");
    }
    for (size_t x = 0; x < pl.size(); ++x)
      for (size_t y = x + 1; y < pl.size(); ++y) {
        CMat k = CMat::from_rows({pl[x], pl[y]}).kernel();
        if (k.cols == 1) pts.insert(canon_pt(column(k, 0)));
      }
  }

  // Close the candidate points under the group and split into orbits.
  std::vector<Vec> all(pts.begin(), pts.end());
  std::map<Vec, size_t, VecLess> index;
  for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  for (size_t qi = 0; qi < all.size(); ++qi) {
    for (const CMat& m : g.input_generators()) {
      Vec img = apply_pt(m, all[qi]);
      if (index.emplace(img, all.size()).second) all.push_back(img);
    }
    if (all.size() > kTableCap) fail(Errc::OrderCapExceeded, "eigen point orbit too large");
  }
  std::vector<size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find_root = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < all.size(); ++i)
    for (const CMat& m : g.input_generators()) {
      size_t j = index.at(apply_pt(m, all[i]));
      parent[find_root(i)] = find_root(j);
    }
  std::map<size_t, std::vector<size_t>> orbit_map;
  for (size_t i = 0; i < all.size(); ++i) orbit_map[find_root(i)].push_back(i);
  std::vector<std::vector<size_t>> o1, o2, o3;
  for (const auto& [root, mem] : orbit_map) {
    if (mem.size() == 1) o1.push_back(mem);
    if (mem.size() == 2) o2.push_back(mem);
    if (mem.size() == 3) o3.push_back(mem);
  }

  // An invariant vertex set splits into orbits of sizes 3, 2+1 or 1+1+1.
  {
    std::vector<Vec> rows;
    std::vector<size_t> chosen;
    for (const auto& s : o1) {
      rows.push_back(all[s[0]]);
      if (CMat::from_rows(rows).rank() == rows.size())
        chosen.push_back(s[0]);
      else
        rows.pop_back();
      if (chosen.size() == 3)
        return std::vector<Vec>{all[chosen[0]], all[chosen[1]], all[chosen[2]]};
    }
  }
  for (const auto& d : o2)
    for (const auto& s : o1)
      if (independent3(all[d[0]], all[d[1]], all[s[0]]))
        return std::vector<Vec>{all[s[0]], all[d[0]], all[d[1]]};
  for (const auto& t : o3)
    if (independent3(all[t[0]], all[t[1]], all[t[2]]))
      return std::vector<Vec>{all[t[0]], all[t[1]], all[t[2]]};
  return std::nullopt;
}

bool normalizes_torus(const MatGroup& g) {
  ClassificationReport r = coreg_p2(g);
  bool ladder = (r.coregularity == 0);
  bool search = invariant_triangle(g).has_value();
  if (ladder != search)
    fail(Errc::UnclassifiableGroup, "triangle search disagrees with the type ladder");
  return ladder;
}

bool normalizes_torus(const QuadricGroup& g) { return coreg_quadric(g).coregularity == 0; }

std::vector<Table1Row> table1() {
  struct Spec {
    const char* label;
    const char* preset;
    P2Type type;
    int named;  // 1 = must be the named exception, 0 = must not be, -1 = no check
  };
  static const Spec specs[13] = {
      {"A", "diag_abelian", P2Type::A, -1},
      {"B1", "b1_d10", P2Type::B1, -1},
      {"B2", "b2_tetra", P2Type::B2, -1},
      {"A4", "monomial_a4", P2Type::C, 1},
      {"C (not A4)", "c7_c3", P2Type::C, 0},
      {"S4", "monomial_s4", P2Type::D, 1},
      {"D (not S4)", "c3c3_s3", P2Type::D, 0},
      {"E", "typeE36", P2Type::E, -1},
      {"F", "typeF72", P2Type::F, -1},
      {"G", "hessian216", P2Type::G, -1},
      {"H", "icosa_sym2", P2Type::H, -1},
      {"I", "klein168", P2Type::I, -1},
      {"K", "valentiner", P2Type::K, -1},
  };
  std::vector<Table1Row> rows;
  for (const Spec& s : specs) {
    MatGroup g = preset_group(s.preset);
    Table1Row row;
    row.label = s.label;
    row.preset = s.preset;
    row.report = coreg_p2(g);
    if (!row.report.plane_type || *row.report.plane_type != s.type)
      fail(Errc::PresetSelfTestFailed, std::string(s.label) + ": preset has the wrong plane type");
    if (s.named >= 0) {
      GroupId id = recognize(g.table());
      bool named = (s.type == P2Type::C) ? id.family == GroupId::Family::Alt4
                                         : id.family == GroupId::Family::Sym4;
      if (named != (s.named == 1))
        fail(Errc::PresetSelfTestFailed,
             std::string(s.label) + ": preset does not match its exception status");
    }
    row.coreg = std::to_string(row.report.coregularity);
    row.lct = (row.report.coregularity == 2)
                  ? (row.report.lct_annotation.empty() ? ">1" : row.report.lct_annotation)
                  : "<=1";
    switch (row.report.exceptionality) {
      case Exceptionality::Exceptional: row.exceptionality = "yes"; break;
      case Exceptionality::WeaklyExceptionalOnly: row.exceptionality = "weakly"; break;
      default: row.exceptionality = "no"; break;
    }
    switch (row.report.rigidity) {
      case Rigidity::SuperRigid: row.rigidity = "super"; break;
      case Rigidity::RigidNotSuper: row.rigidity = "yes"; break;
      default: row.rigidity = "no"; break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  const std::array<std::string, 5> head{"Group", "G-coregularity", "lct_G", "Exceptionality",
                                        "G-rigidity"};
  std::vector<std::array<std::string, 5>> cells;
  for (const auto& r : rows)
    cells.push_back({r.label, r.coreg, r.lct, r.exceptionality, r.rigidity});
  std::array<size_t, 5> width{};
  for (size_t c = 0; c < 5; ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::array<std::string, 5>& row) {
    for (size_t c = 0; c < 5; ++c) {
      std::string cell = row[c];
      cell.resize(width[c], ' ');
      os << cell << (c + 1 < 5 ? " | " : "");
    }
    os << "\n";
  };
  emit(head);
  for (const auto& row : cells) emit(row);
  return os.str();
}

}  // namespace coreg
