#include "coreg/projective.hpp"

#include <algorithm>
#include <unordered_map>

namespace coreg {

namespace {

std::vector<CMat> det_one_generators(const MatGroup& g) {
  std::vector<CMat> ops;
  ops.reserve(g.input_generators().size());
  for (const CMat& m : g.input_generators()) ops.push_back(det_one_scaled(m));
  return ops;
}

}  // namespace

std::vector<CharLeaf> point_leaves(const MatGroup& g) {
  if (g.order() > 1 && g.input_generators().empty())
    fail(Errc::InvalidConfiguration, "group carries no generators");
  return joint_eigenspaces(det_one_generators(g), g.dim());
}

std::vector<CharLeaf> line_leaves(const MatGroup& g) {
  if (g.order() > 1 && g.input_generators().empty())
    fail(Errc::InvalidConfiguration, "group carries no generators");
  std::vector<CMat> ops;
  for (const CMat& m : det_one_generators(g)) ops.push_back(m.inverse().transpose());
  return joint_eigenspaces(ops, g.dim());
}

FixedLocus fixed_locus(const MatGroup& g) {
  FixedLocus out;
  for (const CharLeaf& leaf : point_leaves(g)) {
    size_t d = leaf.basis.cols;
    if (d == g.dim()) {
      out.whole_space = true;
    } else if (d == 1) {
      std::vector<Cyclotomic> v;
      for (size_t i = 0; i < leaf.basis.rows; ++i) v.push_back(leaf.basis.at(i, 0));
      out.points.push_back(projective_canonical_vec(v));
    } else if (d == 2) {
      out.lines.push_back(leaf.basis);
    }
  }
  return out;
}

bool is_polyhedral(P1Type t) {
  return t == P1Type::Tetrahedral || t == P1Type::Octahedral || t == P1Type::Icosahedral;
}

P1Classification classify_p1(const MatGroup& g) {
  if (g.dim() != 2 || !g.projective())
    fail(Errc::InvalidConfiguration, "classify_p1 expects a projective group on P^1");
  GroupId id = recognize(g.table());
  P1Classification out;
  out.order = id.order;
  out.name = id.name;
  switch (id.family) {
    case GroupId::Family::Trivial:
    case GroupId::Family::Cyclic:
      out.type = P1Type::Cyclic;
      return out;
    case GroupId::Family::Sym3:
    case GroupId::Family::Dihedral:
      out.type = P1Type::Dihedral;
      return out;
    case GroupId::Family::AbelianOther:
      // The Klein four group sits in PGL2 as the dihedral group of order 4;
      // no other non-cyclic abelian group embeds at all.
      if (id.order == 4) {
        out.type = P1Type::Dihedral;
        return out;
      }
      break;
    case GroupId::Family::Alt4:
      out.type = P1Type::Tetrahedral;
      return out;
    case GroupId::Family::Sym4:
      out.type = P1Type::Octahedral;
      return out;
    case GroupId::Family::Alt5:
      out.type = P1Type::Icosahedral;
      return out;
    case GroupId::Family::Other:
      break;
  }
  fail(Errc::UnclassifiableGroup, id.name + " is not a finite subgroup of PGL2");
}

std::string p2_type_name(P2Type t) {
  switch (t) {
    case P2Type::A: return "A";
    case P2Type::B1: return "B1";
    case P2Type::B2: return "B2";
    case P2Type::C: return "C";
    case P2Type::D: return "D";
    case P2Type::E: return "E";
    case P2Type::F: return "F";
    case P2Type::G: return "G";
    case P2Type::H: return "H";
    case P2Type::I: return "I";
    case P2Type::K: return "K";
  }
  fail(Errc::InvalidConfiguration, "unknown plane type");
}

namespace {

// Type B: a unique fixed point plus a unique invariant line away from it.
// The group acts on the line through a dihedral (B1) or polyhedral (B2)
// quotient; a cyclic restriction would force the group abelian.
P2Classification classify_type_b(const MatGroup& g, P2Classification out,
                                 const FixedLocus& fl) {
  if (fl.points.size() != 1 || !fl.lines.empty() || fl.whole_space)
    fail(Errc::UnclassifiableGroup,
         "nonabelian plane group with an unexpected fixed locus");
  out.fixed_point = fl.points[0];

  std::vector<CharLeaf> duals = line_leaves(g);
  if (duals.size() != 1 || duals[0].basis.cols != 1)
    fail(Errc::UnclassifiableGroup,
         "nonabelian plane group without a unique invariant line");
  std::vector<Cyclotomic> ell;
  for (size_t i = 0; i < 3; ++i) ell.push_back(duals[0].basis.at(i, 0));
  out.invariant_line = projective_canonical_vec(ell);

  CMat lrow(1, 3);
  for (size_t i = 0; i < 3; ++i) lrow.at(0, i) = out.invariant_line[i];
  CMat basis = lrow.kernel();
  std::vector<CMat> restr;
  for (const CMat& m : det_one_generators(g)) restr.push_back(restrict_operator(m, basis));
  MatGroup on_line = MatGroup::closure(restr, true);
  P1Classification rc = classify_p1(on_line);
  out.restriction_name = rc.name;
  if (rc.type == P1Type::Dihedral) {
    out.type = P2Type::B1;
  } else if (is_polyhedral(rc.type)) {
    out.type = P2Type::B2;
  } else {
    fail(Errc::UnclassifiableGroup, "line restriction of a one-fixed-point group is cyclic");
  }
  return out;
}

// Scan for a diagonalizable normal abelian subgroup whose quotient is S3
// (type D) or C3 (type C).  The S3 shape is the stronger structure, so it
// is looked for first.
bool torus_extension_type(const MatGroup& g, P2Classification& out) {
  const GroupTable& t = g.table();
  std::vector<std::vector<std::uint32_t>> normals = t.normal_subgroups();
  for (int pass = 0; pass < 2; ++pass) {
    size_t quot = pass == 0 ? 6 : 3;
    for (const std::vector<std::uint32_t>& sub : normals) {
      if (sub.size() * quot != t.n) continue;
      if (!t.subgroup_table(sub).is_abelian()) continue;
      if (!projectively_diagonalizable(g, sub)) continue;
      GroupTable q = t.quotient(sub);
      if (quot == 6 && q.is_abelian()) continue;
      out.type = quot == 6 ? P2Type::D : P2Type::C;
      out.torus_kernel = sub;
      return true;
    }
  }
  return false;
}

}  // namespace

P2Classification classify_p2(const MatGroup& g) {
  if (g.dim() != 3 || !g.projective())
    fail(Errc::InvalidConfiguration, "classify_p2 expects a projective group on P^2");
  const GroupTable& t = g.table();
  P2Classification out;
  out.order = g.order();
  out.group_name = recognize(t).name;

  FixedLocus fl = fixed_locus(g);
  if (!fl.empty()) {
    if (t.is_abelian()) {
      out.type = P2Type::A;
      if (!fl.points.empty()) {
        out.fixed_point = fl.points[0];
      } else {
        std::vector<Cyclotomic> v(3);
        if (fl.whole_space) {
          v[0] = Cyclotomic(Rational(1));
          v[1] = Cyclotomic();
          v[2] = Cyclotomic();
        } else {
          for (size_t i = 0; i < 3; ++i) v[i] = fl.lines[0].at(i, 0);
        }
        out.fixed_point = projective_canonical_vec(v);
      }
      return out;
    }
    return classify_type_b(g, out, fl);
  }

  if (torus_extension_type(g, out)) return out;

  switch (g.order()) {
    case 36: out.type = P2Type::E; return out;
    case 72: out.type = P2Type::F; return out;
    case 216: out.type = P2Type::G; return out;
    case 60:
      if (t.is_simple()) {
        out.type = P2Type::H;
        return out;
      }
      break;
    case 168:
      if (t.is_simple()) {
        out.type = P2Type::I;
        return out;
      }
      break;
    case 360:
      if (t.is_simple()) {
        out.type = P2Type::K;
        return out;
      }
      break;
    default:
      break;
  }
  fail(Errc::UnclassifiableGroup,
       "fixed-point-free plane group of order " + std::to_string(g.order()) +
           " matches no known type");
}

QuadricElement QuadricElement::compose(const QuadricElement& rhs) const {
  QuadricElement r;
  r.g1 = g1 * (swap ? rhs.g2 : rhs.g1);
  r.g2 = g2 * (swap ? rhs.g1 : rhs.g2);
  r.swap = swap != rhs.swap;
  return r;
}

QuadricElement QuadricElement::canonical() const {
  return QuadricElement{projective_canonical(g1), projective_canonical(g2), swap};
}

bool QuadricElement::operator==(const QuadricElement& o) const {
  return swap == o.swap && g1 == o.g1 && g2 == o.g2;
}

std::uint64_t QuadricElement::hash() const {
  std::uint64_t h = g1.hash();
  h ^= g2.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= (swap ? 0x1ull : 0x2ull) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

namespace {

// Projection of the swap-free part onto one ruling, with representatives
// whose determinants stay roots of unity.
void fill_projection(const QuadricGroup& q, int which, MatGroup& proj,
                     std::vector<CMat>& proj_reps) {
  std::vector<CMat> elems;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
  for (std::uint32_t i : q.g0) {
    const CMat& c = which == 1 ? q.elems[i].g1 : q.elems[i].g2;
    bool dup = false;
    for (std::uint32_t j : seen[c.hash()])
      if (elems[j] == c) {
        dup = true;
        break;
      }
    if (dup) continue;
    seen[c.hash()].push_back(static_cast<std::uint32_t>(elems.size()));
    elems.push_back(c);
  }
  proj = MatGroup::from_elements(elems, true);
  proj_reps.assign(proj.order(), CMat());
  std::vector<bool> have(proj.order(), false);
  for (std::uint32_t i : q.g0) {
    const CMat& c = which == 1 ? q.elems[i].g1 : q.elems[i].g2;
    std::uint32_t at = proj.find(c).value();
    if (!have[at]) {
      have[at] = true;
      proj_reps[at] = which == 1 ? q.reps[i].g1 : q.reps[i].g2;
    }
  }
}

}  // namespace

QuadricGroup quadric_closure(const std::vector<QuadricElement>& gens, std::uint32_t cap) {
  if (gens.empty()) fail(Errc::InvalidQuadricData, "closure needs at least one generator");
  std::uint32_t cond = 1;
  for (const QuadricElement& e : gens) {
    if (e.g1.rows != 2 || e.g1.cols != 2 || e.g2.rows != 2 || e.g2.cols != 2)
      fail(Errc::InvalidQuadricData, "ruling factors must be 2x2");
    if (e.g1.det().is_zero() || e.g2.det().is_zero())
      fail(Errc::InvalidQuadricData, "ruling factor is singular");
    if (!e.g1.det().is_root_of_unity() || !e.g2.det().is_root_of_unity())
      fail(Errc::InvalidQuadricData, "ruling factor determinants must be roots of unity");
    cond = lcm_u32_checked(cond, e.g1.common_conductor());
    cond = lcm_u32_checked(cond, e.g2.common_conductor());
  }

  QuadricGroup q;
  std::vector<QuadricElement> use;
  for (const QuadricElement& e : gens)
    use.push_back(QuadricElement{e.g1.embedded(cond), e.g2.embedded(cond), e.swap});

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
  auto find_elem = [&](const QuadricElement& c) -> std::optional<std::uint32_t> {
    auto it = index.find(c.hash());
    if (it == index.end()) return std::nullopt;
    for (std::uint32_t j : it->second)
      if (q.elems[j] == c) return j;
    return std::nullopt;
  };

  CMat id2 = CMat::identity(2).embedded(cond);
  QuadricElement ident{id2, id2, false};
  q.reps.push_back(ident);
  q.elems.push_back(ident.canonical());
  index[q.elems[0].hash()].push_back(0);

  std::vector<std::uint32_t> parent{0}, via_gen{0};
  std::vector<std::vector<std::uint32_t>> rperm(use.size());

  for (std::uint32_t at = 0; at < q.elems.size(); ++at) {
    for (size_t k = 0; k < use.size(); ++k) {
      QuadricElement rep = q.reps[at].compose(use[k]);
      QuadricElement canon = rep.canonical();
      auto existing = find_elem(canon);
      std::uint32_t idx;
      if (existing) {
        idx = *existing;
      } else {
        idx = static_cast<std::uint32_t>(q.elems.size());
        if (idx >= cap)
          fail(Errc::OrderCapExceeded, "quadric closure exceeds " + std::to_string(cap));
        q.reps.push_back(std::move(rep));
        q.elems.push_back(std::move(canon));
        index[q.elems.back().hash()].push_back(idx);
        parent.push_back(at);
        via_gen.push_back(static_cast<std::uint32_t>(k));
      }
      rperm[k].push_back(idx);
    }
  }

  for (size_t k = 0; k < use.size(); ++k) q.gen_idx.push_back(rperm[k][0]);

  size_t n = q.elems.size();
  if (n > kTableCap)
    fail(Errc::OrderCapExceeded,
         "quadric group of order " + std::to_string(n) + " exceeds the table limit");
  std::vector<std::vector<std::uint32_t>> r(n);
  r[0].resize(n);
  for (std::uint32_t x = 0; x < n; ++x) r[0][x] = x;
  for (std::uint32_t j = 1; j < n; ++j) {
    const std::vector<std::uint32_t>& rp = r[parent[j]];
    const std::vector<std::uint32_t>& rg = rperm[via_gen[j]];
    r[j].resize(n);
    for (std::uint32_t x = 0; x < n; ++x) r[j][x] = rg[rp[x]];
  }
  std::vector<std::uint32_t> mul(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mul[i * n + j] = r[j][i];
  q.table = GroupTable::from_mul(n, std::move(mul));

  for (std::uint32_t i = 0; i < n; ++i) {
    if (q.elems[i].swap)
      q.has_swap = true;
    else
      q.g0.push_back(i);
  }
  if (q.has_swap && q.g0.size() * 2 != n)
    fail(Errc::InvalidQuadricData, "swap-free part is not index two");

  fill_projection(q, 1, q.a1, q.a1_reps);
  fill_projection(q, 2, q.a2, q.a2_reps);
  return q;
}

GoursatData goursat(const QuadricGroup& q) {
  GoursatData d;
  d.g0_order = q.g0.size();
  d.a1_order = q.a1.order();
  d.a2_order = q.a2.order();
  d.k1_order = 0;
  d.k2_order = 0;
  for (std::uint32_t i : q.g0) {
    if (q.elems[i].g2.is_identity()) ++d.k1_order;
    if (q.elems[i].g1.is_identity()) ++d.k2_order;
  }
  if (d.k1_order == 0 || d.k2_order == 0 || d.a1_order * d.k2_order != d.g0_order ||
      d.a2_order * d.k1_order != d.g0_order ||
      d.a1_order * d.k2_order != d.a2_order * d.k1_order)
    fail(Errc::InvalidQuadricData, "projection counts violate Goursat");
  d.quotient_order = d.a1_order / d.k1_order;
  return d;
}

}  // namespace coreg
