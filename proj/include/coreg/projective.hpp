// Classification of finite group actions on P^1, P^2 and P^1 x P^1:
// fixed loci, invariant lines, the plane conjugacy-type ladder, and pair
// groups on a product of lines.

#pragma once

#include "coreg/group.hpp"

namespace coreg {

// Joint eigenspace leaves of the det-1 scalings of the input generators.
// Every simultaneous eigenvector, hence every fixed point of the projective
// action, lies in exactly one leaf.
std::vector<CharLeaf> point_leaves(const MatGroup& g);
// The same for the dual action, so leaves describe invariant hyperplanes.
std::vector<CharLeaf> line_leaves(const MatGroup& g);

// Pointwise-fixed locus of a projective plane action.
struct FixedLocus {
  std::vector<std::vector<Cyclotomic>> points;  // isolated fixed points
  std::vector<CMat> lines;                      // pointwise-fixed lines (3x2 bases)
  bool whole_space = false;                     // the action is trivial
  bool empty() const { return points.empty() && lines.empty() && !whole_space; }
};
FixedLocus fixed_locus(const MatGroup& g);

// Conjugacy types of finite subgroups of PGL2.
enum class P1Type { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
struct P1Classification {
  P1Type type;
  size_t order;
  std::string name;
};
P1Classification classify_p1(const MatGroup& g);
bool is_polyhedral(P1Type t);

// Conjugacy types of finite subgroups of PGL3, following the ladder:
// abelian with a fixed point (A); a unique fixed point with dihedral (B1)
// or polyhedral (B2) restriction to the invariant line; a diagonalizable
// normal abelian subgroup with quotient S3 (D) or C3 (C); and the six
// fixed-point-free exceptional groups (E, F, G, H, I, K) told apart by
// order and simplicity.
enum class P2Type { A, B1, B2, C, D, E, F, G, H, I, K };
std::string p2_type_name(P2Type t);

struct P2Classification {
  P2Type type;
  std::string group_name;
  size_t order = 0;
  // Populated where meaningful for the type:
  std::vector<Cyclotomic> fixed_point;         // A, B1, B2
  std::vector<Cyclotomic> invariant_line;      // B1, B2 (covector)
  std::string restriction_name;                // B1, B2
  std::vector<std::uint32_t> torus_kernel;     // C, D (element indices)
};
P2Classification classify_p2(const MatGroup& g);

// An automorphism of P^1 x P^1: factor maps plus an optional factor swap,
// acting by (x, y) -> (g1 y, g2 x) when swapped.  Scalings of g1 and g2 are
// independent gauge; canonical elements scale each factor separately.
struct QuadricElement {
  CMat g1, g2;
  bool swap = false;

  QuadricElement compose(const QuadricElement& rhs) const;
  QuadricElement canonical() const;
  bool operator==(const QuadricElement& o) const;
  std::uint64_t hash() const;
};

// A finite group of such automorphisms, with classification data for the
// two rulings.  Representatives keep root-of-unity determinants, so
// eigenvector machinery applies to them.
struct QuadricGroup {
  std::vector<QuadricElement> elems;  // canonical, identity first
  std::vector<QuadricElement> reps;   // uncanonicalized representatives
  std::vector<std::uint32_t> gen_idx;
  GroupTable table;
  bool has_swap = false;
  std::vector<std::uint32_t> g0;          // indices of the swap-free subgroup
  MatGroup a1, a2;                        // ruling projections of g0
  std::vector<CMat> a1_reps, a2_reps;     // aligned with g0; nice determinants

  size_t order() const { return elems.size(); }
};

// Closure of pair generators.  Generator factor determinants must be roots
// of unity; fails InvalidQuadricData otherwise.
QuadricGroup quadric_closure(const std::vector<QuadricElement>& gens,
                             std::uint32_t cap = kOrderCap);

// Goursat invariants of the swap-free subgroup inside A1 x A2.
struct GoursatData {
  size_t g0_order, a1_order, a2_order, k1_order, k2_order, quotient_order;
};
GoursatData goursat(const QuadricGroup& q);

}  // namespace coreg
