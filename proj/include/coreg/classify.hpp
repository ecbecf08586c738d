// Coregularity of finite group actions on the surfaces in scope, with
// explicit certificates: an invariant anticanonical cycle of curves when the
// coregularity is 0, an invariant curve of low degree when it is 1.  Also
// the thirteen-row summary table for the plane and the torus-normalizer
// test.

#pragma once

#include <optional>

#include "coreg/dualcomplex.hpp"
#include "coreg/picard.hpp"
#include "coreg/projective.hpp"

namespace coreg {

enum class Exceptionality { Exceptional, WeaklyExceptionalOnly, NotWeaklyExceptional, NotApplicable };
enum class Rigidity { SuperRigid, RigidNotSuper, NotRigid, NotApplicable };
std::string exceptionality_name(Exceptionality e);
std::string rigidity_name(Rigidity r);

// Invariant anticanonical cycle: the curve configuration, how each input
// generator permutes it, and the lattice classes of its components (aligned
// with config.components).  Emitted reports have already verified that the
// classes sum to -K, that the dual complex is a circle or segment, and that
// the induced action passes the coregularity-0 obstruction.
struct CycleWitness {
  CurveConfiguration config;
  std::vector<ActionGenerator> action;
  SurfaceLattice lattice;
  std::vector<std::pair<DivisorClass, std::int64_t>> classes;
  TopologyType topology;
  std::string note;
};

// Invariant curve certifying coregularity 1: a semi-invariant form in the
// monomial basis (when polynomial) and/or a lattice class.
struct CurveWitness {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> monomials;  // exponents per term
  std::vector<Cyclotomic> form;                       // aligned coefficients
  DivisorClass lattice_class;                         // empty when unused
  std::string note;
};

struct ClassificationReport {
  std::string surface;  // "p2", "quadric", "f1", "dp7", "dp6"
  std::string group_name;
  size_t order = 0;
  std::optional<P2Type> plane_type;
  int coregularity = 0;
  bool lct_gt_1 = false;
  std::string lct_annotation;  // exact value where one is known ("4/3", "2")
  Exceptionality exceptionality = Exceptionality::NotApplicable;
  Rigidity rigidity = Rigidity::NotApplicable;
  bool torus_normalizer = false;
  std::optional<CycleWitness> cycle;  // present when coregularity = 0
  std::optional<CurveWitness> curve;  // present when coregularity = 1
};

// Plane actions: type {A, B1, C, D} -> 0, {B2, E, H} -> 1, {F, G, I, K} -> 2,
// with the exceptionality and rigidity columns of the summary table.
ClassificationReport coreg_p2(const MatGroup& g);

// Product of two lines: both ruling images cyclic/dihedral -> 0; exactly one
// -> 1; both polyhedral -> 1 with an irreducible invariant (1,1)-curve, else 2.
ClassificationReport coreg_quadric(const QuadricGroup& g);

// Plane group fixing the blown-up point (the classification's fixed point,
// or `point` when given).  Type A/B1 -> 0, B2 -> 1, otherwise NoFixedPoint.
ClassificationReport coreg_f1(const MatGroup& g,
                              const std::vector<Cyclotomic>* point = nullptr);

// Blowup of the plane in an invariant pair of points.
struct DP7Data {
  MatGroup group;
  std::vector<Cyclotomic> p1, p2;  // the blown-up pair
};
ClassificationReport coreg_dp7(const DP7Data& data);

// Blowup in three points, described combinatorially: generators act on the
// hexagon of (-1)-curves through rotations and reflections, and the part
// acting trivially is an abelian group given by its invariant factors.
struct DP6Data {
  struct HexGen {
    std::uint32_t rotate = 0;  // positions, mod 6
    bool reflect = false;      // compose with i -> -i
  };
  std::vector<HexGen> hex_gens;
  std::vector<std::uint32_t> torus_factors;  // at most two, each >= 2
};
ClassificationReport coreg_dp6(const DP6Data& data);

enum class ConicBundleVerdict { PossiblyZero, PositiveCertified };
// Necessary condition on a conic bundle: a polyhedral fiber or base action
// certifies positive coregularity; the converse direction is not decided.
ConicBundleVerdict conic_bundle_obstruction(P1Type fiber, P1Type base);

// Three non-collinear points permuted by the group, found by an eigen-point
// orbit search over all group elements; nullopt when no such triangle exists.
std::optional<std::vector<std::vector<Cyclotomic>>> invariant_triangle(const MatGroup& g);

// Whether the group normalizes a two-torus in the ambient automorphism
// group; equals coregularity 0.  The plane version cross-checks the type
// ladder against the independent invariant_triangle search.
bool normalizes_torus(const MatGroup& g);
bool normalizes_torus(const QuadricGroup& g);

struct Table1Row {
  std::string label;   // row name: A, B1, B2, A4, C (not A4), ...
  std::string preset;  // generator source
  ClassificationReport report;
  std::string coreg, lct, exceptionality, rigidity;  // printed columns
};

// The thirteen plane rows, each computed from explicit generator matrices.
std::vector<Table1Row> table1();
std::string table1_text(const std::vector<Table1Row>& rows);

}  // namespace coreg
