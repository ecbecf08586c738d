// Crossing configurations of boundary curves, their dual complexes, and group
// actions on them.  A configuration lists components with rational
// coefficients in [0,1] and the points where two components cross; the dual
// complex keeps the coefficient-1 part as a multigraph.  For a boundary that
// can appear on a surface the complex is empty, a point, two points, a
// segment or a circle; everything else is rejected.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "coreg/group.hpp"
#include "coreg/rational.hpp"

namespace coreg {

struct CurveComponent {
  std::string id;
  Rational coeff;     // in [0,1]
  std::string label;  // free-form, ignored by all topology logic
};

struct Crossing {
  std::string at;  // point id, unique across the configuration
  std::string a, b;
};

struct CurveConfiguration {
  std::vector<CurveComponent> components;
  std::vector<Crossing> crossings;
  std::string surface;  // informational tag

  const CurveComponent& component(const std::string& id) const;
  const Crossing& crossing(const std::string& at) const;
};

// Throws InvalidConfiguration on out-of-range coefficients, dangling
// references, self-crossings, or duplicate ids.
void validate(const CurveConfiguration& config);

struct DualComplex {
  std::vector<std::string> vertices;  // coefficient-1 component ids
  struct Edge {
    size_t u, v;     // indices into vertices
    std::string at;  // the crossing realizing the edge
  };
  std::vector<Edge> edges;
  bool has_sub_one = false;  // some component has coefficient < 1

  // -1 empty, 0 only vertices, 1 at least one edge.
  int dimension() const { return vertices.empty() ? -1 : (edges.empty() ? 0 : 1); }
};

DualComplex build(const CurveConfiguration& config);

struct TopologyType {
  enum class Shape { Empty, Point, TwoPoints, Segment, Circle };
  Shape shape = Shape::Empty;
  size_t length = 0;  // edge count, set for Segment and Circle

  friend bool operator==(const TopologyType& a, const TopologyType& b) {
    return a.shape == b.shape && a.length == b.length;
  }
  std::string str() const;
};

// Classifies the complex as one of the five admissible shapes.  Throws
// NotLogCYShape when the graph has a branch vertex or too many connected
// pieces, and when a circle coexists with a sub-1 component (that combination
// cannot bound a log Calabi-Yau surface).
TopologyType topology_type(const DualComplex& dc);

// Replaces a crossing of two coefficient-1 components by an exceptional
// coefficient-1 component meeting each of them once.  Topology is preserved
// (edge subdivision).  Throws NotACorner when either coefficient is < 1.
CurveConfiguration corner_blowup(const CurveConfiguration& config, const std::string& at);

// One group generator: where components and crossings go.  Ids missing from a
// map stay fixed.
struct ActionGenerator {
  std::map<std::string, std::string> components;
  std::map<std::string, std::string> crossings;
};

struct ComplexAction {
  DualComplex complex;
  GroupTable group;                    // closure of the generators
  std::vector<std::uint32_t> kernel;   // sorted indices of N in `group`
  GroupTable n_table;                  // N: acts trivially on vertices and edges
  GroupTable induced;                  // G_D: the action on the complex
};

// Closes the generators to a permutation group, verifies that each one
// preserves coefficients and incidence (NotAnAction otherwise), and splits
// the group into the complex-trivial part N and the induced part G_D with
// |G| = |N| * |G_D|.
ComplexAction act(const CurveConfiguration& config, const std::vector<ActionGenerator>& gens);

struct Coreg0Check {
  bool pass = false;
  std::string reason;  // which condition broke, empty on pass
};

// Necessary condition for coregularity 0 on a 1-dimensional complex: N must
// be abelian of rank at most 2 and G_D trivial, cyclic or dihedral.  Throws
// WrongDimension unless the complex has dimension 1.
Coreg0Check coreg0_obstruction(const ComplexAction& action);

}  // namespace coreg
