#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coreg/dualcomplex.hpp"
#include "coreg/errors.hpp"

using namespace coreg;

namespace {

Rational r1() { return Rational(1); }
Rational half() { return Rational(BigInt(1), BigInt(2)); }

CurveConfiguration triangle() {
  CurveConfiguration c;
  c.surface = "p2";
  c.components = {{"L1", r1(), ""}, {"L2", r1(), ""}, {"L3", r1(), ""}};
  c.crossings = {{"p12", "L1", "L2"}, {"p23", "L2", "L3"}, {"p13", "L1", "L3"}};
  return c;
}

TopologyType circle(size_t n) { return {TopologyType::Shape::Circle, n}; }
TopologyType segment(size_t n) { return {TopologyType::Shape::Segment, n}; }

}  // namespace

TEST_CASE("validation rejects malformed configurations") {
  CurveConfiguration c = triangle();
  CHECK_NOTHROW(validate(c));

  CurveConfiguration bad = c;
  bad.components[0].coeff = Rational(BigInt(3), BigInt(2));
  CHECK_THROWS_AS(validate(bad), Error);

  bad = c;
  bad.components[0].coeff = Rational(-1);
  CHECK_THROWS_AS(validate(bad), Error);

  bad = c;
  bad.crossings[0].b = "L9";
  CHECK_THROWS_AS(validate(bad), Error);

  bad = c;
  bad.crossings[0].b = "L1";  // self-crossing
  CHECK_THROWS_AS(validate(bad), Error);

  bad = c;
  bad.crossings[1].at = "p12";  // reused point
  CHECK_THROWS_AS(validate(bad), Error);

  bad = c;
  bad.components.push_back({"L1", r1(), ""});
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("building the complex") {
  DualComplex dc = build(triangle());
  CHECK(dc.vertices.size() == 3);
  CHECK(dc.edges.size() == 3);
  CHECK(dc.dimension() == 1);
  CHECK_FALSE(dc.has_sub_one);
  CHECK(topology_type(dc) == circle(3));

  CurveConfiguration single;
  single.components = {{"C", r1(), "smooth cubic"}};
  DualComplex one = build(single);
  CHECK(one.dimension() == 0);
  CHECK(topology_type(one).shape == TopologyType::Shape::Point);

  // A sub-1 component crossing two coefficient-1 curves contributes nothing.
  CurveConfiguration mixed;
  mixed.components = {{"A", r1(), ""}, {"B", r1(), ""}, {"M", half(), ""}};
  mixed.crossings = {{"q1", "A", "M"}, {"q2", "B", "M"}};
  DualComplex dm = build(mixed);
  CHECK(dm.vertices.size() == 2);
  CHECK(dm.edges.empty());
  CHECK(dm.has_sub_one);
  CHECK(topology_type(dm).shape == TopologyType::Shape::TwoPoints);

  CHECK(topology_type(build(CurveConfiguration{})).shape == TopologyType::Shape::Empty);
}

TEST_CASE("admissible and inadmissible shapes") {
  // Two curves crossing twice: parallel edges make the smallest circle.
  CurveConfiguration two;
  two.components = {{"A", r1(), ""}, {"B", r1(), ""}};
  two.crossings = {{"p", "A", "B"}, {"q", "A", "B"}};
  CHECK(topology_type(build(two)) == circle(2));

  // Chain of three: segment with two edges.
  CurveConfiguration chain;
  chain.components = {{"A", r1(), ""}, {"B", r1(), ""}, {"C", r1(), ""}};
  chain.crossings = {{"p", "A", "B"}, {"q", "B", "C"}};
  CHECK(topology_type(build(chain)) == segment(2));

  // Branch vertex: star of three lines through distinct points plus a hub.
  CurveConfiguration star;
  star.components = {{"H", r1(), ""}, {"A", r1(), ""}, {"B", r1(), ""}, {"C", r1(), ""}};
  star.crossings = {{"p", "H", "A"}, {"q", "H", "B"}, {"r", "H", "C"}};
  CHECK_THROWS_AS(topology_type(build(star)), Error);

  // Three isolated vertices.
  CurveConfiguration iso;
  iso.components = {{"A", r1(), ""}, {"B", r1(), ""}, {"C", r1(), ""}};
  CHECK_THROWS_AS(topology_type(build(iso)), Error);

  // Disconnected with edges: segment plus isolated vertex.
  CurveConfiguration mixed;
  mixed.components = {{"A", r1(), ""}, {"B", r1(), ""}, {"C", r1(), ""}};
  mixed.crossings = {{"p", "A", "B"}};
  CHECK_THROWS_AS(topology_type(build(mixed)), Error);

  // Circle next to a sub-1 component is not log Calabi-Yau.
  CurveConfiguration haunted = triangle();
  haunted.components.push_back({"M", half(), ""});
  CHECK_THROWS_AS(topology_type(build(haunted)), Error);
}

TEST_CASE("corner blowup subdivides an edge") {
  CurveConfiguration c = triangle();
  CurveConfiguration once = corner_blowup(c, "p12");
  CHECK(once.components.size() == 4);
  CHECK(once.crossings.size() == 4);
  CHECK(topology_type(build(once)) == circle(4));

  // Chain: blowing up its only crossing keeps a segment.
  CurveConfiguration chain;
  chain.components = {{"A", r1(), ""}, {"B", r1(), ""}};
  chain.crossings = {{"p", "A", "B"}};
  CHECK(topology_type(build(corner_blowup(chain, "p"))) == segment(2));

  // A crossing with a sub-1 side is not a corner.
  CurveConfiguration mixed;
  mixed.components = {{"A", r1(), ""}, {"M", half(), ""}};
  mixed.crossings = {{"p", "A", "M"}};
  CHECK_THROWS_AS(corner_blowup(mixed, "p"), Error);
  CHECK_THROWS_AS(corner_blowup(triangle(), "nowhere"), Error);
}

TEST_CASE("repeated blowups grow the circle") {
  CurveConfiguration c = triangle();
  for (size_t n = 0; n < 6; ++n) {
    CHECK(topology_type(build(c)) == circle(3 + n));
    c = corner_blowup(c, c.crossings[n % c.crossings.size()].at);
  }
}

TEST_CASE("group actions on the triangle") {
  CurveConfiguration c = triangle();
  // Full S3: a rotation and a swap.
  ActionGenerator rot{{{"L1", "L2"}, {"L2", "L3"}, {"L3", "L1"}},
                      {{"p12", "p23"}, {"p23", "p13"}, {"p13", "p12"}}};
  ActionGenerator swp{{{"L1", "L2"}, {"L2", "L1"}},
                      {{"p13", "p23"}, {"p23", "p13"}}};
  ComplexAction full = act(c, {rot, swp});
  CHECK(full.group.n == 6);
  CHECK(full.kernel.size() == 1);
  CHECK(full.induced.n == 6);
  CHECK(is_dihedral(full.induced));
  Coreg0Check chk = coreg0_obstruction(full);
  CHECK(chk.pass);

  ComplexAction trivial = act(c, {ActionGenerator{}});
  CHECK(trivial.group.n == 1);
  CHECK(coreg0_obstruction(trivial).pass);

  // Broken incidence: rotate components but not crossings.
  ActionGenerator broken{{{"L1", "L2"}, {"L2", "L3"}, {"L3", "L1"}}, {}};
  CHECK_THROWS_AS(act(c, {broken}), Error);

  // Coefficient change.
  CurveConfiguration mixed = triangle();
  mixed.components[1].coeff = half();
  ActionGenerator cswap{{{"L1", "L2"}, {"L2", "L1"}}, {{"p13", "p23"}, {"p23", "p13"}}};
  CHECK_THROWS_AS(act(mixed, {cswap}), Error);

  // Non-bijective map.
  ActionGenerator squash{{{"L1", "L2"}}, {}};
  CHECK_THROWS_AS(act(c, {squash}), Error);
}

TEST_CASE("kernel splits off the induced action") {
  // Two vertices joined by two parallel edges; a swap of the two crossings
  // fixes both vertices yet acts on the circle, so it must land in G_D.
  CurveConfiguration two;
  two.components = {{"A", r1(), ""}, {"B", r1(), ""}};
  two.crossings = {{"p", "A", "B"}, {"q", "A", "B"}};
  ActionGenerator flip{{}, {{"p", "q"}, {"q", "p"}}};
  ComplexAction a = act(two, {flip});
  CHECK(a.group.n == 2);
  CHECK(a.kernel.size() == 1);
  CHECK(a.induced.n == 2);

  // A sub-1 satellite can move without showing up in G_D.
  CurveConfiguration sat;
  sat.components = {{"A", r1(), ""}, {"B", r1(), ""}, {"M", half(), ""}, {"N", half(), ""}};
  sat.crossings = {{"p", "A", "B"}, {"q", "A", "B"}, {"m", "A", "M"}, {"n", "A", "N"}};
  ActionGenerator ghost{{{"M", "N"}, {"N", "M"}}, {{"m", "n"}, {"n", "m"}}};
  ComplexAction g = act(sat, {ghost});
  CHECK(g.group.n == 2);
  CHECK(g.kernel.size() == 2);
  CHECK(g.induced.n == 1);
  CHECK(g.n_table.is_abelian());
}

TEST_CASE("obstruction verdicts") {
  // C2^3 acting trivially on a segment: rank 3 kills the pass.
  CurveConfiguration c;
  c.components = {{"A", r1(), ""}, {"B", r1(), ""}};
  c.crossings = {{"p", "A", "B"}};
  for (int i = 0; i < 3; ++i) {
    std::string u = "U" + std::to_string(i), v = "V" + std::to_string(i);
    c.components.push_back({u, half(), ""});
    c.components.push_back({v, half(), ""});
  }
  std::vector<ActionGenerator> gens;
  for (int i = 0; i < 3; ++i) {
    std::string u = "U" + std::to_string(i), v = "V" + std::to_string(i);
    gens.push_back({{{u, v}, {v, u}}, {}});
  }
  ComplexAction a = act(c, gens);
  CHECK(a.group.n == 8);
  CHECK(a.kernel.size() == 8);
  Coreg0Check chk = coreg0_obstruction(a);
  CHECK_FALSE(chk.pass);
  CHECK(chk.reason.find("rank") != std::string::npos);

  // Rank 2 passes.
  ComplexAction b = act(c, {gens[0], gens[1]});
  CHECK(coreg0_obstruction(b).pass);

  // Wrong dimension: a point complex.
  CurveConfiguration pt;
  pt.components = {{"C", r1(), ""}};
  ComplexAction p = act(pt, {ActionGenerator{}});
  CHECK_THROWS_AS(coreg0_obstruction(p), Error);
}

TEST_CASE("random blowup sequences preserve topology") {
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 40; ++trial) {
    CurveConfiguration c;
    bool cycle = trial % 2 == 0;
    size_t base = 2 + trial % 4;
    for (size_t i = 0; i < base; ++i)
      c.components.push_back({"C" + std::to_string(i), r1(), ""});
    for (size_t i = 0; i + 1 < base; ++i)
      c.crossings.push_back({"x" + std::to_string(i), "C" + std::to_string(i),
                             "C" + std::to_string(i + 1)});
    if (cycle && base > 2)
      c.crossings.push_back({"loop", "C" + std::to_string(base - 1), "C0"});
    else if (cycle)
      c.crossings.push_back({"loop", "C1", "C0"});
    TopologyType before = topology_type(build(c));
    size_t steps = rng() % 8;
    for (size_t s = 0; s < steps; ++s) {
      c = corner_blowup(c, c.crossings[rng() % c.crossings.size()].at);
      TopologyType after = topology_type(build(c));
      CHECK(after.shape == before.shape);
      CHECK(after.length == before.length + s + 1);
    }
  }
}
