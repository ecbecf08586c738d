#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coreg/errors.hpp"
#include "coreg/presets.hpp"

using namespace coreg;

TEST_CASE("every preset closes to its documented order") {
  for (const Preset& p : presets()) {
    CAPTURE(p.name);
    if (p.surface == "quadric") {
      QuadricGroup g = preset_quadric(p.name);
      CHECK(g.order() == p.order);
    } else {
      MatGroup g = preset_group(p.name);
      CHECK(g.order() == p.order);
      CHECK(g.dim() == (p.surface == "p1" ? 2 : 3));
    }
  }
}

TEST_CASE("parametric line presets") {
  CHECK(is_preset_name("cyclic_1"));
  CHECK(is_preset_name("cyclic_9"));
  CHECK(is_preset_name("dihedral_4"));
  CHECK_FALSE(is_preset_name("cyclic_"));
  CHECK_FALSE(is_preset_name("nonsense"));

  CHECK(preset_group("cyclic_9").order() == 9);
  CHECK(preset_group("dihedral_14").order() == 14);
  CHECK(preset_info("cyclic_5").surface == "p1");

  CHECK_THROWS_AS(preset_group("cyclic_0"), Error);
  CHECK_THROWS_AS(preset_group("dihedral_7"), Error);
  CHECK_THROWS_AS(preset_group("dihedral_2"), Error);
  CHECK_THROWS_AS(preset_generators("no_such_preset"), Error);
}

TEST_CASE("lookup kind must match the preset kind") {
  CHECK_THROWS_AS(preset_group("q_diag_a4"), Error);
  CHECK_THROWS_AS(preset_quadric("valentiner"), Error);
  CHECK_THROWS_AS(preset_pairs("typeE36"), Error);
}

TEST_CASE("special linear lifts have the expected orders") {
  struct Row {
    const char* name;
    size_t lift_order;
  };
  const Row rows[] = {
      {"typeE36", 108},   {"typeF72", 216},  {"hessian216", 648},
      {"klein168", 504},  {"valentiner", 1080}, {"icosa_pgl2", 120},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    CHECK(sl_lift(preset_group(r.name)).order() == r.lift_order);
  }
}

TEST_CASE("structural spot checks") {
  MatGroup a4 = preset_group("monomial_a4");
  CHECK(recognize(a4.table()).family == GroupId::Family::Alt4);
  MatGroup s4 = preset_group("monomial_s4");
  CHECK(recognize(s4.table()).family == GroupId::Family::Sym4);
  MatGroup icosa = preset_group("icosa_pgl2");
  CHECK(recognize(icosa.table()).family == GroupId::Family::Alt5);
  CHECK(preset_group("valentiner").table().is_simple());
  CHECK(preset_group("klein168").table().is_simple());

  QuadricGroup sw = preset_quadric("q_swap");
  CHECK(sw.has_swap);
  CHECK(sw.a1.order() == 1);

  QuadricGroup tw = preset_quadric("q_a5_twisted");
  CHECK_FALSE(tw.has_swap);
  CHECK(tw.a1.order() == 60);
  CHECK(tw.a2.order() == 60);

  QuadricGroup sub = preset_quadric("q_a4_c3_a4");
  GoursatData gd = goursat(sub);
  CHECK(gd.quotient_order == 3);
}
