#include "coreg/presets.hpp"

#include <charconv>

#include "coreg/errors.hpp"
#include "coreg/invariants.hpp"

namespace coreg {

namespace {

Cyclotomic q(long long n) { return Cyclotomic(Rational(n)); }
Cyclotomic z(std::uint32_t n, std::int64_t k) { return Cyclotomic::zeta_pow(n, k); }

CMat mat2(std::initializer_list<Cyclotomic> v) {
  CMat m(2, 2);
  std::copy(v.begin(), v.end(), m.a.begin());
  return m;
}

CMat mat3(std::initializer_list<Cyclotomic> v) {
  CMat m(3, 3);
  std::copy(v.begin(), v.end(), m.a.begin());
  return m;
}

CMat diag3(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
  CMat m(3, 3);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

// 2x2 block in the upper-left corner of a 3x3 identity.
CMat block3(const CMat& g) {
  CMat m = CMat::identity(3);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) m.at(i, j) = g.at(i, j);
  return m;
}

// --- 2x2 building blocks -------------------------------------------------

CMat swap2() { return mat2({q(0), q(1), q(1), q(0)}); }

// Binary tetrahedral generators.
CMat tetra_u() { return mat2({z(4, 1), q(0), q(0), z(4, -1)}); }
CMat tetra_v() { return mat2({q(0), q(1), q(-1), q(0)}); }
CMat tetra_w() {
  Cyclotomic i = z(4, 1), h(Rational(BigInt(1), BigInt(2)));
  return mat2({(i - 1) * h, (i + 1) * h, (i - 1) * h, -(i + 1) * h});
}
CMat octa_extra() { return mat2({z(8, 1), q(0), q(0), z(8, 7)}); }

// Binary icosahedral generators; sqrt(5) = e - e^2 - e^3 + e^4 for e = zeta_5.
CMat icosa_s() { return mat2({z(5, 3), q(0), q(0), z(5, 2)}); }
CMat icosa_t() {
  Cyclotomic e = z(5, 1);
  Cyclotomic inv_rt5 = (e - e.pow(2) - e.pow(3) + e.pow(4)) * Cyclotomic(Rational(BigInt(1), BigInt(5)));
  Cyclotomic a = (e - e.pow(4)) * inv_rt5, b = (e.pow(2) - e.pow(3)) * inv_rt5;
  return mat2({-a, b, b, a});
}

// --- 3x3 building blocks -------------------------------------------------

CMat cyc3() { return mat3({q(0), q(0), q(1), q(1), q(0), q(0), q(0), q(1), q(0)}); }
CMat swap12() { return mat3({q(0), q(1), q(0), q(1), q(0), q(0), q(0), q(0), q(1)}); }

// 1/sqrt(-3) = -(2*zeta_3 + 1)/3.
CMat fourier3() {
  Cyclotomic w = z(3, 1);
  Cyclotomic s = -(w * 2 + 1) * Cyclotomic(Rational(BigInt(1), BigInt(3)));
  CMat m = mat3({q(1), q(1), q(1), q(1), w, w * w, q(1), w * w, w});
  return m.scaled(s);
}

// -1/sqrt(-7) = (z + z^2 + z^4 - z^3 - z^5 - z^6)/7 for z = zeta_7; this sign
// makes det = 1.  Pairs with the weight ordering diag(z^4, z^2, z).
CMat klein_h() {
  Cyclotomic z7 = z(7, 1);
  Cyclotomic rt = z7 + z7.pow(2) + z7.pow(4) - z7.pow(3) - z7.pow(5) - z7.pow(6);
  Cyclotomic s = rt * Cyclotomic(Rational(BigInt(1), BigInt(7)));
  Cyclotomic a = z7 - z7.pow(6), b = z7.pow(2) - z7.pow(5), c = z7.pow(4) - z7.pow(3);
  return mat3({a, b, c, b, c, a, c, a, b}).scaled(s);
}

// Involution extending the Sym^2 icosahedral group to projective order 360;
// derived by tools/derive_valentiner.cpp and frozen here.  Conductor-15
// power-basis coefficients, row-major entries.
const char* const kValentinerU[9][8] = {
    {"1/5", "1/5", "-1/5", "2/5", "-3/5", "1/5", "2/5", "-3/5"},
    {"-1/5", "3/10", "-1/10", "-3/10", "1/10", "-1/5", "1/5", "3/10"},
    {"0", "0", "1/5", "-2/5", "0", "0", "-2/5", "1/5"},
    {"-3/5", "3/5", "2/5", "-2/5", "1/5", "-2/5", "0", "6/5"},
    {"-3/5", "0", "1/5", "-1/5", "0", "0", "0", "1/5"},
    {"-1/5", "3/5", "-2/5", "2/5", "1/5", "-2/5", "0", "2/5"},
    {"2/5", "0", "0", "1/5", "0", "0", "2/5", "0"},
    {"0", "3/10", "-1/2", "1/10", "1/10", "-1/5", "1/5", "-1/10"},
    {"-3/5", "-1/5", "0", "-1/5", "3/5", "-1/5", "-2/5", "2/5"},
};

CMat valentiner_u() {
  CMat m(3, 3);
  for (size_t k = 0; k < 9; ++k) {
    std::vector<Rational> coeffs(8);
    for (size_t i = 0; i < 8; ++i) coeffs[i] = Rational::parse(kValentinerU[k][i]);
    m.a[k] = Cyclotomic(15, std::move(coeffs));
  }
  return m;
}

// --- parametric names ----------------------------------------------------

std::optional<std::uint32_t> parse_suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  std::uint32_t n = 0;
  const char* b = name.data() + prefix.size();
  const char* e = name.data() + name.size();
  auto r = std::from_chars(b, e, n);
  if (r.ec != std::errc() || r.ptr != e) return std::nullopt;
  return n;
}

const std::vector<Preset>& table() {
  static const std::vector<Preset> t = {
      {"diag_abelian", "p2", "diagonal abelian, plane type A", 6},
      {"b1_d10", "p2", "dihedral with a fixed point, plane type B1", 10},
      {"b2_tetra", "p2", "binary tetrahedral image, plane type B2", 24},
      {"monomial_a4", "p2", "monomial C2^2:C3 = A4, plane type C (named exception)", 12},
      {"c7_c3", "p2", "C7:C3 torus extension, plane type C", 21},
      {"monomial_s4", "p2", "monomial C2^2:S3 = S4, plane type D (named exception)", 24},
      {"c3c3_s3", "p2", "C3^2:S3 torus extension, plane type D", 54},
      {"typeE36", "p2", "extension of C3^2 of order 36, plane type E", 36},
      {"typeF72", "p2", "extension of C3^2 of order 72, plane type F", 72},
      {"hessian216", "p2", "Hessian group, plane type G", 216},
      {"icosa_sym2", "p2", "Alt5 via Sym^2 of the line action, plane type H", 60},
      {"klein168", "p2", "Klein simple group of order 168, plane type I", 168},
      {"valentiner", "p2", "Valentiner Alt6, plane type K", 360},
      {"cyclic_7", "p1", "cyclic line action; cyclic_<n> for any n >= 1", 7},
      {"dihedral_10", "p1", "dihedral line action; dihedral_<order> for even order >= 4", 10},
      {"tetra_pgl2", "p1", "tetrahedral line action", 12},
      {"octa_pgl2", "p1", "octahedral line action", 24},
      {"icosa_pgl2", "p1", "icosahedral line action", 60},
      {"q_c3_d8", "quadric", "C3 x D8 product action", 24},
      {"q_d6_a5", "quadric", "D6 x A5 product action", 360},
      {"q_diag_a4", "quadric", "diagonal Alt4", 12},
      {"q_diag_s4", "quadric", "diagonal Sym4", 24},
      {"q_diag_a5", "quadric", "diagonal Alt5", 60},
      {"q_a4xa4", "quadric", "full product Alt4 x Alt4", 144},
      {"q_a4_c3_a4", "quadric", "subdirect product A4 x_C3 A4", 48},
      {"q_a5_twisted", "quadric", "Alt5 paired with its Galois twist", 60},
      {"q_c5_twist", "quadric", "C5 with different characters on the factors", 5},
      {"q_swap", "quadric", "factor swap alone", 2},
  };
  return t;
}

}  // namespace

const std::vector<Preset>& presets() { return table(); }

bool is_preset_name(const std::string& name) {
  if (parse_suffix(name, "cyclic_") || parse_suffix(name, "dihedral_")) return true;
  for (const Preset& p : table())
    if (p.name == name) return true;
  return false;
}

Preset preset_info(const std::string& name) {
  if (auto n = parse_suffix(name, "cyclic_")) {
    if (*n < 1) fail(Errc::InvalidInput, "cyclic preset needs n >= 1");
    return {name, "p1", "cyclic line action", *n};
  }
  if (auto n = parse_suffix(name, "dihedral_")) {
    if (*n < 4 || *n % 2) fail(Errc::InvalidInput, "dihedral preset needs an even order >= 4");
    return {name, "p1", "dihedral line action", *n};
  }
  for (const Preset& p : table())
    if (p.name == name) return p;
  fail(Errc::InvalidInput, "unknown preset '" + name + "'");
}

std::vector<CMat> preset_generators(const std::string& name) {
  if (auto n = parse_suffix(name, "cyclic_")) {
    if (*n < 1) fail(Errc::InvalidInput, "cyclic preset needs n >= 1");
    return {mat2({z(*n, 1), q(0), q(0), q(1)})};
  }
  if (auto n = parse_suffix(name, "dihedral_")) {
    if (*n < 4 || *n % 2) fail(Errc::InvalidInput, "dihedral preset needs an even order >= 4");
    return {mat2({z(*n / 2, 1), q(0), q(0), q(1)}), swap2()};
  }
  if (name == "tetra_pgl2") return {tetra_u(), tetra_v(), tetra_w()};
  if (name == "octa_pgl2") return {tetra_u(), tetra_v(), tetra_w(), octa_extra()};
  if (name == "icosa_pgl2") return {icosa_s(), icosa_t()};

  Cyclotomic w = z(3, 1);
  if (name == "diag_abelian") return {diag3(q(1), w, w * w), diag3(q(1), q(1), q(-1))};
  if (name == "b1_d10") return {diag3(z(5, 1), z(5, 4), q(1)), swap12()};
  if (name == "b2_tetra") return {block3(tetra_u()), block3(tetra_v()), block3(tetra_w())};
  if (name == "monomial_a4")
    return {diag3(q(1), q(-1), q(-1)), diag3(q(-1), q(1), q(-1)), cyc3()};
  if (name == "monomial_s4")
    return {diag3(q(1), q(-1), q(-1)), diag3(q(-1), q(1), q(-1)), cyc3(), swap12()};
  if (name == "c7_c3") return {diag3(z(7, 1), z(7, 2), z(7, 4)), cyc3()};
  if (name == "c3c3_s3")
    return {diag3(w, q(1), q(1)), diag3(q(1), w, q(1)), cyc3(), swap12()};
  if (name == "typeE36") return {cyc3(), diag3(q(1), w, w * w), fourier3()};
  if (name == "typeF72") {
    CMat tau = diag3(q(1), q(1), w);
    return {cyc3(), diag3(q(1), w, w * w), fourier3(), tau * fourier3() * tau.inverse()};
  }
  if (name == "hessian216")
    return {cyc3(), diag3(q(1), w, w * w), fourier3(), diag3(q(1), q(1), w)};
  if (name == "icosa_sym2")
    return {sym_power_matrix(icosa_s(), 2), sym_power_matrix(icosa_t(), 2)};
  if (name == "klein168") return {diag3(z(7, 4), z(7, 2), z(7, 1)), cyc3(), klein_h()};
  if (name == "valentiner")
    return {sym_power_matrix(icosa_s(), 2), sym_power_matrix(icosa_t(), 2), valentiner_u()};
  fail(Errc::InvalidInput, "unknown matrix preset '" + name + "'");
}

std::vector<QuadricElement> preset_pairs(const std::string& name) {
  CMat id = CMat::identity(2);
  auto left = [&](const CMat& g) { return QuadricElement{g, id, false}; };
  auto right = [&](const CMat& g) { return QuadricElement{id, g, false}; };
  auto both = [&](const CMat& g) { return QuadricElement{g, g, false}; };
  if (name == "q_c3_d8")
    return {left(mat2({z(3, 1), q(0), q(0), q(1)})),
            right(mat2({z(4, 1), q(0), q(0), q(1)})), right(swap2())};
  if (name == "q_d6_a5")
    return {left(mat2({z(3, 1), q(0), q(0), q(1)})), left(swap2()), right(icosa_s()),
            right(icosa_t())};
  if (name == "q_diag_a4") return {both(tetra_u()), both(tetra_v()), both(tetra_w())};
  if (name == "q_diag_s4")
    return {both(tetra_u()), both(tetra_v()), both(tetra_w()), both(octa_extra())};
  if (name == "q_diag_a5") return {both(icosa_s()), both(icosa_t())};
  if (name == "q_a4xa4")
    return {left(tetra_u()), left(tetra_v()), left(tetra_w()),
            right(tetra_u()), right(tetra_v()), right(tetra_w())};
  if (name == "q_a4_c3_a4")
    return {left(tetra_u()), left(tetra_v()), right(tetra_u()), right(tetra_v()),
            both(tetra_w())};
  if (name == "q_a5_twisted") {
    auto twist = [](const CMat& g) {
      CMat m = g;
      for (auto& x : m.a) x = x.galois(2);
      return m;
    };
    return {QuadricElement{icosa_s(), twist(icosa_s()), false},
            QuadricElement{icosa_t(), twist(icosa_t()), false}};
  }
  if (name == "q_c5_twist")
    return {QuadricElement{mat2({z(5, 1), q(0), q(0), q(1)}),
                           mat2({z(5, 2), q(0), q(0), q(1)}), false}};
  if (name == "q_swap") return {QuadricElement{id, id, true}};
  fail(Errc::InvalidInput, "unknown quadric preset '" + name + "'");
}

MatGroup preset_group(const std::string& name) {
  Preset info = preset_info(name);
  if (info.surface == "quadric")
    fail(Errc::InvalidInput, "preset '" + name + "' is a pair group; use preset_quadric");
  MatGroup g = MatGroup::closure(preset_generators(name), true);
  if (g.order() != info.order)
    fail(Errc::PresetSelfTestFailed, "preset '" + name + "' closes to order " +
                                         std::to_string(g.order()) + ", documented " +
                                         std::to_string(info.order));
  return g;
}

QuadricGroup preset_quadric(const std::string& name) {
  Preset info = preset_info(name);
  if (info.surface != "quadric")
    fail(Errc::InvalidInput, "preset '" + name + "' is not a pair group");
  QuadricGroup g = quadric_closure(preset_pairs(name));
  if (g.order() != info.order)
    fail(Errc::PresetSelfTestFailed, "preset '" + name + "' closes to order " +
                                         std::to_string(g.order()) + ", documented " +
                                         std::to_string(info.order));
  return g;
}

}  // namespace coreg
