#include "coreg/jsonio.hpp"

#include <map>

#include "coreg/errors.hpp"

namespace coreg {
namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::InvalidInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

P2Type p2_type_from_name(const std::string& s) {
  static const std::map<std::string, P2Type> names{
      {"A", P2Type::A}, {"B1", P2Type::B1}, {"B2", P2Type::B2}, {"C", P2Type::C},
      {"D", P2Type::D}, {"E", P2Type::E},   {"F", P2Type::F},   {"G", P2Type::G},
      {"H", P2Type::H}, {"I", P2Type::I},   {"K", P2Type::K}};
  auto it = names.find(s);
  if (it == names.end()) bad("unknown plane type \"" + s + "\"");
  return it->second;
}

Exceptionality exceptionality_from_name(const std::string& s) {
  for (Exceptionality e : {Exceptionality::Exceptional, Exceptionality::WeaklyExceptionalOnly,
                           Exceptionality::NotWeaklyExceptional, Exceptionality::NotApplicable})
    if (exceptionality_name(e) == s) return e;
  bad("unknown exceptionality \"" + s + "\"");
}

Rigidity rigidity_from_name(const std::string& s) {
  for (Rigidity r :
       {Rigidity::SuperRigid, Rigidity::RigidNotSuper, Rigidity::NotRigid, Rigidity::NotApplicable})
    if (rigidity_name(r) == s) return r;
  bad("unknown rigidity \"" + s + "\"");
}

Json divisor_json(const DivisorClass& d) {
  Json a = Json::array();
  for (auto c : d) a.push_back(c);
  return a;
}

DivisorClass divisor_from_json(const Json& j) {
  if (!j.is_array()) bad("divisor class must be an array");
  DivisorClass d;
  for (const auto& c : j) d.push_back(c.get<std::int64_t>());
  return d;
}

Json form_json(const std::vector<Cyclotomic>& form) {
  Json a = Json::array();
  for (const auto& x : form) a.push_back(cyclotomic_json(x));
  return a;
}

std::vector<Cyclotomic> form_from_json(const Json& j) {
  std::vector<Cyclotomic> v;
  for (const auto& x : j) v.push_back(cyclotomic_from_json(x));
  return v;
}

Json cycle_json(const CycleWitness& w) {
  Json j;
  j["config"] = config_json(w.config);
  j["action"] = actions_json(w.action);
  j["lattice"] = lattice_json(w.lattice);
  Json classes = Json::array();
  for (const auto& [cls, mult] : w.classes)
    classes.push_back(Json{{"class", divisor_json(cls)}, {"multiplicity", mult}});
  j["classes"] = classes;
  j["topology"] = topology_json(w.topology);
  j["note"] = w.note;
  return j;
}

CycleWitness cycle_from_json(const Json& j) {
  CycleWitness w;
  w.config = config_from_json(member(j, "config"));
  w.action = actions_from_json(member(j, "action"));
  w.lattice = lattice_from_json(member(j, "lattice"));
  for (const auto& c : member(j, "classes"))
    w.classes.emplace_back(divisor_from_json(member(c, "class")),
                           member(c, "multiplicity").get<std::int64_t>());
  w.topology = topology_from_json(member(j, "topology"));
  w.note = member(j, "note").get<std::string>();
  return w;
}

Json curve_json(const CurveWitness& w) {
  Json j;
  j["degree"] = w.degree;
  Json mons = Json::array();
  for (const auto& m : w.monomials) {
    Json e = Json::array();
    for (auto x : m) e.push_back(x);
    mons.push_back(e);
  }
  j["monomials"] = mons;
  j["form"] = form_json(w.form);
  j["lattice_class"] = divisor_json(w.lattice_class);
  j["note"] = w.note;
  return j;
}

CurveWitness curve_from_json(const Json& j) {
  CurveWitness w;
  w.degree = member(j, "degree").get<std::uint32_t>();
  for (const auto& m : member(j, "monomials")) {
    std::vector<std::uint32_t> e;
    for (const auto& x : m) e.push_back(x.get<std::uint32_t>());
    w.monomials.push_back(std::move(e));
  }
  w.form = form_from_json(member(j, "form"));
  w.lattice_class = divisor_from_json(member(j, "lattice_class"));
  w.note = member(j, "note").get<std::string>();
  return w;
}

}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("expected a rational as \"p/q\" or an integer");
}

Json cyclotomic_json(const Cyclotomic& x) {
  Json j;
  j["conductor"] = x.conductor();
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_json(c));
  j["coeffs"] = coeffs;
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object()) bad("expected a cyclotomic number");
  std::uint32_t n = member(j, "conductor").get<std::uint32_t>();
  std::vector<Rational> coeffs;
  for (const auto& c : member(j, "coeffs")) coeffs.push_back(rational_from_json(c));
  return Cyclotomic(n, std::move(coeffs));
}

Json matrix_json(const CMat& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols; ++c) row.push_back(cyclotomic_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<Cyclotomic> row;
    for (const auto& x : r) row.push_back(cyclotomic_from_json(x));
    rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) bad("ragged matrix rows");
  return CMat::from_rows(rows);
}

MatGroup group_from_json(const Json& j, std::uint32_t cap) {
  size_t dim = member(j, "dim").get<size_t>();
  if (dim != 2 && dim != 3) bad("dim must be 2 or 3");
  bool projective = member(j, "projective").get<bool>();
  std::vector<CMat> gens;
  for (const auto& g : member(j, "generators")) {
    CMat m = matrix_from_json(g);
    if (m.rows != dim || m.cols != dim) bad("generator does not match dim");
    gens.push_back(std::move(m));
  }
  if (gens.empty()) bad("at least one generator required");
  return MatGroup::closure(gens, projective, cap);
}

std::vector<QuadricElement> pairs_from_json(const Json& j) {
  const Json& list = (j.is_object() && j.contains("pairs")) ? j.at("pairs") : j;
  if (!list.is_array() || list.empty()) bad("expected a non-empty array of generator pairs");
  std::vector<QuadricElement> out;
  for (const auto& p : list) {
    QuadricElement e{matrix_from_json(member(p, "g1")), matrix_from_json(member(p, "g2")),
                     p.contains("swap") && p.at("swap").get<bool>()};
    if (e.g1.rows != 2 || e.g1.cols != 2 || e.g2.rows != 2 || e.g2.cols != 2)
      bad("pair generators must be 2x2");
    out.push_back(std::move(e));
  }
  return out;
}

CurveConfiguration config_from_json(const Json& j) {
  CurveConfiguration c;
  for (const auto& comp : member(j, "components")) {
    CurveComponent cc;
    cc.id = member(comp, "id").get<std::string>();
    cc.coeff = rational_from_json(member(comp, "coeff"));
    if (comp.contains("label")) cc.label = comp.at("label").get<std::string>();
    c.components.push_back(std::move(cc));
  }
  for (const auto& cr : member(j, "crossings")) {
    const Json& pair = member(cr, "pair");
    if (!pair.is_array() || pair.size() != 2) bad("crossing pair must be [i, j]");
    size_t a = pair.at(0).get<size_t>(), b = pair.at(1).get<size_t>();
    if (a >= c.components.size() || b >= c.components.size())
      bad("crossing pair index out of range");
    c.crossings.push_back(
        {member(cr, "at").get<std::string>(), c.components[a].id, c.components[b].id});
  }
  if (j.contains("surface")) c.surface = j.at("surface").get<std::string>();
  return c;
}

Json config_json(const CurveConfiguration& c) {
  Json j;
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json jc;
    jc["id"] = comp.id;
    jc["coeff"] = rational_json(comp.coeff);
    if (!comp.label.empty()) jc["label"] = comp.label;
    comps.push_back(jc);
  }
  j["components"] = comps;
  Json crossings = Json::array();
  for (const auto& cr : c.crossings) {
    size_t a = c.components.size(), b = c.components.size();
    for (size_t i = 0; i < c.components.size(); ++i) {
      if (c.components[i].id == cr.a) a = i;
      if (c.components[i].id == cr.b) b = i;
    }
    crossings.push_back(Json{{"at", cr.at}, {"pair", Json::array({a, b})}});
  }
  j["crossings"] = crossings;
  if (!c.surface.empty()) j["surface"] = c.surface;
  return j;
}

std::vector<ActionGenerator> actions_from_json(const Json& j) {
  if (!j.is_array()) bad("action must be an array of generators");
  std::vector<ActionGenerator> out;
  for (const auto& g : j) {
    ActionGenerator ag;
    if (g.contains("components"))
      for (const auto& [from, to] : g.at("components").items())
        ag.components[from] = to.get<std::string>();
    if (g.contains("crossings"))
      for (const auto& [from, to] : g.at("crossings").items())
        ag.crossings[from] = to.get<std::string>();
    out.push_back(std::move(ag));
  }
  return out;
}

Json actions_json(const std::vector<ActionGenerator>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) {
    Json jg;
    Json comp = Json::object(), cross = Json::object();
    for (const auto& [from, to] : g.components) comp[from] = to;
    for (const auto& [from, to] : g.crossings) cross[from] = to;
    jg["components"] = comp;
    jg["crossings"] = cross;
    a.push_back(jg);
  }
  return a;
}

Json lattice_json(const SurfaceLattice& lat) {
  Json j;
  switch (lat.kind) {
    case SurfaceLattice::Kind::P2: j["kind"] = "p2"; break;
    case SurfaceLattice::Kind::Quadric: j["kind"] = "quadric"; break;
    default: j["kind"] = "blowup_of_p2"; break;
  }
  j["rank"] = lat.rank;
  Json form = Json::array();
  for (auto x : lat.form) form.push_back(x);
  j["form"] = form;
  j["canonical"] = divisor_json(lat.canonical);
  return j;
}

SurfaceLattice lattice_from_json(const Json& j) {
  std::string kind = member(j, "kind").get<std::string>();
  size_t rank = member(j, "rank").get<size_t>();
  if (kind == "p2") return SurfaceLattice::p2();
  if (kind == "quadric") return SurfaceLattice::quadric();
  if (kind == "blowup_of_p2" && rank >= 2 && rank <= 4)
    return SurfaceLattice::blowup_of_p2(rank - 1);
  bad("unknown lattice kind \"" + kind + "\"");
}

Json topology_json(const TopologyType& t) {
  Json j;
  switch (t.shape) {
    case TopologyType::Shape::Empty: j["topology"] = "Empty"; break;
    case TopologyType::Shape::Point: j["topology"] = "Point"; break;
    case TopologyType::Shape::TwoPoints: j["topology"] = "TwoPoints"; break;
    case TopologyType::Shape::Segment: j["topology"] = "Segment"; break;
    default: j["topology"] = "Circle"; break;
  }
  if (t.shape == TopologyType::Shape::Segment || t.shape == TopologyType::Shape::Circle)
    j["length"] = t.length;
  return j;
}

TopologyType topology_from_json(const Json& j) {
  std::string s = member(j, "topology").get<std::string>();
  TopologyType t;
  if (s == "Empty") t.shape = TopologyType::Shape::Empty;
  else if (s == "Point") t.shape = TopologyType::Shape::Point;
  else if (s == "TwoPoints") t.shape = TopologyType::Shape::TwoPoints;
  else if (s == "Segment") t.shape = TopologyType::Shape::Segment;
  else if (s == "Circle") t.shape = TopologyType::Shape::Circle;
  else bad("unknown topology \"" + s + "\"");
  if (j.contains("length")) t.length = j.at("length").get<size_t>();
  return t;
}

Json report_json(const ClassificationReport& r) {
  Json j;
  j["surface"] = r.surface;
  j["group"] = r.group_name;
  j["order"] = r.order;
  if (r.plane_type) j["type"] = p2_type_name(*r.plane_type);
  j["coregularity"] = r.coregularity;
  j["lct_gt_1"] = r.lct_gt_1;
  if (!r.lct_annotation.empty()) j["lct"] = r.lct_annotation;
  j["exceptionality"] = exceptionality_name(r.exceptionality);
  j["rigidity"] = rigidity_name(r.rigidity);
  j["torus_normalizer"] = r.torus_normalizer;
  if (r.cycle) j["cycle"] = cycle_json(*r.cycle);
  if (r.curve) j["curve"] = curve_json(*r.curve);
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  ClassificationReport r;
  r.surface = member(j, "surface").get<std::string>();
  r.group_name = member(j, "group").get<std::string>();
  r.order = member(j, "order").get<size_t>();
  if (j.contains("type")) r.plane_type = p2_type_from_name(j.at("type").get<std::string>());
  r.coregularity = member(j, "coregularity").get<int>();
  r.lct_gt_1 = member(j, "lct_gt_1").get<bool>();
  if (j.contains("lct")) r.lct_annotation = j.at("lct").get<std::string>();
  r.exceptionality = exceptionality_from_name(member(j, "exceptionality").get<std::string>());
  r.rigidity = rigidity_from_name(member(j, "rigidity").get<std::string>());
  r.torus_normalizer = member(j, "torus_normalizer").get<bool>();
  if (j.contains("cycle")) r.cycle = cycle_from_json(j.at("cycle"));
  if (j.contains("curve")) r.curve = curve_from_json(j.at("curve"));
  return r;
}

}  // namespace coreg
