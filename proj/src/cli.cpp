// Command-line front end.  Subcommands: classify, table1, invariants,
// dual-complex, lattice, presets.  Exit codes: 0 success, 1 the computation
// rejected the input (no classification), 2 malformed input or usage.
// Errors go to stderr as one-line JSON objects.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coreg/cli.hpp"
#include "coreg/errors.hpp"
#include "coreg/invariants.hpp"
#include "coreg/jsonio.hpp"

namespace coreg {
namespace {

// Thrown around input construction so parse problems exit 2 instead of 1.
// Error::what() carries the "Name: " prefix; the error objects report the
// name in their own field.
std::string bare_message(const Error& e) {
  std::string prefix = std::string(errc_name(e.code())) + ": ";
  std::string what = e.what();
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

struct InputPhase {
  template <typename F>
  auto operator()(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      throw CliInputError{std::string(errc_name(e.code())) + ": " + bare_message(e)};
    } catch (const Json::exception& e) {
      throw CliInputError{std::string("JsonParse: ") + e.what()};
    }
  }
};

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliInputError{"FileError: cannot open " + path};
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw CliInputError{std::string("JsonParse: ") + path + ": " + e.what()};
  }
  return j;
}

std::uint32_t order_cap_from_env() {
  const char* v = std::getenv("COREG_ORDER_CAP");
  if (!v || !*v) return kOrderCap;
  char* end = nullptr;
  unsigned long cap = std::strtoul(v, &end, 10);
  if (!end || *end || cap == 0 || cap > 1000000)
    throw CliInputError{"BadEnv: COREG_ORDER_CAP must be a positive integer"};
  return static_cast<std::uint32_t>(cap);
}

// Group source: a preset name or a JSON file path.
MatGroup load_group(const std::string& source, std::uint32_t cap) {
  InputPhase input;
  if (is_preset_name(source)) return input([&] { return preset_group(source); });
  Json j = read_json_file(source);
  return input([&] { return group_from_json(j, cap); });
}

P1Type p1_type_from_name(const std::string& s) {
  if (s == "cyclic") return P1Type::Cyclic;
  if (s == "dihedral") return P1Type::Dihedral;
  if (s == "tetrahedral") return P1Type::Tetrahedral;
  if (s == "octahedral") return P1Type::Octahedral;
  if (s == "icosahedral") return P1Type::Icosahedral;
  throw CliInputError{"BadFlag: unknown line action type \"" + s +
                      "\" (cyclic, dihedral, tetrahedral, octahedral, icosahedral)"};
}

std::string p1_type_label(P1Type t) {
  switch (t) {
    case P1Type::Cyclic: return "cyclic";
    case P1Type::Dihedral: return "dihedral";
    case P1Type::Tetrahedral: return "tetrahedral";
    case P1Type::Octahedral: return "octahedral";
    default: return "icosahedral";
  }
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "surface: " << r.surface << "\n";
  os << "group: " << r.group_name << " (order " << r.order << ")\n";
  if (r.plane_type) os << "type: " << p2_type_name(*r.plane_type) << "\n";
  os << "coregularity: " << r.coregularity << "\n";
  os << "lct > 1: " << (r.lct_gt_1 ? "yes" : "no");
  if (!r.lct_annotation.empty()) os << " (lct = " << r.lct_annotation << ")";
  os << "\n";
  if (r.exceptionality != Exceptionality::NotApplicable)
    os << "exceptionality: " << exceptionality_name(r.exceptionality) << "\n";
  if (r.rigidity != Rigidity::NotApplicable)
    os << "rigidity: " << rigidity_name(r.rigidity) << "\n";
  os << "normalizes a torus: " << (r.torus_normalizer ? "yes" : "no") << "\n";
  if (r.cycle) {
    os << "cycle: " << r.cycle->topology.str() << ", components";
    for (const auto& c : r.cycle->config.components) os << " " << c.id;
    os << "\n  " << r.cycle->note << "\n";
  }
  if (r.curve) {
    os << "curve: class (";
    for (size_t i = 0; i < r.curve->lattice_class.size(); ++i)
      os << (i ? "," : "") << r.curve->lattice_class[i];
    os << ")\n  " << r.curve->note << "\n";
  }
  return os.str();
}

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_classify(const std::string& surface, const std::string& group_source,
                 const std::string& pairs_path, const std::string& point_json,
                 const std::string& points_path, const std::string& hex_json,
                 const std::string& torus_json, const std::string& fiber,
                 const std::string& base, bool as_json) {
  InputPhase input;
  std::uint32_t cap = order_cap_from_env();

  if (surface == "p2" || surface == "f1") {
    if (group_source.empty()) throw CliInputError{"BadFlag: --group is required"};
    MatGroup g = load_group(group_source, cap);
    ClassificationReport r;
    if (surface == "p2") {
      r = coreg_p2(g);
    } else if (!point_json.empty()) {
      auto pt = input([&] {
        Json j = Json::parse(point_json);
        std::vector<Cyclotomic> v;
        for (const auto& x : j) v.push_back(cyclotomic_from_json(x));
        if (v.size() != 3) fail(Errc::InvalidInput, "--point needs three coordinates");
        return v;
      });
      r = coreg_f1(g, &pt);
    } else {
      r = coreg_f1(g);
    }
    emit(report_json(r), as_json, report_text(r));
    return 0;
  }

  if (surface == "quadric") {
    if (pairs_path.empty()) throw CliInputError{"BadFlag: --pairs is required"};
    std::vector<QuadricElement> gens;
    if (is_preset_name(pairs_path)) {
      gens = input([&] { return preset_pairs(pairs_path); });
    } else {
      Json j = read_json_file(pairs_path);
      gens = input([&] { return pairs_from_json(j); });
    }
    QuadricGroup q = input([&] { return quadric_closure(gens, cap); });
    ClassificationReport r = coreg_quadric(q);
    emit(report_json(r), as_json, report_text(r));
    return 0;
  }

  if (surface == "dp7") {
    if (group_source.empty() || points_path.empty())
      throw CliInputError{"BadFlag: --group and --points are required"};
    Json j = read_json_file(points_path);
    DP7Data data{load_group(group_source, cap), {}, {}};
    input([&] {
      for (const auto& x : member(j, "p1")) data.p1.push_back(cyclotomic_from_json(x));
      for (const auto& x : member(j, "p2")) data.p2.push_back(cyclotomic_from_json(x));
      return 0;
    });
    ClassificationReport r = coreg_dp7(data);
    emit(report_json(r), as_json, report_text(r));
    return 0;
  }

  if (surface == "dp6") {
    DP6Data data;
    input([&] {
      if (!hex_json.empty())
        for (const auto& g : Json::parse(hex_json))
          data.hex_gens.push_back({g.at("rotate").get<std::uint32_t>(),
                                   g.contains("reflect") && g.at("reflect").get<bool>()});
      if (!torus_json.empty())
        for (const auto& f : Json::parse(torus_json))
          data.torus_factors.push_back(f.get<std::uint32_t>());
      return 0;
    });
    ClassificationReport r = coreg_dp6(data);
    emit(report_json(r), as_json, report_text(r));
    return 0;
  }

  if (surface == "conic-bundle") {
    if (fiber.empty() || base.empty())
      throw CliInputError{"BadFlag: --fiber and --base are required"};
    P1Type f = p1_type_from_name(fiber), b = p1_type_from_name(base);
    ConicBundleVerdict v = conic_bundle_obstruction(f, b);
    Json j;
    j["surface"] = "conic_bundle";
    j["fiber"] = p1_type_label(f);
    j["base"] = p1_type_label(b);
    j["verdict"] = v == ConicBundleVerdict::PositiveCertified ? "positive_certified"
                                                              : "possibly_zero";
    std::ostringstream os;
    os << "fiber action: " << p1_type_label(f) << "\nbase action: " << p1_type_label(b)
       << "\nverdict: "
       << (v == ConicBundleVerdict::PositiveCertified ? "coregularity is positive"
                                                      : "coregularity may be zero")
       << "\n";
    emit(j, as_json, os.str());
    return 0;
  }

  throw CliInputError{"BadFlag: unknown surface \"" + surface +
                      "\" (p2, quadric, f1, dp7, dp6, conic-bundle)"};
}

int run_table1(bool as_json) {
  auto rows = table1();
  if (!as_json) {
    std::cout << table1_text(rows);
    return 0;
  }
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["label"] = r.label;
    row["preset"] = r.preset;
    row["coregularity"] = r.coreg;
    row["lct"] = r.lct;
    row["exceptionality"] = r.exceptionality;
    row["rigidity"] = r.rigidity;
    row["report"] = report_json(r.report);
    j.push_back(row);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_invariants(const std::string& group_source, std::uint32_t degree, bool as_json) {
  std::uint32_t cap = order_cap_from_env();
  MatGroup g = load_group(group_source, cap);
  MatGroup lift = g.projective() ? sl_lift(g) : g;
  auto leaves = semi_invariant_forms(lift, degree);

  Json j;
  j["group"] = recognize(g.table()).name;
  j["order"] = g.order();
  j["lift_order"] = lift.order();
  j["degree"] = degree;
  size_t total = 0;
  Json jl = Json::array();
  for (const auto& leaf : leaves) {
    total += leaf.basis.cols;
    Json e;
    e["dimension"] = leaf.basis.cols;
    Json chars = Json::array();
    for (const auto& c : leaf.chars) chars.push_back(c.str());
    e["characters"] = chars;
    std::vector<Cyclotomic> sample(leaf.basis.rows);
    for (size_t r = 0; r < leaf.basis.rows; ++r) sample[r] = leaf.basis.at(r, 0);
    Json form = Json::array();
    for (const auto& x : sample) form.push_back(cyclotomic_json(x));
    e["sample_form"] = form;
    jl.push_back(e);
  }
  j["semi_invariant_dimension"] = total;
  j["leaves"] = jl;
  j["monomials"] = Json::array();
  for (const auto& m : monomial_exponents(g.dim(), degree)) {
    Json e = Json::array();
    for (auto x : m) e.push_back(x);
    j["monomials"].push_back(e);
  }

  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group " << j["group"].get<std::string>() << " of order " << g.order()
              << ", degree " << degree << "\n";
    std::cout << "semi-invariant dimension: " << total << " in " << leaves.size()
              << " character leaves\n";
    for (const auto& leaf : leaves) {
      std::cout << "  dim " << leaf.basis.cols << ", characters";
      for (const auto& c : leaf.chars) std::cout << " " << c.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_dual_complex(const std::string& config_path, const std::string& action_path,
                     bool as_json) {
  InputPhase input;
  Json jc = read_json_file(config_path);
  CurveConfiguration config = input([&] { return config_from_json(jc); });
  validate(config);
  DualComplex dc = build(config);
  TopologyType t = topology_type(dc);

  Json j = topology_json(t);
  j["vertices"] = dc.vertices;
  Json edges = Json::array();
  for (const auto& e : dc.edges)
    edges.push_back(Json{{"u", dc.vertices[e.u]}, {"v", dc.vertices[e.v]}, {"at", e.at}});
  j["edges"] = edges;
  j["has_sub_one"] = dc.has_sub_one;
  j["dimension"] = dc.dimension();

  std::ostringstream os;
  os << "topology: " << t.str() << "\n";
  os << "vertices:";
  for (const auto& v : dc.vertices) os << " " << v;
  os << "\nedges: " << dc.edges.size() << "\n";

  if (!action_path.empty()) {
    Json ja = read_json_file(action_path);
    auto gens = input([&] { return actions_from_json(ja); });
    ComplexAction ca = act(config, gens);
    Json a;
    a["group_order"] = ca.group.n;
    a["kernel_order"] = ca.n_table.n;
    a["induced_order"] = ca.induced.n;
    a["induced"] = recognize(ca.induced).name;
    if (dc.dimension() == 1) {
      Coreg0Check chk = coreg0_obstruction(ca);
      a["coreg0_obstruction"] = Json{{"pass", chk.pass}, {"reason", chk.reason}};
      os << "action: order " << ca.group.n << ", kernel " << ca.n_table.n << ", induced "
         << recognize(ca.induced).name << "\n";
      os << "coregularity-0 obstruction: " << (chk.pass ? "pass" : "fail " + chk.reason) << "\n";
    } else {
      os << "action: order " << ca.group.n << ", kernel " << ca.n_table.n << ", induced "
         << recognize(ca.induced).name << "\n";
    }
    j["action"] = a;
  }
  emit(j, as_json, os.str());
  return 0;
}

int run_lattice(const std::string& surface, bool as_json) {
  SurfaceLattice lat;
  if (surface == "p2") lat = SurfaceLattice::p2();
  else if (surface == "quadric") lat = SurfaceLattice::quadric();
  else if (surface == "f1") lat = SurfaceLattice::blowup_of_p2(1);
  else if (surface == "dp7") lat = SurfaceLattice::blowup_of_p2(2);
  else if (surface == "dp6") lat = SurfaceLattice::blowup_of_p2(3);
  else
    throw CliInputError{"BadFlag: unknown surface \"" + surface +
                        "\" (p2, quadric, f1, dp7, dp6)"};

  Json j = lattice_json(lat);
  Json curves = Json::array();
  for (const auto& c : neg_one_curves(lat)) {
    Json e = Json::array();
    for (auto x : c) e.push_back(x);
    curves.push_back(e);
  }
  j["neg_one_curves"] = curves;

  std::ostringstream os;
  os << "surface: " << surface << "\nrank: " << lat.rank << "\nK: (";
  for (size_t i = 0; i < lat.canonical.size(); ++i)
    os << (i ? "," : "") << lat.canonical[i];
  os << ")\n(-1)-curves: " << curves.size() << "\n";
  emit(j, as_json, os.str());
  return 0;
}

int run_presets(bool as_json) {
  const auto& list = presets();
  if (as_json) {
    Json j = Json::array();
    for (const auto& p : list)
      j.push_back(Json{
          {"name", p.name}, {"surface", p.surface}, {"order", p.order}, {"doc", p.doc}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  size_t w = 0;
  for (const auto& p : list) w = std::max(w, p.name.size());
  for (const auto& p : list) {
    std::string name = p.name;
    name.resize(w, ' ');
    std::cout << name << "  " << p.surface << "  order " << p.order << "  " << p.doc << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"coregularity of finite group actions on rational surfaces"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string format = "text";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  std::string surface = "p2", group_source, pairs_path, point_json, points_path;
  std::string hex_json, torus_json, fiber, base;
  auto* classify = app.add_subcommand("classify", "classify one group action");
  classify->add_option("--surface", surface, "p2, quadric, f1, dp7, dp6 or conic-bundle")
      ->capture_default_str();
  classify->add_option("--group", group_source, "preset name or group JSON file");
  classify->add_option("--pairs", pairs_path, "preset name or pair-generator JSON file");
  classify->add_option("--point", point_json, "f1 center as a JSON coordinate triple");
  classify->add_option("--points", points_path, "dp7 centers file with fields p1, p2");
  classify->add_option("--hex", hex_json, "dp6 hexagon generators, e.g. [{\"rotate\":1}]");
  classify->add_option("--torus", torus_json, "dp6 torus invariant factors, e.g. [2,3]");
  classify->add_option("--fiber", fiber, "conic bundle fiber action type");
  classify->add_option("--base", base, "conic bundle base action type");
  add_format(classify);

  add_format(app.add_subcommand("table1", "the thirteen plane rows"));

  std::string inv_group;
  std::uint32_t inv_degree = 1;
  auto* invariants = app.add_subcommand("invariants", "semi-invariant forms of one degree");
  invariants->add_option("--group", inv_group, "preset name or group JSON file")->required();
  invariants->add_option("--degree", inv_degree, "form degree")->check(CLI::Range(1u, 12u))
      ->capture_default_str();
  add_format(invariants);

  std::string config_path, action_path;
  auto* dual = app.add_subcommand("dual-complex", "topology of a crossing configuration");
  dual->add_option("config", config_path, "configuration JSON file")->required();
  dual->add_option("--action", action_path, "permutation generators JSON file");
  add_format(dual);

  std::string lattice_surface = "p2";
  auto* lattice = app.add_subcommand("lattice", "divisor class lattice of a surface");
  lattice->add_option("--surface", lattice_surface, "p2, quadric, f1, dp7 or dp6")
      ->capture_default_str();
  add_format(lattice);

  add_format(app.add_subcommand("presets", "list built-in generator sets"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << Json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  bool as_json = (format == "json");
  try {
    order_cap_from_env();  // reject a malformed override before any work
    if (classify->parsed())
      return run_classify(surface, group_source, pairs_path, point_json, points_path, hex_json,
                          torus_json, fiber, base, as_json);
    if (app.get_subcommand("table1")->parsed()) return run_table1(as_json);
    if (invariants->parsed()) return run_invariants(inv_group, inv_degree, as_json);
    if (dual->parsed()) return run_dual_complex(config_path, action_path, as_json);
    if (lattice->parsed()) return run_lattice(lattice_surface, as_json);
    if (app.get_subcommand("presets")->parsed()) return run_presets(as_json);
  } catch (const CliInputError& e) {
    std::cerr << Json{{"error", "InputError"}, {"message", e.message}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", errc_name(e.code())}, {"message", bare_message(e)}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace coreg
