#include "coreg/dualcomplex.hpp"

#include <algorithm>
#include <set>

#include "coreg/errors.hpp"

namespace coreg {

namespace {

const Rational kOne(1);

bool is_one(const Rational& r) { return r == kOne; }

std::string shape_word(TopologyType::Shape s) {
  switch (s) {
    case TopologyType::Shape::Empty: return "Empty";
    case TopologyType::Shape::Point: return "Point";
    case TopologyType::Shape::TwoPoints: return "TwoPoints";
    case TopologyType::Shape::Segment: return "Segment";
    case TopologyType::Shape::Circle: return "Circle";
  }
  return "?";
}

}  // namespace

const CurveComponent& CurveConfiguration::component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  fail(Errc::InvalidConfiguration, "unknown component '" + id + "'");
}

const Crossing& CurveConfiguration::crossing(const std::string& at) const {
  for (const auto& x : crossings)
    if (x.at == at) return x;
  fail(Errc::InvalidConfiguration, "unknown crossing '" + at + "'");
}

void validate(const CurveConfiguration& config) {
  std::set<std::string> ids;
  for (const auto& c : config.components) {
    if (!ids.insert(c.id).second)
      fail(Errc::InvalidConfiguration, "duplicate component id '" + c.id + "'");
    if (c.coeff.sign() < 0 || kOne < c.coeff)
      fail(Errc::InvalidConfiguration,
           "coefficient of '" + c.id + "' is " + c.coeff.str() + ", outside [0,1]");
  }
  std::set<std::string> points;
  for (const auto& x : config.crossings) {
    if (!points.insert(x.at).second)
      fail(Errc::InvalidConfiguration, "two crossings at point '" + x.at + "'");
    if (x.a == x.b)
      fail(Errc::InvalidConfiguration, "component '" + x.a + "' crosses itself at '" + x.at + "'");
    if (!ids.count(x.a) || !ids.count(x.b))
      fail(Errc::InvalidConfiguration, "crossing '" + x.at + "' references a missing component");
  }
}

DualComplex build(const CurveConfiguration& config) {
  validate(config);
  DualComplex dc;
  std::map<std::string, size_t> index;
  for (const auto& c : config.components) {
    if (is_one(c.coeff)) {
      index[c.id] = dc.vertices.size();
      dc.vertices.push_back(c.id);
    } else {
      dc.has_sub_one = true;
    }
  }
  for (const auto& x : config.crossings) {
    auto u = index.find(x.a), v = index.find(x.b);
    if (u != index.end() && v != index.end())
      dc.edges.push_back({u->second, v->second, x.at});
  }
  return dc;
}

std::string TopologyType::str() const {
  std::string s = shape_word(shape);
  if (shape == Shape::Segment || shape == Shape::Circle)
    s += "(" + std::to_string(length) + ")";
  return s;
}

TopologyType topology_type(const DualComplex& dc) {
  size_t n = dc.vertices.size(), m = dc.edges.size();
  if (n == 0) return {TopologyType::Shape::Empty, 0};

  std::vector<size_t> degree(n, 0);
  for (const auto& e : dc.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (size_t i = 0; i < n; ++i)
    if (degree[i] >= 3)
      fail(Errc::NotLogCYShape,
           "vertex '" + dc.vertices[i] + "' has degree " + std::to_string(degree[i]));

  // Count connected pieces by union-find.
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& e : dc.edges) parent[root(e.u)] = root(e.v);
  std::set<size_t> pieces;
  for (size_t i = 0; i < n; ++i) pieces.insert(root(i));

  if (m == 0) {
    if (n == 1) return {TopologyType::Shape::Point, 0};
    if (n == 2) return {TopologyType::Shape::TwoPoints, 0};
    fail(Errc::NotLogCYShape, std::to_string(n) + " isolated vertices");
  }
  if (pieces.size() > 1)
    fail(Errc::NotLogCYShape, std::to_string(pieces.size()) + " connected pieces with edges");

  // Connected, max degree 2: a path (m = n-1) or a cycle (m = n).
  if (m == n - 1) return {TopologyType::Shape::Segment, m};
  if (m == n) {
    if (dc.has_sub_one)
      fail(Errc::NotLogCYShape, "circle next to a component with coefficient < 1");
    return {TopologyType::Shape::Circle, m};
  }
  fail(Errc::NotLogCYShape, "multigraph with " + std::to_string(m) + " edges on " +
                                std::to_string(n) + " vertices");
}

CurveConfiguration corner_blowup(const CurveConfiguration& config, const std::string& at) {
  validate(config);
  const Crossing& x = config.crossing(at);
  if (!is_one(config.component(x.a).coeff) || !is_one(config.component(x.b).coeff))
    fail(Errc::NotACorner, "crossing '" + at + "' has a coefficient < 1 side");

  std::set<std::string> ids, points;
  for (const auto& c : config.components) ids.insert(c.id);
  for (const auto& c : config.crossings) points.insert(c.at);
  auto fresh = [](std::set<std::string>& used, std::string base) {
    while (used.count(base)) base += "'";
    used.insert(base);
    return base;
  };
  std::string exc = fresh(ids, "e_" + at);
  std::string pa = fresh(points, at + "_a");
  std::string pb = fresh(points, at + "_b");

  CurveConfiguration out = config;
  out.components.push_back({exc, kOne, "exceptional over " + at});
  out.crossings.erase(
      std::find_if(out.crossings.begin(), out.crossings.end(),
                   [&](const Crossing& c) { return c.at == at; }));
  out.crossings.push_back({pa, x.a, exc});
  out.crossings.push_back({pb, exc, x.b});
  return out;
}

namespace {

// A group element: where every component index and crossing index goes.
struct Perm {
  std::vector<std::uint32_t> comp, cross;
  bool operator==(const Perm& o) const { return comp == o.comp && cross == o.cross; }
  bool operator<(const Perm& o) const {
    return comp != o.comp ? comp < o.comp : cross < o.cross;
  }
};

Perm compose(const Perm& g, const Perm& h) {  // g after h
  Perm r;
  r.comp.resize(h.comp.size());
  r.cross.resize(h.cross.size());
  for (size_t i = 0; i < h.comp.size(); ++i) r.comp[i] = g.comp[h.comp[i]];
  for (size_t i = 0; i < h.cross.size(); ++i) r.cross[i] = g.cross[h.cross[i]];
  return r;
}

std::vector<std::uint32_t> as_perm(const std::map<std::string, std::string>& images,
                                   const std::map<std::string, size_t>& index,
                                   const char* what) {
  std::vector<std::uint32_t> p(index.size());
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint32_t>(i);
  for (const auto& [from, to] : images) {
    auto f = index.find(from), t = index.find(to);
    if (f == index.end() || t == index.end())
      fail(Errc::NotAnAction, std::string(what) + " map mentions unknown id '" +
                                  (f == index.end() ? from : to) + "'");
    p[f->second] = static_cast<std::uint32_t>(t->second);
  }
  std::vector<bool> hit(p.size(), false);
  for (std::uint32_t v : p) {
    if (hit[v]) fail(Errc::NotAnAction, std::string(what) + " map is not a bijection");
    hit[v] = true;
  }
  return p;
}

}  // namespace

ComplexAction act(const CurveConfiguration& config, const std::vector<ActionGenerator>& gens) {
  validate(config);
  ComplexAction out;
  out.complex = build(config);

  std::map<std::string, size_t> comp_index, cross_index;
  for (size_t i = 0; i < config.components.size(); ++i) comp_index[config.components[i].id] = i;
  for (size_t i = 0; i < config.crossings.size(); ++i) cross_index[config.crossings[i].at] = i;

  std::vector<Perm> seeds;
  for (const ActionGenerator& g : gens) {
    Perm p;
    p.comp = as_perm(g.components, comp_index, "component");
    p.cross = as_perm(g.crossings, cross_index, "crossing");
    for (size_t i = 0; i < p.comp.size(); ++i)
      if (config.components[i].coeff != config.components[p.comp[i]].coeff)
        fail(Errc::NotAnAction, "generator changes the coefficient of '" +
                                    config.components[i].id + "'");
    for (size_t i = 0; i < p.cross.size(); ++i) {
      const Crossing& from = config.crossings[i];
      const Crossing& to = config.crossings[p.cross[i]];
      std::pair<std::uint32_t, std::uint32_t> want{p.comp[comp_index[from.a]],
                                                   p.comp[comp_index[from.b]]};
      if (want.first > want.second) std::swap(want.first, want.second);
      std::pair<std::uint32_t, std::uint32_t> got{
          static_cast<std::uint32_t>(comp_index[to.a]),
          static_cast<std::uint32_t>(comp_index[to.b])};
      if (got.first > got.second) std::swap(got.first, got.second);
      if (want != got)
        fail(Errc::NotAnAction,
             "generator breaks incidence at crossing '" + from.at + "'");
    }
    seeds.push_back(std::move(p));
  }

  Perm id;
  id.comp.resize(config.components.size());
  id.cross.resize(config.crossings.size());
  for (size_t i = 0; i < id.comp.size(); ++i) id.comp[i] = static_cast<std::uint32_t>(i);
  for (size_t i = 0; i < id.cross.size(); ++i) id.cross[i] = static_cast<std::uint32_t>(i);

  std::vector<Perm> elems{id};
  std::map<Perm, std::uint32_t> where{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : seeds) {
      Perm next = compose(g, elems[i]);
      if (where.emplace(next, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > kTableCap)
          fail(Errc::OrderCapExceeded, "permutation closure exceeds table cap");
      }
    }
  }

  size_t n = elems.size();
  std::vector<std::uint32_t> mul(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mul[i * n + j] = where.at(compose(elems[i], elems[j]));
  out.group = GroupTable::from_mul(n, std::move(mul));

  // Restriction to the complex: vertex images and edge images.
  std::vector<size_t> vert_elem;  // component index of each vertex
  for (const auto& v : out.complex.vertices) vert_elem.push_back(comp_index[v]);
  std::vector<size_t> edge_elem;  // crossing index of each edge
  for (const auto& e : out.complex.edges) edge_elem.push_back(cross_index[e.at]);

  auto induced_part = [&](const Perm& p) {
    std::vector<std::uint32_t> r;
    r.reserve(vert_elem.size() + edge_elem.size());
    for (size_t v : vert_elem) r.push_back(p.comp[v]);
    for (size_t e : edge_elem) r.push_back(p.cross[e]);
    return r;
  };

  std::vector<std::vector<std::uint32_t>> induced_of(n);
  std::map<std::vector<std::uint32_t>, std::uint32_t> induced_index;
  std::vector<std::uint32_t> rep;  // one group element per induced element
  for (size_t i = 0; i < n; ++i) {
    induced_of[i] = induced_part(elems[i]);
    if (induced_index.emplace(induced_of[i], static_cast<std::uint32_t>(rep.size())).second)
      rep.push_back(static_cast<std::uint32_t>(i));
    if (induced_of[i] == induced_of[out.group.id])
      out.kernel.push_back(static_cast<std::uint32_t>(i));
  }
  std::sort(out.kernel.begin(), out.kernel.end());
  if (!out.group.is_normal(out.kernel))
    fail(Errc::NotAnAction, "complex-trivial part is not normal");
  out.n_table = out.group.subgroup_table(out.kernel);

  size_t q = rep.size();
  std::vector<std::uint32_t> qmul(q * q);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      qmul[i * q + j] = induced_index.at(induced_of[out.group.at(rep[i], rep[j])]);
  out.induced = GroupTable::from_mul(q, std::move(qmul));

  if (out.group.n != out.kernel.size() * out.induced.n)
    fail(Errc::NotAnAction, "order of G does not factor as |N| * |G_D|");
  return out;
}

Coreg0Check coreg0_obstruction(const ComplexAction& action) {
  if (action.complex.dimension() != 1)
    fail(Errc::WrongDimension, "obstruction needs a 1-dimensional complex");
  if (!action.n_table.is_abelian()) return {false, "N is not abelian"};
  std::uint32_t rank = abelian_rank(action.n_table);
  if (rank > 2) return {false, "N has rank " + std::to_string(rank)};
  const GroupTable& gd = action.induced;
  if (gd.n > 1 && !cyclic_or_dihedral(gd))
    return {false, "G_D of order " + std::to_string(gd.n) + " is neither cyclic nor dihedral"};
  return {true, ""};
}

}  // namespace coreg
