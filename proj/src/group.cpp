#include "coreg/group.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "coreg/errors.hpp"

namespace coreg {

GroupTable GroupTable::from_mul(size_t n, std::vector<std::uint32_t> mul) {
  if (n == 0 || mul.size() != n * n) fail(Errc::InvalidInput, "multiplication table shape");
  for (std::uint32_t v : mul)
    if (v >= n) fail(Errc::InvalidInput, "multiplication table entry out of range");
  GroupTable t;
  t.n = n;
  t.mul = std::move(mul);
  size_t id = n;
  for (size_t i = 0; i < n && id == n; ++i) {
    bool ok = true;
    for (size_t j = 0; j < n; ++j)
      if (t.at(i, j) != j || t.at(j, i) != j) {
        ok = false;
        break;
      }
    if (ok) id = i;
  }
  if (id == n) fail(Errc::InvalidInput, "multiplication table has no identity");
  t.id = id;
  t.inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    size_t found = n;
    for (size_t j = 0; j < n; ++j)
      if (t.at(i, j) == id) {
        found = j;
        break;
      }
    if (found == n || t.at(found, i) != id)
      fail(Errc::InvalidInput, "multiplication table has no inverse");
    t.inv[i] = static_cast<std::uint32_t>(found);
  }
  t.orders.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    std::uint32_t k = 1;
    size_t x = i;
    while (x != id) {
      x = t.at(x, i);
      ++k;
      if (k > n) fail(Errc::InvalidInput, "multiplication table is not a group");
    }
    t.orders[i] = k;
  }
  return t;
}

std::uint32_t GroupTable::power(size_t i, std::int64_t e) const {
  std::int64_t ord = static_cast<std::int64_t>(orders[i]);
  e %= ord;
  if (e < 0) e += ord;
  size_t acc = id;
  for (std::int64_t k = 0; k < e; ++k) acc = at(acc, i);
  return static_cast<std::uint32_t>(acc);
}

bool GroupTable::is_abelian() const {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::map<std::uint32_t, size_t> GroupTable::order_histogram() const {
  std::map<std::uint32_t, size_t> h;
  for (std::uint32_t o : orders) ++h[o];
  return h;
}

std::vector<std::uint32_t> GroupTable::subgroup_closure(std::vector<std::uint32_t> seed) const {
  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> members;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(static_cast<std::uint32_t>(id));
  for (std::uint32_t s : seed) {
    if (s >= n) fail(Errc::InvalidInput, "subgroup seed out of range");
    add(s);
  }
  size_t done = 0;
  while (done < members.size()) {
    size_t sz = members.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = (i < done ? done : 0); j < sz; ++j) {
        add(at(members[i], members[j]));
        add(at(members[j], members[i]));
      }
    done = sz;
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool GroupTable::is_subgroup(const std::vector<std::uint32_t>& s) const {
  if (!std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(id))) return false;
  for (std::uint32_t x : s) {
    if (!std::binary_search(s.begin(), s.end(), inv[x])) return false;
    for (std::uint32_t y : s)
      if (!std::binary_search(s.begin(), s.end(), at(x, y))) return false;
  }
  return true;
}

bool GroupTable::is_normal(const std::vector<std::uint32_t>& sub) const {
  for (size_t g = 0; g < n; ++g)
    for (std::uint32_t s : sub)
      if (!std::binary_search(sub.begin(), sub.end(), at(at(g, s), inv[g]))) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> GroupTable::conjugacy_classes() const {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> classes;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> cls;
    for (size_t g = 0; g < n; ++g) {
      std::uint32_t c = at(at(g, i), inv[g]);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<std::uint32_t>> GroupTable::normal_subgroups() const {
  std::set<std::vector<std::uint32_t>> found;
  found.insert({static_cast<std::uint32_t>(id)});
  for (const auto& cls : conjugacy_classes()) found.insert(subgroup_closure(cls));
  // Normal subgroups are exactly the joins of single-class closures, so
  // iterate pairwise joins to a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        if (std::includes(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                          snapshot[j].end()) ||
            std::includes(snapshot[j].begin(), snapshot[j].end(), snapshot[i].begin(),
                          snapshot[i].end()))
          continue;
        std::vector<std::uint32_t> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        if (found.insert(subgroup_closure(seed)).second) grew = true;
      }
  }
  std::vector<std::vector<std::uint32_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool GroupTable::is_simple() const { return n > 1 && normal_subgroups().size() == 2; }

std::vector<std::uint32_t> GroupTable::center() const {
  std::vector<std::uint32_t> z;
  for (size_t i = 0; i < n; ++i) {
    bool central = true;
    for (size_t j = 0; j < n && central; ++j) central = at(i, j) == at(j, i);
    if (central) z.push_back(static_cast<std::uint32_t>(i));
  }
  return z;
}

std::vector<std::uint32_t> GroupTable::derived_subgroup() const {
  std::vector<std::uint32_t> comms;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) comms.push_back(at(at(i, j), inv[at(j, i)]));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(comms);
}

GroupTable GroupTable::subgroup_table(const std::vector<std::uint32_t>& sub) const {
  std::vector<std::uint32_t> local(n, UINT32_MAX);
  for (size_t i = 0; i < sub.size(); ++i) local[sub[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> m(sub.size() * sub.size());
  for (size_t i = 0; i < sub.size(); ++i)
    for (size_t j = 0; j < sub.size(); ++j) {
      std::uint32_t p = at(sub[i], sub[j]);
      if (local[p] == UINT32_MAX) fail(Errc::NotClosed, "subset is not closed under product");
      m[i * sub.size() + j] = local[p];
    }
  return from_mul(sub.size(), std::move(m));
}

GroupTable GroupTable::quotient(const std::vector<std::uint32_t>& nsub) const {
  if (!is_subgroup(nsub) || !is_normal(nsub))
    fail(Errc::InvalidInput, "quotient by a non-normal subset");
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  auto assign = [&](std::uint32_t x) {
    if (coset_of[x] != UINT32_MAX) return;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (std::uint32_t s : nsub) coset_of[at(x, s)] = c;
  };
  assign(static_cast<std::uint32_t>(id));
  for (std::uint32_t x = 0; x < n; ++x) assign(x);
  size_t q = reps.size();
  std::vector<std::uint32_t> m(q * q);
  for (size_t a = 0; a < q; ++a)
    for (size_t b = 0; b < q; ++b) m[a * q + b] = coset_of[at(reps[a], reps[b])];
  return from_mul(q, std::move(m));
}

bool is_cyclic(const GroupTable& t) {
  for (std::uint32_t o : t.orders)
    if (o == t.n) return true;
  return false;
}

bool is_dihedral(const GroupTable& t) {
  if (t.n < 4 || t.n % 2 != 0) return false;
  size_t m = t.n / 2;
  for (size_t r = 0; r < t.n; ++r) {
    if (t.orders[r] != m) continue;
    std::vector<std::uint32_t> rot = t.subgroup_closure({static_cast<std::uint32_t>(r)});
    for (size_t s = 0; s < t.n; ++s) {
      if (t.orders[s] != 2 || std::binary_search(rot.begin(), rot.end(), s)) continue;
      if (t.at(t.at(s, r), s) == t.inv[r]) return true;
    }
  }
  return false;
}

bool is_alt4(const GroupTable& t) {
  if (t.n != 12 || t.is_abelian()) return false;
  auto h = t.order_histogram();
  return h == std::map<std::uint32_t, size_t>{{1, 1}, {2, 3}, {3, 8}};
}

bool is_sym4(const GroupTable& t) {
  if (t.n != 24 || t.is_abelian() || t.center().size() != 1) return false;
  auto h = t.order_histogram();
  return h == std::map<std::uint32_t, size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
}

bool is_alt5(const GroupTable& t) { return t.n == 60 && t.is_simple(); }

bool cyclic_or_dihedral(const GroupTable& t) { return is_cyclic(t) || is_dihedral(t); }

bool is_polyhedral(const GroupTable& t) { return is_alt4(t) || is_sym4(t) || is_alt5(t); }

std::vector<std::uint32_t> abelian_invariant_factors(const GroupTable& t) {
  if (!t.is_abelian()) fail(Errc::InvalidInput, "invariant factors of a nonabelian group");
  std::vector<std::uint32_t> factors;
  GroupTable cur = t;
  while (cur.n > 1) {
    size_t best = cur.id;
    for (size_t i = 0; i < cur.n; ++i)
      if (cur.orders[i] > cur.orders[best]) best = i;
    factors.push_back(cur.orders[best]);
    cur = cur.quotient(cur.subgroup_closure({static_cast<std::uint32_t>(best)}));
  }
  return factors;
}

std::uint32_t abelian_rank(const GroupTable& t) {
  if (!t.is_abelian()) fail(Errc::InvalidInput, "rank of a nonabelian group");
  std::uint32_t rank = 0;
  for (std::uint32_t p = 2; p <= t.n; ++p) {
    if (t.n % p != 0) continue;
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    size_t killed = 0;
    for (size_t i = 0; i < t.n; ++i)
      if (t.power(i, p) == t.id) ++killed;
    std::uint32_t d = 0;
    while (killed > 1) {
      killed /= p;
      ++d;
    }
    rank = std::max(rank, d);
  }
  return rank;
}

GroupId recognize(const GroupTable& t) {
  GroupId r;
  r.order = t.n;
  r.abelian = t.is_abelian();
  if (t.n == 1) {
    r.family = GroupId::Family::Trivial;
    r.name = "C1";
    return r;
  }
  if (is_cyclic(t)) {
    r.family = GroupId::Family::Cyclic;
    r.name = "C" + std::to_string(t.n);
    return r;
  }
  if (r.abelian) {
    r.family = GroupId::Family::AbelianOther;
    std::string s;
    for (std::uint32_t f : abelian_invariant_factors(t))
      s += (s.empty() ? "C" : "xC") + std::to_string(f);
    r.name = s;
    return r;
  }
  if (t.n == 6) {
    r.family = GroupId::Family::Sym3;
    r.name = "S3";
    return r;
  }
  if (is_alt4(t)) {
    r.family = GroupId::Family::Alt4;
    r.name = "A4";
    return r;
  }
  if (is_sym4(t)) {
    r.family = GroupId::Family::Sym4;
    r.name = "S4";
    return r;
  }
  if (is_alt5(t)) {
    r.family = GroupId::Family::Alt5;
    r.name = "A5";
    return r;
  }
  if (is_dihedral(t)) {
    r.family = GroupId::Family::Dihedral;
    r.name = "D" + std::to_string(t.n);
    return r;
  }
  r.family = GroupId::Family::Other;
  r.name = "G" + std::to_string(t.n);
  return r;
}

namespace {

// Hash-keyed element index with exact equality confirmation.
struct ElemIndex {
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

  std::optional<std::uint32_t> find(const std::vector<CMat>& elems, const CMat& m) const {
    auto it = buckets.find(m.hash());
    if (it == buckets.end()) return std::nullopt;
    for (std::uint32_t i : it->second)
      if (elems[i] == m) return i;
    return std::nullopt;
  }

  void add(const CMat& m, std::uint32_t idx) { buckets[m.hash()].push_back(idx); }
};

}  // namespace

MatGroup MatGroup::closure(const std::vector<CMat>& gens, bool projective, std::uint32_t cap) {
  if (gens.empty()) fail(Errc::InvalidInput, "closure needs at least one generator");
  size_t d = gens[0].rows;
  if (d == 0) fail(Errc::WrongDimension, "zero-dimensional generator");
  std::uint32_t cond = 1;
  for (const CMat& g : gens) {
    if (g.rows != d || g.cols != d) fail(Errc::DimensionMismatch, "generator shapes differ");
    if (g.det().is_zero()) fail(Errc::NonInvertibleGenerator, "generator is singular");
    cond = lcm_u32_checked(cond, g.common_conductor());
  }

  MatGroup grp;
  grp.projective_ = projective;
  for (const CMat& g : gens) {
    CMat e = g.embedded(cond);
    grp.input_gens_.push_back(e);
  }
  std::vector<CMat> use = grp.input_gens_;
  if (projective)
    for (CMat& g : use) g = projective_canonical(g);

  ElemIndex index;
  std::vector<CMat>& elems = grp.elems_;
  elems.push_back(CMat::identity(d).embedded(cond));
  index.add(elems[0], 0);
  // parent[i] * use[via_gen[i]] == elems[i]; right-translation permutations
  // of the generators get filled as the search multiplies.
  std::vector<std::uint32_t> parent{0}, via_gen{0};
  std::vector<std::vector<std::uint32_t>> rperm(use.size());

  for (std::uint32_t at = 0; at < elems.size(); ++at) {
    for (size_t k = 0; k < use.size(); ++k) {
      CMat p = elems[at] * use[k];
      if (projective) p = projective_canonical(p);
      auto existing = index.find(elems, p);
      std::uint32_t idx;
      if (existing) {
        idx = *existing;
      } else {
        idx = static_cast<std::uint32_t>(elems.size());
        if (idx >= cap) fail(Errc::OrderCapExceeded, "group closure exceeds " + std::to_string(cap));
        elems.push_back(std::move(p));
        index.add(elems.back(), idx);
        parent.push_back(at);
        via_gen.push_back(static_cast<std::uint32_t>(k));
      }
      rperm[k].push_back(idx);  // rperm[k][at] = at * gen_k
    }
  }

  grp.gen_idx_.reserve(use.size());
  for (size_t k = 0; k < use.size(); ++k) grp.gen_idx_.push_back(rperm[k][0]);

  size_t n = elems.size();
  if (n > kTableCap)
    fail(Errc::OrderCapExceeded,
         "group of order " + std::to_string(n) + " exceeds the table limit");
  // Right translation by elems[j], built along the search tree:
  // R_{p*g} = R_g after R_p.
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
  grp.table_ = GroupTable::from_mul(n, std::move(mul));
  return grp;
}

MatGroup MatGroup::from_elements(std::vector<CMat> elems, bool projective) {
  if (elems.empty()) fail(Errc::InvalidInput, "empty element list");
  size_t d = elems[0].rows;
  std::uint32_t cond = 1;
  for (const CMat& m : elems) {
    if (m.rows != d || m.cols != d) fail(Errc::DimensionMismatch, "element shapes differ");
    cond = lcm_u32_checked(cond, m.common_conductor());
  }
  MatGroup grp;
  grp.projective_ = projective;
  for (CMat& m : elems) {
    m = m.embedded(cond);
    if (projective) m = projective_canonical(m);
  }
  // The identity goes first; everything else keeps its given order.
  CMat id = CMat::identity(d).embedded(cond);
  std::vector<CMat> ordered;
  ordered.push_back(id);
  for (CMat& m : elems)
    if (!(m == id)) ordered.push_back(std::move(m));
  if (ordered.size() != elems.size()) fail(Errc::NotClosed, "element list lacks the identity");
  ElemIndex index;
  for (std::uint32_t i = 0; i < ordered.size(); ++i) {
    if (index.find(ordered, ordered[i])) fail(Errc::NotClosed, "duplicate element");
    index.add(ordered[i], i);
  }
  size_t n = ordered.size();
  if (n > kTableCap) fail(Errc::OrderCapExceeded, "element list exceeds the table limit");
  std::vector<std::uint32_t> mul(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CMat p = ordered[i] * ordered[j];
      if (projective) p = projective_canonical(p);
      auto idx = index.find(ordered, p);
      if (!idx) fail(Errc::NotClosed, "product escapes the element list");
      mul[i * n + j] = *idx;
    }
  grp.elems_ = std::move(ordered);
  grp.input_gens_ = grp.elems_;
  grp.gen_idx_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) grp.gen_idx_[i] = i;
  grp.table_ = GroupTable::from_mul(n, std::move(mul));
  return grp;
}

const GroupTable& MatGroup::table() const {
  if (table_.n != elems_.size()) fail(Errc::InvalidConfiguration, "group has no table");
  return table_;
}

std::optional<std::uint32_t> MatGroup::find(const CMat& m) const {
  if (elems_.empty() || m.rows != dim() || m.cols != dim()) return std::nullopt;
  CMat q = m;
  if (projective_) {
    if (q.is_zero()) return std::nullopt;
    q = projective_canonical(q);
  }
  std::uint32_t cond = elems_[0].common_conductor();
  std::uint32_t qcond = q.common_conductor();
  if (cond % qcond == 0) {
    // Same-conductor representations are unique, so hash lookup is exact.
    q = q.embedded(cond);
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].hash() == q.hash() && elems_[i] == q) return i;
    return std::nullopt;
  }
  for (std::uint32_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == q) return i;
  return std::nullopt;
}

bool MatGroup::contains_group(const MatGroup& other) const {
  if (other.projective() != projective_ || other.dim() != dim()) return false;
  for (const CMat& m : other.elements())
    if (!contains(m)) return false;
  return true;
}

MatGroup sl_lift(const MatGroup& g) {
  if (!g.projective()) fail(Errc::InvalidConfiguration, "lift of a non-projective group");
  size_t d = g.dim();
  std::vector<CMat> gens;
  for (const CMat& m : g.input_generators()) gens.push_back(det_one_scaled(m));
  CMat scalar = CMat::identity(d).scaled(Cyclotomic::zeta(static_cast<std::uint32_t>(d)));
  gens.push_back(scalar);
  std::uint32_t want = static_cast<std::uint32_t>(d * g.order());
  MatGroup lift = MatGroup::closure(gens, false, want + 1);
  if (lift.order() != want)
    fail(Errc::InvalidConfiguration, "unimodular lift order " + std::to_string(lift.order()) +
                                         ", expected " + std::to_string(want));
  return lift;
}

bool projectively_diagonalizable(const MatGroup& g, const std::vector<std::uint32_t>& sub) {
  for (size_t a = 0; a < sub.size(); ++a) {
    const CMat& x = g.elem(sub[a]);
    CMat xi = x.inverse();
    for (size_t b = a + 1; b < sub.size(); ++b) {
      const CMat& y = g.elem(sub[b]);
      CMat comm = x * y * xi * y.inverse();
      if (!comm.is_identity()) return false;
    }
  }
  return true;
}

}  // namespace coreg
