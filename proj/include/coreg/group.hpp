// Finite matrix groups: closure from generators, dense multiplication
// tables, structure recognition, normal subgroup lattices, quotients, and
// unimodular lifts of projective groups.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coreg/linalg.hpp"

namespace coreg {

inline constexpr std::uint32_t kOrderCap = 10000;  // closure abort threshold
inline constexpr std::uint32_t kTableCap = 4096;   // dense table size limit

// A finite group presented as a dense multiplication table.  Everything
// downstream of matrices (quotients, recognition, rank bounds) runs here.
struct GroupTable {
  size_t n = 0;
  size_t id = 0;
  std::vector<std::uint32_t> mul;  // n*n row-major: mul[i*n+j] = i*j
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> orders;

  // Validates the table is a group (identity, inverses, associativity is
  // the caller's responsibility for performance).
  static GroupTable from_mul(size_t n, std::vector<std::uint32_t> mul);

  std::uint32_t at(size_t i, size_t j) const { return mul[i * n + j]; }
  std::uint32_t power(size_t i, std::int64_t e) const;
  bool is_abelian() const;
  std::map<std::uint32_t, size_t> order_histogram() const;

  // Smallest subgroup containing seed; sorted indices.
  std::vector<std::uint32_t> subgroup_closure(std::vector<std::uint32_t> seed) const;
  bool is_subgroup(const std::vector<std::uint32_t>& sorted_set) const;
  bool is_normal(const std::vector<std::uint32_t>& sorted_sub) const;
  // Classes sorted by smallest member; members sorted.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;
  // Every normal subgroup, including the trivial one and the whole group,
  // sorted by size then lexicographically.
  std::vector<std::vector<std::uint32_t>> normal_subgroups() const;
  bool is_simple() const;
  std::vector<std::uint32_t> center() const;
  std::vector<std::uint32_t> derived_subgroup() const;

  // Table of a closed subset, indexed by position in the sorted input.
  GroupTable subgroup_table(const std::vector<std::uint32_t>& sorted_sub) const;
  // Table of G/N for a normal subgroup; coset 0 is the identity coset.
  GroupTable quotient(const std::vector<std::uint32_t>& sorted_normal_sub) const;
};

// Canonical structure name for reports and coarse dichotomies.
struct GroupId {
  enum class Family { Trivial, Cyclic, AbelianOther, Sym3, Dihedral, Alt4, Sym4, Alt5, Other };
  Family family = Family::Trivial;
  std::uint64_t order = 1;
  bool abelian = true;
  std::string name;  // "C1", "C6", "C2xC2", "S3", "D8", "A4", "S4", "A5", "G36"
};

GroupId recognize(const GroupTable& t);
bool is_cyclic(const GroupTable& t);
// Order 2m with an inverted cyclic subgroup of order m >= 2; this includes
// C2xC2 and S3, matching the subgroups-of-PGL2 convention.
bool is_dihedral(const GroupTable& t);
bool is_alt4(const GroupTable& t);
bool is_sym4(const GroupTable& t);
bool is_alt5(const GroupTable& t);
bool cyclic_or_dihedral(const GroupTable& t);
bool is_polyhedral(const GroupTable& t);  // A4, S4 or A5

// Invariant factors d1 | d2 | ... of a finite abelian group, largest first.
std::vector<std::uint32_t> abelian_invariant_factors(const GroupTable& t);
// Minimal number of generators of a finite abelian group.
std::uint32_t abelian_rank(const GroupTable& t);

// A finite group of invertible matrices, closed under multiplication.
// Projective groups keep one canonical representative per scaling class
// (first nonzero entry scaled to 1).  Element 0 is the identity; all
// elements share one conductor, so equal values have equal representations.
class MatGroup {
 public:
  MatGroup() = default;

  // Breadth-first closure of the generators; deterministic element order.
  // Fails OrderCapExceeded when the closure passes cap.
  static MatGroup closure(const std::vector<CMat>& gens, bool projective,
                          std::uint32_t cap = kOrderCap);
  // Wraps an already closed, duplicate-free element list; fails NotClosed.
  static MatGroup from_elements(std::vector<CMat> elems, bool projective);

  size_t order() const { return elems_.size(); }
  size_t dim() const { return elems_.empty() ? 0 : elems_[0].rows; }
  bool projective() const { return projective_; }
  const std::vector<CMat>& elements() const { return elems_; }
  const CMat& elem(size_t i) const { return elems_[i]; }
  // Input generators embedded into the group conductor but not rescaled;
  // unimodular lifts start from these.
  const std::vector<CMat>& input_generators() const { return input_gens_; }
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

  const GroupTable& table() const;
  size_t identity_index() const { return table_.id; }
  std::uint32_t mul(size_t i, size_t j) const { return table_.at(i, j); }
  std::uint32_t inv(size_t i) const { return table_.inv[i]; }
  std::uint32_t element_order(size_t i) const { return table_.orders[i]; }
  bool is_abelian() const { return table_.is_abelian(); }

  std::optional<std::uint32_t> find(const CMat& m) const;
  bool contains(const CMat& m) const { return find(m).has_value(); }
  bool contains_group(const MatGroup& other) const;

 private:
  bool projective_ = false;
  std::vector<CMat> elems_;
  std::vector<CMat> input_gens_;
  std::vector<std::uint32_t> gen_idx_;
  GroupTable table_;
};

// Preimage in SL_dim of a projective group: closure of the det-1 scalings
// of the input generators together with zeta_dim * I.  Its order is always
// dim * |G|.  Fails ConductorOverflow when a generator determinant is not a
// root of unity (rescale the generator so it is).
MatGroup sl_lift(const MatGroup& g);

// True when the given subgroup of a projective group admits simultaneously
// diagonalizable matrix lifts: every matrix commutator of representatives
// must be exactly the identity, not just scalar.
bool projectively_diagonalizable(const MatGroup& g, const std::vector<std::uint32_t>& sub);

}  // namespace coreg
