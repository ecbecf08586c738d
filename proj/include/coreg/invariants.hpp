// Group actions on spaces of forms: symmetric power matrices, semi-invariant
// subspaces, invariant dimension counts by two independent routes, and the
// bilinear (1,1)-forms on a product of two lines.

#pragma once

#include "coreg/group.hpp"

namespace coreg {

// Exponent vectors of the degree-d monomials in `vars` variables, in
// lexicographic order with the first variable weighted heaviest.
std::vector<std::vector<std::uint32_t>> monomial_exponents(size_t vars, std::uint32_t d);

// Action of g on degree-d forms by substitution f -> f(g^{-1} x), written on
// the monomial basis.  Multiplicative: the matrix of gh is the product of
// the matrices of g and h.
CMat sym_power_matrix(const CMat& g, std::uint32_t d);

// Joint character subspaces of the degree-d form action of the group
// generators.  The group must be linear with finite-order generators (use a
// unimodular lift of a projective group).
std::vector<CharLeaf> semi_invariant_forms(const MatGroup& lift, std::uint32_t d);

// Dimension of the space of exactly invariant degree-d forms, read off the
// joint eigenspace refinement.
size_t invariant_form_dimension(const MatGroup& lift, std::uint32_t d);

// The same dimension by averaging the traces of the symmetric power over
// the whole group; the trace of Sym^d(g) is the complete homogeneous
// function h_d of the eigenvalues, evaluated through Newton's recursion
// from traces of matrix powers.  Fails if the average is not an integer.
size_t invariant_form_dimension_by_trace(const MatGroup& lift, std::uint32_t d);

// Operator on the 4-dimensional space of (1,1)-forms x^T C y (C row-major)
// induced by a pair of factor matrices, with an optional factor swap.
CMat bilinear_form_operator(const CMat& g1, const CMat& g2, bool swap);

// Operator on the direct sum of (1,0)- and (0,1)-forms (covectors on the
// two rulings, stacked), induced by the same data.
CMat ruled_linear_form_operator(const CMat& g1, const CMat& g2, bool swap);

// A semi-invariant (1,1)-form whose 2x2 coefficient matrix has nonzero
// determinant, if one exists: the group then fixes an irreducible
// (1,1)-curve.  Determinant vanishing on a whole eigenspace is decided by
// polarization, so pencils of reducible forms do not fool it.
std::optional<std::vector<Cyclotomic>> irreducible_11_form(const std::vector<CMat>& ops);
bool has_irreducible_11_curve(const std::vector<CMat>& ops);

// True when every operator maps every form to a scalar multiple of a form
// in the list; fills `perms` (one permutation per operator) when asked.
bool forms_permuted_by(const std::vector<CMat>& ops,
                       const std::vector<std::vector<Cyclotomic>>& forms,
                       std::vector<std::vector<std::uint32_t>>* perms = nullptr);

}  // namespace coreg
