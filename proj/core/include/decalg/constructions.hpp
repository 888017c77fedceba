#pragma once

#include "decalg/chartheory.hpp"
#include "decalg/decomp.hpp"
#include "decalg/miyamoto.hpp"

namespace decalg {

/// The Jordan algebra M_n(Q)^+ on the basis E_ij (row-major), with the
/// symmetrized product a . b = (ab + ba) / 2.
Algebra jordan_matrix_algebra(std::size_t n);
std::size_t jordan_basis_index(std::size_t n, std::size_t i, std::size_t j);
/// Coordinates of the matrix unit E_ij.
Vector jordan_unit(std::size_t n, std::size_t i, std::size_t j);

/// The cyclic group of order two as a fusion law, labels "0", "1".
FusionLaw z2_group_law();
/// The finest grading of the Jordan law: e, z -> 0, h -> 1.
FusionMorphism jordan_z2_grading();

/// Peirce decomposition at an idempotent: eigenspaces of ad for 1, 0, 1/2,
/// labeled by the Jordan law elements e, z, h.
Decomposition peirce_decomposition(const Algebra& jordan, const Vector& idempotent);

/// J_n with the Peirce decompositions at the diagonal idempotents
/// E_11..E_nn, axes E_ii and evaluation (1, 0, 1/2): a primitive axial
/// decomposition algebra.
DecompositionAlgebra peirce_context(std::size_t n);

/// The corner embedding J_n -> J_m together with the matching of Peirce
/// decompositions; a valid (non-surjective for m > n) axial morphism.
DecMorphism jordan_corner_embedding(std::size_t n, std::size_t m, double eps = 1e-9);

/// From a Z/2-graded decomposition algebra, the extension B = A + M with a
/// two-dimensional null module M and the doubled family of decompositions
/// Omega'[i,1] = (A_1 + Re, A_s + Rf), Omega'[i,2] = (A_1 + Rf, A_s + Re).
DecompositionAlgebra null_plane_extension(const DecompositionAlgebra& graded);
/// The inclusion A -> B along choices c_i in {0, 1} picking Omega'[i, c_i+1].
DecMorphism null_plane_inclusion(const DecompositionAlgebra& graded,
                                 const DecompositionAlgebra& extended,
                                 const std::vector<int>& choices, double eps = 1e-9);

/// Closes a finite matrix group and returns its regular permutation model
/// together with the matrix representation aligned to it.
std::pair<PermGroup, MatrixRep> matrix_group_as_permgroup(const std::vector<Matrix>& gens,
                                                          std::size_t cap = 10000);

/// The centralizer of conjugation by diag(-1,1,1) inside the group of
/// signed-permutation automorphisms of J_3, as a concrete matrix group with
/// an abstract regular permutation model and its character table.
struct SignedPermExample {
  Algebra jordan;       // J_3
  PermGroup group;      // regular model, order 8
  MatrixRep rep;        // action on J_3
  CharacterTable table;
  Matrix involution;    // the action of conjugation by diag(-1,1,1)
};
SignedPermExample signed_perm_centralizer_example();

}  // namespace decalg
