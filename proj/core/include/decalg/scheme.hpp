#pragma once

#include "decalg/chartheory.hpp"
#include "decalg/decomp.hpp"
#include "decalg/permgroup.hpp"

namespace decalg {

/// A (commutative) association scheme: relation index per ordered pair.
struct AssociationScheme {
  std::size_t n = 0;
  int d = 0;  // relations are 0..d
  std::vector<std::vector<int>> rel;
  std::vector<int> transpose_of;
  bool symmetric = false;

  struct AxiomReport {
    bool partition = true;             // (I)
    bool diagonal = true;              // (II)
    bool transpose_closed = true;      // (III)
    bool constant_intersection = true; // (IV)
    bool commutes = true;              // (V)
    std::optional<std::array<int, 3>> failure;  // offending (i, j, k)
    bool all() const {
      return partition && diagonal && transpose_closed && constant_intersection && commutes;
    }
  };
  /// Brute-force re-verification of axioms (I)-(V) over all triples.
  AxiomReport verify_axioms() const;

  /// p[i][j][k], computed by counting; throws if axiom (IV) fails.
  std::vector<std::vector<std::vector<Int>>> intersection_numbers() const;

  /// Validates shape and axioms (I)-(III); relation counts give d.
  static AssociationScheme from_relation_matrix(std::vector<std::vector<int>> rel);
};

/// Orbital scheme of a transitive action.  Axioms (I)-(IV) hold by
/// construction; axiom (V) is verified directly and failure throws
/// InvalidObject naming the offending triple.
AssociationScheme scheme_from_group(const PermGroup& g, const PermAction& action);

/// Adjacency algebra data: eigenspaces, idempotents, intersection and Krein
/// parameters.  Exact mode when every adjacency matrix splits rationally,
/// complex floats otherwise.
struct BoseMesner {
  AssociationScheme scheme;
  bool exact = true;
  std::vector<Matrix> A;
  std::vector<Subspace> V;  // V[0] = span(1,...,1)
  std::vector<Matrix> E;
  /// eigen[i][j]: eigenvalue of A_j on V_i.
  std::vector<std::vector<Scalar>> eigen;
  std::vector<std::vector<std::vector<Scalar>>> p, q;

  std::size_t eigenspace_count() const { return V.size(); }
};

BoseMesner bose_mesner(const AssociationScheme& s, double eps);

struct NortonAlgebra {
  int eigenspace = 0;
  Subspace basis;  // rows: basis of V_i in ambient coordinates
  Algebra algebra;  // the product sigma_ii^i in that basis
  bool zero_product = false;  // sigma_ii^i == 0 (iff q_ii^i == 0)
  bool trivial_flagged = false;  // i == 0 is allowed but flagged
};

NortonAlgebra norton_algebra(const BoseMesner& bm, int i, double eps);

/// Coordinates of pi_i(e_x) in the Norton basis, for every point x.
std::vector<Vector> norton_axes(const BoseMesner& bm, const NortonAlgebra& na, double eps);

struct NortonCertificate {
  DecompositionAlgebra dec;  // indices = the points of the scheme
  NortonAlgebra norton;
  bool complete_eigenbasis = true;
  bool certified = false;  // symmetric scheme with full eigenbases
  bool unit_label_is_unit = false;
  std::string note;
};

/// The axial decomposition-algebra certificate: eigenspace decompositions of
/// ad_{pi_i(e_x)} for every x, the observed fusion law, axes and evaluation
/// map.  Non-symmetric schemes fall back to generalized eigenspaces and are
/// flagged as non-certified.
NortonCertificate norton_axial_certificate(const BoseMesner& bm, int i, double eps);

/// Largest entry residual of sigma_ij^k(pi_i e_x, pi_j e_x) = q_ij^k/n * pi_k(e_x)
/// over all i, j, k, x.
double krein_sigma_residual(const BoseMesner& bm);
/// Smallest real part among all Krein parameters (the Krein condition bounds
/// it below by zero), plus the largest imaginary part magnitude.
std::pair<double, double> krein_bounds(const BoseMesner& bm);

struct CentralizerRefinement {
  /// V_i decomposed along (eigenvalue, character) pairs of the product law.
  DecompositionAlgebra refined;
  FusionLaw eigen_law;   // law refined from the eigenspace decomposition
  FusionLaw rep_law;     // representation law of the centralizer
  std::vector<int> grading_map;  // product-law label -> Z/n element
  FusionLaw grading_group_law;
  Matrix rho_x;  // the permutation automorphism of V_i induced by x
  bool grading_is_morphism = false;
  bool miyamoto_matches_rho = false;
  std::size_t rho_group_order = 0;  // order of <rho(y) : y in the class>
};

/// The conjugacy-class pipeline: scheme from conjugation, Norton algebra,
/// eigenspace decomposition at the point x refined by the centralizer's
/// isotypic components, with its Z/n grading and Miyamoto map.
CentralizerRefinement refine_with_centralizer(const BoseMesner& bm, int i, const PermGroup& g,
                                              const Perm& x, const CharacterTable& h_table,
                                              double eps);

}  // namespace decalg
