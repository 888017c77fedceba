#pragma once

#include "decalg/decomp.hpp"
#include "decalg/fusion.hpp"
#include "decalg/matrix.hpp"
#include "decalg/permgroup.hpp"

namespace decalg {

/// Values of a class function, aligned with the group's conjugacy classes.
using ClassFunction = std::vector<Scalar>;

/// Irreducible character data for a finite permutation group.  The table is
/// either entirely exact or entirely complex-float.  Rows are characters,
/// columns follow the group's deterministic class order.  The first row must
/// be the trivial character.
struct CharacterTable {
  PermGroup group;
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> values;

  std::size_t num_classes() const { return group.conjugacy_classes().size(); }
  std::size_t num_chars() const { return values.size(); }
  bool exact() const;
  Scalar value(std::size_t chi, int element_index) const;
  int degree(std::size_t chi) const;

  /// Row orthogonality within eps plus shape checks; throws InvalidObject.
  void validate(double eps) const;

  Scalar inner(const ClassFunction& a, const ClassFunction& b) const;
  /// <a, chi_i> for every irreducible, as integers (error if not integral
  /// within eps).
  std::vector<Int> multiplicities(const ClassFunction& a, double eps) const;
};

/// chi in chi1 * chi2 iff chi is a constituent of the product character.
FusionLaw representation_fusion_law(const CharacterTable& t, double eps);

/// Number of domain points fixed by each class representative.
ClassFunction permutation_character(const CharacterTable& t, const PermAction& action);

/// The subgroup of elements with singleton conjugacy classes.
PermGroup center(const PermGroup& g);

/// Regular permutation representation of G/N for a normal subgroup given by
/// its element indices; also reports the coset of every element of G.
struct QuotientGroup {
  PermGroup group;
  std::vector<int> coset_of;
};
QuotientGroup quotient_regular(const PermGroup& g, const std::vector<int>& normal_elements);

/// Character table of an abelian group via its coordinate decomposition;
/// exact when the exponent divides 2, complex-float otherwise.
CharacterTable abelian_character_table(const PermGroup& g);

/// Abelian tables, plus the D4/Q8 pattern (all irreducibles linear except
/// one); enough for every group this artifact constructs tables for.
CharacterTable small_character_table(const PermGroup& g);

/// The grading of Prop-style center restriction: chi -> chi|_Z / chi(1),
/// landing in the dual of the center.
struct CenterGrading {
  CharacterTable center_table;
  /// For each irreducible of G, the index of its central character in Irr(Z).
  std::vector<int> map;
  FusionLaw rep_law;     // representation fusion law of the input table
  FusionLaw center_law;  // group fusion law of Irr(Z)
  FusionMorphism as_morphism() const;
};
CenterGrading center_grading_map(const CharacterTable& t, double eps);

/// A linear representation of the group on an n-dimensional module, given by
/// one matrix per group generator (aligned with group.generators()).
struct MatrixRep {
  PermGroup group;
  std::vector<Matrix> gen_images;
  std::size_t dim = 0;

  void validate_shape() const;
  /// One matrix per group element; checks multiplicative consistency on every
  /// Cayley edge and throws InvalidObject on conflict.
  std::vector<Matrix> realize(double eps) const;
};

struct IsotypicComponent {
  std::size_t chi;  // character index in the table
  Subspace space;
  int multiplicity = 0;
};

struct IsotypicDecomposition {
  std::vector<IsotypicComponent> components;  // one per character, table order
  bool multiplicity_free = false;
};

/// Projection-operator decomposition p_chi = (chi(1)/|H|) sum_g conj(chi(g)) rho(g);
/// errors if the projections fail to resolve the identity.
IsotypicDecomposition isotypic_decomposition(const MatrixRep& rep, const CharacterTable& t,
                                             double eps);

/// The finest law the decomposition is known to satisfy: structure-constant
/// support intersected with the character containment test.  Each part must
/// be H-invariant.
FusionLaw refine_fusion_law(const Algebra& algebra, const std::vector<Subspace>& parts,
                            const std::vector<std::string>& part_labels, const MatrixRep& rep,
                            const CharacterTable& t, double eps);

/// Isotypic decompositions for a family of representations sharing one
/// character table, bundled as a decomposition algebra over the
/// representation fusion law; axial with canonical axes when multiplicity-free.
DecompositionAlgebra construct_decomposition_algebra_from_group(
    const Algebra& algebra, const std::vector<MatrixRep>& subgroups, const CharacterTable& t,
    double eps);

}  // namespace decalg
