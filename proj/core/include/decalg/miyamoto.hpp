#pragma once

#include "decalg/decomp.hpp"
#include "decalg/fpgroup.hpp"

namespace decalg {

/// A character of the grading group: one invertible scalar per group element,
/// multiplicative on the Cayley table.
struct RCharacter {
  std::vector<Scalar> values;
};

/// Closure of a finite set of matrices under multiplication, with one
/// generator word per element.  Exact matrices hash exactly; float matrices
/// use quantized keys and should be treated as heuristic.
struct MatrixGroupClosure {
  bool exhausted = false;
  std::vector<Matrix> elements;  // identity first
  std::vector<Word> words;
  std::size_t order() const { return elements.size(); }
  std::optional<int> index_of(const Matrix& m) const;
};
MatrixGroupClosure matrix_group_closure(const std::vector<Matrix>& generators,
                                        std::size_t cap);

/// A graded decomposition algebra together with a finite character subgroup.
/// `base` may carry the axial structure over the original law; `graded` is its
/// pushforward along `grading` (or `base` itself when the law is already a
/// group fusion law).
struct MiyamotoContext {
  DecompositionAlgebra base;
  std::optional<FusionMorphism> grading;
  DecompositionAlgebra graded;
  CayleyTable gamma;
  std::vector<RCharacter> chars;  // chars[0] is trivial; closed under product
  std::vector<std::vector<int>> char_mult;
  std::vector<int> char_inv;
  double eps = 1e-9;

  std::size_t index_count() const { return graded.index_count(); }
  bool exact() const;

  /// Construction verifies the graded fusion containment A_g A_h <= A_gh,
  /// which is exactly what makes every Miyamoto map an algebra automorphism.
  static MiyamotoContext make(DecompositionAlgebra base,
                              std::optional<FusionMorphism> grading,
                              std::vector<RCharacter> chars, double eps = 1e-9);
  /// The canonical {1, chi} pair of a Z/2-graded context.
  static std::vector<RCharacter> pm1_characters(const CayleyTable& gamma);

  struct Cache {
    std::vector<Matrix> basis, basis_inv;     // per decomposition index
    std::vector<std::vector<Matrix>> tau;     // tau[i][chi]
  };
  std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

/// The linear map scaling A_g^i by chi(g); an algebra automorphism because
/// the context's graded decomposition passed the fusion containment check.
Matrix miyamoto_map(const MiyamotoContext& ctx, std::size_t i, std::size_t chi);

/// Direct automorphism assertion T(ab) = T(a)T(b) on the operator level;
/// used by tests, not on the construction path.
bool is_algebra_automorphism(const Algebra& a, const Matrix& t, double eps);

MatrixGroupClosure miyamoto_group(const MiyamotoContext& ctx, std::size_t cap = 1000000);

struct ClosureReport {
  bool closed = true;
  /// pi[i][chi][j] = index of the decomposition tau_{i,chi} sends Omega[j] to
  /// (smallest match).
  std::vector<std::vector<std::vector<int>>> pi;
  struct Failure {
    std::size_t i, chi, j;
  };
  std::optional<Failure> failure;
};
ClosureReport is_miyamoto_closed(const MiyamotoContext& ctx);

struct UniversalPresentation {
  Presentation presentation;
  /// generator index -> (decomposition index, character index >= 1)
  std::vector<std::pair<int, int>> generator_meta;
  /// For each (i, chi): the verified conjugation set R_a as (j, k) pairs.
  std::vector<std::vector<std::pair<int, int>>> conj_sets;
  std::vector<std::pair<int, int>> conj_set_owner;  // aligned with conj_sets
  /// Pairs (j, k) with identical Miyamoto maps for every character.
  std::vector<std::pair<int, int>> duplicate_identifications;

  int generator_of(std::size_t i, std::size_t chi) const;
};
/// The presentation of the universal Miyamoto group from the globally valid
/// conjugation relations; requires a Miyamoto-closed exact context.
UniversalPresentation universal_presentation(const MiyamotoContext& ctx);

struct CentralExtensionReport {
  bool exhausted = false;
  bool epimorphism_ok = false;
  bool kernel_central = false;
  std::size_t universal_order = 0;
  std::size_t miyamoto_order = 0;
  std::size_t kernel_size = 0;
};
CentralExtensionReport central_extension_check(const MiyamotoContext& ctx,
                                               std::size_t max_cosets = 100000);

struct StabilityReport {
  bool stable = true;
  bool unique_type = true;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> stability_failure;
  std::string detail;
};
/// Miyamoto-stability (maps permute axes and original-law parts) and the
/// unique-type conditions; requires axial data on the base object.
StabilityReport check_stability_and_unique_type(const MiyamotoContext& ctx);

struct InducedMorphismReport {
  bool intertwines = false;   // Lemma condition phi∘tau_i = tau_psi(i)∘phi
  bool surjective = false;
  bool miy_functorial = false;
  bool universal_functorial = false;
  std::string witness;
};
/// Checks the intertwining identity and, generator map t_{i,chi} ->
/// t_{psi(i),chi}, whether it extends to the (universal) Miyamoto groups.
/// For non-surjective morphisms failures are reported, not thrown.
InducedMorphismReport induced_group_morphism(const DecMorphism& f,
                                             const MiyamotoContext& src,
                                             const MiyamotoContext& dst,
                                             std::size_t cap = 1000000);

}  // namespace decalg
