#pragma once

#include "decalg/fusion.hpp"
#include "decalg/matrix.hpp"

namespace decalg {

/// A finite-dimensional algebra given by structure constants; no
/// commutativity, associativity or unit assumed.
struct Algebra {
  std::size_t dim = 0;
  /// sc[i][j] = coordinates of (basis_i * basis_j).
  std::vector<std::vector<Vector>> sc;

  static Algebra zero(std::size_t dim, bool exact = true);

  bool exact() const;
  void validate() const;
  Vector multiply(const Vector& u, const Vector& v) const;
  /// Matrix of left multiplication by v.
  Matrix ad(const Vector& v) const;
  /// Matrix of right multiplication by v.
  Matrix right_mult(const Vector& v) const;
  bool is_commutative(double eps) const;
  bool operator==(const Algebra& o) const;
};

/// One X-indexed direct-sum decomposition: parts[x] for each law element x.
using Decomposition = std::vector<Subspace>;

/// (A, I, Omega) plus the optional axial data (unit label, axes, evaluation map).
struct DecompositionAlgebra {
  Algebra algebra;
  FusionLaw law;
  std::vector<std::string> index_names;
  std::vector<Decomposition> omega;  // omega[i][x]

  std::optional<int> unit;                    // distinguished unit label
  std::optional<std::vector<Vector>> axes;    // per index
  std::optional<std::vector<Scalar>> lambda;  // per law element

  std::size_t index_count() const { return index_names.size(); }
  bool axial_data_present() const { return axes.has_value(); }
  void validate_shape() const;
  /// Combined span of the parts of decomposition i over a set of labels.
  Subspace part_span(std::size_t i, const std::vector<int>& labels, double eps) const;
};

struct VerifyReport {
  bool direct_sum = true;
  bool fusion = true;
  bool has_axes = false;
  bool left_axial = true;
  bool right_axial = true;
  bool primitive = true;
  /// Whether the recorded distinguished label actually is a unit of the law.
  bool unit_label_is_unit = true;

  struct Violation {
    int dec;  // index into Omega, or -1
    int x, y;  // law element indices, or -1
    std::string kind;
  };
  std::vector<Violation> violations;
  std::vector<std::vector<std::size_t>> part_dims;  // per index, per label

  bool valid() const { return direct_sum && fusion; }
  bool axial() const { return has_axes && left_axial && right_axial; }
};

/// Full certificate: direct sums, fusion containment A_x A_y <= A_{x*y} on
/// basis pairs, the axis law and primitivity when axial data is present.
VerifyReport verify(const DecompositionAlgebra& d, double eps);

/// Regroups every decomposition along the fibers of xi (functor F_xi).
DecompositionAlgebra pushforward(const DecompositionAlgebra& d, const FusionMorphism& xi);

/// A morphism (phi, psi); construction validates the algebra homomorphism
/// property, part containment phi(A_x^i) <= B_x^{psi(i)}, and, when
/// axial_compat is set, phi(axis_i) = axis_{psi(i)}.
struct DecMorphism {
  DecompositionAlgebra source, target;
  Matrix phi;            // target.dim x source.dim
  std::vector<int> psi;  // index map
  bool axial_compat = false;

  Vector apply(const Vector& v) const { return phi * v; }
};

DecMorphism make_morphism(DecompositionAlgebra source, DecompositionAlgebra target,
                          Matrix phi, std::vector<int> psi, double eps,
                          bool axial_compat = false);
DecMorphism identity_morphism(const DecompositionAlgebra& d, double eps);

Subspace morphism_kernel(const DecMorphism& f, double eps);

struct ProductResult {
  DecompositionAlgebra object;
  DecMorphism proj1, proj2;
};
/// Binary product: direct product algebra, index set I1 x I2.
ProductResult dec_product(const DecompositionAlgebra& d1, const DecompositionAlgebra& d2,
                          double eps);
/// The unique factorization of a cone (f1, f2) through the product.
DecMorphism product_factor(const ProductResult& prod, const DecMorphism& f1,
                           const DecMorphism& f2, double eps);

struct EqualizerResult {
  DecompositionAlgebra object;
  DecMorphism inclusion;
};
EqualizerResult dec_equalizer(const DecMorphism& f, const DecMorphism& g, double eps);
/// The unique factorization through the equalizer of a morphism h with
/// f∘h = g∘h.
DecMorphism equalizer_factor(const EqualizerResult& eq, const DecMorphism& f,
                             const DecMorphism& g, const DecMorphism& h, double eps);

struct IdealCheck {
  bool algebra_ideal = true;
  bool decomposition_ideal = true;
  /// dim(A_x^i ∩ I) per index, per label.
  std::vector<std::vector<std::size_t>> part_dims;
  std::string detail;
  bool ok() const { return algebra_ideal && decomposition_ideal; }
};
IdealCheck decomposition_ideal_check(const DecompositionAlgebra& d, const Subspace& ideal,
                                     double eps);

struct QuotientResult {
  DecompositionAlgebra object;
  DecMorphism projection;
};
QuotientResult dec_quotient(const DecompositionAlgebra& d, const Subspace& ideal, double eps);

}  // namespace decalg
