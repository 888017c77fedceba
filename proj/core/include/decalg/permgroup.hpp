#pragma once

#include <memory>
#include <optional>

#include "decalg/fpgroup.hpp"
#include "decalg/fusion.hpp"

namespace decalg {

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int p) const { return img.at(p); }
  /// Functional composition: (a*b)(p) = a(b(p)).
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm conj_by(const Perm& g) const { return g * (*this) * g.inverse(); }
  bool is_identity() const;
  int order() const;
  int fixed_points() const;
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
  std::string cycle_str() const;
};

/// Finite permutation group: a value-semantic handle over an immutable body
/// whose element table is built once on first use (thread-safe).
class PermGroup {
 public:
  PermGroup();
  PermGroup(int degree, std::vector<Perm> generators, std::size_t cap = 10000);

  int degree() const;
  const std::vector<Perm>& generators() const;
  std::size_t cap() const;

  std::size_t order() const;
  /// Elements in breadth-first enumeration order; identity first.
  const std::vector<Perm>& elements() const;
  std::optional<int> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  int mult(int a, int b) const;
  int inv(int a) const;
  /// A word in the generators (positive letters) evaluating to element i.
  const Word& word_of(int i) const;

  /// Conjugacy classes as sorted element-index lists; classes ordered by
  /// their minimal element in enumeration order.
  const std::vector<std::vector<int>>& conjugacy_classes() const;
  int class_of(int element_index) const;

  PermGroup centralizer(const Perm& x) const;
  bool is_abelian() const;
  /// Invariant factors of G/[G,G], ascending divisibility chain, entries > 1.
  /// Independent of Smith-normal-form code: commutator subgroup plus
  /// order statistics of the abelian quotient.
  std::vector<Int> abelianization() const;

  CayleyTable cayley_table() const;

 private:
  struct Body;
  std::shared_ptr<Body> body_;
  Body& built() const;
};

FusionLaw class_fusion_law(const PermGroup& g);
FusionLaw group_fusion_law(const PermGroup& g);

/// A permutation action of the group's generators on a named finite domain.
struct PermAction {
  std::vector<std::string> point_names;
  std::vector<Perm> gen_images;  // aligned with the group's generator list

  std::size_t size() const { return point_names.size(); }
  bool is_transitive() const;
  /// Image of point under the action of the group element with the given word.
  int apply_word(const Word& w, int point) const;
};

PermAction natural_action(const PermGroup& g);
/// Induced action on unordered 2-subsets {i,j}, i < j, lexicographic order.
PermAction pairs_action(const PermGroup& g);
/// Conjugation action on the conjugacy class of x (enumeration order).
PermAction conjugation_action(const PermGroup& g, const Perm& x);

struct Orbitals {
  std::size_t n = 0;
  int count = 0;
  std::vector<std::vector<int>> rel;        // orbital index per ordered pair
  std::vector<std::pair<int, int>> reps;    // minimal pair per orbital
};

/// Orbits on ordered pairs; the diagonal comes first, the rest ordered by
/// minimal pair.  Requires a transitive action.
Orbitals orbitals(const PermGroup& g, const PermAction& action);

/// True iff every orbital is self-paired, i.e. some element swaps each (x,y).
bool is_generously_transitive(const PermGroup& g, const PermAction& action);

}  // namespace decalg
