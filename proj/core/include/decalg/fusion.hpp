#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "decalg/scalar.hpp"

namespace decalg {

/// A finite fusion law: an ordered label set X and a table X x X -> 2^X.
/// Element order is preserved from construction in all outputs.
class FusionLaw {
 public:
  FusionLaw() = default;
  FusionLaw(std::vector<std::string> elements,
            std::vector<std::vector<std::vector<int>>> table);

  static FusionLaw empty_law(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int x) const { return elements_.at(x); }
  std::optional<int> index_of(const std::string& label) const;
  int require(const std::string& label) const;

  /// table(x, y) as a sorted list of element indices.
  const std::vector<int>& entry(int x, int y) const;
  void set_entry(int x, int y, std::vector<int> out);

  bool is_symmetric() const;

  struct ElementFlags {
    bool unit = false;
    bool annihilating = false;
    bool absorbing = false;
  };
  /// Tests the unit/annihilating/absorbing conditions, left and right.
  ElementFlags classify(int x) const;
  std::vector<int> units() const;

  /// Pairs of distinct units e, f with e*f or f*e nonempty.  Always empty for
  /// a well-formed table; serves as a parser self-check.
  std::vector<std::pair<int, int>> distinct_unit_violations() const;

  bool operator==(const FusionLaw& o) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::vector<int>>> table_;
};

/// A map of labels with the containment property
/// xi(x1 * x2) subset-of xi(x1) * xi(x2), validated at construction.
class FusionMorphism {
 public:
  FusionMorphism(FusionLaw source, FusionLaw target, std::vector<int> map);

  const FusionLaw& source() const { return source_; }
  const FusionLaw& target() const { return target_; }
  int apply(int x) const { return map_.at(x); }
  const std::vector<int>& map() const { return map_; }

  static FusionMorphism identity(const FusionLaw& law);
  /// Containment test without constructing; returns a violating (x, y) if any.
  static std::optional<std::pair<int, int>> violation(const FusionLaw& source,
                                                      const FusionLaw& target,
                                                      const std::vector<int>& map);

 private:
  FusionLaw source_, target_;
  std::vector<int> map_;
};

FusionMorphism compose(const FusionMorphism& g, const FusionMorphism& f);

/// Product law on X x Y; labels "(x,y)".  Projections are valid morphisms.
FusionLaw product_law(const FusionLaw& a, const FusionLaw& b);
FusionMorphism product_projection(const FusionLaw& a, const FusionLaw& b, int which);

/// Union law on the disjoint union; colliding labels of b get a "'" suffix.
/// Cross products are empty.  Inclusions are valid morphisms.
FusionLaw union_law(const FusionLaw& a, const FusionLaw& b);
FusionMorphism union_inclusion(const FusionLaw& a, const FusionLaw& b, int which);

/// A finite group given by its multiplication table.
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mult;
  int identity = -1;

  std::size_t order() const { return labels.size(); }
  int inverse(int g) const;
  /// Checks closure/associativity/identity/inverses; throws InvalidObject.
  void validate() const;
};

/// The group fusion law (g, h) -> {gh}.
FusionLaw group_fusion_law(const CayleyTable& g);
/// Reconstructs a Cayley table from a law whose entries are all singletons;
/// throws InvalidObject if the law is not a group fusion law.
CayleyTable cayley_from_group_law(const FusionLaw& law);

/// The action of Sym(3) on laws viewed as omega(x,y,z) = [z in x*y]:
/// role_perm sends argument slot k of the input to slot role_perm[k].
FusionLaw apply_role_permutation(const FusionLaw& law, const std::array<int, 3>& role_perm);

FusionLaw jordan_law();
FusionLaw ising_law();

}  // namespace decalg
