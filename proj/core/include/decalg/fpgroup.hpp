#pragma once

#include "decalg/fusion.hpp"
#include "decalg/intmatrix.hpp"

namespace decalg {

class PermGroup;

/// A word in group generators: letter g+1 means generator g, -(g+1) its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void validate() const;
  static Word free_reduce(const Word& w);
};

/// One generator gamma_x per label, one relator gamma_x gamma_y gamma_z^-1
/// per z in x*y; the presented group is the finest grading group.
Presentation finest_grading_presentation(const FusionLaw& law);

/// Identifications forced by the shape of the table alone:
/// (a) y in x*y (or y in y*x) forces gamma_x = 1,
/// (b) all members of one cell x*y are equal,
/// (c) a shared member of x*y and x*y' (or x*y and x'*y) merges the others.
struct CollapseReport {
  struct TrivialInstance {
    int x;     // the generator forced trivial
    int y;     // witnessing label with y in x*y or y in y*x
    bool left;  // true: y in x*y, false: y in y*x
  };
  struct EqualInstance {
    int a, b;       // gamma_a = gamma_b
    char rule;      // 'b' or 'c'
    int wx, wy, wz;  // witnessing triple
  };
  std::vector<TrivialInstance> forced_trivial;
  std::vector<EqualInstance> forced_equal;

  std::vector<int> trivial_generators(std::size_t n) const;
};

CollapseReport collapse_report(const FusionLaw& law);

/// Applies a collapse report to a presentation: trivial generators are
/// deleted, merged generators renamed to their class representative, relators
/// freely reduced and deduplicated.  genmap[g] = new index, or -1 if g is
/// forced trivial.  The presented group is unchanged.
Presentation simplify_presentation(const Presentation& p, const CollapseReport& report,
                                   std::vector<int>* genmap);

/// Finest abelian grading: invariant factors of the abelianized presentation
/// (0 = infinite cyclic) and the label -> exponent-vector map.
struct AbelianGrading {
  FusionLaw law;
  std::vector<Int> invariant_factors;
  /// map[x][k]: coordinate of gamma_x in Z/invariant_factors[k] (or Z if 0),
  /// reduced to the canonical range [0, d_k).
  std::vector<std::vector<Int>> map;

  bool finite() const;
  Int order() const;  // throws if infinite
  /// Checks the morphism condition directly on exponent vectors.
  bool is_fusion_morphism() const;
  /// For finite gradings, the group fusion law with element order = the
  /// lexicographic order on coordinate tuples, plus the label map into it.
  std::pair<FusionLaw, std::vector<int>> as_group_law() const;
};

AbelianGrading abelianized_grading(const FusionLaw& law);

/// Todd-Coxeter coset enumeration over the trivial subgroup (HLT style,
/// deterministic).  On success the group is returned as its regular
/// permutation representation; on table overflow, exhausted = true.
struct CosetEnumeration {
  bool exhausted = false;
  std::size_t order = 0;
  /// One permutation of {0..order-1} per presentation generator.
  std::vector<std::vector<int>> generator_action;
};

CosetEnumeration coset_enumerate(const Presentation& p, std::size_t max_cosets);

/// Evaluates a word in the enumerated group's regular representation and
/// returns the image of coset 0 path, i.e. the permutation of the word.
std::vector<int> coset_word_action(const CosetEnumeration& e, const Word& w);

}  // namespace decalg
