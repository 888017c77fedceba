#include "decalg/chartheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace decalg {

namespace {

const double kPi = 3.14159265358979323846;

Scalar to_mode(const Scalar& s, bool exact) {
  if (exact == s.exact()) return s;
  if (!exact) return Scalar(s.to_complex());
  throw ScalarMismatch("cannot narrow a float scalar to exact");
}

}  // namespace

bool CharacterTable::exact() const {
  for (const auto& row : values)
    for (const auto& v : row)
      if (!v.exact()) return false;
  return true;
}

Scalar CharacterTable::value(std::size_t chi, int element_index) const {
  return values.at(chi).at(group.class_of(element_index));
}

int CharacterTable::degree(std::size_t chi) const {
  // identity element is index 0, its class is the first one
  double d = values.at(chi).at(group.class_of(0)).abs_double();
  return static_cast<int>(std::lround(d));
}

void CharacterTable::validate(double eps) const {
  const auto& classes = group.conjugacy_classes();
  if (labels.size() != values.size()) throw InvalidObject("character table: label mismatch");
  for (const auto& row : values)
    if (row.size() != classes.size())
      throw InvalidObject("character table: row has wrong class count");
  if (values.empty()) throw InvalidObject("character table: no characters");
  for (const auto& v : values[0])
    if (!v.is_one(eps)) throw InvalidObject("character table: first character is not trivial");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j) {
      Scalar ip = inner(values[i], values[j]);
      bool ok = i == j ? ip.is_one(eps) : ip.is_zero(eps);
      if (!ok)
        throw InvalidObject("character table: row orthogonality fails at (" + labels[i] +
                            ", " + labels[j] + ")");
    }
}

Scalar CharacterTable::inner(const ClassFunction& a, const ClassFunction& b) const {
  const auto& classes = group.conjugacy_classes();
  if (a.size() != classes.size() || b.size() != classes.size())
    throw InvalidArgument("class function has wrong length");
  bool ex = true;
  for (const auto& v : a) ex = ex && v.exact();
  for (const auto& v : b) ex = ex && v.exact();
  Scalar sum = ex ? Scalar(0) : Scalar(Complex(0, 0));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Scalar sz(static_cast<long long>(classes[c].size()));
    sum += to_mode(sz, ex) * to_mode(a[c], ex) * to_mode(b[c], ex).conj();
  }
  return sum / to_mode(Scalar(static_cast<long long>(group.order())), ex);
}

std::vector<Int> CharacterTable::multiplicities(const ClassFunction& a, double eps) const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scalar m = inner(a, values[i]);
    if (m.exact()) {
      if (denominator(m.rat()) != 1)
        throw InvalidObject("multiplicity is not an integer: " + m.str());
      out.push_back(numerator(m.rat()));
    } else {
      Complex z = m.to_complex();
      long long r = std::llround(z.real());
      if (std::abs(z.imag()) > eps || std::abs(z.real() - static_cast<double>(r)) > eps)
        throw InvalidObject("multiplicity is not an integer within tolerance: " + m.str());
      out.push_back(Int(r));
    }
  }
  return out;
}

FusionLaw representation_fusion_law(const CharacterTable& t, double eps) {
  t.validate(eps);
  const std::size_t k = t.num_chars(), nc = t.num_classes();
  std::vector<std::vector<std::vector<int>>> table(k, std::vector<std::vector<int>>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      ClassFunction prod(nc);
      bool ex = t.exact();
      for (std::size_t c = 0; c < nc; ++c)
        prod[c] = to_mode(t.values[x][c], ex) * to_mode(t.values[y][c], ex);
      std::vector<Int> mult = t.multiplicities(prod, eps);
      std::vector<int> cell;
      for (std::size_t z = 0; z < k; ++z)
        if (mult[z] != 0) cell.push_back(static_cast<int>(z));
      table[x][y] = std::move(cell);
    }
  return FusionLaw(t.labels, std::move(table));
}

ClassFunction permutation_character(const CharacterTable& t, const PermAction& action) {
  const auto& classes = t.group.conjugacy_classes();
  ClassFunction out(classes.size());
  bool ex = t.exact();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Word& w = t.group.word_of(classes[c][0]);
    int fixed = 0;
    for (std::size_t p = 0; p < action.size(); ++p)
      if (action.apply_word(w, static_cast<int>(p)) == static_cast<int>(p)) ++fixed;
    out[c] = to_mode(Scalar(fixed), ex);
  }
  return out;
}

PermGroup center(const PermGroup& g) {
  std::vector<Perm> gens;
  const auto& classes = g.conjugacy_classes();
  for (const auto& cls : classes)
    if (cls.size() == 1 && cls[0] != 0) gens.push_back(g.elements()[cls[0]]);
  return PermGroup(g.degree(), gens, g.cap());
}

QuotientGroup quotient_regular(const PermGroup& g, const std::vector<int>& normal_elements) {
  const std::size_t n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (std::size_t e = 0; e < n; ++e) {
    if (coset_of[e] != -1) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(e));
    for (int k : normal_elements) {
      coset_of[g.mult(static_cast<int>(e), k)] = cid;
      coset_of[g.mult(k, static_cast<int>(e))] = cid;  // normality makes these agree
    }
  }
  const std::size_t q = reps.size();
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    int gi = *g.index_of(gen);
    std::vector<int> img(q);
    for (std::size_t c = 0; c < q; ++c) img[c] = coset_of[g.mult(gi, reps[c])];
    gens.push_back(Perm(img));
  }
  QuotientGroup out{PermGroup(static_cast<int>(q), gens, g.cap()), coset_of};
  if (out.group.order() != q) throw InvalidObject("quotient group construction failed");
  return out;
}

CharacterTable abelian_character_table(const PermGroup& g) {
  if (!g.is_abelian()) throw InvalidArgument("abelian_character_table: group is not abelian");
  const std::size_t n = g.order();
  const auto& gens = g.generators();
  const std::size_t k = gens.size();

  // Exponent-vector per element plus Schreier relations from closing edges.
  std::vector<std::vector<Int>> vec(n);
  std::vector<std::vector<Int>> relations;
  std::vector<int> bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  vec[0].assign(k, 0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int e = bfs[head];
    for (std::size_t gi = 0; gi < k; ++gi) {
      int to = g.mult(*g.index_of(gens[gi]), e);
      std::vector<Int> w = vec[e];
      w[gi] += 1;
      if (!seen[to]) {
        seen[to] = true;
        vec[to] = w;
        bfs.push_back(to);
      } else {
        std::vector<Int> rel(k);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
          rel[i] = w[i] - vec[to][i];
          nonzero = nonzero || rel[i] != 0;
        }
        if (nonzero) relations.push_back(std::move(rel));
      }
    }
  }
  IntegerMatrix rel(relations.size(), k);
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) rel.at(r, c) = relations[r][c];
  SmithResult snf = smith_normal_form(rel);
  std::vector<Int> diag = snf.diagonal();
  diag.resize(k, Int(0));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i) {
    if (diag[i] == 0) throw InvalidObject("abelian group relations do not close");
    if (diag[i] != 1) keep.push_back(i);
  }
  // coordinates of element e: (vec[e] * V) mod diag, restricted to kept slots
  std::vector<std::vector<long long>> coord(n, std::vector<long long>(keep.size(), 0));
  std::vector<long long> moduli;
  for (std::size_t j : keep) moduli.push_back(diag[j].convert_to<long long>());
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t jj = 0; jj < keep.size(); ++jj) {
      Int c = 0;
      for (std::size_t i = 0; i < k; ++i) c += vec[e][i] * snf.V.at(i, keep[jj]);
      Int m = moduli[jj];
      c %= m;
      if (c < 0) c += m;
      coord[e][jj] = c.convert_to<long long>();
    }

  bool exact_values = true;
  for (long long m : moduli) exact_values = exact_values && m <= 2;

  // classes of an abelian group are singletons in element order
  const auto& classes = g.conjugacy_classes();
  if (classes.size() != n) throw InvalidObject("abelian group with non-singleton classes");

  CharacterTable t;
  t.group = g;
  std::vector<std::vector<long long>> tuples;
  {
    std::vector<long long> cur(moduli.size(), 0);
    for (;;) {
      tuples.push_back(cur);
      bool carried = true;
      for (std::size_t pos = moduli.size(); pos > 0;) {
        --pos;
        if (++cur[pos] < moduli[pos]) {
          carried = false;
          break;
        }
        cur[pos] = 0;
      }
      if (carried) break;
    }
  }
  if (tuples.size() != n) throw InvalidObject("abelian dual has wrong size");
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    std::string lb = "chi" + std::to_string(ti);
    t.labels.push_back(lb);
    std::vector<Scalar> row(n);
    for (std::size_t c = 0; c < n; ++c) {
      int e = classes[c][0];
      if (exact_values) {
        int sgn = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j)
          sgn += static_cast<int>(tuples[ti][j] * coord[e][j]) % 2 == 0 ? 0 : 1;
        row[c] = Scalar(sgn % 2 == 0 ? 1 : -1);
      } else {
        double angle = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j)
          angle += 2.0 * kPi * static_cast<double>(tuples[ti][j] * coord[e][j]) /
                   static_cast<double>(moduli[j]);
        row[c] = Scalar(Complex(std::cos(angle), std::sin(angle)));
      }
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

CharacterTable small_character_table(const PermGroup& g) {
  if (g.is_abelian()) return abelian_character_table(g);
  // G' = elements merged into the kernel of the abelianization map
  // (normal closure of commutators); reuse the quotient machinery.
  const std::size_t n = g.order();
  std::vector<bool> in_k(n, false);
  std::vector<int> k_elems{0};
  in_k[0] = true;
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      Perm c = g.generators()[i] * g.generators()[j] * g.generators()[i].inverse() *
               g.generators()[j].inverse();
      int ci = *g.index_of(c);
      if (!in_k[ci]) {
        in_k[ci] = true;
        k_elems.push_back(ci);
      }
    }
  for (std::size_t head = 0; head < k_elems.size(); ++head) {
    for (const Perm& gen : g.generators()) {
      Perm c = g.elements()[k_elems[head]].conj_by(gen);
      int ci = *g.index_of(c);
      if (!in_k[ci]) {
        in_k[ci] = true;
        k_elems.push_back(ci);
      }
    }
    for (std::size_t other = 0; other < k_elems.size(); ++other) {
      int p = g.mult(k_elems[head], k_elems[other]);
      if (!in_k[p]) {
        in_k[p] = true;
        k_elems.push_back(p);
      }
    }
  }
  QuotientGroup ab = quotient_regular(g, k_elems);
  CharacterTable lin = abelian_character_table(ab.group);
  const std::size_t nlin = lin.num_chars();
  long long d2 = static_cast<long long>(n) - static_cast<long long>(nlin);
  long long d = std::llround(std::sqrt(static_cast<double>(d2)));
  const auto& classes = g.conjugacy_classes();
  if (d * d != d2 || classes.size() != nlin + 1)
    throw InvalidArgument("small_character_table: group is outside the supported pattern");

  CharacterTable t;
  t.group = g;
  bool ex = lin.exact();
  const auto& qclasses = ab.group.conjugacy_classes();
  for (std::size_t i = 0; i < nlin; ++i) {
    t.labels.push_back("chi" + std::to_string(i));
    std::vector<Scalar> row(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      int coset = ab.coset_of[classes[c][0]];
      // class of the coset element inside the (abelian) quotient
      int qclass = ab.group.class_of(coset);
      (void)qclasses;
      row[c] = lin.values[i][qclass];
    }
    t.values.push_back(std::move(row));
  }
  // The remaining character from the regular character: sum chi(1) chi(c) = 0
  // off the identity, |G| at the identity.
  t.labels.push_back("chi" + std::to_string(nlin));
  std::vector<Scalar> big(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Scalar sum = ex ? Scalar(0) : Scalar(Complex(0, 0));
    for (std::size_t i = 0; i < nlin; ++i) sum += t.values[i][c];
    Scalar reg = to_mode(Scalar(classes[c][0] == 0 ? static_cast<long long>(n) : 0), ex);
    big[c] = (reg - sum) / to_mode(Scalar(d), ex);
  }
  t.values.push_back(std::move(big));
  t.validate(1e-9);
  return t;
}

FusionMorphism CenterGrading::as_morphism() const {
  return FusionMorphism(rep_law, center_law, map);
}

CenterGrading center_grading_map(const CharacterTable& t, double eps) {
  t.validate(eps);
  PermGroup z = center(t.group);
  CenterGrading out{abelian_character_table(z), {}, representation_fusion_law(t, eps),
                    FusionLaw()};

  // match chi|_Z / chi(1) against the characters of Z
  const auto& zelems = z.elements();
  for (std::size_t chi = 0; chi < t.num_chars(); ++chi) {
    Scalar deg = t.values[chi][t.group.class_of(0)];
    int found = -1;
    for (std::size_t psi = 0; psi < out.center_table.num_chars(); ++psi) {
      bool all = true;
      for (std::size_t ze = 0; ze < zelems.size() && all; ++ze) {
        auto gi = t.group.index_of(zelems[ze]);
        Scalar lhs = t.value(chi, *gi);
        Scalar rhs = out.center_table.value(psi, static_cast<int>(ze));
        Complex diff = lhs.to_complex() / deg.to_complex() - rhs.to_complex();
        if (std::abs(diff) > std::max(eps, 1e-9)) all = false;
      }
      if (all) {
        found = static_cast<int>(psi);
        break;
      }
    }
    if (found < 0)
      throw InvalidObject("central character of " + t.labels[chi] + " not found in Irr(Z)");
    out.map.push_back(found);
  }

  // group law on Irr(Z) under pointwise multiplication
  const std::size_t m = out.center_table.num_chars();
  CayleyTable ct;
  ct.labels = out.center_table.labels;
  ct.identity = 0;
  ct.mult.assign(m, std::vector<int>(m, -1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int prod = -1;
      for (std::size_t c = 0; c < m && prod < 0; ++c) {
        bool all = true;
        for (std::size_t col = 0; col < out.center_table.num_classes() && all; ++col) {
          Complex lhs = out.center_table.values[a][col].to_complex() *
                        out.center_table.values[b][col].to_complex();
          if (std::abs(lhs - out.center_table.values[c][col].to_complex()) > 1e-6) all = false;
        }
        if (all) prod = static_cast<int>(c);
      }
      if (prod < 0) throw InvalidObject("dual group is not closed under products");
      ct.mult[a][b] = prod;
    }
  out.center_law = group_fusion_law(ct);
  // constructing the morphism validates the containment condition
  FusionMorphism check(out.rep_law, out.center_law, out.map);
  (void)check;
  return out;
}

void MatrixRep::validate_shape() const {
  if (gen_images.size() != group.generators().size())
    throw InvalidObject("matrix rep: one matrix per group generator required");
  for (const auto& m : gen_images)
    if (m.rows() != dim || m.cols() != dim)
      throw InvalidObject("matrix rep: image has wrong shape");
}

std::vector<Matrix> MatrixRep::realize(double eps) const {
  validate_shape();
  const auto& elems = group.elements();
  std::vector<Matrix> out;
  out.reserve(elems.size());
  bool ex = gen_images.empty() || gen_images[0].exact();
  for (std::size_t e = 0; e < elems.size(); ++e) {
    Matrix m = Matrix::identity(dim, ex);
    const Word& w = group.word_of(static_cast<int>(e));
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      // words use positive letters only (BFS over generators)
      m = m * gen_images.at(static_cast<std::size_t>(*it) - 1);
    }
    out.push_back(std::move(m));
  }
  // consistency on every Cayley edge g*e
  for (std::size_t e = 0; e < elems.size(); ++e)
    for (std::size_t gi = 0; gi < gen_images.size(); ++gi) {
      int to = group.mult(*group.index_of(group.generators()[gi]), static_cast<int>(e));
      if (!(gen_images[gi] * out[e]).close_to(out[to], eps))
        throw InvalidObject("matrix representation is not a homomorphism");
    }
  return out;
}

IsotypicDecomposition isotypic_decomposition(const MatrixRep& rep, const CharacterTable& t,
                                             double eps) {
  t.validate(eps);
  if (!(rep.group.order() == t.group.order()))
    throw InvalidArgument("isotypic decomposition: group/table mismatch");
  std::vector<Matrix> mats = rep.realize(eps);
  bool ex = t.exact() && (mats.empty() || mats[0].exact());

  IsotypicDecomposition out;
  Matrix sum(rep.dim, rep.dim, ex);
  Scalar ordinv = to_mode(Scalar(1), ex) / to_mode(Scalar(static_cast<long long>(rep.group.order())), ex);
  for (std::size_t chi = 0; chi < t.num_chars(); ++chi) {
    Matrix p(rep.dim, rep.dim, ex);
    for (std::size_t e = 0; e < mats.size(); ++e) {
      Scalar coeff = to_mode(t.value(chi, static_cast<int>(e)), ex).conj();
      Matrix term = mats[e];
      if (!ex && term.exact()) {
        Matrix cterm(rep.dim, rep.dim, false);
        for (std::size_t i = 0; i < rep.dim; ++i)
          for (std::size_t j = 0; j < rep.dim; ++j)
            cterm.at(i, j) = Scalar(term.at(i, j).to_complex());
        term = cterm;
      }
      p = p + term.scaled(coeff);
    }
    Scalar degree = to_mode(t.values[chi][t.group.class_of(0)], ex);
    p = p.scaled(degree * ordinv);
    sum = sum + p;
    IsotypicComponent comp;
    comp.chi = chi;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < rep.dim; ++j) cols.push_back(p.col(j));
    comp.space = Subspace::span(rep.dim, cols, eps);
    int dchi = t.degree(chi);
    if (comp.space.dim() % dchi != 0)
      throw InvalidObject("isotypic component dimension is not divisible by the degree");
    comp.multiplicity = static_cast<int>(comp.space.dim()) / dchi;
    out.components.push_back(std::move(comp));
  }
  if (!sum.is_identity(std::max(eps, 1e-9)))
    throw InvalidObject("isotypic projections do not sum to the identity");
  out.multiplicity_free = true;
  for (const auto& c : out.components)
    if (c.multiplicity > 1) out.multiplicity_free = false;
  return out;
}

FusionLaw refine_fusion_law(const Algebra& algebra, const std::vector<Subspace>& parts,
                            const std::vector<std::string>& part_labels, const MatrixRep& rep,
                            const CharacterTable& t, double eps) {
  if (parts.size() != part_labels.size())
    throw InvalidArgument("refine_fusion_law: labels misaligned");
  if (rep.dim != algebra.dim) throw InvalidArgument("refine_fusion_law: rep dimension mismatch");
  const std::size_t np = parts.size();

  // H-invariance of every part
  for (std::size_t x = 0; x < np; ++x)
    for (const auto& m : rep.gen_images)
      for (const auto& b : parts[x].basis_vectors())
        if (!parts[x].contains(m * b, eps))
          throw InvalidObject("part " + part_labels[x] + " is not H-invariant");

  std::vector<Matrix> mats = rep.realize(eps);
  bool ex = t.exact() && (mats.empty() || mats[0].exact());

  // character of each part: trace of the restriction at a class representative
  const auto& classes = t.group.conjugacy_classes();
  std::vector<ClassFunction> part_char(np, ClassFunction(classes.size()));
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Matrix& m = mats[classes[c][0]];
      Scalar tr = ex ? Scalar(0) : Scalar(Complex(0, 0));
      auto basis = parts[x].basis_vectors();
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        Vector img = m * basis[bi];
        auto coords = parts[x].coords(img, eps);
        if (!coords) throw InvalidObject("restriction escaped its part");
        tr += to_mode((*coords)[bi], ex);
      }
      part_char[x][c] = tr;
    }

  // structure-constant support: which parts the product of two parts meets
  std::vector<Vector> all_rows;
  std::vector<std::size_t> block_of;  // row -> part
  for (std::size_t x = 0; x < np; ++x)
    for (const auto& b : parts[x].basis_vectors()) {
      all_rows.push_back(b);
      block_of.push_back(x);
    }
  Matrix stacked = Matrix::from_rows(all_rows);
  if (rank(stacked, eps) != algebra.dim)
    throw InvalidObject("parts do not span the algebra");

  std::vector<std::vector<std::vector<int>>> table(np, std::vector<std::vector<int>>(np));
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t y = 0; y < np; ++y) {
      std::vector<bool> hit(np, false);
      for (const auto& u : parts[x].basis_vectors())
        for (const auto& v : parts[y].basis_vectors()) {
          Vector w = algebra.multiply(u, v);
          auto coeffs = solve_in_row_span(stacked, w, eps);
          if (!coeffs) throw InvalidObject("product escaped the direct sum");
          for (std::size_t r = 0; r < coeffs->size(); ++r)
            if (!(*coeffs)[r].is_zero(std::max(eps, 1e-9))) hit[block_of[r]] = true;
        }
      std::vector<int> cell;
      for (std::size_t z = 0; z < np; ++z) {
        if (!hit[z]) continue;
        // character containment: <chi_z, chi_x * chi_y> != 0
        ClassFunction prod(classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
          prod[c] = to_mode(part_char[x][c], ex) * to_mode(part_char[y][c], ex);
        Scalar ipv = t.inner(prod, part_char[z]);
        if (!ipv.is_zero(std::max(eps, 1e-9))) cell.push_back(static_cast<int>(z));
      }
      table[x][y] = std::move(cell);
    }
  return FusionLaw(part_labels, std::move(table));
}

DecompositionAlgebra construct_decomposition_algebra_from_group(
    const Algebra& algebra, const std::vector<MatrixRep>& subgroups, const CharacterTable& t,
    double eps) {
  if (subgroups.empty()) throw InvalidArgument("no subgroups given");
  DecompositionAlgebra d;
  d.algebra = algebra;
  d.law = representation_fusion_law(t, eps);

  bool all_mf = true;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (subgroups[i].dim != algebra.dim)
      throw InvalidArgument("subgroup representation dimension mismatch");
    // automorphism check on generators
    bool ex = algebra.exact();
    for (const auto& m : subgroups[i].gen_images)
      for (std::size_t a = 0; a < algebra.dim; ++a)
        for (std::size_t b = 0; b < algebra.dim; ++b) {
          Vector ea = vec_zero(algebra.dim, ex), eb = vec_zero(algebra.dim, ex);
          ea[a] = ex ? Scalar(1) : Scalar(Complex(1, 0));
          eb[b] = ex ? Scalar(1) : Scalar(Complex(1, 0));
          Vector lhs = m * algebra.multiply(ea, eb);
          Vector rhs = algebra.multiply(m * ea, m * eb);
          if (!vec_is_zero(vec_sub(lhs, rhs), std::max(eps, 1e-9)))
            throw InvalidObject("subgroup does not act by algebra automorphisms");
        }
    IsotypicDecomposition iso = isotypic_decomposition(subgroups[i], t, eps);
    all_mf = all_mf && iso.multiplicity_free;
    Decomposition dec;
    for (const auto& comp : iso.components) dec.push_back(comp.space);
    d.omega.push_back(std::move(dec));
    d.index_names.push_back("H" + std::to_string(i));
  }

  if (all_mf) {
    // trivial-character component carries the axes (first table row)
    d.unit = 0;
    std::vector<Vector> axes;
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
      if (d.omega[i][0].dim() == 0) throw InvalidObject("trivial component is zero; no axis");
      axes.push_back(d.omega[i][0].basis_vectors()[0]);
    }
    // evaluation map from the first index, verified across the others
    std::vector<Scalar> lambda(d.law.size(), algebra.exact() ? Scalar(0) : Scalar(Complex(0, 0)));
    for (std::size_t x = 0; x < d.law.size(); ++x) {
      std::optional<Scalar> lx;
      for (std::size_t i = 0; i < subgroups.size(); ++i) {
        for (const auto& b : d.omega[i][x].basis_vectors()) {
          Vector ab = algebra.multiply(axes[i], b);
          // ab = lambda * b; read the ratio off the first sizable coordinate
          std::size_t piv = b.size();
          for (std::size_t kk = 0; kk < b.size(); ++kk)
            if (!b[kk].is_zero(std::max(eps, 1e-9))) {
              piv = kk;
              break;
            }
          Scalar cand = ab[piv] / b[piv];
          if (!vec_is_zero(vec_sub(ab, vec_scale(cand, b)), std::max(eps, 1e-9)))
            throw InvalidObject("axis does not act as a scalar on an isotypic part");
          if (!lx)
            lx = cand;
          else if (!vec_is_zero({*lx - cand}, std::max(eps, 1e-9)))
            throw InvalidObject("axis eigenvalues differ across indices");
        }
      }
      if (lx) lambda[x] = *lx;
    }
    d.axes = std::move(axes);
    d.lambda = std::move(lambda);
  }
  return d;
}

}  // namespace decalg
