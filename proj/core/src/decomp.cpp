#include "decalg/decomp.hpp"

#include <algorithm>
#include <map>

namespace decalg {

Algebra Algebra::zero(std::size_t dim, bool exact) {
  Algebra a;
  a.dim = dim;
  a.sc.assign(dim, std::vector<Vector>(dim, vec_zero(dim, exact)));
  return a;
}

bool Algebra::exact() const {
  for (const auto& row : sc)
    for (const auto& v : row)
      for (const auto& x : v)
        if (!x.exact()) return false;
  return true;
}

void Algebra::validate() const {
  if (sc.size() != dim) throw InvalidObject("structure constants: wrong row count");
  for (const auto& row : sc) {
    if (row.size() != dim) throw InvalidObject("structure constants: wrong column count");
    for (const auto& v : row)
      if (v.size() != dim) throw InvalidObject("structure constants: wrong vector length");
  }
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const {
  if (u.size() != dim || v.size() != dim) throw InvalidArgument("algebra element length mismatch");
  bool ex = dim == 0 || (u.empty() ? true : u[0].exact());
  Vector out = vec_zero(dim, ex);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero(0.0)) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero(0.0)) continue;
      Scalar c = u[i] * v[j];
      for (std::size_t k = 0; k < dim; ++k) out[k] += c * sc[i][j][k];
    }
  }
  return out;
}

Matrix Algebra::ad(const Vector& v) const {
  bool ex = v.empty() || v[0].exact();
  Matrix m(dim, dim, ex);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector ej = vec_zero(dim, ex);
    ej[j] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    Vector prod = multiply(v, ej);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = prod[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vector& v) const {
  bool ex = v.empty() || v[0].exact();
  Matrix m(dim, dim, ex);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector ej = vec_zero(dim, ex);
    ej[j] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    Vector prod = multiply(ej, v);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = prod[k];
  }
  return m;
}

bool Algebra::is_commutative(double eps) const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (!vec_is_zero(vec_sub(sc[i][j], sc[j][i]), eps)) return false;
  return true;
}

bool Algebra::operator==(const Algebra& o) const { return dim == o.dim && sc == o.sc; }

void DecompositionAlgebra::validate_shape() const {
  algebra.validate();
  if (omega.size() != index_names.size())
    throw InvalidObject("decomposition algebra: index/Omega size mismatch");
  for (const auto& dec : omega) {
    if (dec.size() != law.size())
      throw InvalidObject("decomposition algebra: parts not aligned with law");
    for (const auto& part : dec)
      if (part.ambient() != algebra.dim)
        throw InvalidObject("decomposition algebra: part has wrong ambient dimension");
  }
  if (axes) {
    if (!unit) throw InvalidObject("axes present but no distinguished unit label");
    if (!lambda) throw InvalidObject("axes present but no evaluation map");
    if (axes->size() != index_names.size())
      throw InvalidObject("axes not aligned with index set");
    if (lambda->size() != law.size())
      throw InvalidObject("evaluation map not aligned with law");
  }
}

Subspace DecompositionAlgebra::part_span(std::size_t i, const std::vector<int>& labels,
                                         double eps) const {
  std::vector<Vector> rows;
  for (int x : labels)
    for (const auto& v : omega[i][x].basis_vectors()) rows.push_back(v);
  return Subspace::span(algebra.dim, rows, eps);
}

VerifyReport verify(const DecompositionAlgebra& d, double eps) {
  d.validate_shape();
  VerifyReport rep;
  const std::size_t nlab = d.law.size();
  rep.part_dims.assign(d.index_count(), std::vector<std::size_t>(nlab, 0));

  for (std::size_t i = 0; i < d.index_count(); ++i) {
    std::size_t total = 0;
    std::vector<Vector> all;
    for (std::size_t x = 0; x < nlab; ++x) {
      rep.part_dims[i][x] = d.omega[i][x].dim();
      total += d.omega[i][x].dim();
      for (const auto& v : d.omega[i][x].basis_vectors()) all.push_back(v);
    }
    Subspace sum = Subspace::span(d.algebra.dim, all, eps);
    if (total != d.algebra.dim || sum.dim() != d.algebra.dim) {
      rep.direct_sum = false;
      rep.violations.push_back({static_cast<int>(i), -1, -1, "direct-sum"});
    }
  }

  for (std::size_t i = 0; i < d.index_count(); ++i) {
    std::map<std::vector<int>, Subspace> span_cache;
    for (std::size_t x = 0; x < nlab; ++x)
      for (std::size_t y = 0; y < nlab; ++y) {
        const auto& cell = d.law.entry(static_cast<int>(x), static_cast<int>(y));
        auto it = span_cache.find(cell);
        if (it == span_cache.end())
          it = span_cache.emplace(cell, d.part_span(i, cell, eps)).first;
        const Subspace& target = it->second;
        bool bad = false;
        for (const auto& u : d.omega[i][x].basis_vectors()) {
          for (const auto& v : d.omega[i][y].basis_vectors()) {
            Vector w = d.algebra.multiply(u, v);
            if (!target.contains(w, eps)) {
              bad = true;
              break;
            }
          }
          if (bad) break;
        }
        if (bad) {
          rep.fusion = false;
          rep.violations.push_back(
              {static_cast<int>(i), static_cast<int>(x), static_cast<int>(y), "fusion"});
        }
      }
  }

  if (d.axes) {
    rep.has_axes = true;
    const int e = *d.unit;
    rep.unit_label_is_unit = d.law.classify(e).unit;
    for (std::size_t i = 0; i < d.index_count(); ++i) {
      const Vector& a = (*d.axes)[i];
      if (vec_is_zero(a, eps)) {
        rep.left_axial = rep.right_axial = false;
        rep.violations.push_back({static_cast<int>(i), e, -1, "axis-zero"});
        continue;
      }
      if (!d.omega[i][e].contains(a, eps)) {
        rep.left_axial = rep.right_axial = false;
        rep.violations.push_back({static_cast<int>(i), e, -1, "axis-not-in-unit-part"});
      }
      for (std::size_t x = 0; x < nlab; ++x) {
        const Scalar& lx = (*d.lambda)[x];
        for (const auto& b : d.omega[i][x].basis_vectors()) {
          if (!vec_is_zero(vec_sub(d.algebra.multiply(a, b), vec_scale(lx, b)), eps)) {
            rep.left_axial = false;
            rep.violations.push_back(
                {static_cast<int>(i), static_cast<int>(x), -1, "axis-law-left"});
            break;
          }
        }
        for (const auto& b : d.omega[i][x].basis_vectors()) {
          if (!vec_is_zero(vec_sub(d.algebra.multiply(b, a), vec_scale(lx, b)), eps)) {
            rep.right_axial = false;
            rep.violations.push_back(
                {static_cast<int>(i), static_cast<int>(x), -1, "axis-law-right"});
            break;
          }
        }
      }
      if (d.omega[i][e].dim() != 1) {
        rep.primitive = false;
        rep.violations.push_back({static_cast<int>(i), e, -1, "not-primitive"});
      }
    }
  } else {
    rep.primitive = false;
  }
  return rep;
}

DecompositionAlgebra pushforward(const DecompositionAlgebra& d, const FusionMorphism& xi) {
  if (!(xi.source() == d.law))
    throw InvalidArgument("pushforward: morphism source does not match the law");
  DecompositionAlgebra out;
  out.algebra = d.algebra;
  out.law = xi.target();
  out.index_names = d.index_names;
  const double eps = 1e-9;
  for (std::size_t i = 0; i < d.index_count(); ++i) {
    Decomposition dec;
    for (std::size_t y = 0; y < out.law.size(); ++y) {
      std::vector<int> fiber;
      for (std::size_t x = 0; x < d.law.size(); ++x)
        if (xi.apply(static_cast<int>(x)) == static_cast<int>(y))
          fiber.push_back(static_cast<int>(x));
      dec.push_back(d.part_span(i, fiber, eps));
    }
    out.omega.push_back(std::move(dec));
  }
  return out;
}

DecMorphism make_morphism(DecompositionAlgebra source, DecompositionAlgebra target,
                          Matrix phi, std::vector<int> psi, double eps, bool axial_compat) {
  source.validate_shape();
  target.validate_shape();
  if (phi.rows() != target.algebra.dim || phi.cols() != source.algebra.dim)
    throw InvalidArgument("morphism matrix has wrong shape");
  if (psi.size() != source.index_count())
    throw InvalidArgument("morphism index map has wrong length");
  for (int j : psi)
    if (j < 0 || static_cast<std::size_t>(j) >= target.index_count())
      throw InvalidArgument("morphism index map out of range");

  const std::size_t n = source.algebra.dim;
  bool ex = n == 0 || phi.exact();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = vec_zero(n, ex), ej = vec_zero(n, ex);
      ei[i] = ex ? Scalar(1) : Scalar(Complex(1, 0));
      ej[j] = ex ? Scalar(1) : Scalar(Complex(1, 0));
      Vector lhs = phi * source.algebra.multiply(ei, ej);
      Vector rhs = target.algebra.multiply(phi * ei, phi * ej);
      if (!vec_is_zero(vec_sub(lhs, rhs), eps))
        throw InvalidObject("not an algebra homomorphism at basis pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < source.index_count(); ++i)
    for (std::size_t x = 0; x < source.law.size(); ++x)
      for (const auto& b : source.omega[i][x].basis_vectors())
        if (!target.omega[psi[i]][x].contains(phi * b, eps))
          throw InvalidObject("morphism violates part containment at (" +
                              source.index_names[i] + ", " + source.law.label(static_cast<int>(x)) + ")");
  if (axial_compat) {
    if (!source.axes || !target.axes)
      throw InvalidArgument("axial compatibility requested without axes");
    for (std::size_t i = 0; i < source.index_count(); ++i)
      if (!vec_is_zero(vec_sub(phi * (*source.axes)[i], (*target.axes)[psi[i]]), eps))
        throw InvalidObject("morphism does not map axes to axes");
  }
  DecMorphism f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.phi = std::move(phi);
  f.psi = std::move(psi);
  f.axial_compat = axial_compat;
  return f;
}

DecMorphism identity_morphism(const DecompositionAlgebra& d, double eps) {
  std::vector<int> psi(d.index_count());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = static_cast<int>(i);
  return make_morphism(d, d, Matrix::identity(d.algebra.dim, d.algebra.exact()), psi, eps,
                       d.axes.has_value());
}

Subspace morphism_kernel(const DecMorphism& f, double eps) {
  std::vector<Vector> basis =
      f.phi.exact() ? kernel_basis(f.phi) : kernel_basis_tol(f.phi, eps);
  return Subspace::span(f.source.algebra.dim, basis, eps);
}

namespace {

Vector embed(const Vector& v, std::size_t offset, std::size_t total, bool ex) {
  Vector out = vec_zero(total, ex);
  for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
  return out;
}

}  // namespace

ProductResult dec_product(const DecompositionAlgebra& d1, const DecompositionAlgebra& d2,
                          double eps) {
  if (!(d1.law == d2.law)) throw InvalidArgument("product requires a common fusion law");
  const std::size_t n1 = d1.algebra.dim, n2 = d2.algebra.dim, n = n1 + n2;
  bool ex = d1.algebra.exact() && d2.algebra.exact();

  DecompositionAlgebra p;
  p.law = d1.law;
  p.algebra = Algebra::zero(n, ex);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      p.algebra.sc[i][j] = embed(d1.algebra.sc[i][j], 0, n, ex);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      p.algebra.sc[n1 + i][n1 + j] = embed(d2.algebra.sc[i][j], n1, n, ex);

  for (std::size_t i = 0; i < d1.index_count(); ++i)
    for (std::size_t j = 0; j < d2.index_count(); ++j) {
      p.index_names.push_back("(" + d1.index_names[i] + "," + d2.index_names[j] + ")");
      Decomposition dec;
      for (std::size_t x = 0; x < p.law.size(); ++x) {
        std::vector<Vector> rows;
        for (const auto& v : d1.omega[i][x].basis_vectors()) rows.push_back(embed(v, 0, n, ex));
        for (const auto& v : d2.omega[j][x].basis_vectors()) rows.push_back(embed(v, n1, n, ex));
        dec.push_back(Subspace::span(n, rows, eps));
      }
      p.omega.push_back(std::move(dec));
    }

  // The product of axial objects with one evaluation map is axial again:
  // (a_i + b_j) acts on A_x^i + B_x^j by the same lambda_x.
  if (d1.axes && d2.axes && d1.unit && d1.unit == d2.unit && d1.lambda == d2.lambda) {
    p.unit = d1.unit;
    p.lambda = d1.lambda;
    std::vector<Vector> axes;
    for (std::size_t i = 0; i < d1.index_count(); ++i)
      for (std::size_t j = 0; j < d2.index_count(); ++j)
        axes.push_back(vec_add(embed((*d1.axes)[i], 0, n, ex), embed((*d2.axes)[j], n1, n, ex)));
    p.axes = std::move(axes);
  }

  Matrix phi1(n1, n, ex), phi2(n2, n, ex);
  for (std::size_t i = 0; i < n1; ++i) phi1.at(i, i) = ex ? Scalar(1) : Scalar(Complex(1, 0));
  for (std::size_t i = 0; i < n2; ++i) phi2.at(i, n1 + i) = ex ? Scalar(1) : Scalar(Complex(1, 0));
  std::vector<int> psi1, psi2;
  for (std::size_t i = 0; i < d1.index_count(); ++i)
    for (std::size_t j = 0; j < d2.index_count(); ++j) {
      psi1.push_back(static_cast<int>(i));
      psi2.push_back(static_cast<int>(j));
    }
  ProductResult out{p, make_morphism(p, d1, phi1, psi1, eps),
                    make_morphism(p, d2, phi2, psi2, eps)};
  return out;
}

DecMorphism product_factor(const ProductResult& prod, const DecMorphism& f1,
                           const DecMorphism& f2, double eps) {
  const std::size_t nb = f1.source.algebra.dim;
  if (f2.source.algebra.dim != nb || f1.source.index_count() != f2.source.index_count())
    throw InvalidArgument("product_factor: cone legs have different sources");
  const std::size_t n1 = f1.target.algebra.dim;
  const std::size_t n = prod.object.algebra.dim;
  bool ex = prod.object.algebra.exact();
  Matrix phi(n, nb, ex);
  for (std::size_t c = 0; c < nb; ++c) {
    for (std::size_t r = 0; r < n1; ++r) phi.at(r, c) = f1.phi.at(r, c);
    for (std::size_t r = 0; r + n1 < n; ++r) phi.at(n1 + r, c) = f2.phi.at(r, c);
  }
  const std::size_t j2 = f2.target.index_count();
  std::vector<int> psi(f1.source.index_count());
  for (std::size_t k = 0; k < psi.size(); ++k)
    psi[k] = static_cast<int>(f1.psi[k] * j2 + f2.psi[k]);
  return make_morphism(f1.source, prod.object, phi, psi, eps);
}

EqualizerResult dec_equalizer(const DecMorphism& f, const DecMorphism& g, double eps) {
  if (f.source.algebra.dim != g.source.algebra.dim ||
      f.target.algebra.dim != g.target.algebra.dim ||
      f.source.index_count() != g.source.index_count())
    throw InvalidArgument("equalizer: morphisms do not share source/target shape");
  const DecompositionAlgebra& A = f.source;
  const std::size_t n = A.algebra.dim;
  bool ex = A.algebra.exact();

  Matrix diff = f.phi - g.phi;
  std::vector<Vector> ker = ex ? kernel_basis(diff) : kernel_basis_tol(diff, eps);
  Subspace E = Subspace::span(n, ker, eps);
  const std::size_t m = E.dim();

  std::vector<int> kept;  // equalizer of the index maps
  for (std::size_t i = 0; i < A.index_count(); ++i)
    if (f.psi[i] == g.psi[i]) kept.push_back(static_cast<int>(i));

  DecompositionAlgebra Eobj;
  Eobj.law = A.law;
  Eobj.algebra = Algebra::zero(m, ex);
  auto into_E = [&](const Vector& v) {
    auto c = E.coords(v, eps);
    if (!c) throw InvalidObject("equalizer subspace is not multiplicatively closed");
    return *c;
  };
  auto Ebasis = E.basis_vectors();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      Eobj.algebra.sc[a][b] = into_E(A.algebra.multiply(Ebasis[a], Ebasis[b]));
  for (int i : kept) {
    Eobj.index_names.push_back(A.index_names[i]);
    Decomposition dec;
    for (std::size_t x = 0; x < A.law.size(); ++x) {
      Subspace inter = E.intersect(A.omega[i][x], eps);
      std::vector<Vector> rows;
      for (const auto& v : inter.basis_vectors()) rows.push_back(into_E(v));
      dec.push_back(Subspace::span(m, rows, eps));
    }
    Eobj.omega.push_back(std::move(dec));
  }

  Matrix incl(n, m, ex);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < n; ++r) incl.at(r, c) = Ebasis[c][r];
  std::vector<int> psi(kept.begin(), kept.end());
  EqualizerResult out{Eobj, make_morphism(Eobj, A, incl, psi, eps)};
  return out;
}

DecMorphism equalizer_factor(const EqualizerResult& eq, const DecMorphism& f,
                             const DecMorphism& g, const DecMorphism& h, double eps) {
  // h : F -> A with f.phi*h.phi == g.phi*h.phi; factor through E.
  const std::size_t nf = h.source.algebra.dim;
  bool ex = eq.object.algebra.exact();
  const std::size_t m = eq.object.algebra.dim;
  // coordinates of each h(basis vector) in the inclusion basis
  Matrix cols(m, nf, ex);
  Matrix inclusion_rows = eq.inclusion.phi.transpose();
  for (std::size_t c = 0; c < nf; ++c) {
    Vector v = vec_zero(nf, ex);
    v[c] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    Vector img = h.phi * v;
    auto coords = solve_in_row_span(inclusion_rows, img, eps);
    if (!coords) throw InvalidObject("cone does not factor through the equalizer");
    for (std::size_t r = 0; r < m; ++r) cols.at(r, c) = (*coords)[r];
  }
  // index map: position of psi-image inside the kept list
  std::vector<int> sigma(h.source.index_count());
  for (std::size_t l = 0; l < sigma.size(); ++l) {
    int want = h.psi[l];
    auto it = std::find(eq.inclusion.psi.begin(), eq.inclusion.psi.end(), want);
    if (it == eq.inclusion.psi.end())
      throw InvalidObject("cone index map does not factor through the equalizer");
    sigma[l] = static_cast<int>(it - eq.inclusion.psi.begin());
  }
  return make_morphism(h.source, eq.object, cols, sigma, eps);
}

IdealCheck decomposition_ideal_check(const DecompositionAlgebra& d, const Subspace& ideal,
                                     double eps) {
  d.validate_shape();
  if (ideal.ambient() != d.algebra.dim)
    throw InvalidArgument("ideal has wrong ambient dimension");
  IdealCheck out;
  bool ex = d.algebra.exact();
  for (const auto& u : ideal.basis_vectors()) {
    for (std::size_t b = 0; b < d.algebra.dim && out.algebra_ideal; ++b) {
      Vector eb = vec_zero(d.algebra.dim, ex);
      eb[b] = ex ? Scalar(1) : Scalar(Complex(1, 0));
      if (!ideal.contains(d.algebra.multiply(eb, u), eps) ||
          !ideal.contains(d.algebra.multiply(u, eb), eps)) {
        out.algebra_ideal = false;
        out.detail = "AI or IA escapes I";
      }
    }
  }
  out.part_dims.assign(d.index_count(), std::vector<std::size_t>(d.law.size(), 0));
  for (std::size_t i = 0; i < d.index_count(); ++i) {
    std::size_t sum = 0;
    for (std::size_t x = 0; x < d.law.size(); ++x) {
      std::size_t dx = ideal.intersect(d.omega[i][x], eps).dim();
      out.part_dims[i][x] = dx;
      sum += dx;
    }
    if (sum != ideal.dim()) {
      out.decomposition_ideal = false;
      if (out.detail.empty())
        out.detail = "I is not the direct sum of its parts at index " + d.index_names[i];
    }
  }
  return out;
}

QuotientResult dec_quotient(const DecompositionAlgebra& d, const Subspace& ideal, double eps) {
  IdealCheck chk = decomposition_ideal_check(d, ideal, eps);
  if (!chk.ok()) throw InvalidArgument("dec_quotient: not a decomposition ideal: " + chk.detail);
  const std::size_t n = d.algebra.dim;
  bool ex = d.algebra.exact();

  // Complement coordinates: non-pivot columns of the ideal's echelon basis.
  std::vector<bool> is_pivot(n, false);
  {
    auto r = rref(ideal.basis(), eps);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t m = free_cols.size();

  auto project = [&](const Vector& v) {
    Vector red = ideal.reduce(v, eps);
    Vector out = vec_zero(m, ex);
    for (std::size_t k = 0; k < m; ++k) out[k] = red[free_cols[k]];
    return out;
  };
  auto lift = [&](std::size_t k) {
    Vector v = vec_zero(n, ex);
    v[free_cols[k]] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    return v;
  };

  DecompositionAlgebra q;
  q.law = d.law;
  q.index_names = d.index_names;
  q.algebra = Algebra::zero(m, ex);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.algebra.sc[a][b] = project(d.algebra.multiply(lift(a), lift(b)));
  for (std::size_t i = 0; i < d.index_count(); ++i) {
    Decomposition dec;
    for (std::size_t x = 0; x < d.law.size(); ++x) {
      std::vector<Vector> rows;
      for (const auto& v : d.omega[i][x].basis_vectors()) rows.push_back(project(v));
      Subspace px = Subspace::span(m, rows, eps);
      if (px.dim() != d.omega[i][x].dim() - chk.part_dims[i][x])
        throw InvalidObject("quotient part dimension mismatch");
      dec.push_back(std::move(px));
    }
    q.omega.push_back(std::move(dec));
  }
  // Axial data survives when no axis falls into the ideal.
  if (d.axes && d.unit && d.lambda) {
    bool keep = true;
    std::vector<Vector> axes;
    for (const auto& a : *d.axes) {
      Vector pa = project(a);
      if (vec_is_zero(pa, eps)) keep = false;
      axes.push_back(std::move(pa));
    }
    if (keep) {
      q.unit = d.unit;
      q.lambda = d.lambda;
      q.axes = std::move(axes);
    }
  }

  Matrix proj(m, n, ex);
  for (std::size_t c = 0; c < n; ++c) {
    Vector ec = vec_zero(n, ex);
    ec[c] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    Vector pc = project(ec);
    for (std::size_t r = 0; r < m; ++r) proj.at(r, c) = pc[r];
  }
  std::vector<int> psi(d.index_count());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = static_cast<int>(i);
  QuotientResult out{q, make_morphism(d, q, proj, psi, eps)};
  return out;
}

}  // namespace decalg
