#include "decalg/miyamoto.hpp"

#include "decalg/permgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace decalg {

namespace {

std::string matrix_key(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& s = m.at(i, j);
      if (s.exact()) {
        os << s.str() << ";";
      } else {
        Complex z = s.to_complex();
        os << std::llround(z.real() * 1e6) << "," << std::llround(z.imag() * 1e6) << ";";
      }
    }
  return os.str();
}

}  // namespace

std::optional<int> MatrixGroupClosure::index_of(const Matrix& m) const {
  std::string key = matrix_key(m);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (matrix_key(elements[i]) == key) return static_cast<int>(i);
  return std::nullopt;
}

MatrixGroupClosure matrix_group_closure(const std::vector<Matrix>& generators,
                                        std::size_t cap) {
  MatrixGroupClosure out;
  if (generators.empty()) throw InvalidArgument("matrix closure needs at least one generator");
  const std::size_t n = generators[0].rows();
  bool ex = generators[0].exact();
  out.elements.push_back(Matrix::identity(n, ex));
  out.words.push_back({});
  std::unordered_map<std::string, int> index;
  index.emplace(matrix_key(out.elements[0]), 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Matrix next = generators[g] * out.elements[head];
      std::string key = matrix_key(next);
      if (index.count(key)) continue;
      if (out.elements.size() >= cap) {
        out.exhausted = true;
        return out;
      }
      index.emplace(key, static_cast<int>(out.elements.size()));
      Word w = out.words[head];
      w.push_back(static_cast<int>(g) + 1);
      out.words.push_back(std::move(w));
      out.elements.push_back(std::move(next));
    }
  }
  return out;
}

bool MiyamotoContext::exact() const {
  if (!graded.algebra.exact()) return false;
  for (const auto& c : chars)
    for (const auto& v : c.values)
      if (!v.exact()) return false;
  return true;
}

std::vector<RCharacter> MiyamotoContext::pm1_characters(const CayleyTable& gamma) {
  if (gamma.order() != 2)
    throw InvalidArgument("pm1 characters require a grading group of order 2");
  RCharacter triv{{Scalar(1), Scalar(1)}};
  RCharacter sign{{Scalar(1), Scalar(-1)}};
  if (gamma.identity == 1) std::swap(sign.values[0], sign.values[1]);
  return {triv, sign};
}

MiyamotoContext MiyamotoContext::make(DecompositionAlgebra base,
                                      std::optional<FusionMorphism> grading,
                                      std::vector<RCharacter> chars, double eps) {
  MiyamotoContext ctx;
  ctx.eps = eps;
  ctx.base = std::move(base);
  ctx.base.validate_shape();
  if (grading) {
    if (!(grading->source() == ctx.base.law))
      throw InvalidArgument("grading morphism source must be the base law");
    ctx.gamma = cayley_from_group_law(grading->target());
    ctx.graded = pushforward(ctx.base, *grading);
    ctx.grading = std::move(grading);
  } else {
    ctx.gamma = cayley_from_group_law(ctx.base.law);
    ctx.graded = ctx.base;
  }
  if (chars.empty()) throw InvalidArgument("character subgroup must be nonempty");
  const std::size_t n = ctx.gamma.order();
  for (const auto& c : chars) {
    if (c.values.size() != n) throw InvalidObject("character has wrong length");
    for (const auto& v : c.values)
      if (v.is_zero(eps)) throw InvalidObject("character value is not invertible");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        Scalar lhs = c.values[ctx.gamma.mult[g][h]];
        Scalar rhs = c.values[g] * c.values[h];
        if (!(lhs - rhs).is_zero(eps))
          throw InvalidObject("character is not multiplicative on the grading group");
      }
  }
  // trivial character first
  std::stable_sort(chars.begin(), chars.end(), [&](const RCharacter& a, const RCharacter& b) {
    auto is_triv = [&](const RCharacter& c) {
      for (const auto& v : c.values)
        if (!v.is_one(eps)) return false;
      return true;
    };
    return is_triv(a) && !is_triv(b);
  });
  {
    bool triv = true;
    for (const auto& v : chars[0].values)
      if (!v.is_one(eps)) triv = false;
    if (!triv) throw InvalidObject("character subgroup does not contain the trivial character");
  }
  ctx.chars = std::move(chars);
  // subgroup structure of the character set
  const std::size_t m = ctx.chars.size();
  auto find_char = [&](const std::vector<Scalar>& values) {
    for (std::size_t k = 0; k < m; ++k) {
      bool all = true;
      for (std::size_t g = 0; g < n && all; ++g)
        if (!(ctx.chars[k].values[g] - values[g]).is_zero(eps)) all = false;
      if (all) return static_cast<int>(k);
    }
    return -1;
  };
  ctx.char_mult.assign(m, std::vector<int>(m, -1));
  ctx.char_inv.assign(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Scalar> prod(n);
      for (std::size_t g = 0; g < n; ++g) prod[g] = ctx.chars[a].values[g] * ctx.chars[b].values[g];
      int k = find_char(prod);
      if (k < 0) throw InvalidObject("character set is not closed under products");
      ctx.char_mult[a][b] = k;
      if (k == 0 && ctx.char_inv[a] == -1) ctx.char_inv[a] = static_cast<int>(b);
    }
    if (ctx.char_inv[a] == -1) throw InvalidObject("character set is not closed under inverses");
  }
  // duplicate characters would make the subgroup structure ambiguous
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      bool same = true;
      for (std::size_t g = 0; g < n && same; ++g)
        if (!(ctx.chars[a].values[g] - ctx.chars[b].values[g]).is_zero(eps)) same = false;
      if (same) throw InvalidObject("duplicate character in the subgroup");
    }
  // The group-law containment A_g A_h <= A_gh is what turns every scaling
  // map into an algebra automorphism; verify it once here.
  VerifyReport rep = verify(ctx.graded, eps);
  if (!rep.valid())
    throw InvalidObject("graded decomposition fails its fusion containment check");
  return ctx;
}

bool is_algebra_automorphism(const Algebra& a, const Matrix& t, double eps) {
  const std::size_t n = a.dim;
  bool ex = t.exact();
  Matrix tinv = inverse(t, eps);
  for (std::size_t c = 0; c < n; ++c) {
    Vector ec = vec_zero(n, ex);
    ec[c] = ex ? Scalar(1) : Scalar(Complex(1, 0));
    Matrix adc(n, n, ex);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = a.sc[c][j][k];
        adc.at(k, j) = (!ex && v.exact()) ? Scalar(v.to_complex()) : v;
      }
    // T ad(e_c) T^-1 = ad(T e_c) collects T(e_c w) = T(e_c) T(w) over all w
    if (!(t * adc * tinv).close_to(a.ad(t * ec), std::max(eps, 1e-9))) return false;
  }
  return true;
}

namespace {

void fill_tau_cache(const MiyamotoContext& ctx) {
  auto& cache = *ctx.cache;
  if (!cache.tau.empty()) return;
  const std::size_t n = ctx.graded.algebra.dim;
  bool ex = ctx.exact();
  for (std::size_t i = 0; i < ctx.index_count(); ++i) {
    const auto& dec = ctx.graded.omega[i];
    std::vector<Vector> cols;
    std::vector<std::size_t> grade_of;
    for (std::size_t g = 0; g < dec.size(); ++g)
      for (const auto& b : dec[g].basis_vectors()) {
        cols.push_back(b);
        grade_of.push_back(g);
      }
    if (cols.size() != n)
      throw InvalidObject("miyamoto_map: decomposition is not a direct sum");
    Matrix C(n, n, ex);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Scalar v = cols[j][r];
        C.at(r, j) = (!ex && v.exact()) ? Scalar(v.to_complex()) : v;
      }
    Matrix Cinv = inverse(C, ctx.eps);
    cache.basis.push_back(C);
    cache.basis_inv.push_back(Cinv);
    std::vector<Matrix> row;
    for (std::size_t k = 0; k < ctx.chars.size(); ++k) {
      Matrix D(n, n, ex);
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s = ctx.chars[k].values[grade_of[j]];
        D.at(j, j) = (!ex && s.exact()) ? Scalar(s.to_complex()) : s;
      }
      row.push_back(C * D * Cinv);
    }
    cache.tau.push_back(std::move(row));
  }
}

}  // namespace

Matrix miyamoto_map(const MiyamotoContext& ctx, std::size_t i, std::size_t chi) {
  fill_tau_cache(ctx);
  return ctx.cache->tau.at(i).at(chi);
}

MatrixGroupClosure miyamoto_group(const MiyamotoContext& ctx, std::size_t cap) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < ctx.index_count(); ++i)
    for (std::size_t k = 1; k < ctx.chars.size(); ++k) gens.push_back(miyamoto_map(ctx, i, k));
  if (gens.empty()) gens.push_back(Matrix::identity(ctx.graded.algebra.dim, ctx.exact()));
  return matrix_group_closure(gens, cap);
}

namespace {

const std::vector<std::vector<Matrix>>& all_taus(const MiyamotoContext& ctx) {
  fill_tau_cache(ctx);
  return ctx.cache->tau;
}

}  // namespace

ClosureReport is_miyamoto_closed(const MiyamotoContext& ctx) {
  ClosureReport rep;
  const std::size_t ni = ctx.index_count(), nc = ctx.chars.size();
  auto tau = all_taus(ctx);
  rep.pi.assign(ni, std::vector<std::vector<int>>(nc));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t k = 0; k < nc; ++k) {
      std::vector<int> pi(ni, -1);
      for (std::size_t j = 0; j < ni; ++j) {
        // image of decomposition j under tau_{i,k}
        Decomposition image;
        for (std::size_t g = 0; g < ctx.gamma.order(); ++g) {
          std::vector<Vector> rows;
          for (const auto& b : ctx.graded.omega[j][g].basis_vectors())
            rows.push_back(tau[i][k] * b);
          image.push_back(Subspace::span(ctx.graded.algebra.dim, rows, ctx.eps));
        }
        for (std::size_t cand = 0; cand < ni; ++cand) {
          bool all = true;
          for (std::size_t g = 0; g < ctx.gamma.order() && all; ++g)
            if (!image[g].same(ctx.graded.omega[cand][g], std::max(ctx.eps, 1e-9))) all = false;
          if (all) {
            pi[j] = static_cast<int>(cand);  // smallest matching index
            break;
          }
        }
        if (pi[j] < 0) {
          rep.closed = false;
          if (!rep.failure) rep.failure = ClosureReport::Failure{i, k, j};
        }
      }
      rep.pi[i][k] = std::move(pi);
    }
  return rep;
}

int UniversalPresentation::generator_of(std::size_t i, std::size_t chi) const {
  for (std::size_t g = 0; g < generator_meta.size(); ++g)
    if (generator_meta[g].first == static_cast<int>(i) &&
        generator_meta[g].second == static_cast<int>(chi))
      return static_cast<int>(g);
  throw InvalidArgument("no such universal generator");
}

UniversalPresentation universal_presentation(const MiyamotoContext& ctx) {
  if (!ctx.exact())
    throw InvalidArgument("universal presentation requires exact scalars");
  ClosureReport closure = is_miyamoto_closed(ctx);
  if (!closure.closed) throw InvalidArgument("context is not Miyamoto-closed");

  const std::size_t ni = ctx.index_count(), nc = ctx.chars.size();
  auto tau = all_taus(ctx);

  UniversalPresentation up;
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t k = 1; k < nc; ++k) {
      up.generator_meta.emplace_back(static_cast<int>(i), static_cast<int>(k));
      up.presentation.generators.push_back("t_" + ctx.graded.index_names[i] + "_c" +
                                           std::to_string(k));
    }
  auto gen = [&](std::size_t i, std::size_t k) {
    return static_cast<int>(i * (nc - 1) + (k - 1)) + 1;  // 1-based letter
  };

  std::set<Word> rels;
  auto add = [&](Word w) {
    w = Presentation::free_reduce(w);
    if (!w.empty()) rels.insert(std::move(w));
  };

  // group relations inside each Y_i
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t k1 = 1; k1 < nc; ++k1)
      for (std::size_t k2 = 1; k2 < nc; ++k2) {
        int kp = ctx.char_mult[k1][k2];
        Word w{gen(i, k1), gen(i, k2)};
        if (kp != 0) w.push_back(-gen(i, kp));
        add(std::move(w));
      }

  // R_a for the identity of each Y_i: pairs with identical maps for every chi
  for (std::size_t j = 0; j < ni; ++j)
    for (std::size_t l = j + 1; l < ni; ++l) {
      bool same = true;
      for (std::size_t k = 1; k < nc && same; ++k)
        if (!(tau[j][k] == tau[l][k])) same = false;
      if (!same) continue;
      up.duplicate_identifications.emplace_back(static_cast<int>(j), static_cast<int>(l));
      for (std::size_t k = 1; k < nc; ++k) add(Word{gen(j, k), -gen(l, k)});
    }

  // conjugation relations that hold globally (for every character)
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t k = 1; k < nc; ++k) {
      const Matrix& a = tau[i][k];
      const Matrix& ainv = tau[i][ctx.char_inv[k]];
      std::vector<std::pair<int, int>> ra;
      for (std::size_t j = 0; j < ni; ++j) {
        std::vector<Matrix> conj;
        for (std::size_t kp = 1; kp < nc; ++kp) conj.push_back(a * tau[j][kp] * ainv);
        for (std::size_t l = 0; l < ni; ++l) {
          bool all = true;
          for (std::size_t kp = 1; kp < nc && all; ++kp)
            if (!(conj[kp - 1] == tau[l][kp])) all = false;
          if (!all) continue;
          ra.emplace_back(static_cast<int>(j), static_cast<int>(l));
          for (std::size_t kp = 1; kp < nc; ++kp)
            add(Word{gen(i, k), gen(j, kp), -gen(i, k), -gen(l, kp)});
        }
        // Lemma-style instance: (j, pi_{i,k}(j)) must be in R_a
        int pij = closure.pi[i][k][j];
        bool found = false;
        for (const auto& [jj, ll] : ra)
          if (jj == static_cast<int>(j) && ll == pij) found = true;
        if (!found)
          throw InvalidObject("closure permutation instance missing from the conjugation set");
      }
      up.conj_sets.push_back(std::move(ra));
      up.conj_set_owner.emplace_back(static_cast<int>(i), static_cast<int>(k));
    }

  up.presentation.relators.assign(rels.begin(), rels.end());
  return up;
}

CentralExtensionReport central_extension_check(const MiyamotoContext& ctx,
                                               std::size_t max_cosets) {
  UniversalPresentation up = universal_presentation(ctx);
  CentralExtensionReport rep;

  CosetEnumeration ce = coset_enumerate(up.presentation, max_cosets);
  if (ce.exhausted) {
    rep.exhausted = true;
    return rep;
  }
  rep.universal_order = ce.order;

  // generator -> Miyamoto map
  std::vector<Matrix> gen_mats;
  for (const auto& [i, k] : up.generator_meta)
    gen_mats.push_back(miyamoto_map(ctx, static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
  MatrixGroupClosure miy = miyamoto_group(ctx);
  if (miy.exhausted) {
    rep.exhausted = true;
    return rep;
  }
  rep.miyamoto_order = miy.order();

  // the epimorphism kills every relator
  rep.epimorphism_ok = true;
  const std::size_t n = ctx.graded.algebra.dim;
  for (const Word& r : up.presentation.relators) {
    Matrix acc = Matrix::identity(n, ctx.exact());
    for (int letter : r) {
      std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
      const auto& [i, k] = up.generator_meta[g];
      std::size_t kk = letter > 0 ? static_cast<std::size_t>(k)
                                  : static_cast<std::size_t>(ctx.char_inv[k]);
      acc = acc * miyamoto_map(ctx, static_cast<std::size_t>(i), kk);
    }
    if (!acc.is_identity(std::max(ctx.eps, 1e-9))) rep.epimorphism_ok = false;
  }

  // Enumerate the universal group as permutations, with words.  The regular
  // action is a right action, so an element whose BFS word is l1..lk is the
  // group product g_l1 * ... * g_lk read forward.  Generators acting
  // trivially on cosets are dropped together with their matrices (the
  // permutation model drops them too); their image is the identity whenever
  // the epimorphism is defined at all.
  std::vector<Perm> gens;
  std::vector<Matrix> live_mats;
  for (std::size_t gi = 0; gi < ce.generator_action.size(); ++gi) {
    Perm p(ce.generator_action[gi]);
    if (p.is_identity()) continue;
    gens.push_back(p);
    live_mats.push_back(gen_mats[gi]);
  }
  if (gens.empty()) gens.push_back(Perm::identity(static_cast<int>(ce.order)));
  PermGroup uhat(static_cast<int>(ce.order), gens, std::max<std::size_t>(ce.order, 2));
  if (uhat.order() != ce.order)
    throw InvalidObject("regular representation does not reproduce the coset count");

  // kernel of the epimorphism, via the word of each element
  std::vector<int> kernel;
  for (std::size_t e = 0; e < uhat.order(); ++e) {
    Matrix acc = Matrix::identity(n, ctx.exact());
    for (int letter : uhat.word_of(static_cast<int>(e)))
      acc = acc * live_mats[static_cast<std::size_t>(letter) - 1];
    if (acc.is_identity(std::max(ctx.eps, 1e-9))) kernel.push_back(static_cast<int>(e));
  }
  rep.kernel_size = kernel.size();
  rep.kernel_central = true;
  const auto& elems = uhat.elements();
  for (int z : kernel)
    for (const Perm& g : uhat.generators())
      if (!(elems[z] * g == g * elems[z])) rep.kernel_central = false;
  return rep;
}

StabilityReport check_stability_and_unique_type(const MiyamotoContext& ctx) {
  StabilityReport rep;
  if (!ctx.base.axes) throw InvalidArgument("stability check requires axial data");
  const auto& axes = *ctx.base.axes;
  const std::size_t ni = ctx.index_count(), nc = ctx.chars.size();
  auto tau = all_taus(ctx);

  for (std::size_t i = 0; i < ni && rep.stable; ++i)
    for (std::size_t k = 0; k < nc && rep.stable; ++k)
      for (std::size_t j = 0; j < ni; ++j) {
        // a single target must receive both the axis and all original parts
        int target = -1;
        for (std::size_t cand = 0; cand < ni; ++cand) {
          if (!vec_is_zero(vec_sub(tau[i][k] * axes[j], axes[cand]), std::max(ctx.eps, 1e-9)))
            continue;
          bool parts_ok = true;
          for (std::size_t x = 0; x < ctx.base.law.size() && parts_ok; ++x) {
            std::vector<Vector> rows;
            for (const auto& b : ctx.base.omega[j][x].basis_vectors())
              rows.push_back(tau[i][k] * b);
            Subspace img = Subspace::span(ctx.base.algebra.dim, rows, ctx.eps);
            if (!img.same(ctx.base.omega[cand][x], std::max(ctx.eps, 1e-9))) parts_ok = false;
          }
          if (parts_ok) {
            target = static_cast<int>(cand);
            break;
          }
        }
        if (target < 0) {
          rep.stable = false;
          rep.stability_failure = {i, k, j};
          rep.detail = "tau does not carry decomposition " + ctx.base.index_names[j] +
                       " onto an axis-compatible member of Omega";
          break;
        }
      }

  for (std::size_t i = 0; i < ni && rep.unique_type; ++i)
    for (std::size_t j = i + 1; j < ni && rep.unique_type; ++j) {
      if (vec_is_zero(vec_sub(axes[i], axes[j]), std::max(ctx.eps, 1e-9))) {
        rep.unique_type = false;
        rep.detail = "axes " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        break;
      }
      bool distinguishes = false;
      for (std::size_t k = 1; k < nc; ++k)
        if (!(tau[i][k] == tau[j][k])) distinguishes = true;
      if (!distinguishes) {
        rep.unique_type = false;
        rep.detail = "indices " + std::to_string(i) + " and " + std::to_string(j) +
                     " share every Miyamoto map";
      }
    }
  return rep;
}

InducedMorphismReport induced_group_morphism(const DecMorphism& f, const MiyamotoContext& src,
                                             const MiyamotoContext& dst, std::size_t cap) {
  InducedMorphismReport rep;
  const std::size_t nc = src.chars.size();
  if (dst.chars.size() != nc)
    throw InvalidArgument("contexts must share one character subgroup");

  auto tsrc = all_taus(src);
  auto tdst = all_taus(dst);

  rep.intertwines = true;
  for (std::size_t i = 0; i < src.index_count() && rep.intertwines; ++i)
    for (std::size_t k = 0; k < nc; ++k) {
      Matrix lhs = f.phi * tsrc[i][k];
      Matrix rhs = tdst[f.psi[i]][k] * f.phi;
      if (!lhs.close_to(rhs, std::max(src.eps, 1e-9))) {
        rep.intertwines = false;
        rep.witness = "intertwining fails at index " + src.graded.index_names[i];
        break;
      }
    }

  rep.surjective = rank(f.phi, std::max(src.eps, 1e-9)) == dst.graded.algebra.dim;

  // Closure of the source group while tracking candidate images; a clash
  // shows the generator assignment does not extend to a homomorphism.
  std::vector<Matrix> sgens, imgs;
  for (std::size_t i = 0; i < src.index_count(); ++i)
    for (std::size_t k = 1; k < nc; ++k) {
      sgens.push_back(tsrc[i][k]);
      imgs.push_back(tdst[f.psi[i]][k]);
    }
  rep.miy_functorial = true;
  if (!sgens.empty()) {
    std::vector<Matrix> elems{Matrix::identity(src.graded.algebra.dim, src.exact())};
    std::vector<Matrix> eimgs{Matrix::identity(dst.graded.algebra.dim, dst.exact())};
    std::unordered_map<std::string, int> index{{matrix_key(elems[0]), 0}};
    for (std::size_t head = 0; head < elems.size() && rep.miy_functorial; ++head) {
      for (std::size_t g = 0; g < sgens.size(); ++g) {
        Matrix next = sgens[g] * elems[head];
        Matrix nimg = imgs[g] * eimgs[head];
        auto it = index.find(matrix_key(next));
        if (it == index.end()) {
          if (elems.size() >= cap) throw CapExceeded("source Miyamoto group closure overflow");
          index.emplace(matrix_key(next), static_cast<int>(elems.size()));
          elems.push_back(std::move(next));
          eimgs.push_back(std::move(nimg));
        } else if (!eimgs[it->second].close_to(nimg, std::max(dst.eps, 1e-9))) {
          rep.miy_functorial = false;
          rep.witness = "two words with one source automorphism map to different images";
          break;
        }
      }
    }
  }

  // universal level: relators of the source must die in the target group
  rep.universal_functorial = true;
  try {
    UniversalPresentation ups = universal_presentation(src);
    UniversalPresentation upd = universal_presentation(dst);
    CosetEnumeration ced = coset_enumerate(upd.presentation, cap);
    if (ced.exhausted) throw CapExceeded("target universal enumeration overflow");
    for (const Word& r : ups.presentation.relators) {
      // translate letters through psi
      std::vector<int> perm(ced.order);
      for (std::size_t c = 0; c < ced.order; ++c) perm[c] = static_cast<int>(c);
      auto apply_letter = [&](int letter) {
        const auto& [i, k] = ups.generator_meta[static_cast<std::size_t>(std::abs(letter)) - 1];
        int dgen = upd.generator_of(static_cast<std::size_t>(f.psi[i]),
                                    static_cast<std::size_t>(k));
        const auto& act = ced.generator_action[dgen];
        std::vector<int> out(perm.size());
        if (letter > 0) {
          for (std::size_t c = 0; c < perm.size(); ++c) out[c] = act[perm[c]];
        } else {
          std::vector<int> inv(act.size());
          for (std::size_t c = 0; c < act.size(); ++c) inv[act[c]] = static_cast<int>(c);
          for (std::size_t c = 0; c < perm.size(); ++c) out[c] = inv[perm[c]];
        }
        perm = std::move(out);
      };
      for (int letter : r) apply_letter(letter);
      for (std::size_t c = 0; c < perm.size(); ++c)
        if (perm[c] != static_cast<int>(c)) {
          rep.universal_functorial = false;
          if (rep.witness.empty())
            rep.witness = "a source relator survives in the target universal group";
          break;
        }
      if (!rep.universal_functorial) break;
    }
  } catch (const CapExceeded&) {
    rep.universal_functorial = false;
    rep.witness = "universal group enumeration exhausted";
  }
  return rep;
}

}  // namespace decalg
