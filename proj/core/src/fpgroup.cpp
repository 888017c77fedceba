#include "decalg/fpgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace decalg {

void Presentation::validate() const {
  for (const Word& w : relators)
    for (int letter : w) {
      int g = std::abs(letter) - 1;
      if (letter == 0 || g < 0 || static_cast<std::size_t>(g) >= generators.size())
        throw InvalidObject("relator letter addresses no generator");
    }
}

Word Presentation::free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Presentation finest_grading_presentation(const FusionLaw& law) {
  Presentation p;
  for (const auto& lb : law.elements()) p.generators.push_back("g_" + lb);
  std::set<Word> seen;
  for (std::size_t x = 0; x < law.size(); ++x)
    for (std::size_t y = 0; y < law.size(); ++y)
      for (int z : law.entry(static_cast<int>(x), static_cast<int>(y))) {
        Word w{static_cast<int>(x) + 1, static_cast<int>(y) + 1, -(z + 1)};
        if (seen.insert(w).second) p.relators.push_back(w);
      }
  return p;
}

CollapseReport collapse_report(const FusionLaw& law) {
  CollapseReport rep;
  const int n = static_cast<int>(law.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& cell = law.entry(x, y);
      if (std::binary_search(cell.begin(), cell.end(), y))
        rep.forced_trivial.push_back({x, y, true});
      if (std::binary_search(cell.begin(), cell.end(), x) && x != y)
        rep.forced_trivial.push_back({y, x, false});
      for (std::size_t k = 1; k < cell.size(); ++k)
        rep.forced_equal.push_back({cell[k - 1], cell[k], 'b', x, y, cell[k]});
    }
  // Rule (c): a member shared between two cells of one row or one column.
  for (int x = 0; x < n; ++x)
    for (int y1 = 0; y1 < n; ++y1)
      for (int y2 = y1 + 1; y2 < n; ++y2) {
        const auto &c1 = law.entry(x, y1), &c2 = law.entry(x, y2);
        for (int z : c1)
          if (std::binary_search(c2.begin(), c2.end(), z))
            rep.forced_equal.push_back({y1, y2, 'c', x, -1, z});
        const auto &r1 = law.entry(y1, x), &r2 = law.entry(y2, x);
        for (int z : r1)
          if (std::binary_search(r2.begin(), r2.end(), z))
            rep.forced_equal.push_back({y1, y2, 'c', -1, x, z});
      }
  return rep;
}

std::vector<int> CollapseReport::trivial_generators(std::size_t n) const {
  // Triviality propagates through the forced-equal classes.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : forced_equal) parent[find(e.a)] = find(e.b);
  std::vector<bool> trivial(n, false);
  for (const auto& t : forced_trivial) trivial[find(t.x)] = true;
  std::vector<int> out;
  for (std::size_t g = 0; g < n; ++g)
    if (trivial[find(static_cast<int>(g))]) out.push_back(static_cast<int>(g));
  return out;
}

Presentation simplify_presentation(const Presentation& p, const CollapseReport& report,
                                   std::vector<int>* genmap_out) {
  const std::size_t n = p.generators.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : report.forced_equal) {
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<bool> trivial(n, false);
  for (const auto& t : report.forced_trivial) trivial[find(t.x)] = true;
  // compress: every class member shares the root's triviality
  std::vector<int> genmap(n, -1);
  Presentation out;
  for (std::size_t g = 0; g < n; ++g) {
    int r = find(static_cast<int>(g));
    if (trivial[r]) continue;
    if (genmap[r] == -1) {
      genmap[r] = static_cast<int>(out.generators.size());
      out.generators.push_back(p.generators[r]);
    }
    genmap[g] = genmap[r];
  }
  std::set<Word> seen;
  for (const Word& w : p.relators) {
    Word mapped;
    for (int letter : w) {
      int g = std::abs(letter) - 1;
      int ng = genmap[g];
      if (ng == -1) continue;  // trivial generator
      mapped.push_back(letter > 0 ? ng + 1 : -(ng + 1));
    }
    mapped = Presentation::free_reduce(mapped);
    if (mapped.empty()) continue;
    if (seen.insert(mapped).second) out.relators.push_back(mapped);
  }
  if (genmap_out) *genmap_out = genmap;
  return out;
}

bool AbelianGrading::finite() const {
  for (const Int& d : invariant_factors)
    if (d == 0) return false;
  return true;
}

Int AbelianGrading::order() const {
  Int n = 1;
  for (const Int& d : invariant_factors) {
    if (d == 0) throw InvalidArgument("infinite grading group has no order");
    n *= d;
  }
  return n;
}

bool AbelianGrading::is_fusion_morphism() const {
  auto reduce = [&](std::vector<Int> v) {
    for (std::size_t k = 0; k < invariant_factors.size(); ++k)
      if (invariant_factors[k] != 0) {
        v[k] %= invariant_factors[k];
        if (v[k] < 0) v[k] += invariant_factors[k];
      }
    return v;
  };
  for (std::size_t x = 0; x < law.size(); ++x)
    for (std::size_t y = 0; y < law.size(); ++y) {
      std::vector<Int> sum(invariant_factors.size(), 0);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = map[x][k] + map[y][k];
      sum = reduce(std::move(sum));
      for (int z : law.entry(static_cast<int>(x), static_cast<int>(y)))
        if (reduce(map[z]) != sum) return false;
    }
  return true;
}

std::pair<FusionLaw, std::vector<int>> AbelianGrading::as_group_law() const {
  if (!finite()) throw InvalidArgument("as_group_law requires a finite grading group");
  const std::size_t k = invariant_factors.size();
  std::vector<std::vector<Int>> elems;
  std::vector<Int> cur(k, 0);
  // lexicographic enumeration of the direct product of cyclic factors
  for (;;) {
    elems.push_back(cur);
    bool carried_out = true;
    for (std::size_t pos = k; pos > 0;) {
      --pos;
      cur[pos] += 1;
      if (cur[pos] < invariant_factors[pos]) {
        carried_out = false;
        break;
      }
      cur[pos] = 0;
    }
    if (carried_out) break;
  }
  auto index_of = [&](const std::vector<Int>& v) {
    auto it = std::lower_bound(elems.begin(), elems.end(), v);
    return static_cast<int>(it - elems.begin());
  };
  CayleyTable t;
  for (const auto& e : elems) {
    std::string lb = "(";
    for (std::size_t i = 0; i < k; ++i) lb += (i ? "," : "") + e[i].str();
    lb += ")";
    t.labels.push_back(lb);
  }
  t.identity = 0;
  t.mult.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::vector<Int> s(k);
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = elems[a][i] + elems[b][i];
        if (s[i] >= invariant_factors[i]) s[i] -= invariant_factors[i];
      }
      t.mult[a][b] = index_of(s);
    }
  FusionLaw gl = group_fusion_law(t);
  std::vector<int> lmap(law.size());
  for (std::size_t x = 0; x < law.size(); ++x) lmap[x] = index_of(map[x]);
  return {gl, lmap};
}

AbelianGrading abelianized_grading(const FusionLaw& law) {
  Presentation p = finest_grading_presentation(law);
  const std::size_t n = p.generators.size();
  IntegerMatrix rel(p.relators.size(), n);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r]) {
      int g = std::abs(letter) - 1;
      rel.at(r, g) += letter > 0 ? 1 : -1;
    }
  SmithResult snf = smith_normal_form(rel);

  // Rows of rel span the relation lattice R; w + R -> w*V moves R onto the
  // diagonal lattice of S, so generator e_x has coordinates row x of V.
  std::vector<Int> diag = snf.diagonal();
  diag.resize(n, Int(0));  // columns beyond the diagonal are free
  std::vector<std::size_t> keep;
  std::vector<Int> factors;
  for (std::size_t k = 0; k < n; ++k)
    if (diag[k] != 1) {
      keep.push_back(k);
      factors.push_back(diag[k]);
    }
  // Invariant factors ascending, zeros (free rank) last: SNF emits them that way.
  AbelianGrading g;
  g.law = law;
  g.invariant_factors = factors;
  g.map.assign(law.size(), std::vector<Int>(factors.size(), 0));
  for (std::size_t x = 0; x < law.size(); ++x)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      Int c = snf.V.at(x, keep[j]);
      if (factors[j] != 0) {
        c %= factors[j];
        if (c < 0) c += factors[j];
      }
      g.map[x][j] = c;
    }
  if (!g.is_fusion_morphism())
    throw InvalidObject("abelianized grading failed its morphism check");
  return g;
}

namespace {

/// HLT-style enumerator with a coincidence queue; deterministic by
/// construction (fixed relator order, first-missing-entry definitions).
class ToddCoxeter {
 public:
  ToddCoxeter(const Presentation& p, std::size_t max_cosets)
      : ngens_(p.generators.size()), cap_(max_cosets) {
    std::set<Word> seen;
    for (const Word& w : p.relators) {
      Word r = Presentation::free_reduce(w);
      if (!r.empty() && seen.insert(r).second) relators_.push_back(std::move(r));
    }
    table_.assign(1, std::vector<int>(2 * ngens_, -1));
    rep_.assign(1, 0);
  }

  bool run() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (rep_[c] != static_cast<int>(c)) continue;
      for (const Word& r : relators_) {
        if (!scan_and_fill(static_cast<int>(c), r)) return false;  // overflow
        process_coincidences();
        if (rep_[c] != static_cast<int>(c)) break;  // c itself merged away
      }
      // Complete the row so the finished table defines the full action
      // (relators alone never fill entries for generators they omit).
      for (std::size_t k = 0; k < 2 * ngens_ && rep_[c] == static_cast<int>(c); ++k)
        if (table_[c][k] == -1 && define(static_cast<int>(c), k) == -1) return false;
    }
    compress();
    return true;
  }

  std::size_t order() const { return live_.size(); }

  std::vector<std::vector<int>> generator_action() const {
    std::vector<std::vector<int>> acts(ngens_, std::vector<int>(live_.size()));
    for (std::size_t g = 0; g < ngens_; ++g)
      for (std::size_t i = 0; i < live_.size(); ++i)
        acts[g][i] = newidx_[table_[live_[i]][2 * g]];
    return acts;
  }

 private:
  std::size_t ngens_, cap_;
  std::vector<Word> relators_;
  // table_[c][2g] = c.g, table_[c][2g+1] = c.g^-1
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;  // union-find over cosets
  std::vector<std::pair<int, int>> queue_;
  std::vector<int> live_, newidx_;

  static std::size_t col(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter > 0 ? 0 : 1);
  }
  static std::size_t inv_col(int letter) { return col(-letter); }

  int find(int c) {
    while (rep_[c] != c) c = rep_[c] = rep_[rep_[c]];
    return c;
  }

  int define(int from, std::size_t column) {
    if (table_.size() >= cap_) return -1;
    int nc = static_cast<int>(table_.size());
    table_.emplace_back(2 * ngens_, -1);
    rep_.push_back(nc);
    table_[from][column] = nc;
    table_[nc][column ^ 1] = from;
    return nc;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    queue_.emplace_back(a, b);
  }

  void set_edge(int from, std::size_t column, int to) {
    from = find(from);
    to = find(to);
    int cur = table_[from][column];
    if (cur != -1 && find(cur) != to) {
      join(cur, to);
      return;
    }
    table_[from][column] = to;
    int back = table_[to][column ^ 1];
    if (back != -1 && find(back) != from)
      join(back, from);
    else
      table_[to][column ^ 1] = from;
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      auto [a, b] = queue_.back();
      queue_.pop_back();
      a = find(a);
      // merge row b into row a
      for (std::size_t k = 0; k < 2 * ngens_; ++k) {
        int t = table_[b][k];
        if (t == -1) continue;
        t = find(t);
        table_[b][k] = -1;
        int cur = table_[a][k];
        if (cur == -1) {
          table_[a][k] = t;
          // fix the reverse edge of t
          int back = table_[t][k ^ 1];
          if (back == -1)
            table_[t][k ^ 1] = a;
          else if (find(back) != a)
            join(back, a);
        } else if (find(cur) != t) {
          join(cur, t);
        }
      }
    }
  }

  bool scan_and_fill(int start, const Word& r) {
    start = find(start);
    std::size_t f = 0, b = r.size();
    int fc = start, bc = start;
    for (;;) {
      // scan forward as far as possible
      while (f < b) {
        int next = table_[fc][col(r[f])];
        if (next == -1) break;
        fc = find(next);
        ++f;
      }
      if (f == b) {
        // full scan: closes the cycle back at start
        if (fc != bc) join(fc, bc);
        return true;
      }
      // scan backward
      while (b > f) {
        int prev = table_[bc][inv_col(r[b - 1])];
        if (prev == -1) break;
        bc = find(prev);
        --b;
      }
      if (f == b) {
        if (fc != bc) join(fc, bc);
        return true;
      }
      if (f == b - 1) {
        // deduction closes the gap
        set_edge(fc, col(r[f]), bc);
        return true;
      }
      // define a new coset at the first missing entry
      int nc = define(fc, col(r[f]));
      if (nc == -1) return false;
      fc = nc;
      ++f;
    }
  }

  void compress() {
    process_coincidences();
    newidx_.assign(table_.size(), -1);
    live_.clear();
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (find(static_cast<int>(c)) == static_cast<int>(c)) {
        newidx_[c] = static_cast<int>(live_.size());
        live_.push_back(static_cast<int>(c));
      }
    // normalize every edge onto representatives
    for (int c : live_)
      for (std::size_t k = 0; k < 2 * ngens_; ++k) {
        if (table_[c][k] == -1) throw InvalidObject("incomplete coset table after closure");
        table_[c][k] = find(table_[c][k]);
      }
    for (std::size_t c = 0; c < newidx_.size(); ++c)
      if (newidx_[c] == -1) newidx_[c] = newidx_[find(static_cast<int>(c))];
  }
};

}  // namespace

CosetEnumeration coset_enumerate(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  p.validate();
  ToddCoxeter tc(p, max_cosets);
  CosetEnumeration out;
  if (!tc.run()) {
    out.exhausted = true;
    return out;
  }
  out.order = tc.order();
  out.generator_action = tc.generator_action();
  return out;
}

std::vector<int> coset_word_action(const CosetEnumeration& e, const Word& w) {
  std::vector<int> perm(e.order);
  for (std::size_t c = 0; c < e.order; ++c) {
    int cur = static_cast<int>(c);
    for (int letter : w) {
      int g = std::abs(letter) - 1;
      const auto& act = e.generator_action.at(g);
      if (letter > 0) {
        cur = act[cur];
      } else {
        // inverse action: find preimage
        int pre = -1;
        for (std::size_t i = 0; i < act.size(); ++i)
          if (act[i] == cur) {
            pre = static_cast<int>(i);
            break;
          }
        cur = pre;
      }
    }
    perm[c] = cur;
  }
  return perm;
}

}  // namespace decalg
