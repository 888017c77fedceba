#include "decalg/permgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace decalg {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<bool> seen(img.size(), false);
  for (int v : img) {
    if (v < 0 || static_cast<std::size_t>(v) >= img.size() || seen[v])
      throw InvalidObject("permutation image list is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> v(degree);
  for (int i = 0; i < degree; ++i) v[i] = i;
  Perm p;
  p.img = std::move(v);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw InvalidArgument("permutation degree mismatch");
  Perm r;
  r.img.resize(img.size());
  for (std::size_t p = 0; p < img.size(); ++p) r.img[p] = img[o.img[p]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (std::size_t p = 0; p < img.size(); ++p) r.img[img[p]] = static_cast<int>(p);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t p = 0; p < img.size(); ++p)
    if (img[p] != static_cast<int>(p)) return false;
  return true;
}

int Perm::order() const {
  Perm acc = *this;
  int n = 1;
  while (!acc.is_identity()) {
    acc = acc * (*this);
    ++n;
  }
  return n;
}

int Perm::fixed_points() const {
  int n = 0;
  for (std::size_t p = 0; p < img.size(); ++p)
    if (img[p] == static_cast<int>(p)) ++n;
  return n;
}

std::string Perm::cycle_str() const {
  std::ostringstream os;
  std::vector<bool> seen(img.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s] || img[s] == static_cast<int>(s)) continue;
    any = true;
    os << "(";
    int p = static_cast<int>(s);
    bool first = true;
    do {
      seen[p] = true;
      os << (first ? "" : " ") << p;
      first = false;
      p = img[p];
    } while (p != static_cast<int>(s));
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

namespace {
struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace

struct PermGroup::Body {
  int degree = 0;
  std::vector<Perm> gens;
  std::size_t cap = 10000;

  std::once_flag once;
  std::vector<Perm> elements;
  std::unordered_map<std::vector<int>, int, VecHash> index;
  std::vector<int> inverse_idx;
  std::vector<Word> words;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  void build() {
    elements.push_back(Perm::identity(degree));
    index.emplace(elements[0].img, 0);
    words.push_back({});
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Perm next = gens[g] * elements[head];
        if (index.count(next.img)) continue;
        if (elements.size() >= cap)
          throw CapExceeded("permutation group exceeds element cap " + std::to_string(cap));
        int id = static_cast<int>(elements.size());
        index.emplace(next.img, id);
        Word w = words[head];
        w.push_back(static_cast<int>(g) + 1);
        words.push_back(std::move(w));
        elements.push_back(std::move(next));
      }
    }
    inverse_idx.resize(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      inverse_idx[i] = index.at(elements[i].inverse().img);
    // conjugation orbits, deterministic by minimal element index
    class_of.assign(elements.size(), -1);
    for (std::size_t s = 0; s < elements.size(); ++s) {
      if (class_of[s] != -1) continue;
      int cid = static_cast<int>(classes.size());
      std::vector<int> cls{static_cast<int>(s)};
      class_of[s] = cid;
      for (std::size_t head = 0; head < cls.size(); ++head) {
        for (const Perm& g : gens) {
          Perm c = elements[cls[head]].conj_by(g);
          int ci = index.at(c.img);
          if (class_of[ci] == -1) {
            class_of[ci] = cid;
            cls.push_back(ci);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
  }
};

PermGroup::PermGroup() : body_(std::make_shared<Body>()) { body_->degree = 1; }

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : body_(std::make_shared<Body>()) {
  body_->degree = degree;
  body_->cap = cap;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw InvalidObject("generator degree mismatch");
    if (!g.is_identity()) body_->gens.push_back(g);
  }
}

PermGroup::Body& PermGroup::built() const {
  std::call_once(body_->once, [this] { body_->build(); });
  return *body_;
}

int PermGroup::degree() const { return body_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return body_->gens; }
std::size_t PermGroup::cap() const { return body_->cap; }
std::size_t PermGroup::order() const { return built().elements.size(); }
const std::vector<Perm>& PermGroup::elements() const { return built().elements; }

std::optional<int> PermGroup::index_of(const Perm& p) const {
  if (p.degree() != degree()) return std::nullopt;
  auto& b = built();
  auto it = b.index.find(p.img);
  if (it == b.index.end()) return std::nullopt;
  return it->second;
}

int PermGroup::mult(int a, int b) const {
  auto& body = built();
  return body.index.at((body.elements[a] * body.elements[b]).img);
}

int PermGroup::inv(int a) const { return built().inverse_idx[a]; }
const Word& PermGroup::word_of(int i) const { return built().words[i]; }

const std::vector<std::vector<int>>& PermGroup::conjugacy_classes() const {
  return built().classes;
}

int PermGroup::class_of(int element_index) const { return built().class_of[element_index]; }

PermGroup PermGroup::centralizer(const Perm& x) const {
  auto& b = built();
  if (!index_of(x)) throw InvalidArgument("centralizer: element not in group");
  std::vector<int> members;
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    if (b.elements[i] * x == x * b.elements[i]) members.push_back(static_cast<int>(i));
  // grow a small generating set
  std::vector<Perm> gens;
  std::set<std::vector<int>> span{Perm::identity(degree()).img};
  for (int m : members) {
    if (span.count(b.elements[m].img)) continue;
    gens.push_back(b.elements[m]);
    std::vector<Perm> all;
    for (const auto& v : span) {
      Perm p;
      p.img = v;
      all.push_back(p);
    }
    for (std::size_t head = 0; head < all.size(); ++head)
      for (const Perm& g : gens) {
        Perm n = g * all[head];
        if (span.insert(n.img).second) all.push_back(n);
      }
  }
  return PermGroup(degree(), gens, cap());
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
  return true;
}

namespace {

// Invariant factors of a finite abelian group from its order statistics:
// within each Sylow p-part, #{x : x^(p^j) = 1} = p^(sum_i min(j, lambda_i)),
// so consecutive log-p quotients read off the conjugate partition.
std::vector<Int> abelian_type_from_orders(const std::vector<long long>& orders) {
  long long m = static_cast<long long>(orders.size());
  std::map<long long, std::vector<long long>> partitions;  // p -> lambda (descending)
  long long rest = m;
  for (long long p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<long long> s;  // s[j] = #solutions of x^(p^j) = 1
    s.push_back(1);
    for (long long pj = p;; pj *= p) {
      long long cnt = 0;
      for (long long o : orders)
        if (pj % o == 0) ++cnt;
      s.push_back(cnt);
      if (cnt == s[s.size() - 2]) break;  // Sylow subgroup exhausted
    }
    std::vector<long long> conj;  // conj[j] = #parts >= j+1 = log_p(s[j+1]/s[j])
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
      long long q = s[j + 1] / s[j], e = 0;
      if (s[j + 1] % s[j] != 0) throw InvalidObject("quotient is not abelian");
      while (q > 1) {
        if (q % p != 0) throw InvalidObject("quotient is not abelian");
        q /= p;
        ++e;
      }
      if (e > 0 || j + 2 < s.size()) conj.push_back(e);
    }
    while (!conj.empty() && conj.back() == 0) conj.pop_back();
    if (conj.empty()) continue;
    std::vector<long long> lambda;
    for (long long part = 1; part <= conj[0]; ++part) {
      long long count = 0;
      for (long long c : conj)
        if (c >= part) ++count;
      if (count > 0) lambda.push_back(count);
    }
    // lambda is now the partition (descending) of the p-exponent
    partitions[p] = lambda;
  }
  std::size_t r = 0;
  for (auto& [p, lam] : partitions) r = std::max(r, lam.size());
  std::vector<Int> factors(r, Int(1));
  for (auto& [p, lam] : partitions)
    for (std::size_t k = 0; k < lam.size(); ++k) {
      Int pk = 1;
      for (long long e = 0; e < lam[k]; ++e) pk *= p;
      factors[r - 1 - k] *= pk;  // largest part joins the largest factor
    }
  std::vector<Int> out;
  for (const Int& d : factors)
    if (d != 1) out.push_back(d);
  return out;
}

}  // namespace

std::vector<Int> PermGroup::abelianization() const {
  auto& b = built();
  const std::size_t n = b.elements.size();
  // commutator subgroup = normal closure of generator commutators
  std::vector<bool> in_k(n, false);
  std::vector<int> k_elems{0};
  in_k[0] = true;
  std::vector<int> frontier;
  auto push = [&](int e) {
    if (!in_k[e]) {
      in_k[e] = true;
      k_elems.push_back(e);
      frontier.push_back(e);
    }
  };
  for (std::size_t i = 0; i < b.gens.size(); ++i)
    for (std::size_t j = 0; j < b.gens.size(); ++j) {
      Perm c = b.gens[i] * b.gens[j] * b.gens[i].inverse() * b.gens[j].inverse();
      push(b.index.at(c.img));
    }
  // close under products with K and conjugation by generators
  for (std::size_t head = 0; head < k_elems.size(); ++head) {
    int e = k_elems[head];
    for (std::size_t g = 0; g < b.gens.size(); ++g) {
      Perm c = b.elements[e].conj_by(b.gens[g]);
      push(b.index.at(c.img));
    }
    for (std::size_t other = 0; other < k_elems.size(); ++other)
      push(mult(e, k_elems[other]));
  }
  std::sort(k_elems.begin(), k_elems.end());
  // cosets of K
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (std::size_t e = 0; e < n; ++e) {
    if (coset_of[e] != -1) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(e));
    for (int k : k_elems) coset_of[mult(static_cast<int>(e), k)] = cid;
  }
  const std::size_t q = reps.size();
  auto cmul = [&](int a, int cb) { return coset_of[mult(reps[a], reps[cb])]; };
  const int id_coset = coset_of[0];
  std::vector<long long> orders(q);
  for (std::size_t c = 0; c < q; ++c) {
    int acc = static_cast<int>(c);
    long long o = 1;
    while (acc != id_coset) {
      acc = cmul(acc, static_cast<int>(c));
      ++o;
    }
    orders[c] = o;
  }
  return abelian_type_from_orders(orders);
}

CayleyTable PermGroup::cayley_table() const {
  auto& b = built();
  CayleyTable t;
  const std::size_t n = b.elements.size();
  for (const Perm& p : b.elements) t.labels.push_back(p.cycle_str());
  t.identity = 0;
  t.mult.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) t.mult[a][c] = mult(static_cast<int>(a), static_cast<int>(c));
  return t;
}

FusionLaw class_fusion_law(const PermGroup& g) {
  const auto& classes = g.conjugacy_classes();
  const std::size_t k = classes.size();
  std::vector<std::string> labels;
  for (const auto& cls : classes) labels.push_back(g.elements()[cls[0]].cycle_str());
  std::vector<std::vector<std::vector<int>>> table(k, std::vector<std::vector<int>>(k));
  // E meets C*D iff some c in C has c^-1 * rep(E) in D; the set CD is a
  // union of classes, so one representative of E decides membership.
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      std::vector<int> out;
      for (std::size_t e = 0; e < k; ++e) {
        int rep = classes[e][0];
        bool hit = false;
        for (int ci : classes[c]) {
          int want = g.mult(g.inv(ci), rep);
          if (g.class_of(want) == static_cast<int>(d)) {
            hit = true;
            break;
          }
        }
        if (hit) out.push_back(static_cast<int>(e));
      }
      table[c][d] = std::move(out);
    }
  return FusionLaw(std::move(labels), std::move(table));
}

FusionLaw group_fusion_law(const PermGroup& g) { return group_fusion_law(g.cayley_table()); }

bool PermAction::is_transitive() const {
  if (point_names.empty()) return false;
  std::vector<bool> seen(size(), false);
  std::vector<int> frontier{0};
  seen[0] = true;
  std::size_t count = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head)
    for (const Perm& g : gen_images) {
      int next = g(frontier[head]);
      if (!seen[next]) {
        seen[next] = true;
        ++count;
        frontier.push_back(next);
      }
    }
  return count == size();
}

int PermAction::apply_word(const Word& w, int point) const {
  // BFS words list the innermost factor first: element = g_lk ∘ ... ∘ g_l1.
  for (int letter : w) {
    int g = std::abs(letter) - 1;
    point = letter > 0 ? gen_images.at(g)(point) : gen_images.at(g).inverse()(point);
  }
  return point;
}

PermAction natural_action(const PermGroup& g) {
  PermAction a;
  for (int p = 0; p < g.degree(); ++p) a.point_names.push_back(std::to_string(p));
  a.gen_images = g.generators();
  return a;
}

PermAction pairs_action(const PermGroup& g) {
  const int n = g.degree();
  PermAction a;
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      id[{i, j}] = static_cast<int>(a.point_names.size());
      a.point_names.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  for (const Perm& p : g.generators()) {
    std::vector<int> img(a.point_names.size());
    for (const auto& [pair, idx] : id) {
      int x = p(pair.first), y = p(pair.second);
      if (x > y) std::swap(x, y);
      img[idx] = id.at({x, y});
    }
    Perm q;
    q.img = std::move(img);
    a.gen_images.push_back(q);
  }
  return a;
}

PermAction conjugation_action(const PermGroup& g, const Perm& x) {
  auto xi = g.index_of(x);
  if (!xi) throw InvalidArgument("conjugation_action: element not in group");
  const auto& cls = g.conjugacy_classes()[g.class_of(*xi)];
  PermAction a;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    pos[cls[i]] = static_cast<int>(i);
    a.point_names.push_back(g.elements()[cls[i]].cycle_str());
  }
  for (const Perm& gen : g.generators()) {
    std::vector<int> img(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      Perm c = g.elements()[cls[i]].conj_by(gen);
      img[i] = pos.at(*g.index_of(c));
    }
    Perm q;
    q.img = std::move(img);
    a.gen_images.push_back(q);
  }
  return a;
}

Orbitals orbitals(const PermGroup& g, const PermAction& action) {
  if (!action.is_transitive()) throw InvalidArgument("orbitals: action is not transitive");
  const std::size_t n = action.size();
  Orbitals o;
  o.n = n;
  o.rel.assign(n, std::vector<int>(n, -1));
  // the diagonal is one orbit (transitivity) and is listed first
  for (std::size_t x = 0; x < n; ++x) o.rel[x][x] = 0;
  o.reps.emplace_back(0, 0);
  o.count = 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (o.rel[x][y] != -1) continue;
      int oid = o.count++;
      o.reps.emplace_back(static_cast<int>(x), static_cast<int>(y));
      std::vector<std::pair<int, int>> frontier{{static_cast<int>(x), static_cast<int>(y)}};
      o.rel[x][y] = oid;
      for (std::size_t head = 0; head < frontier.size(); ++head)
        for (const Perm& p : action.gen_images) {
          int a = p(frontier[head].first), b = p(frontier[head].second);
          if (o.rel[a][b] == -1) {
            o.rel[a][b] = oid;
            frontier.emplace_back(a, b);
          }
        }
    }
  return o;
}

bool is_generously_transitive(const PermGroup& g, const PermAction& action) {
  Orbitals o = orbitals(g, action);
  for (std::size_t x = 0; x < o.n; ++x)
    for (std::size_t y = 0; y < o.n; ++y)
      if (o.rel[x][y] != o.rel[y][x]) return false;
  return true;
}

}  // namespace decalg
