#include "decalg/fusion.hpp"

#include <algorithm>
#include <set>

namespace decalg {

FusionLaw::FusionLaw(std::vector<std::string> elements,
                     std::vector<std::vector<std::vector<int>>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  {
    std::set<std::string> seen(elements_.begin(), elements_.end());
    if (seen.size() != n) throw InvalidObject("fusion law has duplicate labels");
  }
  if (table_.size() != n) throw InvalidObject("fusion law table has wrong row count");
  for (auto& row : table_) {
    if (row.size() != n) throw InvalidObject("fusion law table has wrong column count");
    for (auto& cell : row) {
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      for (int z : cell)
        if (z < 0 || static_cast<std::size_t>(z) >= n)
          throw InvalidObject("fusion law table entry out of range");
    }
  }
}

FusionLaw FusionLaw::empty_law(std::vector<std::string> elements) {
  std::size_t n = elements.size();
  return FusionLaw(std::move(elements),
                   std::vector<std::vector<std::vector<int>>>(
                       n, std::vector<std::vector<int>>(n)));
}

std::optional<int> FusionLaw::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

int FusionLaw::require(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InvalidArgument("unknown fusion law label: " + label);
  return *i;
}

const std::vector<int>& FusionLaw::entry(int x, int y) const {
  return table_.at(x).at(y);
}

void FusionLaw::set_entry(int x, int y, std::vector<int> out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int z : out)
    if (z < 0 || static_cast<std::size_t>(z) >= size())
      throw InvalidObject("fusion law table entry out of range");
  table_.at(x).at(y) = std::move(out);
}

bool FusionLaw::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (table_[x][y] != table_[y][x]) return false;
  return true;
}

FusionLaw::ElementFlags FusionLaw::classify(int x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= size())
    throw InvalidArgument("classify_element: unknown label index");
  ElementFlags f{true, true, true};
  for (std::size_t y = 0; y < size(); ++y) {
    for (const auto* cell : {&table_[x][y], &table_[y][x]}) {
      if (!cell->empty()) f.annihilating = false;
      for (int z : *cell) {
        if (z != static_cast<int>(y)) f.unit = false;
        if (z != x) f.absorbing = false;
      }
    }
  }
  return f;
}

std::vector<int> FusionLaw::units() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (classify(static_cast<int>(x)).unit) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<std::pair<int, int>> FusionLaw::distinct_unit_violations() const {
  std::vector<std::pair<int, int>> bad;
  auto us = units();
  for (std::size_t a = 0; a < us.size(); ++a)
    for (std::size_t b = a + 1; b < us.size(); ++b)
      if (!entry(us[a], us[b]).empty() || !entry(us[b], us[a]).empty())
        bad.emplace_back(us[a], us[b]);
  return bad;
}

bool FusionLaw::operator==(const FusionLaw& o) const {
  return elements_ == o.elements_ && table_ == o.table_;
}

FusionMorphism::FusionMorphism(FusionLaw source, FusionLaw target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size())
    throw InvalidArgument("fusion morphism map has wrong length");
  for (int t : map_)
    if (t < 0 || static_cast<std::size_t>(t) >= target_.size())
      throw InvalidArgument("fusion morphism maps outside target");
  if (auto v = violation(source_, target_, map_))
    throw InvalidObject("not a fusion morphism: containment fails at (" +
                        source_.label(v->first) + ", " + source_.label(v->second) + ")");
}

std::optional<std::pair<int, int>> FusionMorphism::violation(
    const FusionLaw& source, const FusionLaw& target, const std::vector<int>& map) {
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y) {
      const auto& img = target.entry(map[x], map[y]);
      for (int z : source.entry(static_cast<int>(x), static_cast<int>(y)))
        if (!std::binary_search(img.begin(), img.end(), map[z]))
          return std::make_pair(static_cast<int>(x), static_cast<int>(y));
    }
  return std::nullopt;
}

FusionMorphism FusionMorphism::identity(const FusionLaw& law) {
  std::vector<int> id(law.size());
  for (std::size_t i = 0; i < law.size(); ++i) id[i] = static_cast<int>(i);
  return FusionMorphism(law, law, id);
}

FusionMorphism compose(const FusionMorphism& g, const FusionMorphism& f) {
  if (!(f.target() == g.source()))
    throw InvalidArgument("fusion morphism composition: target/source mismatch");
  std::vector<int> m(f.source().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.apply(f.apply(static_cast<int>(i)));
  return FusionMorphism(f.source(), g.target(), m);
}

FusionLaw product_law(const FusionLaw& a, const FusionLaw& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(static_cast<int>(x)) + "," + b.label(static_cast<int>(y)) + ")");
  auto idx = [&](int x, int y) { return x * static_cast<int>(nb) + y; };
  std::vector<std::vector<std::vector<int>>> table(na * nb,
                                                   std::vector<std::vector<int>>(na * nb));
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          std::vector<int> out;
          for (int x : a.entry(static_cast<int>(x1), static_cast<int>(x2)))
            for (int y : b.entry(static_cast<int>(y1), static_cast<int>(y2)))
              out.push_back(idx(x, y));
          table[idx(static_cast<int>(x1), static_cast<int>(y1))]
               [idx(static_cast<int>(x2), static_cast<int>(y2))] = std::move(out);
        }
  return FusionLaw(std::move(labels), std::move(table));
}

FusionMorphism product_projection(const FusionLaw& a, const FusionLaw& b, int which) {
  FusionLaw p = product_law(a, b);
  std::vector<int> m(p.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      m[x * b.size() + y] = static_cast<int>(which == 0 ? x : y);
  return FusionMorphism(p, which == 0 ? a : b, m);
}

FusionLaw union_law(const FusionLaw& a, const FusionLaw& b) {
  std::vector<std::string> labels = a.elements();
  for (const auto& lb : b.elements()) {
    std::string name = lb;
    while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += "'";
    labels.push_back(name);
  }
  const std::size_t na = a.size(), n = labels.size();
  std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(n));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < na; ++y)
      table[x][y] = a.entry(static_cast<int>(x), static_cast<int>(y));
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      std::vector<int> cell;
      for (int z : b.entry(static_cast<int>(x), static_cast<int>(y)))
        cell.push_back(static_cast<int>(na) + z);
      table[na + x][na + y] = std::move(cell);
    }
  return FusionLaw(std::move(labels), std::move(table));
}

FusionMorphism union_inclusion(const FusionLaw& a, const FusionLaw& b, int which) {
  FusionLaw u = union_law(a, b);
  const FusionLaw& part = which == 0 ? a : b;
  std::vector<int> m(part.size());
  for (std::size_t i = 0; i < part.size(); ++i)
    m[i] = static_cast<int>(which == 0 ? i : a.size() + i);
  return FusionMorphism(part, u, m);
}

int CayleyTable::inverse(int g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mult[g][h] == identity) return static_cast<int>(h);
  throw InvalidObject("group element without inverse");
}

void CayleyTable::validate() const {
  const std::size_t n = order();
  if (mult.size() != n) throw InvalidObject("Cayley table has wrong size");
  for (const auto& row : mult) {
    if (row.size() != n) throw InvalidObject("Cayley table has ragged rows");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InvalidObject("Cayley table entry out of range");
  }
  if (identity < 0 || static_cast<std::size_t>(identity) >= n)
    throw InvalidObject("Cayley table identity out of range");
  for (std::size_t g = 0; g < n; ++g)
    if (mult[identity][g] != static_cast<int>(g) || mult[g][identity] != static_cast<int>(g))
      throw InvalidObject("Cayley table identity fails");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n; ++h)
      if (mult[g][h] == identity && mult[h][g] == identity) has_inverse = true;
    if (!has_inverse) throw InvalidObject("Cayley table element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw InvalidObject("Cayley table is not associative");
}

FusionLaw group_fusion_law(const CayleyTable& g) {
  g.validate();
  const std::size_t n = g.order();
  std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = {g.mult[a][b]};
  return FusionLaw(g.labels, std::move(table));
}

CayleyTable cayley_from_group_law(const FusionLaw& law) {
  const std::size_t n = law.size();
  CayleyTable t;
  t.labels = law.elements();
  t.mult.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& cell = law.entry(static_cast<int>(a), static_cast<int>(b));
      if (cell.size() != 1)
        throw InvalidObject("not a group fusion law: non-singleton entry");
      t.mult[a][b] = cell[0];
    }
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      ok = t.mult[e][g] == static_cast<int>(g) && t.mult[g][e] == static_cast<int>(g);
    if (ok) {
      t.identity = static_cast<int>(e);
      break;
    }
  }
  if (t.identity < 0) throw InvalidObject("not a group fusion law: no identity");
  t.validate();
  return t;
}

FusionLaw apply_role_permutation(const FusionLaw& law, const std::array<int, 3>& role_perm) {
  const std::size_t n = law.size();
  std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (!std::binary_search(law.entry(static_cast<int>(x), static_cast<int>(y)).begin(),
                                law.entry(static_cast<int>(x), static_cast<int>(y)).end(),
                                static_cast<int>(z)))
          continue;
        int slot[3];
        slot[role_perm[0]] = static_cast<int>(x);
        slot[role_perm[1]] = static_cast<int>(y);
        slot[role_perm[2]] = static_cast<int>(z);
        table[slot[0]][slot[1]].push_back(slot[2]);
      }
  return FusionLaw(law.elements(), std::move(table));
}

FusionLaw jordan_law() {
  FusionLaw law = FusionLaw::empty_law({"e", "z", "h"});
  const int e = 0, z = 1, h = 2;
  law.set_entry(e, e, {e});
  law.set_entry(z, z, {z});
  law.set_entry(e, h, {h});
  law.set_entry(h, e, {h});
  law.set_entry(z, h, {h});
  law.set_entry(h, z, {h});
  law.set_entry(h, h, {e, z});
  return law;
}

FusionLaw ising_law() {
  FusionLaw law = FusionLaw::empty_law({"e", "z", "q", "t"});
  const int e = 0, z = 1, q = 2, t = 3;
  law.set_entry(e, e, {e});
  law.set_entry(z, z, {z});
  law.set_entry(e, q, {q});
  law.set_entry(q, e, {q});
  law.set_entry(z, q, {q});
  law.set_entry(q, z, {q});
  law.set_entry(e, t, {t});
  law.set_entry(t, e, {t});
  law.set_entry(z, t, {t});
  law.set_entry(t, z, {t});
  law.set_entry(q, q, {e, z});
  law.set_entry(q, t, {t});
  law.set_entry(t, q, {t});
  law.set_entry(t, t, {e, z, q});
  return law;
}

}  // namespace decalg
