#include "decalg/json_io.hpp"

#include <fstream>

namespace decalg {

json scalar_to_json(const Scalar& s) {
  if (s.exact()) return s.str();
  Complex z = s.to_complex();
  if (z.imag() == 0.0) return json{{"re", z.real()}};
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<long long>()));
  if (j.is_number_float()) return Scalar(Complex(j.get<double>(), 0.0));
  if (j.is_object()) {
    double re = j.value("re", 0.0), im = j.value("im", 0.0);
    return Scalar(Complex(re, im));
  }
  throw InvalidArgument("bad scalar literal in JSON");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const json& j) {
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

Matrix matrix_from_json(const json& j) {
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return Matrix::from_rows(rows);
}

json law_to_json(const FusionLaw& law) {
  json out;
  out["elements"] = law.elements();
  json table = json::array();
  for (std::size_t x = 0; x < law.size(); ++x)
    for (std::size_t y = 0; y < law.size(); ++y) {
      const auto& cell = law.entry(static_cast<int>(x), static_cast<int>(y));
      if (cell.empty()) continue;
      json entry;
      entry["left"] = law.label(static_cast<int>(x));
      entry["right"] = law.label(static_cast<int>(y));
      json outs = json::array();
      for (int z : cell) outs.push_back(law.label(z));
      entry["out"] = outs;
      table.push_back(entry);
    }
  out["table"] = table;
  return out;
}

FusionLaw law_from_json(const json& j) {
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  FusionLaw law = FusionLaw::empty_law(elements);
  if (j.contains("table"))
    for (const auto& entry : j.at("table")) {
      int x = law.require(entry.at("left").get<std::string>());
      int y = law.require(entry.at("right").get<std::string>());
      std::vector<int> cell;
      for (const auto& z : entry.at("out")) cell.push_back(law.require(z.get<std::string>()));
      law.set_entry(x, y, cell);
    }
  return law;
}

FusionMorphism law_morphism_from_json(const json& j, const FusionLaw& source) {
  FusionLaw src = j.contains("source") ? law_from_json(j.at("source")) : source;
  if (!(src == source))
    throw InvalidArgument("morphism source law does not match the object's law");
  FusionLaw target = law_from_json(j.at("target"));
  std::vector<int> map(source.size(), -1);
  for (const auto& [k, v] : j.at("map").items())
    map[source.require(k)] = target.require(v.get<std::string>());
  for (int m : map)
    if (m < 0) throw InvalidArgument("morphism map does not cover every label");
  return FusionMorphism(source, target, map);
}

namespace {

std::string word_letter(const Presentation& p, int letter) {
  int g = std::abs(letter) - 1;
  return letter > 0 ? p.generators[g] : p.generators[g] + "^-1";
}

}  // namespace

json presentation_to_json(const Presentation& p) {
  json out;
  out["generators"] = p.generators;
  json rels = json::array();
  for (const Word& w : p.relators) {
    json rel = json::array();
    for (int letter : w) rel.push_back(word_letter(p, letter));
    rels.push_back(rel);
  }
  out["relators"] = rels;
  return out;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  auto find_gen = [&](const std::string& s) {
    for (std::size_t g = 0; g < p.generators.size(); ++g)
      if (p.generators[g] == s) return static_cast<int>(g);
    throw InvalidArgument("relator uses unknown generator: " + s);
  };
  if (j.contains("relators"))
    for (const auto& rel : j.at("relators")) {
      Word w;
      for (const auto& tok : rel) {
        std::string s = tok.get<std::string>();
        bool inv = false;
        if (s.size() > 3 && s.substr(s.size() - 3) == "^-1") {
          inv = true;
          s = s.substr(0, s.size() - 3);
        }
        int g = find_gen(s);
        w.push_back(inv ? -(g + 1) : g + 1);
      }
      p.relators.push_back(std::move(w));
    }
  p.validate();
  return p;
}

json grading_to_json(const AbelianGrading& g) {
  json out;
  json factors = json::array();
  for (const Int& d : g.invariant_factors) factors.push_back(d.convert_to<long long>());
  out["invariant_factors"] = factors;
  json map;
  for (std::size_t x = 0; x < g.law.size(); ++x) {
    json vec = json::array();
    for (const Int& c : g.map[x]) vec.push_back(c.convert_to<long long>());
    map[g.law.label(static_cast<int>(x))] = vec;
  }
  out["map"] = map;
  return out;
}

json group_to_json(const PermGroup& g) {
  json out;
  out["degree"] = g.degree();
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.img);
  out["generators"] = gens;
  return out;
}

PermGroup group_from_json(const json& j, std::size_t cap) {
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& img : j.at("generators")) gens.push_back(Perm(img.get<std::vector<int>>()));
  if (j.contains("cap")) cap = j.at("cap").get<std::size_t>();
  PermGroup g(degree, gens, cap);
  if (j.contains("order") && g.order() != j.at("order").get<std::size_t>())
    throw InvalidObject("group file declares order " + j.at("order").dump() +
                        " but the generators produce " + std::to_string(g.order()));
  return g;
}

json character_table_to_json(const CharacterTable& t) {
  json out;
  out["group"] = group_to_json(t.group);
  json classes = json::array();
  const auto& cls = t.group.conjugacy_classes();
  for (const auto& c : cls) {
    json entry;
    entry["rep"] = t.group.elements()[c[0]].img;
    entry["size"] = c.size();
    classes.push_back(entry);
  }
  out["classes"] = classes;
  json chars = json::array();
  for (std::size_t i = 0; i < t.num_chars(); ++i) {
    json c;
    c["label"] = t.labels[i];
    json vals = json::array();
    for (const auto& v : t.values[i]) vals.push_back(scalar_to_json(v));
    c["values"] = vals;
    chars.push_back(c);
  }
  out["characters"] = chars;
  return out;
}

CharacterTable character_table_from_json(const json& j, std::size_t cap) {
  CharacterTable t;
  t.group = group_from_json(j.at("group"), cap);
  const auto& classes = t.group.conjugacy_classes();
  // map file class order onto the group's deterministic class order
  std::vector<int> file_to_group;
  for (const auto& entry : j.at("classes")) {
    Perm rep(entry.at("rep").get<std::vector<int>>());
    auto idx = t.group.index_of(rep);
    if (!idx) throw InvalidObject("class representative is not a group element");
    int cls = t.group.class_of(*idx);
    if (entry.contains("size") &&
        classes[cls].size() != entry.at("size").get<std::size_t>())
      throw InvalidObject("class size mismatch in character table file");
    file_to_group.push_back(cls);
  }
  {
    std::vector<int> sorted = file_to_group;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw InvalidObject("character table classes do not cover the group's classes");
  }
  for (const auto& c : j.at("characters")) {
    t.labels.push_back(c.at("label").get<std::string>());
    const auto& vals = c.at("values");
    std::vector<Scalar> row(classes.size());
    if (vals.size() != file_to_group.size())
      throw InvalidObject("character row has wrong length");
    for (std::size_t k = 0; k < vals.size(); ++k)
      row[file_to_group[k]] = scalar_from_json(vals[k]);
    t.values.push_back(std::move(row));
  }
  // a single float value forces the whole table into float mode
  bool ex = t.exact();
  if (!ex)
    for (auto& row : t.values)
      for (auto& v : row)
        if (v.exact()) v = Scalar(v.to_complex());
  return t;
}

json algebra_to_json(const Algebra& a) {
  json out;
  out["dim"] = a.dim;
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < a.dim; ++j2) row.push_back(vector_to_json(a.sc[i][j2]));
    sc.push_back(row);
  }
  out["structure_constants"] = sc;
  return out;
}

Algebra algebra_from_json(const json& j) {
  Algebra a;
  a.dim = j.at("dim").get<std::size_t>();
  for (const auto& row : j.at("structure_constants")) {
    std::vector<Vector> r;
    for (const auto& v : row) r.push_back(vector_from_json(v));
    a.sc.push_back(std::move(r));
  }
  a.validate();
  return a;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis_vectors()) rows.push_back(vector_to_json(v));
  return rows;
}

json decalg_to_json(const DecompositionAlgebra& d) {
  json out;
  out["algebra"] = algebra_to_json(d.algebra);
  out["law"] = law_to_json(d.law);
  out["indices"] = d.index_names;
  json decs = json::array();
  for (std::size_t i = 0; i < d.index_count(); ++i) {
    json entry;
    entry["index"] = d.index_names[i];
    json parts;
    for (std::size_t x = 0; x < d.law.size(); ++x)
      parts[d.law.label(static_cast<int>(x))] = subspace_to_json(d.omega[i][x]);
    entry["parts"] = parts;
    decs.push_back(entry);
  }
  out["decompositions"] = decs;
  if (d.unit) out["unit"] = d.law.label(*d.unit);
  if (d.axes) {
    json axes;
    for (std::size_t i = 0; i < d.index_count(); ++i)
      axes[d.index_names[i]] = vector_to_json((*d.axes)[i]);
    out["axes"] = axes;
  }
  if (d.lambda) {
    json lam;
    for (std::size_t x = 0; x < d.law.size(); ++x)
      lam[d.law.label(static_cast<int>(x))] = scalar_to_json((*d.lambda)[x]);
    out["lambda"] = lam;
  }
  return out;
}

DecompositionAlgebra decalg_from_json(const json& j, double eps) {
  DecompositionAlgebra d;
  d.algebra = algebra_from_json(j.at("algebra"));
  d.law = law_from_json(j.at("law"));
  d.index_names = j.at("indices").get<std::vector<std::string>>();
  d.omega.assign(d.index_count(), Decomposition(d.law.size(), Subspace(d.algebra.dim)));
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < d.index_names.size(); ++i)
      if (d.index_names[i] == name) return i;
    throw InvalidArgument("unknown decomposition index: " + name);
  };
  for (const auto& entry : j.at("decompositions")) {
    std::size_t i = index_of(entry.at("index").get<std::string>());
    for (const auto& [label, rows] : entry.at("parts").items()) {
      int x = d.law.require(label);
      std::vector<Vector> basis;
      for (const auto& r : rows) basis.push_back(vector_from_json(r));
      d.omega[i][x] = Subspace::span(d.algebra.dim, basis, eps);
    }
  }
  if (j.contains("unit")) d.unit = d.law.require(j.at("unit").get<std::string>());
  if (j.contains("axes")) {
    std::vector<Vector> axes(d.index_count());
    for (const auto& [name, v] : j.at("axes").items()) axes[index_of(name)] = vector_from_json(v);
    d.axes = std::move(axes);
  }
  if (j.contains("lambda")) {
    std::vector<Scalar> lam(d.law.size());
    for (const auto& [label, v] : j.at("lambda").items())
      lam[d.law.require(label)] = scalar_from_json(v);
    d.lambda = std::move(lam);
  }
  d.validate_shape();
  return d;
}

json scheme_to_json(const AssociationScheme& s) {
  json out;
  out["n"] = s.n;
  out["relations"] = s.rel;
  return out;
}

AssociationScheme scheme_from_json(const json& j) {
  auto rel = j.at("relations").get<std::vector<std::vector<int>>>();
  if (j.contains("n") && rel.size() != j.at("n").get<std::size_t>())
    throw InvalidObject("scheme file: n does not match the relation matrix");
  return AssociationScheme::from_relation_matrix(std::move(rel));
}

json matrix_rep_to_json(const MatrixRep& r) {
  json out;
  out["group"] = group_to_json(r.group);
  out["dim"] = r.dim;
  json mats = json::array();
  for (const auto& m : r.gen_images) mats.push_back(matrix_to_json(m));
  out["matrices"] = mats;
  return out;
}

MatrixRep matrix_rep_from_json(const json& j, std::size_t cap) {
  MatrixRep r;
  r.group = group_from_json(j.at("group"), cap);
  for (const auto& m : j.at("matrices")) r.gen_images.push_back(matrix_from_json(m));
  r.dim = j.contains("dim") ? j.at("dim").get<std::size_t>()
                            : (r.gen_images.empty() ? 0 : r.gen_images[0].rows());
  r.validate_shape();
  return r;
}

std::vector<RCharacter> characters_from_json(const json& j, const CayleyTable& gamma) {
  std::vector<RCharacter> out;
  for (const auto& entry : j.at("characters")) {
    RCharacter c;
    c.values.assign(gamma.order(), Scalar(1));
    for (const auto& [label, v] : entry.at("values").items()) {
      auto it = std::find(gamma.labels.begin(), gamma.labels.end(), label);
      if (it == gamma.labels.end())
        throw InvalidArgument("character value for unknown group element: " + label);
      c.values[it - gamma.labels.begin()] = scalar_from_json(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

json verify_report_to_json(const VerifyReport& rep, const DecompositionAlgebra& d) {
  json out;
  out["valid"] = rep.valid();
  out["direct_sum"] = rep.direct_sum;
  out["fusion"] = rep.fusion;
  if (rep.has_axes) {
    out["axial"] = rep.axial();
    out["left_axial"] = rep.left_axial;
    out["right_axial"] = rep.right_axial;
    out["primitive"] = rep.primitive;
    out["unit_label_is_unit"] = rep.unit_label_is_unit;
  }
  json dims = json::array();
  for (std::size_t i = 0; i < rep.part_dims.size(); ++i) {
    json entry;
    entry["index"] = d.index_names[i];
    json parts;
    for (std::size_t x = 0; x < rep.part_dims[i].size(); ++x)
      parts[d.law.label(static_cast<int>(x))] = rep.part_dims[i][x];
    entry["dims"] = parts;
    dims.push_back(entry);
  }
  out["part_dimensions"] = dims;
  json viol = json::array();
  for (const auto& v : rep.violations) {
    json entry;
    entry["kind"] = v.kind;
    if (v.dec >= 0) entry["index"] = d.index_names[v.dec];
    if (v.x >= 0) entry["x"] = d.law.label(v.x);
    if (v.y >= 0) entry["y"] = d.law.label(v.y);
    viol.push_back(entry);
  }
  out["violations"] = viol;
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace decalg
