// Command line front end: gradings, class/representation fusion laws,
// decomposition-algebra verification, Miyamoto machinery, association
// schemes and Norton algebras, plus named end-to-end examples.
//
// Exit codes: 0 success/valid, 1 verified-invalid, 2 usage error,
// 3 cap or enumeration exhausted.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "decalg/catalog.hpp"
#include "decalg/constructions.hpp"
#include "decalg/json_io.hpp"

using namespace decalg;

namespace {

struct Options {
  double tolerance = 1e-9;
  std::string output;
  std::size_t max_cosets = 100000;
  std::size_t cap = 1000000;
};

int emit(const Options& opt, const json& report, int code) {
  if (opt.output.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    write_json_file(opt.output, report);
  }
  return code;
}

json factors_to_json(const std::vector<Int>& factors) {
  json out = json::array();
  for (const Int& d : factors) out.push_back(d.convert_to<long long>());
  return out;
}

json law_summary(const FusionLaw& law) {
  json out;
  out["elements"] = law.elements();
  out["symmetric"] = law.is_symmetric();
  json units = json::array();
  for (int u : law.units()) units.push_back(law.label(u));
  out["units"] = units;
  return out;
}

// ---------------------------------------------------------------- grade ----

int cmd_grade(const Options& opt, const std::string& law_path, bool enumerate,
              bool include_presentation) {
  FusionLaw law = law_from_json(load_json_file(law_path));
  json report;
  report["command"] = "grade";
  report["law"] = law_summary(law);

  CollapseReport collapse = collapse_report(law);
  json coll;
  json trivial = json::array();
  for (int g : collapse.trivial_generators(law.size())) trivial.push_back(law.label(g));
  coll["forced_trivial"] = trivial;
  json equal = json::array();
  for (const auto& e : collapse.forced_equal) {
    json pair = json::array();
    pair.push_back(law.label(e.a));
    pair.push_back(law.label(e.b));
    equal.push_back(pair);
  }
  coll["forced_equal"] = equal;
  report["collapse"] = coll;

  Presentation pres = finest_grading_presentation(law);
  if (include_presentation) report["presentation"] = presentation_to_json(pres);

  AbelianGrading grading = abelianized_grading(law);
  report["grading"] = grading_to_json(grading);

  int code = 0;
  if (enumerate) {
    std::vector<int> genmap;
    Presentation simplified = simplify_presentation(pres, collapse, &genmap);
    CosetEnumeration ce = coset_enumerate(simplified, opt.max_cosets);
    json en;
    if (ce.exhausted) {
      en["status"] = "exhausted";
      en["note"] = "unknown beyond abelianization";
      code = 3;
    } else {
      en["status"] = "finite";
      en["order"] = ce.order;
    }
    report["enumeration"] = en;
  }
  return emit(opt, report, code);
}

// ------------------------------------------------------------- classlaw ----

int cmd_classlaw(const Options& opt, const std::string& group_path, bool grade) {
  PermGroup g = group_from_json(load_json_file(group_path));
  FusionLaw law = class_fusion_law(g);
  json report;
  report["command"] = "classlaw";
  report["group_order"] = g.order();
  json sizes = json::array();
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size());
  report["class_sizes"] = sizes;
  report["law"] = law_to_json(law);
  if (grade) {
    AbelianGrading grading = abelianized_grading(law);
    report["grading"] = grading_to_json(grading);
    report["group_abelianization"] = factors_to_json(g.abelianization());
    report["matches_group_abelianization"] =
        grading.invariant_factors == g.abelianization();
    if (!grading.invariant_factors.empty() &&
        !report["matches_group_abelianization"].get<bool>())
      return emit(opt, report, 1);
  }
  return emit(opt, report, 0);
}

// --------------------------------------------------------------- replaw ----

int cmd_replaw(const Options& opt, const std::string& table_path, bool grade,
               bool center_check) {
  CharacterTable t = character_table_from_json(load_json_file(table_path));
  t.validate(opt.tolerance);
  FusionLaw law = representation_fusion_law(t, opt.tolerance);
  json report;
  report["command"] = "replaw";
  report["law"] = law_to_json(law);
  if (grade) {
    AbelianGrading grading = abelianized_grading(law);
    report["grading"] = grading_to_json(grading);
  }
  if (center_check) {
    CenterGrading cg = center_grading_map(t, opt.tolerance);
    json c;
    c["center_order"] = cg.center_table.group.order();
    json map;
    for (std::size_t chi = 0; chi < t.num_chars(); ++chi)
      map[t.labels[chi]] = cg.center_table.labels[cg.map[chi]];
    c["map"] = map;
    AbelianGrading grading = abelianized_grading(law);
    bool orders_match =
        grading.finite() && grading.order() == Int(cg.center_table.group.order());
    // kernels must coincide: chi maps to 0 iff its central character is trivial
    bool kernels_match = true;
    for (std::size_t chi = 0; chi < t.num_chars(); ++chi) {
      bool in_center_kernel = cg.map[chi] == 0;
      bool in_grading_kernel = true;
      for (const Int& v : grading.map[chi])
        if (v != 0) in_grading_kernel = false;
      if (in_center_kernel != in_grading_kernel) kernels_match = false;
    }
    c["orders_match"] = orders_match;
    c["kernels_match"] = kernels_match;
    report["center_grading"] = c;
    if (!(orders_match && kernels_match)) return emit(opt, report, 1);
  }
  return emit(opt, report, 0);
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const Options& opt, const std::string& path) {
  DecompositionAlgebra d = decalg_from_json(load_json_file(path), opt.tolerance);
  VerifyReport rep = verify(d, opt.tolerance);
  json report;
  report["command"] = "verify";
  report["report"] = verify_report_to_json(rep, d);
  return emit(opt, report, rep.valid() ? 0 : 1);
}

// ---------------------------------------------------------- pushforward ----

int cmd_pushforward(const Options& opt, const std::string& path,
                    const std::string& morphism_path) {
  DecompositionAlgebra d = decalg_from_json(load_json_file(path), opt.tolerance);
  FusionMorphism xi = law_morphism_from_json(load_json_file(morphism_path), d.law);
  DecompositionAlgebra pushed = pushforward(d, xi);
  VerifyReport rep = verify(pushed, opt.tolerance);
  json report;
  report["command"] = "pushforward";
  report["report"] = verify_report_to_json(rep, pushed);
  report["result"] = decalg_to_json(pushed);
  return emit(opt, report, rep.valid() ? 0 : 1);
}

// ------------------------------------------------------------- miyamoto ----

std::vector<RCharacter> parse_characters(const std::string& spec, const CayleyTable& gamma) {
  if (spec == "pm1") return MiyamotoContext::pm1_characters(gamma);
  return characters_from_json(load_json_file(spec), gamma);
}

int cmd_miyamoto(const Options& opt, const std::string& path, const std::string& chars,
                 const std::string& grading_path, bool universal, bool central,
                 bool stability) {
  DecompositionAlgebra d = decalg_from_json(load_json_file(path), opt.tolerance);
  std::optional<FusionMorphism> grading;
  if (!grading_path.empty())
    grading = law_morphism_from_json(load_json_file(grading_path), d.law);
  CayleyTable gamma =
      cayley_from_group_law(grading ? grading->target() : d.law);
  MiyamotoContext ctx =
      MiyamotoContext::make(d, grading, parse_characters(chars, gamma), opt.tolerance);

  json report;
  report["command"] = "miyamoto";
  report["exact"] = ctx.exact();
  if (!ctx.exact()) report["note"] = "float scalars: closure results are heuristic";

  MatrixGroupClosure group = miyamoto_group(ctx, opt.cap);
  if (group.exhausted) {
    report["group"] = {{"status", "exhausted"}};
    return emit(opt, report, 3);
  }
  report["group"] = {{"status", "finite"}, {"order", group.order()}};

  ClosureReport closure = is_miyamoto_closed(ctx);
  report["closed"] = closure.closed;
  if (closure.closed) {
    json pi = json::array();
    for (std::size_t i = 0; i < closure.pi.size(); ++i)
      for (std::size_t k = 1; k < closure.pi[i].size(); ++k) {
        json entry;
        entry["index"] = ctx.graded.index_names[i];
        entry["character"] = k;
        entry["pi"] = closure.pi[i][k];
        pi.push_back(entry);
      }
    report["pi"] = pi;
  }

  if (stability && ctx.base.axes) {
    StabilityReport s = check_stability_and_unique_type(ctx);
    report["stable"] = s.stable;
    report["unique_type"] = s.unique_type;
    if (!s.detail.empty()) report["stability_detail"] = s.detail;
  }

  if (universal) {
    UniversalPresentation up = universal_presentation(ctx);
    report["universal_presentation"] = presentation_to_json(up.presentation);
  }
  if (central) {
    CentralExtensionReport ce = central_extension_check(ctx, opt.max_cosets);
    json c;
    if (ce.exhausted) {
      c["status"] = "exhausted";
      report["central_check"] = c;
      return emit(opt, report, 3);
    }
    c["universal_order"] = ce.universal_order;
    c["miyamoto_order"] = ce.miyamoto_order;
    c["kernel_size"] = ce.kernel_size;
    c["kernel_central"] = ce.kernel_central;
    c["epimorphism_ok"] = ce.epimorphism_ok;
    report["central_check"] = c;
    if (!(ce.kernel_central && ce.epimorphism_ok)) return emit(opt, report, 1);
  }
  return emit(opt, report, closure.closed ? 0 : 1);
}

// ------------------------------------------------------------- isotypic ----

int cmd_isotypic(const Options& opt, const std::string& rep_path,
                 const std::string& table_path) {
  MatrixRep rep = matrix_rep_from_json(load_json_file(rep_path));
  CharacterTable t = character_table_from_json(load_json_file(table_path));
  if (rep.group.order() != t.group.order())
    throw InvalidArgument("rep group and table group sizes differ");
  IsotypicDecomposition iso = isotypic_decomposition(rep, t, opt.tolerance);
  json report;
  report["command"] = "isotypic";
  json comps = json::array();
  for (const auto& c : iso.components) {
    json entry;
    entry["character"] = t.labels[c.chi];
    entry["dimension"] = c.space.dim();
    entry["multiplicity"] = c.multiplicity;
    comps.push_back(entry);
  }
  report["components"] = comps;
  report["multiplicity_free"] = iso.multiplicity_free;
  return emit(opt, report, 0);
}

// --------------------------------------------------------------- scheme ----

int cmd_scheme(const Options& opt, const std::string& group_path, const std::string& domain,
               const std::string& element, bool spectral) {
  PermGroup g = group_from_json(load_json_file(group_path));
  PermAction action;
  if (domain == "points") {
    action = natural_action(g);
  } else if (domain == "pairs") {
    action = pairs_action(g);
  } else if (domain == "conjugacy") {
    if (element.empty()) throw InvalidArgument("--element is required for conjugacy domains");
    Perm x(json::parse(element).get<std::vector<int>>());
    action = conjugation_action(g, x);
  } else {
    throw InvalidArgument("unknown domain: " + domain);
  }
  AssociationScheme s = scheme_from_group(g, action);
  json report;
  report["command"] = "scheme";
  report["n"] = s.n;
  report["d"] = s.d;
  report["symmetric"] = s.symmetric;
  report["generously_transitive"] = is_generously_transitive(g, action);
  auto ax = s.verify_axioms();
  report["axioms"] = {{"partition", ax.partition},
                      {"diagonal", ax.diagonal},
                      {"transpose_closed", ax.transpose_closed},
                      {"constant_intersection", ax.constant_intersection},
                      {"commutes", ax.commutes}};
  report["scheme"] = scheme_to_json(s);
  if (spectral) {
    BoseMesner bm = bose_mesner(s, opt.tolerance);
    json dims = json::array();
    for (const auto& v : bm.V) dims.push_back(v.dim());
    auto [qmin, qimag] = krein_bounds(bm);
    report["spectral"] = {{"exact", bm.exact},
                          {"eigenspace_dimensions", dims},
                          {"krein_min", qmin},
                          {"krein_max_imag", qimag},
                          {"sigma_identity_residual", krein_sigma_residual(bm)}};
  }
  return emit(opt, report, ax.all() ? 0 : 1);
}

// --------------------------------------------------------------- norton ----

int cmd_norton(const Options& opt, const std::string& scheme_path, int eigenspace,
               bool certify) {
  AssociationScheme s = scheme_from_json(load_json_file(scheme_path));
  BoseMesner bm = bose_mesner(s, opt.tolerance);
  json report;
  report["command"] = "norton";
  report["eigenspace"] = eigenspace;
  NortonAlgebra na = norton_algebra(bm, eigenspace, opt.tolerance);
  report["dimension"] = na.basis.dim();
  report["zero_product"] = na.zero_product;
  if (na.trivial_flagged) report["note"] = "eigenspace 0 carries the trivial Norton algebra";
  report["commutative"] = na.algebra.is_commutative(opt.tolerance);
  if (certify) {
    NortonCertificate cert = norton_axial_certificate(bm, eigenspace, opt.tolerance);
    VerifyReport rep = verify(cert.dec, opt.tolerance);
    json c;
    c["axes"] = cert.dec.index_count();
    c["complete_eigenbasis"] = cert.complete_eigenbasis;
    c["certified"] = cert.certified;
    c["unit_label_is_unit"] = cert.unit_label_is_unit;
    if (!cert.note.empty()) c["note"] = cert.note;
    json lam;
    for (std::size_t x = 0; x < cert.dec.law.size(); ++x)
      lam[cert.dec.law.label(static_cast<int>(x))] =
          scalar_to_json((*cert.dec.lambda)[x]);
    c["lambda"] = lam;
    c["report"] = verify_report_to_json(rep, cert.dec);
    report["certificate"] = c;
    return emit(opt, report, rep.valid() && rep.axial() ? 0 : 1);
  }
  return emit(opt, report, 0);
}

// ------------------------------------------------------------ reproduce ----

json grading_expect(const FusionLaw& law, const AbelianGrading& g) {
  json out = grading_to_json(g);
  out["law_elements"] = law.elements();
  return out;
}

int repro_grading(const Options& opt, const std::string& which) {
  FusionLaw law = which == "jordan" ? jordan_law() : ising_law();
  AbelianGrading g = abelianized_grading(law);
  bool ok = g.invariant_factors == std::vector<Int>{2};
  // e, z (and q for Ising) to 0, the top element to 1
  for (std::size_t x = 0; x + 1 < law.size() && ok; ++x) ok = g.map[x][0] == 0;
  ok = ok && g.map[law.size() - 1][0] == 1;
  json report;
  report["command"] = "reproduce";
  report["example"] = which + "-grading";
  report["grading"] = grading_expect(law, g);
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_peirce_j3(const Options& opt) {
  DecompositionAlgebra d = peirce_context(3);
  VerifyReport rep = verify(d, opt.tolerance);
  bool dims_ok = true;
  for (const auto& dims : rep.part_dims)
    dims_ok = dims_ok && dims == std::vector<std::size_t>{1, 4, 4};
  bool ok = rep.valid() && rep.axial() && rep.primitive && dims_ok;
  json report;
  report["command"] = "reproduce";
  report["example"] = "peirce-j3";
  report["report"] = verify_report_to_json(rep, d);
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_miy_not_functorial(const Options& opt) {
  // tau_E11 tau_E22 tau_E33 is trivial on J_3 but its image in J_5 is
  // conjugation by diag(1,1,1,-1,-1).
  DecMorphism f = jordan_corner_embedding(3, 5, opt.tolerance);
  auto context = [&](const DecompositionAlgebra& d) {
    FusionMorphism grading = jordan_z2_grading();
    return MiyamotoContext::make(d, grading,
                                 MiyamotoContext::pm1_characters(cayley_from_group_law(
                                     grading.target())),
                                 opt.tolerance);
  };
  MiyamotoContext src = context(f.source);
  MiyamotoContext dst = context(f.target);

  Matrix product = Matrix::identity(9, true);
  for (std::size_t i = 0; i < 3; ++i) product = product * miyamoto_map(src, i, 1);
  bool trivial_on_j3 = product.is_identity(0.0);

  Matrix image = Matrix::identity(25, true);
  for (std::size_t i = 0; i < 3; ++i) image = image * miyamoto_map(dst, f.psi[i], 1);
  // conjugation by diag(1,1,1,-1,-1): E_ij -> d_i d_j E_ij
  Matrix expected(25, 25, true);
  std::vector<int> sign{1, 1, 1, -1, -1};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      expected.at(jordan_basis_index(5, i, j), jordan_basis_index(5, i, j)) =
          Scalar(sign[i] * sign[j]);
  bool image_matches = image == expected;
  bool image_nontrivial = !image.is_identity(0.0);

  InducedMorphismReport induced = induced_group_morphism(f, src, dst);

  bool ok = trivial_on_j3 && image_matches && image_nontrivial && induced.intertwines &&
            !induced.surjective && !induced.miy_functorial;
  json report;
  report["command"] = "reproduce";
  report["example"] = "miy-not-functorial";
  report["product_trivial_on_j3"] = trivial_on_j3;
  report["image_equals_diag(1,1,1,-1,-1)_conjugation"] = image_matches;
  report["image_nontrivial_on_j5"] = image_nontrivial;
  report["intertwines"] = induced.intertwines;
  report["surjective"] = induced.surjective;
  report["miyamoto_functorial"] = induced.miy_functorial;
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_j3_universal(const Options& opt) {
  DecompositionAlgebra d = peirce_context(3);
  FusionMorphism grading = jordan_z2_grading();
  MiyamotoContext ctx = MiyamotoContext::make(
      d, grading, MiyamotoContext::pm1_characters(cayley_from_group_law(grading.target())),
      opt.tolerance);
  UniversalPresentation up = universal_presentation(ctx);
  // abelianization of the universal presentation
  IntegerMatrix rel(up.presentation.relators.size(), up.presentation.generators.size());
  for (std::size_t r = 0; r < up.presentation.relators.size(); ++r)
    for (int letter : up.presentation.relators[r])
      rel.at(r, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  auto snf = smith_normal_form(rel);
  CentralExtensionReport ce = central_extension_check(ctx, opt.max_cosets);
  json report;
  report["command"] = "reproduce";
  report["example"] = "j3-universal-miyamoto";
  report["universal_presentation"] = presentation_to_json(up.presentation);
  report["presentation_abelianization"] = factors_to_json(snf.invariant_factors());
  if (ce.exhausted) {
    report["central_check"] = {{"status", "exhausted"}};
    return emit(opt, report, 3);
  }
  report["central_check"] = {{"universal_order", ce.universal_order},
                             {"miyamoto_order", ce.miyamoto_order},
                             {"kernel_size", ce.kernel_size},
                             {"kernel_central", ce.kernel_central},
                             {"epimorphism_ok", ce.epimorphism_ok}};
  bool ok = ce.kernel_central && ce.epimorphism_ok &&
            snf.invariant_factors() == std::vector<Int>{2, 2, 2};
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_johnson(const Options& opt, bool certify) {
  PermGroup s5 = catalog_group("s5");
  PermAction action = pairs_action(s5);
  AssociationScheme s = scheme_from_group(s5, action);
  BoseMesner bm = bose_mesner(s, opt.tolerance);
  json report;
  report["command"] = "reproduce";
  report["example"] = certify ? "norton-johnson" : "johnson-scheme";
  report["n"] = s.n;
  report["d"] = s.d;
  report["symmetric"] = s.symmetric;
  json dims = json::array();
  for (const auto& v : bm.V) dims.push_back(v.dim());
  report["eigenspace_dimensions"] = dims;
  auto [qmin, qimag] = krein_bounds(bm);
  report["krein_min"] = qmin;
  report["sigma_identity_residual"] = krein_sigma_residual(bm);
  bool ok = s.symmetric && s.d == 2 && s.n == 10 && bm.V[0].dim() == 1 &&
            bm.V[1].dim() == 4 && bm.V[2].dim() == 5 && qmin > -1e-9 && qimag < 1e-9;
  if (certify) {
    NortonCertificate cert = norton_axial_certificate(bm, 1, opt.tolerance);
    VerifyReport rep = verify(cert.dec, opt.tolerance);
    report["axes"] = cert.dec.index_count();
    report["complete_eigenbasis"] = cert.complete_eigenbasis;
    report["certified"] = cert.certified;
    report["report"] = verify_report_to_json(rep, cert.dec);
    ok = ok && cert.dec.index_count() == 10 && cert.complete_eigenbasis &&
         rep.valid() && rep.axial();
  }
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_s3_transpositions(const Options& opt) {
  PermGroup s3 = catalog_group("s3");
  Perm x({1, 0, 2});  // a transposition
  PermAction action = conjugation_action(s3, x);
  AssociationScheme s = scheme_from_group(s3, action);
  BoseMesner bm = bose_mesner(s, opt.tolerance);
  CharacterTable h_table = abelian_character_table(s3.centralizer(x));
  CentralizerRefinement ref = refine_with_centralizer(bm, 1, s3, x, h_table, opt.tolerance);
  VerifyReport rep = verify(ref.refined, opt.tolerance);
  json report;
  report["command"] = "reproduce";
  report["example"] = "s3-transpositions";
  report["scheme_d"] = s.d;
  report["generously_transitive"] = is_generously_transitive(s3, action);
  report["refined_valid"] = rep.valid();
  report["grading_is_morphism"] = ref.grading_is_morphism;
  report["miyamoto_matches_rho"] = ref.miyamoto_matches_rho;
  report["rho_group_order"] = ref.rho_group_order;
  bool ok = rep.valid() && ref.grading_is_morphism && ref.miyamoto_matches_rho &&
            ref.rho_group_order == 6;
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int repro_signed_perm(const Options& opt) {
  SignedPermExample ex = signed_perm_centralizer_example();
  DecompositionAlgebra d =
      construct_decomposition_algebra_from_group(ex.jordan, {ex.rep}, ex.table, opt.tolerance);
  VerifyReport rep = verify(d, opt.tolerance);
  CenterGrading cg = center_grading_map(ex.table, opt.tolerance);
  FusionMorphism grading = cg.as_morphism();
  MiyamotoContext ctx = MiyamotoContext::make(
      d, grading, MiyamotoContext::pm1_characters(cayley_from_group_law(grading.target())),
      opt.tolerance);
  Matrix tau = miyamoto_map(ctx, 0, 1);
  bool recovers = tau == ex.involution;
  json report;
  report["command"] = "reproduce";
  report["example"] = "signed-perm-j3";
  report["group_order"] = ex.group.order();
  report["decomposition_valid"] = rep.valid();
  json dims = json::array();
  for (auto dim : rep.part_dims[0]) dims.push_back(dim);
  report["isotypic_dimensions"] = dims;
  report["miyamoto_recovers_involution"] = recovers;
  bool ok = rep.valid() && recovers;
  report["as_expected"] = ok;
  return emit(opt, report, ok ? 0 : 1);
}

int cmd_reproduce(const Options& opt, const std::string& id) {
  if (id == "jordan-grading") return repro_grading(opt, "jordan");
  if (id == "ising-grading") return repro_grading(opt, "ising");
  if (id == "peirce-j3") return repro_peirce_j3(opt);
  if (id == "miy-not-functorial") return repro_miy_not_functorial(opt);
  if (id == "j3-universal-miyamoto") return repro_j3_universal(opt);
  if (id == "johnson-scheme") return repro_johnson(opt, false);
  if (id == "norton-johnson") return repro_johnson(opt, true);
  if (id == "s3-transpositions") return repro_s3_transpositions(opt);
  if (id == "signed-perm-j3") return repro_signed_perm(opt);
  throw InvalidArgument(
      "unknown example id; known: jordan-grading, ising-grading, peirce-j3, "
      "miy-not-functorial, j3-universal-miyamoto, johnson-scheme, norton-johnson, "
      "s3-transpositions, signed-perm-j3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion laws, decomposition algebras, Miyamoto groups, Norton algebras"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("DECALG_TOLERANCE")) opt.tolerance = std::atof(env);
  app.add_option("--tolerance", opt.tolerance, "float-mode zero threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", opt.output, "write the JSON report to a file");
  app.add_option("--max-cosets", opt.max_cosets, "Todd-Coxeter coset cap");
  app.add_option("--cap", opt.cap, "matrix group closure cap");

  std::string law_path, group_path, table_path, decalg_path, morphism_path, rep_path;
  std::string scheme_path, chars = "pm1", grading_path, domain = "points", element, example;
  bool enumerate = false, include_presentation = false, grade = false, center_check = false;
  bool universal = false, central = false, stability = false, certify = false;
  bool no_spectral = false;
  int eigenspace = 1;

  auto* cg = app.add_subcommand("grade", "finest abelian grading of a fusion law");
  cg->add_option("law", law_path)->required();
  cg->add_flag("--enumerate", enumerate, "Todd-Coxeter on the finest-grading presentation");
  cg->add_flag("--presentation", include_presentation, "include the presentation");

  auto* cc = app.add_subcommand("classlaw", "class fusion law of a permutation group");
  cc->add_option("group", group_path)->required();
  cc->add_flag("--grade", grade, "include the finest abelian grading");

  auto* cr = app.add_subcommand("replaw", "representation fusion law of a character table");
  cr->add_option("table", table_path)->required();
  cr->add_flag("--grade", grade, "include the finest abelian grading");
  cr->add_flag("--center-check", center_check, "compare against the central characters");

  auto* cv = app.add_subcommand("verify", "verify a decomposition algebra");
  cv->add_option("bundle", decalg_path)->required();

  auto* cp = app.add_subcommand("pushforward", "regroup a decomposition along a law morphism");
  cp->add_option("bundle", decalg_path)->required();
  cp->add_option("morphism", morphism_path)->required();

  auto* cm = app.add_subcommand("miyamoto", "Miyamoto maps, group, closure, presentation");
  cm->add_option("bundle", decalg_path)->required();
  cm->add_option("--characters", chars, "pm1 or a character file")->capture_default_str();
  cm->add_option("--grading", grading_path, "law morphism onto a group fusion law");
  cm->add_flag("--universal", universal, "emit the universal presentation");
  cm->add_flag("--central-check", central, "verify the central extension property");
  cm->add_flag("--stability", stability, "check Miyamoto-stability and unique type");

  auto* ci = app.add_subcommand("isotypic", "isotypic decomposition of a matrix rep");
  ci->add_option("rep", rep_path)->required();
  ci->add_option("table", table_path)->required();

  auto* cs = app.add_subcommand("scheme", "orbital association scheme of an action");
  cs->add_option("group", group_path)->required();
  cs->add_option("--domain", domain, "points | pairs | conjugacy")->capture_default_str();
  cs->add_option("--element", element, "JSON image list (conjugacy domains)");
  cs->add_flag("--no-spectral", no_spectral, "skip the Bose-Mesner analysis");

  auto* cn = app.add_subcommand("norton", "Norton algebra of a scheme eigenspace");
  cn->add_option("scheme", scheme_path)->required();
  cn->add_option("--eigenspace", eigenspace, "eigenspace index")->capture_default_str();
  cn->add_flag("--certify", certify, "build and verify the axial certificate");

  auto* cx = app.add_subcommand("reproduce", "run a named end-to-end example");
  cx->add_option("id", example)->required();

  // global options may appear after the subcommand name
  for (auto* sub : {cg, cc, cr, cv, cp, cm, ci, cs, cn, cx}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cg->parsed()) return cmd_grade(opt, law_path, enumerate, include_presentation);
    if (cc->parsed()) return cmd_classlaw(opt, group_path, grade);
    if (cr->parsed()) return cmd_replaw(opt, table_path, grade, center_check);
    if (cv->parsed()) return cmd_verify(opt, decalg_path);
    if (cp->parsed()) return cmd_pushforward(opt, decalg_path, morphism_path);
    if (cm->parsed())
      return cmd_miyamoto(opt, decalg_path, chars, grading_path, universal, central, stability);
    if (ci->parsed()) return cmd_isotypic(opt, rep_path, table_path);
    if (cs->parsed()) return cmd_scheme(opt, group_path, domain, element, !no_spectral);
    if (cn->parsed()) return cmd_norton(opt, scheme_path, eigenspace, certify);
    if (cx->parsed()) return cmd_reproduce(opt, example);
  } catch (const CapExceeded& e) {
    std::cerr << "exhausted: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidObject& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
