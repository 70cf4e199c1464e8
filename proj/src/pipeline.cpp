#include "wtoric/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace wtoric {

const char* engine_version() { return "0.1.0"; }

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw Error("expected an integer or a 'p/q' string");
}

std::vector<int> all_word(const WeylGroup& wg, int e) {
  std::vector<int> w;
  for (int k : wg.elements[e].word) w.push_back(k + 1);
  return w;
}

int env_rank_cap() {
  if (const char* v = std::getenv("WTORIC_RANK_CAP")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw Error("WTORIC_RANK_CAP is not an integer");
    }
  }
  return kDefaultRankCap;
}

} // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_to_string(s.rat_part());
  return Json::array({rational_to_string(s.rat_part()), rational_to_string(s.irr_part())});
}

Scalar scalar_from_json(const Json& j, std::int64_t disc) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error("quadratic scalar must be a two-element array");
    return Scalar(rational_from_json(j[0]), rational_from_json(j[1]), disc);
  }
  return Scalar(rational_from_json(j));
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(scalar_to_json(v(i)));
  return a;
}

JobConfig parse_config(const Json& j) {
  JobConfig cfg;
  if (!j.is_object()) throw Error("config must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) throw Error("config: missing 'type'");
  cfg.type_label = j["type"].get<std::string>();

  if (!j.contains("lambda") || !j["lambda"].is_array() || j["lambda"].empty()) {
    throw Error("config: 'lambda' must be a nonempty array of weight-coordinate vectors");
  }
  for (const Json& lam : j["lambda"]) {
    if (!lam.is_array()) throw Error("config: each lambda must be an array");
    std::vector<Rational> coords;
    for (const Json& c : lam) {
      Rational r = rational_from_json(c);
      if (r < 0) throw Error("config: lambda coordinates must be non-negative (dominance)");
      coords.push_back(std::move(r));
    }
    cfg.lambda_weight.push_back(std::move(coords));
  }

  if (j.contains("K")) {
    if (!j["K"].is_array()) throw Error("config: 'K' must be an array of 1-based indices");
    for (const Json& k : j["K"]) {
      if (!k.is_number_integer()) throw Error("config: K entries must be integers");
      cfg.K.push_back(k.get<int>() - 1);
    }
    std::sort(cfg.K.begin(), cfg.K.end());
    cfg.K.erase(std::unique(cfg.K.begin(), cfg.K.end()), cfg.K.end());
  }

  if (j.contains("checks")) {
    if (!j["checks"].is_array() || j["checks"].empty()) {
      throw Error("config: 'checks' must be a nonempty array");
    }
    for (const Json& c : j["checks"]) cfg.checks.push_back(c.get<std::string>());
  } else {
    cfg.checks = {"all"};
  }
  for (const std::string& c : cfg.checks) {
    if (c != "classify" && c != "algebra" && c != "characters" && c != "iso" && c != "scaling" &&
        c != "all") {
      throw Error("config: unknown check '" + c + "'");
    }
  }

  cfg.rank_cap = env_rank_cap();
  if (j.contains("max_rank_cap")) cfg.rank_cap = j["max_rank_cap"].get<int>();
  if (j.contains("force_degenerate")) cfg.force_degenerate = j["force_degenerate"].get<bool>();
  return cfg;
}

Json config_to_json(const JobConfig& cfg) {
  Json j;
  j["type"] = cfg.type_label;
  Json lams = Json::array();
  for (const auto& lam : cfg.lambda_weight) {
    Json one = Json::array();
    for (const Rational& r : lam) one.push_back(rational_to_string(r));
    lams.push_back(one);
  }
  j["lambda"] = lams;
  Json ks = Json::array();
  for (int k : cfg.K) ks.push_back(k + 1);
  j["K"] = ks;
  j["checks"] = cfg.checks;
  j["max_rank_cap"] = cfg.rank_cap;
  j["force_degenerate"] = cfg.force_degenerate;
  return j;
}

BuiltCase build_case(const std::string& type_label,
                     const std::vector<std::vector<Rational>>& lambda_weight,
                     NormalScaling scaling, int rank_cap) {
  BuiltCase bc;
  bc.rs = build_root_system(type_label, rank_cap);
  bc.wg = generate_group(bc.rs);
  for (const auto& coords : lambda_weight) {
    std::vector<Scalar> c;
    for (const Rational& r : coords) c.emplace_back(r);
    bc.lambdas.push_back(weight_coords_to_root_coords(bc.rs, c));
  }
  bc.P = build_w_polytope(bc.rs, bc.wg, bc.lambdas, scaling);
  bc.AP = build_graded_algebra(face_complex(bc.P), linear_forms(bc.rs, bc.P), bc.P.hvec);
  return bc;
}

namespace {

Json polytope_block(const WPolytope& p) {
  Json b;
  b["vertex_count"] = p.vertices.size();
  b["facet_count"] = p.facets.size();
  Json verts = Json::array();
  for (const Vector& v : p.vertices) verts.push_back(vector_to_json(v));
  b["vertices"] = verts;
  Json facets = Json::array();
  for (const Facet& f : p.facets) {
    Json jf;
    jf["normal"] = vector_to_json(f.normal);
    jf["offset"] = scalar_to_json(f.offset);
    jf["vertices"] = f.vertices;
    jf["orbit_rep"] = f.orbit_rep;
    facets.push_back(jf);
  }
  b["facets"] = facets;
  b["f_vector"] = p.fvec;
  b["h_vector"] = p.hvec;
  Json cls;
  cls["nondegenerate"] = p.nondegenerate;
  cls["simple"] = p.simple;
  cls["flag"] = p.flag;
  b["classification"] = cls;
  return b;
}

Json quotient_block(const QuotientPolytope& q) {
  Json b;
  b["vertex_count"] = q.vertices.size();
  b["facet_count"] = q.facets.size();
  Json verts = Json::array();
  for (const Vector& v : q.vertices) verts.push_back(vector_to_json(v));
  b["vertices"] = verts;
  Json facets = Json::array();
  for (const QuotientFacet& f : q.facets) {
    Json jf;
    jf["label"] = f.is_wall ? ("Y" + std::to_string(f.source + 1))
                            : ("X(F" + std::to_string(f.source) + ")");
    jf["normal"] = vector_to_json(f.normal);
    jf["offset"] = scalar_to_json(f.offset);
    jf["vertices"] = f.vertices;
    facets.push_back(jf);
  }
  b["facets"] = facets;
  b["f_vector"] = q.fvec;
  b["h_vector"] = q.hvec;
  b["simple"] = q.simple;
  b["flag"] = q.flag;
  return b;
}

Json presentation_block(const GradedAlgebra& ga, const std::vector<std::string>& variables) {
  Json b;
  b["variables"] = variables;
  Json gens = Json::array();
  for (const auto& g : minimal_nonfaces(ga.fc, ga.n + 1)) {
    std::vector<int> expo(ga.fc.nlabels, 0);
    for (int l : g) expo[l] = 1;
    gens.push_back(expo);
  }
  b["sr_ideal"] = gens;
  Json forms = Json::array();
  for (int i = 0; i < ga.n; ++i) {
    Json row = Json::array();
    for (int l = 0; l < ga.fc.nlabels; ++l) row.push_back(scalar_to_json(ga.eta(i, l)));
    forms.push_back(row);
  }
  b["linear_forms"] = forms;
  b["dims"] = ga.dims;
  return b;
}

std::vector<std::string> ambient_variables(const WPolytope& p) {
  std::vector<std::string> v;
  for (size_t i = 0; i < p.facets.size(); ++i) v.push_back("X" + std::to_string(i));
  return v;
}

std::vector<std::string> quotient_variables(const QuotientPolytope& q) {
  std::vector<std::string> v;
  for (const QuotientFacet& f : q.facets) {
    v.push_back(f.is_wall ? ("Y" + std::to_string(f.source + 1))
                          : ("X(F" + std::to_string(f.source) + ")"));
  }
  return v;
}

// Trace of every group element on the top degree must be 1.
bool top_degree_identity(const GradedAlgebra& ga, const WPolytope& p) {
  const DegreeData& dd = ga.deg[ga.n];
  for (const auto& perm : p.facet_perm) {
    const Expo& e = dd.monomials[ga.top_monomial];
    Expo img(e.size(), 0);
    for (size_t l = 0; l < e.size(); ++l) {
      if (e[l]) img[perm[l]] = e[l];
    }
    AlgebraElement x;
    x.degree = ga.n;
    auto it = dd.index.find(img);
    if (it == dd.index.end()) return false;
    x.coords.emplace_back(it->second, Scalar(1));
    x = normal_form(ga, x);
    if (x.coords.size() != 1 || x.coords[0].first != ga.top_monomial ||
        x.coords[0].second != Scalar(1)) {
      return false;
    }
  }
  return true;
}

Json algebra_invariants_block(const GradedAlgebra& ga, const WPolytope& p, bool& pass) {
  Json b;
  bool palindrome = true;
  for (int d = 0; d <= ga.n; ++d) {
    if (ga.hvec[d] != ga.hvec[ga.n - d]) palindrome = false;
  }
  const bool dims_match_h = true;  // enforced during construction
  const bool pairing = pd_check(ga);
  const bool vertex_monomials = vertex_monomial_consistency(ga);
  const bool top_identity = top_degree_identity(ga, p);
  b["dims_match_h"] = dims_match_h;
  b["h_palindrome"] = palindrome;
  b["poincare_pairing_full_rank"] = pairing;
  b["vertex_monomials_positive"] = vertex_monomials;
  b["top_degree_action_identity"] = top_identity;
  pass = palindrome && pairing && vertex_monomials && top_identity;
  return b;
}

Json characters_block(const GradedAlgebra& ga, const WPolytope& p, const WeylGroup& wg,
                      bool require_integral, bool& pass) {
  Json table = Json::array();
  bool integral = true;
  for (int e = 0; e < wg.order(); ++e) {
    const std::vector<Scalar> traces = graded_character(ga, p.facet_perm[e]);
    Json row;
    row["element"] = e;
    row["word"] = all_word(wg, e);
    Json tj = Json::array();
    for (const Scalar& t : traces) {
      tj.push_back(scalar_to_json(t));
      if (!t.is_integer()) integral = false;
    }
    row["traces"] = tj;
    table.push_back(row);
  }
  Json b;
  b["table"] = table;
  b["all_traces_integral"] = integral;
  b["integrality_required"] = require_integral;
  pass = require_integral ? integral : true;
  return b;
}

Json c_block(const WeylGroup& wg, const FacetOrbits& fo, const CCoefficients& cc) {
  Json arr = Json::array();
  for (size_t r = 0; r < fo.reps.size(); ++r) {
    for (size_t ci = 0; ci < fo.cosets[r].size(); ++ci) {
      Json e;
      e["rep_facet"] = fo.reps[r];
      e["coset_element"] = fo.cosets[r][ci];
      e["word"] = all_word(wg, fo.cosets[r][ci]);
      e["facet"] = fo.facet_of[r][ci];
      Json cs = Json::array();
      for (Eigen::Index j = 0; j < cc.c[r][ci].size(); ++j) {
        cs.push_back(scalar_to_json(cc.c[r][ci](j)));
      }
      e["c"] = cs;
      arr.push_back(e);
    }
  }
  return arr;
}

Json check_json(const DossierCheck& c) {
  Json j;
  j["pass"] = c.pass;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

Json dossier_block(const Dossier& d) {
  Json b;
  b["kernel_I"] = check_json(d.kernel_I);
  b["kernel_J"] = check_json(d.kernel_J);
  b["invariance"] = check_json(d.invariance);
  b["dims_equal"] = check_json(d.dims_equal);
  b["bijective"] = check_json(d.bijective);
  b["dims_quotient"] = d.dims_quotient;
  b["dims_invariant"] = d.dims_invariant;
  b["all_true"] = d.all_true();
  return b;
}

Json psi_block(const PsiMap& psi, const QuotientPolytope& q) {
  Json arr = Json::array();
  const std::vector<std::string> vars = quotient_variables(q);
  for (size_t i = 0; i < psi.raw_images.size(); ++i) {
    Json e;
    e["generator"] = vars[i];
    Json img = Json::array();
    for (const auto& [facet, coef] : psi.raw_images[i]) {
      img.push_back(Json::array({facet, scalar_to_json(coef)}));
    }
    e["image"] = img;
    arr.push_back(e);
  }
  return arr;
}

} // namespace

RunResult run(const JobConfig& cfg) {
  RunResult rr;
  Json& report = rr.report;
  report["engine"] = Json{{"name", "wtoric"}, {"version", engine_version()}};
  report["config"] = config_to_json(cfg);

  bool requested_classify = false, requested_algebra = false, requested_characters = false,
       requested_iso = false, requested_scaling = false;
  for (const std::string& c : cfg.checks) {
    if (c == "all") {
      requested_classify = requested_algebra = requested_characters = requested_iso =
          requested_scaling = true;
    }
    if (c == "classify") requested_classify = true;
    if (c == "algebra") requested_algebra = true;
    if (c == "characters") requested_characters = true;
    if (c == "iso") requested_iso = true;
    if (c == "scaling") requested_scaling = true;
  }

  Json checks;
  bool all_ok = true;
  auto record = [&](const std::string& name, bool pass) {
    checks[name] = pass;
    if (!pass) all_ok = false;
  };

  BuiltCase bc;
  try {
    bc.rs = build_root_system(cfg.type_label, cfg.rank_cap);
    report["field"] = Json{{"discriminant", bc.rs.disc}};
    bc.wg = generate_group(bc.rs);
    for (const auto& coords : cfg.lambda_weight) {
      if (static_cast<int>(coords.size()) != bc.rs.rank) {
        throw Error("lambda has wrong length for rank " + std::to_string(bc.rs.rank));
      }
      std::vector<Scalar> c;
      for (const Rational& r : coords) c.emplace_back(r);
      bc.lambdas.push_back(weight_coords_to_root_coords(bc.rs, c));
    }
    for (int k : cfg.K) {
      if (k < 0 || k >= bc.rs.rank) throw Error("K index out of range");
    }
    bool degenerate = false;
    for (const Vector& l : bc.lambdas) {
      if (!is_strictly_dominant(bc.rs, l)) degenerate = true;
    }
    if (degenerate && bc.rs.rank > 2 && !cfg.force_degenerate) {
      throw Error("degenerate input outside rank 2 requires force_degenerate");
    }
    bc.P = build_w_polytope(bc.rs, bc.wg, bc.lambdas);
    report["polytope"] = polytope_block(bc.P);
  } catch (const Error& e) {
    report["error"] = e.what();
    rr.ok = false;
    report["checks"] = Json::object();
    return rr;
  }

  if (requested_classify) record("classify", true);

  bool have_algebra = false;
  if (requested_algebra || requested_characters || requested_iso || requested_scaling) {
    try {
      bc.AP = build_graded_algebra(face_complex(bc.P), linear_forms(bc.rs, bc.P), bc.P.hvec);
      have_algebra = true;
      Json pres;
      pres["ambient"] = presentation_block(bc.AP, ambient_variables(bc.P));
      report["presentations"] = pres;
    } catch (const Error& e) {
      report["algebra_error"] = e.what();
      if (requested_algebra) record("algebra", false);
    }
  }

  if (requested_algebra && have_algebra) {
    bool pass = false;
    report["algebra_invariants"] = algebra_invariants_block(bc.AP, bc.P, pass);
    record("algebra", pass);
  }

  if (requested_characters && have_algebra) {
    bool pass = false;
    const bool require_integral = bc.rs.crystallographic && bc.P.nondegenerate;
    report["characters"] = characters_block(bc.AP, bc.P, bc.wg, require_integral, pass);
    record("characters", pass);
  } else if (requested_characters) {
    record("characters", false);
  }

  if (requested_iso && have_algebra) {
    try {
      KVerification kv = run_k_verification(bc.rs, bc.wg, bc.P, bc.AP, cfg.K);
      report["quotient"] = quotient_block(kv.q);
      report["presentations"]["quotient"] =
          presentation_block(kv.aq, quotient_variables(kv.q));
      report["c_coefficients"] = c_block(bc.wg, kv.fo, kv.cc);
      report["psi"] = psi_block(kv.psi, kv.q);
      report["dossier"] = dossier_block(kv.dossier);
      record("iso", kv.dossier.all_true());
    } catch (const Error& e) {
      report["iso_error"] = e.what();
      record("iso", false);
    }
  } else if (requested_iso) {
    record("iso", false);
  }

  if (requested_scaling && have_algebra) {
    try {
      std::vector<std::pair<int, Scalar>> scalings;
      std::vector<int> reps_seen;
      for (const Facet& f : bc.P.facets) {
        if (std::find(reps_seen.begin(), reps_seen.end(), f.orbit_rep) == reps_seen.end()) {
          reps_seen.push_back(f.orbit_rep);
        }
      }
      std::sort(reps_seen.begin(), reps_seen.end());
      for (size_t i = 0; i < reps_seen.size(); ++i) {
        scalings.emplace_back(reps_seen[i], Scalar(static_cast<int>(i) + 2));
      }
      const ScalingCheck sc = verify_scaling_invariance(bc.rs, bc.wg, bc.P, cfg.K, scalings);
      Json b;
      Json sj = Json::array();
      for (const auto& [rep, s] : scalings) sj.push_back(Json::array({rep, scalar_to_json(s)}));
      b["scalings"] = sj;
      b["ok"] = sc.ok;
      b["detail"] = sc.detail;
      report["scaling"] = b;
      record("scaling", sc.ok);
    } catch (const Error& e) {
      report["scaling_error"] = e.what();
      record("scaling", false);
    }
  } else if (requested_scaling) {
    record("scaling", false);
  }

  report["checks"] = checks;
  report["ok"] = all_ok;
  rr.ok = all_ok;
  return rr;
}

std::vector<std::string> sweep_types(int max_rank) {
  std::vector<std::pair<int, std::string>> all = {
      {1, "A1"}, {2, "A2"}, {2, "B2"}, {2, "G2"}, {2, "I2(5)"},
      {3, "A3"}, {3, "B3"}, {3, "C3"}, {3, "H3"},
      {4, "A4"}, {4, "B4"}, {4, "C4"}, {4, "D4"}, {4, "F4"},
  };
  std::vector<std::string> out;
  for (const auto& [rank, label] : all) {
    if (rank <= max_rank) out.push_back(label);
  }
  return out;
}

std::vector<std::vector<Rational>> sweep_singleton(int rank) {
  return {std::vector<Rational>(static_cast<size_t>(rank), Rational(1))};
}

std::vector<std::vector<Rational>> sweep_two_point(int rank) {
  if (rank < 2) return {};
  std::vector<Rational> a(static_cast<size_t>(rank), Rational(1));
  std::vector<Rational> b(static_cast<size_t>(rank), Rational(1));
  a[0] = Rational(2);
  b[static_cast<size_t>(rank) - 1] = Rational(2);
  return {a, b};
}

RunResult selftest(int sweep_rank_cap, int rank_cap) {
  RunResult rr;
  Json cases = Json::array();
  bool all_ok = true;
  std::ostringstream text;

  for (const std::string& type : sweep_types(sweep_rank_cap)) {
    const int rank = build_root_system(type, rank_cap).rank;
    std::vector<std::pair<std::string, std::vector<std::vector<Rational>>>> lambda_sets;
    lambda_sets.emplace_back("singleton", sweep_singleton(rank));
    const auto two = sweep_two_point(rank);
    if (!two.empty()) lambda_sets.emplace_back("two-point", two);

    for (const auto& [lname, lset] : lambda_sets) {
      Json cj;
      cj["type"] = type;
      cj["lambda"] = lname;
      bool case_ok = true;
      std::string error;
      try {
        BuiltCase bc = build_case(type, lset, NormalScaling::RootDualPrimitive, rank_cap);
        bool inv_pass = false;
        cj["algebra_invariants"] = algebra_invariants_block(bc.AP, bc.P, inv_pass);
        case_ok = inv_pass;
        if (bc.rs.crystallographic && bc.P.nondegenerate) {
          bool char_ok = true;
          for (int e = 0; e < bc.wg.order() && char_ok; ++e) {
            for (const Scalar& t : graded_character(bc.AP, bc.P.facet_perm[e])) {
              if (!t.is_integer()) char_ok = false;
            }
          }
          cj["characters_integral"] = char_ok;
          case_ok = case_ok && char_ok;
        }
        Json ks = Json::array();
        for (int mask = 0; mask < (1 << rank); ++mask) {
          std::vector<int> K;
          for (int k = 0; k < rank; ++k) {
            if (mask & (1 << k)) K.push_back(k);
          }
          KVerification kv = run_k_verification(bc.rs, bc.wg, bc.P, bc.AP, K);
          Json kj;
          Json karr = Json::array();
          for (int k : K) karr.push_back(k + 1);
          kj["K"] = karr;
          kj["all_true"] = kv.dossier.all_true();
          if (!kv.dossier.all_true()) {
            kj["dossier"] = dossier_block(kv.dossier);
            case_ok = false;
          }
          ks.push_back(kj);
        }
        cj["subsets"] = ks;
      } catch (const Error& e) {
        error = e.what();
        case_ok = false;
      }
      if (!error.empty()) cj["error"] = error;
      cj["pass"] = case_ok;
      cases.push_back(cj);
      all_ok = all_ok && case_ok;
      text << (case_ok ? "PASS " : "FAIL ") << type << " " << lname;
      if (!error.empty()) text << "  (" << error << ")";
      text << "\n";
    }
  }

  rr.report["engine"] = Json{{"name", "wtoric"}, {"version", engine_version()}};
  rr.report["selftest"] = cases;
  rr.report["ok"] = all_ok;
  rr.report["summary"] = text.str();
  rr.ok = all_ok;
  return rr;
}

namespace {

struct GoldenDiff {
  bool ok = true;
  std::ostringstream diff;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      diff << "mismatch: " << what << "\n";
    }
  }
};

int facet_with_covector(const WPolytope& p, const Vector& cov) {
  for (size_t f = 0; f < p.facets.size(); ++f) {
    if (vec_eq(p.facets[f].covector, cov)) return static_cast<int>(f);
  }
  return -1;
}

RunResult example_a2_hexagon() {
  RunResult rr;
  GoldenDiff gd;

  BuiltCase bc = build_case("A2", {{Rational(1), Rational(1)}});
  const std::vector<int> K = {0, 1};
  KVerification kv = run_k_verification(bc.rs, bc.wg, bc.P, bc.AP, K);

  gd.expect(bc.P.vertices.size() == 6 && bc.P.facets.size() == 6, "hexagon has 6 vertices and 6 edges");

  // Edge numbering: E0, E1 are the chamber representatives with pairing
  // vectors (1,0) and (0,1); E2 = r1(E0), E4 = r2 r1(E0), E3 = r1 r2(E1),
  // E5 = r2(E1).
  Vector cov10 = Vector::Constant(2, Scalar(0));
  cov10(0) = Scalar(1);
  Vector cov01 = Vector::Constant(2, Scalar(0));
  cov01(1) = Scalar(1);
  const int e0 = facet_with_covector(bc.P, cov10);
  const int e1 = facet_with_covector(bc.P, cov01);
  gd.expect(e0 >= 0 && e1 >= 0, "edges with pairing vectors (1,0) and (0,1) exist");
  if (!gd.ok) {
    rr.report["golden"] = gd.diff.str();
    rr.ok = false;
    return rr;
  }
  const int r1 = bc.wg.simple(0);
  const int r2 = bc.wg.simple(1);
  std::vector<int> E(6);
  E[0] = e0;
  E[1] = e1;
  E[2] = bc.P.facet_perm[r1][e0];
  E[4] = bc.P.facet_perm[bc.wg.compose(r2, r1)][e0];
  E[3] = bc.P.facet_perm[bc.wg.compose(r1, r2)][e1];
  E[5] = bc.P.facet_perm[r2][e1];
  std::vector<int> pos(6, -1);  // facet id -> paper index
  for (int i = 0; i < 6; ++i) pos[E[i]] = i;

  // Stanley-Reisner ideal: X_{E_i} X_{E_j} with i - j not congruent to +-1 mod 6.
  {
    const auto gens = minimal_nonfaces(bc.AP.fc, 3);
    std::set<std::pair<int, int>> got;
    for (const auto& g : gens) {
      gd.expect(g.size() == 2, "ambient SR ideal generated by quadratic monomials");
      if (g.size() == 2) {
        int a = pos[g[0]], b = pos[g[1]];
        got.insert({std::min(a, b), std::max(a, b)});
      }
    }
    std::set<std::pair<int, int>> want;
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        const int d = (j - i) % 6;
        if (d != 1 && d != 5) want.insert({i, j});
      }
    }
    gd.expect(got == want, "I_P = <X_i X_j : i - j incongruent to +-1 mod 6>");
  }

  // J_P generators in the paper's edge order.
  {
    Matrix expected(2, 6);
    const int row1[6] = {1, 0, -1, -1, 0, 1};
    const int row2[6] = {0, 1, 1, 0, -1, -1};
    for (int j = 0; j < 6; ++j) {
      expected(0, j) = Scalar(row1[j]);
      expected(1, j) = Scalar(row2[j]);
    }
    Matrix actual(2, 6);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 6; ++j) actual(i, j) = bc.AP.eta(i, E[j]);
    }
    gd.expect(mat_eq(actual, expected),
              "J_P generated by X0 - X2 - X3 + X5 and X1 + X2 - X4 - X5");
  }

  // Quotient: quadrilateral over {X_{E0}, X_{E1}, Y1, Y2}.
  {
    gd.expect(kv.q.vertices.size() == 4 && kv.q.facets.size() == 4,
              "quotient is a quadrilateral");
    // quotient label positions for X_{E0}, X_{E1}, Y1, Y2
    std::vector<int> qpos(4, -1);
    for (size_t f = 0; f < kv.q.facets.size(); ++f) {
      const QuotientFacet& qf = kv.q.facets[f];
      if (!qf.is_wall && qf.source == E[0]) qpos[0] = static_cast<int>(f);
      if (!qf.is_wall && qf.source == E[1]) qpos[1] = static_cast<int>(f);
      if (qf.is_wall && qf.source == 0) qpos[2] = static_cast<int>(f);
      if (qf.is_wall && qf.source == 1) qpos[3] = static_cast<int>(f);
    }
    gd.expect(std::count(qpos.begin(), qpos.end(), -1) == 0,
              "quotient facets are X_{E0}, X_{E1}, Y1, Y2");
    if (std::count(qpos.begin(), qpos.end(), -1) == 0) {
      const auto gens = minimal_nonfaces(kv.aq.fc, 3);
      std::set<std::set<int>> got;
      for (const auto& g : gens) got.insert(std::set<int>(g.begin(), g.end()));
      std::set<std::set<int>> want = {{qpos[0], qpos[2]}, {qpos[1], qpos[3]}};
      gd.expect(got == want, "I_S = <X_{E0} Y1, X_{E1} Y2>");

      Matrix expected(2, 4);
      const int row1[4] = {1, 0, -2, 1};
      const int row2[4] = {0, 1, 1, -2};
      for (int j = 0; j < 4; ++j) {
        expected(0, j) = Scalar(row1[j]);
        expected(1, j) = Scalar(row2[j]);
      }
      Matrix actual(2, 4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 4; ++j) actual(i, j) = kv.aq.eta(i, qpos[j]);
      }
      gd.expect(mat_eq(actual, expected),
                "J_S generated by X_{E0} - 2 Y1 + Y2 and X_{E1} + Y1 - 2 Y2");

      // psi generator images.
      auto image_set = [&](int qlabel) {
        std::set<int> s;
        for (const auto& [facet, coef] : kv.psi.raw_images[qlabel]) {
          if (coef != Scalar(1)) return std::set<int>{-99};
          s.insert(pos[facet]);
        }
        return s;
      };
      gd.expect(image_set(qpos[0]) == std::set<int>({0, 2, 4}), "psi(X_{E0}) = X0 + X2 + X4");
      gd.expect(image_set(qpos[1]) == std::set<int>({1, 3, 5}), "psi(X_{E1}) = X1 + X3 + X5");
      gd.expect(image_set(qpos[2]) == std::set<int>({2, 3, 4}), "psi(Y1) = X2 + X3 + X4");
      gd.expect(image_set(qpos[3]) == std::set<int>({3, 4, 5}), "psi(Y2) = X3 + X4 + X5");

      // kernel witness: psi(X_{E0} Y1) reduces to 0 in A(P)
      Expo e(4, 0);
      e[qpos[0]] = 1;
      e[qpos[2]] = 1;
      gd.expect(psi_evaluate(bc.AP, kv.psi, e).is_zero(), "psi(X_{E0} Y1) = 0");
    }
  }
  gd.expect(kv.dossier.all_true(), "dossier all-true");

  rr.report["engine"] = Json{{"name", "wtoric"}, {"version", engine_version()}};
  rr.report["example"] = "a2-hexagon";
  rr.report["dossier"] = dossier_block(kv.dossier);
  rr.report["golden"] = gd.ok ? "match" : gd.diff.str();
  rr.ok = gd.ok;
  return rr;
}

RunResult example_i25_pentagon() {
  RunResult rr;
  GoldenDiff gd;

  BuiltCase bc = build_case("I2(5)", {{Rational(1), Rational(0)}});
  const std::vector<int> K = {0, 1};
  KVerification kv = run_k_verification(bc.rs, bc.wg, bc.P, bc.AP, K);

  gd.expect(bc.P.vertices.size() == 5 && bc.P.facets.size() == 5,
            "pentagon has 5 vertices and 5 edges");
  gd.expect(!bc.P.nondegenerate && bc.P.simple, "pentagon is degenerate and simple");
  gd.expect(kv.fo.reps.size() == 1, "one facet representative");
  if (kv.fo.reps.size() == 1) {
    gd.expect(kv.fo.stabilizers[0].size() == 2 && kv.fo.cosets[0].size() == 5,
              "stabilizer of order 2 with 5 cosets");
  }
  gd.expect(kv.q.vertices.size() == 3 && kv.q.facets.size() == 3, "quotient is a triangle");

  const int r1 = bc.wg.simple(0);
  const int r2 = bc.wg.simple(1);
  const std::vector<Scalar> tr1 = graded_character(bc.AP, bc.P.facet_perm[r1]);
  const std::vector<Scalar> tr2 = graded_character(bc.AP, bc.P.facet_perm[r2]);
  gd.expect(tr1[1] == Scalar(1), "Tr(r1) on A^1 equals 1");
  gd.expect(tr2[1] == Scalar(Rational(1), Rational(-1), 5), "Tr(r2) on A^1 equals 1 - sqrt(5)");
  gd.expect(kv.dossier.all_true(), "dossier all-true over Q(sqrt(5))");

  rr.report["engine"] = Json{{"name", "wtoric"}, {"version", engine_version()}};
  rr.report["example"] = "i25-pentagon";
  rr.report["dossier"] = dossier_block(kv.dossier);
  Json chars;
  chars["Tr(r1)_A1"] = scalar_to_json(tr1[1]);
  chars["Tr(r2)_A1"] = scalar_to_json(tr2[1]);
  rr.report["characters"] = chars;
  rr.report["golden"] = gd.ok ? "match" : gd.diff.str();
  rr.ok = gd.ok;
  return rr;
}

} // namespace

RunResult run_example(const std::string& name) {
  if (name == "a2-hexagon") return example_a2_hexagon();
  if (name == "i25-pentagon") return example_i25_pentagon();
  throw Error("unknown example '" + name + "' (expected a2-hexagon or i25-pentagon)");
}

} // namespace wtoric
