#ifndef WTORIC_PIPELINE_HPP
#define WTORIC_PIPELINE_HPP

#include "wtoric/iso_map.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wtoric {

using Json = nlohmann::ordered_json;

const char* engine_version();

struct JobConfig {
  std::string type_label;
  std::vector<std::vector<Rational>> lambda_weight;  // fundamental-weight coordinates
  std::vector<int> K;                                // 0-based, sorted
  std::vector<std::string> checks;                   // classify, algebra, characters, iso, scaling, all
  int rank_cap = kDefaultRankCap;
  bool force_degenerate = false;
};

JobConfig parse_config(const Json& j);
Json config_to_json(const JobConfig& cfg);

struct RunResult {
  Json report;
  bool ok = false;
};

// Full pipeline for one job: build, classify, algebra, characters,
// iso-verification and scaling checks as requested. Stage errors are
// embedded in the report; ok is true iff every requested check passed.
RunResult run(const JobConfig& cfg);

// Canned worked examples diffed against embedded expectations:
// "a2-hexagon" and "i25-pentagon".
RunResult run_example(const std::string& name);

// Sweep of every supported type up to the rank cap, one strictly dominant
// singleton and one strictly dominant two-point set, over all subsets K.
RunResult selftest(int sweep_rank_cap, int rank_cap = kDefaultRankCap);

// Shared with the acceptance suite: one fully built ambient case.
struct BuiltCase {
  RootSystem rs;
  WeylGroup wg;
  std::vector<Vector> lambdas;
  WPolytope P;
  GradedAlgebra AP;
};

BuiltCase build_case(const std::string& type_label, const std::vector<std::vector<Rational>>& lambda_weight,
                     NormalScaling scaling = NormalScaling::RootDualPrimitive,
                     int rank_cap = kDefaultRankCap);

// The two-point lambda sets (weight coordinates) used by sweeps, chosen so
// the hull is simple with every orbit point a vertex.
std::vector<std::vector<Rational>> sweep_singleton(int rank);
std::vector<std::vector<Rational>> sweep_two_point(int rank);
std::vector<std::string> sweep_types(int max_rank);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, std::int64_t disc);
Json vector_to_json(const Vector& v);

} // namespace wtoric

#endif
