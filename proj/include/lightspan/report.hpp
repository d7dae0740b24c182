#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lightspan/analysis.hpp"
#include "lightspan/generate.hpp"
#include "lightspan/graph.hpp"
#include "lightspan/rational.hpp"

namespace lightspan {

struct RunMeta {
  std::string family = "file";
  double param = 0.0;
  std::uint64_t seed = 0;
};

/// One end-to-end run: greedy with t = (2k-1)(1+eps), every verifier, the
/// scale analysis (k >= 2) and the reference curves.
struct AnalysisReport {
  RunMeta meta;
  int n = 0;
  int m = 0;
  int k = 0;
  Rational eps;
  Rational t;
  int spanner_edges = 0;
  Rational spanner_weight;
  Rational mst_weight;
  Rational lightness;
  std::optional<Rational> max_stretch;
  std::optional<Rational> weighted_girth;  // nullopt: acyclic spanner
  double size_bound = 0;
  std::optional<double> bound_new;  // needs k >= 2
  double bound_cdns = 0;
  std::optional<double> bound_ratio;  // bound_new / bound_cdns

  bool stretch_ok = false;
  bool mst_ok = false;
  bool wgirth_ok = false;
  bool analysis_ran = false;
  bool path_ok = true;
  bool scales_ok = true;  // no rejected edges
  bool obs2_ok = true;
  bool tours_ok = true;
  bool k_simple_ok = true;
  bool k_girth_ok = true;
  int populated_scales = 0;
  int overlap_flags = 0;
  std::vector<ScaleRow> scales;

  double build_ms = 0;
  double analysis_ms = 0;

  bool all_pass() const {
    return stretch_ok && mst_ok && wgirth_ok && lightness >= 1 && path_ok && scales_ok && obs2_ok && tours_ok &&
           k_simple_ok && k_girth_ok;
  }
};

/// Throws std::invalid_argument for k < 1 or eps <= 0.
AnalysisReport run_pipeline(const WeightedGraph& g, int k, const Rational& eps, double C = 1.0,
                            const RunMeta& meta = {});

struct SweepConfig {
  GeneratorSpec generator;
  int graphs = 1;  // instances use seeds seed, seed + 1, ...
  std::vector<int> ks;
  std::vector<Rational> eps;
  double C = 1.0;
  int workers = 1;
};

/// Rows ordered by (graph index, k, eps) regardless of worker count.
/// Throws std::invalid_argument on empty lists or n < 2.
std::vector<AnalysisReport> run_sweep(const SweepConfig& config);

/// Same sweep over a fixed graph.
std::vector<AnalysisReport> run_sweep(const WeightedGraph& g, const RunMeta& meta, const std::vector<int>& ks,
                                      const std::vector<Rational>& eps, double C, int workers);

/// Column order is fixed; see README. Timing columns are appended only on
/// request since they break byte-for-byte reproducibility.
std::string sweep_csv_header(bool timings = false);
std::string sweep_csv(const std::vector<AnalysisReport>& rows, bool timings = false);

nlohmann::json to_json(const AnalysisReport& report, bool timings = false);
nlohmann::json sweep_json(const std::vector<AnalysisReport>& rows, bool timings = false);

}  // namespace lightspan
