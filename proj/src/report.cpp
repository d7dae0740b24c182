#include "lightspan/report.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lightspan/greedy.hpp"
#include "lightspan/wgirth.hpp"

namespace lightspan {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string opt_rational(const std::optional<Rational>& r) { return r ? to_string(*r) : "inf"; }

std::string opt_double(const std::optional<double>& x) { return x ? format_double(*x) : "na"; }

// Runs task(i) for i in [0, count) on a bounded pool.
template <typename Task>
void parallel_for(std::size_t count, int workers, Task task) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(threads, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

AnalysisReport run_pipeline(const WeightedGraph& g, int k, const Rational& eps, double C, const RunMeta& meta) {
  AnalysisReport r;
  r.meta = meta;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.k = k;
  r.eps = eps;
  r.t = stretch_params(k, eps);

  auto start = Clock::now();
  const SpannerResult h = greedy_spanner(g, r.t);
  r.build_ms = millis_since(start);

  start = Clock::now();
  r.spanner_edges = h.stats.edge_count;
  r.spanner_weight = g.to_rational(h.stats.weight);
  r.mst_weight = g.to_rational(h.stats.mst_weight);
  r.lightness = h.stats.lightness;

  const StretchReport stretch = verify_stretch(g, h);
  r.max_stretch = stretch.max_stretch;
  r.stretch_ok = stretch.within(r.t);
  r.mst_ok = contains_mst(g, h.edges);
  const WeightedGirthResult wg = weighted_girth(g, h.edges);
  r.weighted_girth = wg.value;
  r.wgirth_ok = wg.acyclic() || *wg.value > r.t + 1;

  const double n = r.n;
  const double e = to_double(eps);
  r.size_bound = size_bound(std::max(1.0, n), r.t);
  r.bound_cdns = lightness_bound_cdns(n, k, e, C);
  if (k >= 2) {
    r.bound_new = lightness_bound_new(n, k, e, C);
    r.bound_ratio = *r.bound_new / r.bound_cdns;

    const ScaleAnalysis analysis = analyze_spanner(g, h, k, eps);
    r.analysis_ran = true;
    r.path_ok = analysis.path_ok();
    r.scales_ok = analysis.decomposition.rejected.empty();
    for (const ScaleRow& row : analysis.rows) {
      r.obs2_ok = r.obs2_ok && row.obs2_ok && row.per_source_ok;
      r.tours_ok = r.tours_ok && row.tours_ok;
      r.k_simple_ok = r.k_simple_ok && row.simple_ok;
      r.k_girth_ok = r.k_girth_ok && row.girth_ok;
    }
    r.populated_scales = analysis.populated_scales();
    r.overlap_flags = analysis.overlap_flags();
    r.scales = analysis.rows;
  }
  r.analysis_ms = millis_since(start);
  return r;
}

std::vector<AnalysisReport> run_sweep(const WeightedGraph& g, const RunMeta& meta, const std::vector<int>& ks,
                                      const std::vector<Rational>& eps, double C, int workers) {
  if (ks.empty() || eps.empty()) throw std::invalid_argument("sweep needs nonempty k and eps lists");
  std::vector<AnalysisReport> rows(ks.size() * eps.size());
  parallel_for(rows.size(), workers, [&](std::size_t i) {
    rows[i] = run_pipeline(g, ks[i / eps.size()], eps[i % eps.size()], C, meta);
  });
  return rows;
}

std::vector<AnalysisReport> run_sweep(const SweepConfig& config) {
  if (config.ks.empty() || config.eps.empty()) throw std::invalid_argument("sweep needs nonempty k and eps lists");
  if (config.generator.n < 2) throw std::invalid_argument("sweep needs n >= 2");
  if (config.graphs < 1) throw std::invalid_argument("sweep needs at least one graph");

  std::vector<WeightedGraph> graphs;
  std::vector<RunMeta> metas;
  for (int i = 0; i < config.graphs; ++i) {
    GeneratorSpec spec = config.generator;
    spec.seed = config.generator.seed + static_cast<std::uint64_t>(i);
    graphs.push_back(generate(spec));
    metas.push_back({spec.family, spec.param, spec.seed});
  }

  const std::size_t per_graph = config.ks.size() * config.eps.size();
  std::vector<AnalysisReport> rows(graphs.size() * per_graph);
  parallel_for(rows.size(), config.workers, [&](std::size_t i) {
    const std::size_t gi = i / per_graph;
    const std::size_t rest = i % per_graph;
    rows[i] = run_pipeline(graphs[gi], config.ks[rest / config.eps.size()], config.eps[rest % config.eps.size()],
                           config.C, metas[gi]);
  });
  return rows;
}

std::string sweep_csv_header(bool timings) {
  std::string header =
      "family,n,m,param,seed,k,eps,t,spanner_edges,spanner_weight,mst_weight,lightness,lightness_value,"
      "max_stretch,weighted_girth,size_bound,lightness_bound_new,lightness_bound_cdns,bound_ratio,"
      "populated_scales,stretch_ok,mst_ok,wgirth_ok,path_ok,obs2_ok,tours_ok,k_simple_ok,k_girth_ok,"
      "overlap_flags";
  if (timings) header += ",build_ms,analysis_ms";
  return header + "\n";
}

std::string sweep_csv(const std::vector<AnalysisReport>& rows, bool timings) {
  std::ostringstream out;
  out << sweep_csv_header(timings);
  for (const AnalysisReport& r : rows) {
    auto flag = [&](bool ok) { return r.analysis_ran ? (ok ? "1" : "0") : "na"; };
    out << r.meta.family << ',' << r.n << ',' << r.m << ',' << format_double(r.meta.param) << ',' << r.meta.seed
        << ',' << r.k << ',' << to_string(r.eps) << ',' << to_string(r.t) << ',' << r.spanner_edges << ','
        << to_string(r.spanner_weight) << ',' << to_string(r.mst_weight) << ',' << to_string(r.lightness) << ','
        << format_double(to_double(r.lightness)) << ',' << opt_rational(r.max_stretch) << ','
        << opt_rational(r.weighted_girth) << ',' << format_double(r.size_bound) << ',' << opt_double(r.bound_new)
        << ',' << format_double(r.bound_cdns) << ',' << opt_double(r.bound_ratio) << ',' << r.populated_scales
        << ',' << (r.stretch_ok ? 1 : 0) << ',' << (r.mst_ok ? 1 : 0) << ',' << (r.wgirth_ok ? 1 : 0) << ','
        << flag(r.path_ok && r.scales_ok) << ',' << flag(r.obs2_ok) << ',' << flag(r.tours_ok) << ','
        << flag(r.k_simple_ok) << ',' << flag(r.k_girth_ok) << ',' << r.overlap_flags;
    if (timings) out << ',' << format_double(r.build_ms) << ',' << format_double(r.analysis_ms);
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const AnalysisReport& r, bool timings) {
  auto opt = [](const std::optional<Rational>& x) { return x ? nlohmann::json(to_string(*x)) : nlohmann::json(nullptr); };
  auto optd = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  nlohmann::json out = {
      {"family", r.meta.family},
      {"param", r.meta.param},
      {"seed", r.meta.seed},
      {"n", r.n},
      {"m", r.m},
      {"k", r.k},
      {"eps", to_string(r.eps)},
      {"t", to_string(r.t)},
      {"spanner_edges", r.spanner_edges},
      {"spanner_weight", to_string(r.spanner_weight)},
      {"mst_weight", to_string(r.mst_weight)},
      {"lightness", to_string(r.lightness)},
      {"max_stretch", opt(r.max_stretch)},
      {"weighted_girth", opt(r.weighted_girth)},
      {"size_bound", r.size_bound},
      {"lightness_bound_new", optd(r.bound_new)},
      {"lightness_bound_cdns", r.bound_cdns},
      {"bound_ratio", optd(r.bound_ratio)},
      {"checks",
       {{"stretch", r.stretch_ok},
        {"mst_contained", r.mst_ok},
        {"weighted_girth", r.wgirth_ok},
        {"analysis_ran", r.analysis_ran},
        {"path_length", r.path_ok},
        {"scales_cover", r.scales_ok},
        {"obs2", r.obs2_ok},
        {"tours", r.tours_ok},
        {"k_simple", r.k_simple_ok},
        {"k_girth", r.k_girth_ok},
        {"all", r.all_pass()}}},
      {"populated_scales", r.populated_scales},
      {"overlap_flags", r.overlap_flags},
      {"scales", scale_table_json(r.scales)},
  };
  if (timings) out["timings_ms"] = {{"build", r.build_ms}, {"analysis", r.analysis_ms}};
  return out;
}

nlohmann::json sweep_json(const std::vector<AnalysisReport>& rows, bool timings) {
  nlohmann::json out = nlohmann::json::array();
  for (const AnalysisReport& r : rows) out.push_back(to_json(r, timings));
  return out;
}

}  // namespace lightspan
