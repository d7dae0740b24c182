#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lightspan/graph.hpp"

namespace lightspan {

/// Graph families for experiments:
///   gnp-uniform-weights      G(n, p), p = param, integer weights in [1, 1000]
///   gnp-exponential-weights  G(n, p), p = param, Exp(1) weights at 3 decimals
///   complete-random-metric   K_n with the shortest-path closure of weights in [1, 1000]
///   grid                     n rows x param columns (param 0: square), unit weights
///   path-plus-random-chords  path with weights in [1, 10] plus round(param * n) chords
struct GeneratorSpec {
  std::string family;
  int n = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& generator_families();

/// Deterministic under seed and always connected (missing links between
/// components are added with random weights). Throws std::invalid_argument
/// for unknown families or out-of-range parameters.
WeightedGraph generate(const GeneratorSpec& spec);

}  // namespace lightspan
