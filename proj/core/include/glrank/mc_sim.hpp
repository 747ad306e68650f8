#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glrank/certify.hpp"
#include "glrank/graph.hpp"
#include "glrank/rank_factor.hpp"

namespace glrank {

/// n x p standard normal data, each draw snapped to its exact binary value; the factor
/// represents S = (1/n) X^T X.
RankFactor sample_covariance(std::size_t p, std::size_t n, std::uint64_t seed);

struct SimConfig {
  std::string graph_id;
  std::string param;  // free-form family parameter recorded in the CSV, e.g. "pe=0.3"
  Graph graph;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  bool pseudo = true;
  bool gaussian = true;
  GaussianOptions gaussian_options;
};

struct SimRow {
  std::string graph;
  std::size_t p = 0;
  std::string param;
  std::size_t n = 0;
  std::string method;  // "pseudo" or "gaussian"
  std::size_t trials = 0;
  double prob = 0.0;    // existence (and uniqueness) frequency among conclusive trials
  double stderr_ = 0.0;  // sqrt(prob (1 - prob) / trials)
  std::size_t inconclusive = 0;
  std::uint64_t seed = 0;
};

struct SimCurve {
  std::vector<SimRow> rows;
  std::uint64_t seed = 0;

  const SimRow* find(std::size_t n, const std::string& method) const;
};

/// For each n and trial, draws one data set and certifies it with every selected method
/// (the same draw for both). Child seeds come from (seed, n, trial), so the result does not
/// depend on the worker schedule. Throws std::invalid_argument for an invalid config.
SimCurve existence_curve(const SimConfig& cfg);

inline constexpr const char* kSimCsvHeader = "graph,p,param,n,method,trials,prob,stderr,inconclusive,seed";
void write_csv(std::ostream& out, const SimCurve& curve, bool header = true);
std::string to_csv(const SimCurve& curve);

/// Rank bounds per graph; chain violations are available through RankBounds::violations().
/// A graph over the invariant budgets yields an empty optional and a note in `errors`.
struct SweepEntry {
  std::optional<RankBounds> bounds;
  std::string error;
};
std::vector<SweepEntry> bound_sweep(const std::vector<Graph>& graphs, std::size_t trials, std::uint64_t seed);

}  // namespace glrank
