#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ssne/graph.hpp"
#include "ssne/scoring.hpp"

namespace ssne {

struct AucResult {
  double auc = 0.0;
  long long samples = 0;  // N
  long long wins = 0;     // hidden edge outscored the nonexistent one
  long long ties = 0;     // exact score equality, counted half
  uint64_t seed = 0;
  std::string scorer;
  double elapsed_seconds = 0.0;
};

inline constexpr long long kDefaultAucSamples = 672400;

// Sampled ranking probability: N independent draws of (uniform hidden edge,
// uniform pair absent from train and hidden), comparing scores with exact
// equality as a tie. Per-draw RNG streams derive from the seed, so the
// result is identical for any thread count.
AucResult auc(const Scorer& scorer, const TrainTestSplit& split,
              long long n_samples = kDefaultAucSamples, uint64_t seed = 0);

// Exact mean of the win/tie indicator over every (hidden x nonexistent)
// pair. Refuses (ValidationError) when the pair count exceeds pair_cap.
double exact_auc(const Scorer& scorer, const TrainTestSplit& split,
                 long long pair_cap = 100000000);

struct GridCell {
  int h = 0;
  double p = 0.0;
  double mean_auc = 0.0;
  double sd = 0.0;
  std::vector<double> per_seed;
  std::string error;  // nonempty when the cell failed
};

struct ExperimentGrid {
  std::string dataset;
  std::vector<int> h_list;
  std::vector<double> p_list;
  std::vector<GridCell> cells;  // h-major, p-minor
};

struct GridOptions {
  double fraction = 0.2;
  double shift = 1e-8;
  double alpha = 0.0;
  SvdMethod svd = SvdMethod::kAuto;
  long long n_samples = kDefaultAucSamples;
};

// One split per seed; the co-occurrence accumulator extends across the h
// values and each order is factorized once at the largest requested
// dimension (cells slice leading columns, identical to a direct run on the
// exact path).
ExperimentGrid grid_experiment(const Graph& g, std::vector<int> h_list,
                               std::vector<double> p_list,
                               const std::vector<uint64_t>& seeds,
                               const GridOptions& opts = {},
                               const std::string& dataset = "");

struct CompareRow {
  std::string scorer;
  double mean_auc = 0.0;
  double sd = 0.0;
  std::string params;
  std::vector<double> per_seed;
};

// Paired comparison: every scorer sees the same split and the same sample
// sequence within a seed. Unknown names fail before any computation.
std::vector<CompareRow> compare_methods(const Graph& g,
                                        const std::vector<std::string>& names,
                                        const ScorerParams& params, double fraction,
                                        const std::vector<uint64_t>& seeds,
                                        long long n_samples = kDefaultAucSamples);

}  // namespace ssne
