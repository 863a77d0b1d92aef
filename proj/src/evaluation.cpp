#include "ssne/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ssne/errors.hpp"
#include "ssne/snham.hpp"

namespace ssne {

namespace {

Graph original_graph(const TrainTestSplit& split) {
  std::vector<Edge> edges = split.train.edges();
  edges.insert(edges.end(), split.hidden_edges.begin(), split.hidden_edges.end());
  return Graph::from_edges(split.train.n, std::move(edges), split.train.original_ids);
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

AucResult auc(const Scorer& scorer, const TrainTestSplit& split, long long n_samples,
              uint64_t seed) {
  if (split.hidden_edges.empty()) throw ValidationError("auc: split has no hidden edges");
  if (n_samples < 1) throw ValidationError("auc: sample count must be >= 1");
  Graph original = original_graph(split);
  if (original.complete()) throw ValidationError("auc: original graph is complete");

  const auto& hidden = split.hidden_edges;
  const uint64_t h_count = hidden.size();
  auto t0 = std::chrono::steady_clock::now();

  long long wins = 0, ties = 0;
#pragma omp parallel for schedule(static) reduction(+ : wins, ties)
  for (long long i = 0; i < n_samples; ++i) {
    RngStream rng = substream(seed, static_cast<uint64_t>(i));
    auto [hu, hv] = hidden[rng.below(h_count)];
    auto [nu, nv] = sample_nonexistent_edge(original, rng);
    double sh = scorer.score(hu, hv);
    double sn = scorer.score(nu, nv);
    if (sh > sn)
      ++wins;
    else if (sh == sn)
      ++ties;
  }

  AucResult r;
  r.samples = n_samples;
  r.wins = wins;
  r.ties = ties;
  r.auc = (static_cast<double>(wins) + 0.5 * static_cast<double>(ties)) /
          static_cast<double>(n_samples);
  r.seed = seed;
  r.scorer = scorer.name();
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

double exact_auc(const Scorer& scorer, const TrainTestSplit& split, long long pair_cap) {
  if (split.hidden_edges.empty())
    throw ValidationError("exact_auc: split has no hidden edges");
  Graph original = original_graph(split);
  long long total_pairs = static_cast<long long>(original.n) * (original.n - 1) / 2;
  long long q = total_pairs - original.m;
  long long p = static_cast<long long>(split.hidden_edges.size());
  if (q <= 0) throw ValidationError("exact_auc: original graph is complete");
  if (p * q > pair_cap)
    throw ValidationError(
        "exact_auc: " + std::to_string(p * q) + " pairs exceed the cap; use the sampled "
        "estimator (N ~= " + std::to_string(std::min<long long>(p * q, 1000000)) + ")");

  std::vector<double> neg;
  neg.reserve(static_cast<std::size_t>(q));
  for (int u = 0; u < original.n; ++u)
    for (int v = u + 1; v < original.n; ++v)
      if (!original.has_edge(u, v)) neg.push_back(scorer.score(u, v));
  std::sort(neg.begin(), neg.end());

  long long wins = 0, ties = 0;
  for (auto [u, v] : split.hidden_edges) {
    double s = scorer.score(u, v);
    wins += std::lower_bound(neg.begin(), neg.end(), s) - neg.begin();
    auto [lo, hi] = std::equal_range(neg.begin(), neg.end(), s);
    ties += hi - lo;
  }
  return (static_cast<double>(wins) + 0.5 * static_cast<double>(ties)) /
         (static_cast<double>(p) * static_cast<double>(q));
}

ExperimentGrid grid_experiment(const Graph& g, std::vector<int> h_list,
                               std::vector<double> p_list,
                               const std::vector<uint64_t>& seeds,
                               const GridOptions& opts, const std::string& dataset) {
  if (h_list.empty() || p_list.empty())
    throw ValidationError("grid: order and proportion lists must be nonempty");
  if (seeds.empty()) throw ValidationError("grid: at least one seed required");
  std::sort(h_list.begin(), h_list.end());
  h_list.erase(std::unique(h_list.begin(), h_list.end()), h_list.end());
  std::sort(p_list.begin(), p_list.end());
  p_list.erase(std::unique(p_list.begin(), p_list.end()), p_list.end());
  if (h_list.front() < 1) throw ValidationError("grid: order must be >= 1");

  ExperimentGrid grid;
  grid.dataset = dataset;
  grid.h_list = h_list;
  grid.p_list = p_list;
  grid.cells.resize(h_list.size() * p_list.size());
  for (std::size_t hi = 0; hi < h_list.size(); ++hi)
    for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
      auto& cell = grid.cells[hi * p_list.size() + pi];
      cell.h = h_list[hi];
      cell.p = p_list[pi];
    }

  int d_max = EmbedDim::proportion(p_list.back()).resolve(g.n);

  for (uint64_t seed : seeds) {
    TrainTestSplit split = split_train_test(g, opts.fraction, seed);
    SnhamAccumulator acc(split.train, opts.alpha);
    for (std::size_t hi = 0; hi < h_list.size(); ++hi) {
      FeatureMatrix features;
      std::string h_error;
      try {
        acc.advance_to(h_list[hi]);
        SnhamMatrix s = acc.snapshot();
        TargetMatrix w = shifted_log(std::move(s.values), opts.shift);
        SvdFactors f = truncated_svd(w, d_max, opts.svd, seed);
        features = feature_matrix(f);
        features.info.order = h_list[hi];
        features.info.shift = opts.shift;
        features.info.restart = opts.alpha;
        features.info.seed = seed;
      } catch (const std::exception& e) {
        h_error = e.what();
      }
      for (std::size_t pi = 0; pi < p_list.size(); ++pi) {
        auto& cell = grid.cells[hi * p_list.size() + pi];
        if (!h_error.empty()) {
          cell.error = h_error;
          continue;
        }
        try {
          int d = EmbedDim::proportion(p_list[pi]).resolve(g.n);
          FeatureMatrix sliced;
          sliced.info = features.info;
          sliced.info.dim = d;
          sliced.info.proportion = p_list[pi];
          sliced.r = Matrix(features.r.rows, d);
          for (std::size_t row = 0; row < features.r.rows; ++row)
            for (int j = 0; j < d; ++j) sliced.r(row, j) = features.r(row, j);
          auto scorer = make_ssne_scorer(std::move(sliced));
          cell.per_seed.push_back(auc(*scorer, split, opts.n_samples, seed).auc);
        } catch (const std::exception& e) {
          cell.error = e.what();
        }
      }
    }
  }

  for (auto& cell : grid.cells) {
    cell.mean_auc = mean_of(cell.per_seed);
    cell.sd = sample_sd(cell.per_seed);
  }
  return grid;
}

std::vector<CompareRow> compare_methods(const Graph& g,
                                        const std::vector<std::string>& names,
                                        const ScorerParams& params, double fraction,
                                        const std::vector<uint64_t>& seeds,
                                        long long n_samples) {
  for (const auto& name : names)
    if (!is_scorer_name(name)) throw ValidationError("unknown scorer: " + name);
  if (names.empty()) throw ValidationError("compare: no scorers given");
  if (seeds.empty()) throw ValidationError("compare: at least one seed required");

  std::vector<CompareRow> rows(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) rows[i].scorer = names[i];

  for (uint64_t seed : seeds) {
    TrainTestSplit split = split_train_test(g, fraction, seed);
    for (std::size_t i = 0; i < names.size(); ++i) {
      ScorerParams p = params;
      p.seed = seed;
      auto scorer = make_scorer(names[i], split.train, p);
      rows[i].per_seed.push_back(auc(*scorer, split, n_samples, seed).auc);
      if (rows[i].params.empty()) rows[i].params = scorer->params();
    }
  }
  for (auto& row : rows) {
    row.mean_auc = mean_of(row.per_seed);
    row.sd = sample_sd(row.per_seed);
  }
  return rows;
}

}  // namespace ssne
