#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "ssne/embedding.hpp"
#include "ssne/errors.hpp"
#include "ssne/evaluation.hpp"
#include "ssne/generators.hpp"
#include "ssne/graph.hpp"
#include "ssne/io.hpp"
#include "ssne/parallel.hpp"
#include "ssne/scoring.hpp"
#include "ssne/snham.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

void require_input_file(const std::string& path) {
  if (!std::filesystem::exists(path))
    throw ssne::ValidationError("no such file: " + path);
}

std::vector<uint64_t> seed_list(uint64_t base, int count) {
  if (count < 1) throw ssne::ValidationError("--seeds must be >= 1");
  std::vector<uint64_t> seeds(count);
  for (int i = 0; i < count; ++i) seeds[i] = base + static_cast<uint64_t>(i);
  return seeds;
}

std::string join_seeds(const std::vector<uint64_t>& seeds) {
  std::string s;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(seeds[i]);
  }
  return s;
}

ssne::Manifest base_manifest(const std::string& command) {
  ssne::Manifest m;
  m["command"] = command;
  m["version"] = kVersion;
  m["threads"] = std::to_string(ssne::num_threads());
  return m;
}

// Reads hidden edges in the train graph's id space.
std::vector<ssne::Edge> load_hidden_edges(const std::string& path,
                                          const ssne::Graph& train) {
  std::unordered_map<long long, int> compact;
  for (int u = 0; u < train.n; ++u)
    compact[train.original_ids.empty() ? u : train.original_ids[u]] = u;
  std::ifstream in(path);
  if (!in) throw ssne::IoError("cannot open " + path);
  std::vector<ssne::Edge> edges;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    if (!(ls >> a >> b))
      throw ssne::ValidationError(path + ": malformed edge at line " +
                                  std::to_string(line_no));
    auto ia = compact.find(a), ib = compact.find(b);
    if (ia == compact.end() || ib == compact.end())
      throw ssne::ValidationError(path + ": node id not present in training graph (line " +
                                  std::to_string(line_no) + ")");
    edges.emplace_back(ia->second, ib->second);
  }
  if (edges.empty()) throw ssne::ValidationError(path + ": empty edge list");
  return edges;
}

struct SsneFlags {
  int order = 10;
  double proportion = 0.1;
  int dim = 0;  // 0 = use proportion
  double sigma = 1e-8;
  double alpha = 0.0;
  std::string svd = "auto";

  ssne::EmbedDim embed_dim() const {
    return dim > 0 ? ssne::EmbedDim::dims(dim) : ssne::EmbedDim::proportion(proportion);
  }
  void add_to(CLI::App* cmd) {
    cmd->add_option("--order", order, "co-occurrence order h")->capture_default_str();
    cmd->add_option("--proportion", proportion, "embedding dimension as a share of n")
        ->capture_default_str();
    cmd->add_option("--dim", dim, "explicit embedding dimension (overrides --proportion)");
    cmd->add_option("--sigma", sigma, "log shift")->capture_default_str();
    cmd->add_option("--alpha", alpha, "restart weight")->capture_default_str();
    cmd->add_option("--svd", svd, "svd engine: auto|exact|rand")->capture_default_str();
  }
  void record(ssne::Manifest& m) const {
    m["order"] = std::to_string(order);
    if (dim > 0)
      m["dim"] = std::to_string(dim);
    else
      m["proportion"] = ssne::format_fixed(proportion, 6);
    m["sigma"] = ssne::format_fixed(sigma, 12);
    m["alpha"] = ssne::format_fixed(alpha, 6);
    m["svd"] = svd;
  }
};

struct ScorerFlags {
  double katz_beta = -1.0;  // <0 = auto
  double rwr_c = 0.8;
  double lhn2_phi = 0.9;
  double simrank_lambda = 0.8;
  int simrank_iters = 5;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--katz-beta", katz_beta, "katz damping (default 0.5/spectral radius, capped at 0.01)");
    cmd->add_option("--rwr-c", rwr_c, "walk continuation probability")->capture_default_str();
    cmd->add_option("--lhn2-phi", lhn2_phi, "lhn2 damping")->capture_default_str();
    cmd->add_option("--simrank-lambda", simrank_lambda, "simrank decay")->capture_default_str();
    cmd->add_option("--simrank-iters", simrank_iters, "simrank sweeps")->capture_default_str();
  }
  void record(ssne::Manifest& m) const {
    m["katz_beta"] = katz_beta < 0 ? "auto" : ssne::format_fixed(katz_beta, 6);
    m["rwr_c"] = ssne::format_fixed(rwr_c, 6);
    m["lhn2_phi"] = ssne::format_fixed(lhn2_phi, 6);
    m["simrank_lambda"] = ssne::format_fixed(simrank_lambda, 6);
    m["simrank_iters"] = std::to_string(simrank_iters);
  }
  void apply(ssne::ScorerParams& p) const {
    if (katz_beta >= 0) p.katz_beta = katz_beta;
    p.rwr_c = rwr_c;
    p.lhn2_phi = lhn2_phi;
    p.simrank_lambda = simrank_lambda;
    p.simrank_iterations = simrank_iters;
  }
};

void print_stats(const ssne::GraphStats& s) {
  std::printf("n=%lld m=%lld <k>=%s ES=%s <d>=%s%s C=%s H=%s\n", s.n, s.m,
              ssne::format_fixed(s.avg_degree).c_str(),
              ssne::format_fixed(s.edge_sparsity).c_str(),
              ssne::format_fixed(s.avg_distance).c_str(),
              s.distance_exact ? "" : " (sampled)",
              ssne::format_fixed(s.clustering).c_str(),
              ssne::format_fixed(s.heterogeneity).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link prediction over sparse graphs: embedding pipeline, "
               "structural baselines, and a sampled-AUC harness"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");

  // ---- stats ----
  auto* c_stats = app.add_subcommand("stats", "descriptive statistics of an edge list");
  std::string stats_graph, stats_out;
  int distance_sample = 10000;
  c_stats->add_option("graph", stats_graph, "edge list file")->required();
  c_stats->add_option("--distance-sample", distance_sample,
                      "exact-distance threshold / BFS sample size")
      ->capture_default_str();
  c_stats->add_option("--out", stats_out, "CSV output path");
  c_stats->callback([&] {
    require_input_file(stats_graph);
    ssne::Graph g = ssne::load_edge_list_file(stats_graph);
    ssne::GraphStats s = ssne::graph_stats(g, distance_sample);
    print_stats(s);
    if (!stats_out.empty()) {
      ssne::write_stats_csv(s, stats_out);
      auto m = base_manifest("stats");
      m["input"] = stats_graph;
      m["input.digest"] = ssne::file_digest(stats_graph);
      m["distance_sample"] = std::to_string(distance_sample);
      m["out"] = stats_out;
      ssne::write_manifest(m, stats_out + ".manifest");
    }
  });

  // ---- generate ----
  auto* c_gen = app.add_subcommand("generate", "synthetic network generators");
  std::string gen_model, gen_out;
  int gen_n = 1000, gen_m_attach = 1, gen_ring_k = 2;
  double gen_p_rewire = 0.1;
  uint64_t gen_seed = 0;
  c_gen->add_option("model", gen_model, "ba | ws")->required();
  c_gen->add_option("--nodes", gen_n, "node count")->required();
  c_gen->add_option("--m-attach", gen_m_attach, "edges per new node (ba)")
      ->capture_default_str();
  c_gen->add_option("--ring-k", gen_ring_k, "even ring degree (ws)")->capture_default_str();
  c_gen->add_option("--p-rewire", gen_p_rewire, "rewiring probability (ws)")
      ->capture_default_str();
  c_gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  c_gen->add_option("--out", gen_out, "edge list output path")->required();
  c_gen->callback([&] {
    ssne::Graph g;
    auto m = base_manifest("generate");
    if (gen_model == "ba") {
      g = ssne::generate_ba(gen_n, gen_m_attach, gen_seed);
      m["m_attach"] = std::to_string(gen_m_attach);
    } else if (gen_model == "ws") {
      g = ssne::generate_ws(gen_n, gen_ring_k, gen_p_rewire, gen_seed);
      m["ring_k"] = std::to_string(gen_ring_k);
      m["p_rewire"] = ssne::format_fixed(gen_p_rewire, 6);
    } else {
      throw ssne::ValidationError("unknown model: " + gen_model + " (expected ba or ws)");
    }
    ssne::save_edge_list_file(g, gen_out);
    m["model"] = gen_model;
    m["nodes"] = std::to_string(gen_n);
    m["seed"] = std::to_string(gen_seed);
    m["out"] = gen_out;
    m["out.digest"] = ssne::file_digest(gen_out);
    ssne::write_manifest(m, gen_out + ".manifest");
    std::printf("wrote %s: n=%d m=%lld\n", gen_out.c_str(), g.n, g.m);
  });

  // ---- split ----
  auto* c_split = app.add_subcommand("split", "hide a fraction of edges for evaluation");
  std::string split_graph, split_prefix;
  double split_fraction = 0.2;
  uint64_t split_seed = 0;
  c_split->add_option("graph", split_graph, "edge list file")->required();
  c_split->add_option("--fraction", split_fraction, "share of edges to hide")
      ->capture_default_str();
  c_split->add_option("--seed", split_seed, "shuffle seed")->capture_default_str();
  c_split->add_option("--out-prefix", split_prefix, "output prefix")->required();
  c_split->callback([&] {
    require_input_file(split_graph);
    ssne::Graph g = ssne::load_edge_list_file(split_graph);
    ssne::TrainTestSplit split = ssne::split_train_test(g, split_fraction, split_seed);
    ssne::write_split(split, split_prefix);
    auto m = base_manifest("split");
    m["input"] = split_graph;
    m["input.digest"] = ssne::file_digest(split_graph);
    m["fraction"] = ssne::format_fixed(split_fraction, 6);
    m["seed"] = std::to_string(split_seed);
    m["out_prefix"] = split_prefix;
    ssne::write_manifest(m, split_prefix + ".manifest");
    std::printf("hidden %zu/%lld edges%s -> %s.{train,test}.edges\n",
                split.hidden_edges.size(), split.requested,
                split.shortfall() ? " (shortfall)" : "", split_prefix.c_str());
  });

  // ---- embed ----
  auto* c_embed = app.add_subcommand("embed", "compute node embeddings for a graph");
  std::string embed_graph, embed_out, snham_in, snham_out;
  SsneFlags embed_flags;
  uint64_t embed_seed = 0;
  c_embed->add_option("graph", embed_graph, "training edge list")->required();
  embed_flags.add_to(c_embed);
  c_embed->add_option("--seed", embed_seed, "seed (randomized svd)")->capture_default_str();
  c_embed->add_option("--out", embed_out, "embedding output path")->required();
  c_embed->add_option("--snham-in", snham_in, "reuse a cached co-occurrence matrix");
  c_embed->add_option("--snham-out", snham_out, "cache the co-occurrence matrix");
  c_embed->callback([&] {
    require_input_file(embed_graph);
    ssne::Graph g = ssne::load_edge_list_file(embed_graph);
    ssne::SvdMethod method = ssne::svd_method_from_name(embed_flags.svd);
    ssne::FeatureMatrix features;
    if (!snham_in.empty()) {
      require_input_file(snham_in);
      ssne::SnhamMatrix s = ssne::load_snham(snham_in);
      if (s.order != embed_flags.order || s.restart != embed_flags.alpha ||
          s.values.rows != static_cast<std::size_t>(g.n))
        throw ssne::ValidationError(snham_in + ": cached matrix does not match the "
                                    "requested order/alpha/graph");
      int d = embed_flags.embed_dim().resolve(g.n);
      ssne::TargetMatrix w = ssne::shifted_log(std::move(s.values), embed_flags.sigma);
      ssne::SvdFactors f = ssne::truncated_svd(w, d, method, embed_seed);
      features = ssne::feature_matrix(f);
      features.info.order = embed_flags.order;
      features.info.shift = embed_flags.sigma;
      features.info.restart = embed_flags.alpha;
      features.info.seed = embed_seed;
    } else {
      if (!snham_out.empty()) {
        ssne::SnhamMatrix s =
            ssne::snham_matrix(g, embed_flags.order, embed_flags.alpha);
        ssne::save_snham(s, snham_out);
        int d = embed_flags.embed_dim().resolve(g.n);
        ssne::TargetMatrix w = ssne::shifted_log(std::move(s.values), embed_flags.sigma);
        ssne::SvdFactors f = ssne::truncated_svd(w, d, method, embed_seed);
        features = ssne::feature_matrix(f);
        features.info.order = embed_flags.order;
        features.info.shift = embed_flags.sigma;
        features.info.restart = embed_flags.alpha;
        features.info.seed = embed_seed;
      } else {
        features = ssne::embed(g, embed_flags.order, embed_flags.embed_dim(),
                               embed_flags.sigma, embed_flags.alpha, embed_seed, method);
      }
    }
    ssne::save_embedding(features, embed_out);
    auto m = base_manifest("embed");
    m["input"] = embed_graph;
    m["input.digest"] = ssne::file_digest(embed_graph);
    embed_flags.record(m);
    m["seed"] = std::to_string(embed_seed);
    m["out"] = embed_out;
    ssne::write_manifest(m, embed_out + ".manifest");
    std::printf("embedded %d nodes into %d dimensions -> %s\n", g.n, features.info.dim,
                embed_out.c_str());
  });

  // ---- eval ----
  auto* c_eval = app.add_subcommand("eval", "AUC of one scorer on a train/test split");
  std::string eval_train, eval_test, eval_scorer = "ssne", eval_embedding, eval_out;
  long long eval_samples = ssne::kDefaultAucSamples;
  uint64_t eval_seed = 0;
  SsneFlags eval_ssne;
  ScorerFlags eval_params;
  c_eval->add_option("--train", eval_train, "training edge list")->required();
  c_eval->add_option("--test", eval_test, "hidden (test) edge list")->required();
  c_eval->add_option("--scorer", eval_scorer, "scorer name")->capture_default_str();
  c_eval->add_option("--embedding", eval_embedding, "precomputed embedding for ssne");
  eval_ssne.add_to(c_eval);
  eval_params.add_to(c_eval);
  c_eval->add_option("--samples", eval_samples, "AUC sample count")->capture_default_str();
  c_eval->add_option("--seed", eval_seed, "sampling seed")->capture_default_str();
  c_eval->add_option("--out", eval_out, "CSV output path");
  c_eval->callback([&] {
    require_input_file(eval_train);
    require_input_file(eval_test);
    if (!ssne::is_scorer_name(eval_scorer))
      throw ssne::ValidationError("unknown scorer: " + eval_scorer);
    ssne::TrainTestSplit split;
    split.train = ssne::load_edge_list_file(eval_train);
    split.hidden_edges = load_hidden_edges(eval_test, split.train);
    split.seed = eval_seed;

    std::unique_ptr<ssne::Scorer> scorer;
    if (eval_scorer == "ssne" && !eval_embedding.empty()) {
      require_input_file(eval_embedding);
      ssne::FeatureMatrix f = ssne::load_embedding(eval_embedding);
      if (f.r.rows != static_cast<std::size_t>(split.train.n))
        throw ssne::ValidationError(eval_embedding + ": embedding rows do not match "
                                    "the training graph");
      scorer = ssne::make_ssne_scorer(std::move(f));
    } else {
      ssne::ScorerParams p;
      eval_params.apply(p);
      p.order = eval_ssne.order;
      p.dim = eval_ssne.embed_dim();
      p.shift = eval_ssne.sigma;
      p.alpha = eval_ssne.alpha;
      p.svd = ssne::svd_method_from_name(eval_ssne.svd);
      p.seed = eval_seed;
      scorer = ssne::make_scorer(eval_scorer, split.train, p);
    }
    ssne::AucResult r = ssne::auc(*scorer, split, eval_samples, eval_seed);
    std::printf("%s auc=%s wins=%lld ties=%lld N=%lld seed=%llu (%.1fs)\n",
                r.scorer.c_str(), ssne::format_fixed(r.auc).c_str(), r.wins, r.ties,
                r.samples, static_cast<unsigned long long>(r.seed), r.elapsed_seconds);
    if (!eval_out.empty()) {
      std::ofstream out(eval_out);
      if (!out) throw ssne::IoError("cannot write " + eval_out);
      out << "scorer,auc,wins,ties,samples,seed\n";
      out << r.scorer << ',' << ssne::format_fixed(r.auc) << ',' << r.wins << ','
          << r.ties << ',' << r.samples << ',' << r.seed << '\n';
      auto m = base_manifest("eval");
      m["train"] = eval_train;
      m["train.digest"] = ssne::file_digest(eval_train);
      m["test"] = eval_test;
      m["test.digest"] = ssne::file_digest(eval_test);
      m["scorer"] = eval_scorer;
      if (!eval_embedding.empty()) m["embedding"] = eval_embedding;
      eval_ssne.record(m);
      eval_params.record(m);
      m["samples"] = std::to_string(eval_samples);
      m["seed"] = std::to_string(eval_seed);
      m["out"] = eval_out;
      ssne::write_manifest(m, eval_out + ".manifest");
    }
  });

  // ---- compare ----
  auto* c_cmp = app.add_subcommand("compare", "paired AUC comparison of several scorers");
  std::string cmp_graph, cmp_out;
  std::vector<std::string> cmp_scorers;
  double cmp_fraction = 0.2;
  int cmp_seeds = 5;
  uint64_t cmp_seed = 1;
  long long cmp_samples = ssne::kDefaultAucSamples;
  SsneFlags cmp_ssne;
  ScorerFlags cmp_params;
  c_cmp->add_option("graph", cmp_graph, "edge list file")->required();
  c_cmp->add_option("--scorers", cmp_scorers, "comma-separated scorer names")
      ->delimiter(',')
      ->required();
  c_cmp->add_option("--fraction", cmp_fraction, "share of edges to hide")
      ->capture_default_str();
  c_cmp->add_option("--seeds", cmp_seeds, "number of independent runs")
      ->capture_default_str();
  c_cmp->add_option("--seed", cmp_seed, "base seed (run i uses seed+i)")
      ->capture_default_str();
  c_cmp->add_option("--samples", cmp_samples, "AUC sample count")->capture_default_str();
  cmp_ssne.add_to(c_cmp);
  cmp_params.add_to(c_cmp);
  c_cmp->add_option("--out", cmp_out, "CSV output path")->required();
  c_cmp->callback([&] {
    require_input_file(cmp_graph);
    ssne::Graph g = ssne::load_edge_list_file(cmp_graph);
    ssne::ScorerParams p;
    cmp_params.apply(p);
    p.order = cmp_ssne.order;
    p.dim = cmp_ssne.embed_dim();
    p.shift = cmp_ssne.sigma;
    p.alpha = cmp_ssne.alpha;
    p.svd = ssne::svd_method_from_name(cmp_ssne.svd);
    auto seeds = seed_list(cmp_seed, cmp_seeds);
    auto rows = ssne::compare_methods(g, cmp_scorers, p, cmp_fraction, seeds, cmp_samples);
    ssne::write_compare_csv(rows, cmp_out);
    for (const auto& r : rows)
      std::printf("%-8s mean_auc=%s sd=%s %s\n", r.scorer.c_str(),
                  ssne::format_fixed(r.mean_auc).c_str(), ssne::format_fixed(r.sd).c_str(),
                  r.params.c_str());
    auto m = base_manifest("compare");
    m["input"] = cmp_graph;
    m["input.digest"] = ssne::file_digest(cmp_graph);
    std::string names;
    for (std::size_t i = 0; i < cmp_scorers.size(); ++i)
      names += (i ? "," : "") + cmp_scorers[i];
    m["scorers"] = names;
    m["fraction"] = ssne::format_fixed(cmp_fraction, 6);
    m["seeds"] = join_seeds(seeds);
    m["samples"] = std::to_string(cmp_samples);
    cmp_ssne.record(m);
    cmp_params.record(m);
    m["out"] = cmp_out;
    ssne::write_manifest(m, cmp_out + ".manifest");
  });

  // ---- grid ----
  auto* c_grid = app.add_subcommand("grid", "AUC across order/proportion combinations");
  std::string grid_graph, grid_out;
  std::vector<int> grid_orders;
  std::vector<double> grid_props;
  double grid_fraction = 0.2, grid_sigma = 1e-8, grid_alpha = 0.0;
  std::string grid_svd = "auto";
  int grid_seeds = 5;
  uint64_t grid_seed = 1;
  long long grid_samples = ssne::kDefaultAucSamples;
  c_grid->add_option("graph", grid_graph, "edge list file")->required();
  c_grid->add_option("--orders", grid_orders, "comma-separated h values")
      ->delimiter(',')
      ->required();
  c_grid->add_option("--proportions", grid_props, "comma-separated p values")
      ->delimiter(',')
      ->required();
  c_grid->add_option("--fraction", grid_fraction, "share of edges to hide")
      ->capture_default_str();
  c_grid->add_option("--sigma", grid_sigma, "log shift")->capture_default_str();
  c_grid->add_option("--alpha", grid_alpha, "restart weight")->capture_default_str();
  c_grid->add_option("--svd", grid_svd, "svd engine: auto|exact|rand")
      ->capture_default_str();
  c_grid->add_option("--seeds", grid_seeds, "number of independent runs")
      ->capture_default_str();
  c_grid->add_option("--seed", grid_seed, "base seed (run i uses seed+i)")
      ->capture_default_str();
  c_grid->add_option("--samples", grid_samples, "AUC sample count")->capture_default_str();
  c_grid->add_option("--out", grid_out, "CSV output path")->required();
  c_grid->callback([&] {
    require_input_file(grid_graph);
    ssne::Graph g = ssne::load_edge_list_file(grid_graph);
    ssne::GridOptions opts;
    opts.fraction = grid_fraction;
    opts.shift = grid_sigma;
    opts.alpha = grid_alpha;
    opts.svd = ssne::svd_method_from_name(grid_svd);
    opts.n_samples = grid_samples;
    auto seeds = seed_list(grid_seed, grid_seeds);
    auto grid = ssne::grid_experiment(g, grid_orders, grid_props, seeds, opts, grid_graph);
    ssne::write_grid_csv(grid, grid_out);
    for (const auto& c : grid.cells)
      std::printf("h=%-3d p=%s mean_auc=%s sd=%s%s%s\n", c.h,
                  ssne::format_fixed(c.p, 2).c_str(),
                  ssne::format_fixed(c.mean_auc).c_str(), ssne::format_fixed(c.sd).c_str(),
                  c.error.empty() ? "" : " error=", c.error.c_str());
    auto m = base_manifest("grid");
    m["input"] = grid_graph;
    m["input.digest"] = ssne::file_digest(grid_graph);
    std::string hs, ps;
    for (std::size_t i = 0; i < grid.h_list.size(); ++i)
      hs += (i ? "," : "") + std::to_string(grid.h_list[i]);
    for (std::size_t i = 0; i < grid.p_list.size(); ++i)
      ps += (i ? "," : "") + ssne::format_fixed(grid.p_list[i], 6);
    m["orders"] = hs;
    m["proportions"] = ps;
    m["fraction"] = ssne::format_fixed(grid_fraction, 6);
    m["sigma"] = ssne::format_fixed(grid_sigma, 12);
    m["alpha"] = ssne::format_fixed(grid_alpha, 6);
    m["svd"] = grid_svd;
    m["seeds"] = join_seeds(seeds);
    m["samples"] = std::to_string(grid_samples);
    m["out"] = grid_out;
    ssne::write_manifest(m, grid_out + ".manifest");
  });

  // Thread budget must be in place before any kernel or BLAS call, and
  // subcommand callbacks run inside parse(), so scan argv directly.
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string value;
    if (arg == "--threads" && i + 1 < argc)
      value = argv[i + 1];
    else if (arg.rfind("--threads=", 0) == 0)
      value = arg.substr(10);
    if (!value.empty()) {
      ssne::set_num_threads(std::atoi(value.c_str()));
      setenv("OPENBLAS_NUM_THREADS", value.c_str(), 1);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ssne::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ssne::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const ssne::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
