#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssne/embedding.hpp"
#include "ssne/graph.hpp"
#include "ssne/matrix.hpp"

namespace ssne {

// Similarity over node pairs; higher means more likely linked. Implementations
// are read-only after construction and safe to score from many threads.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double score(int u, int v) const = 0;
  virtual const std::string& name() const = 0;
  virtual std::string params() const { return ""; }
};

// Local neighborhood indexes; degrees and neighborhoods come from g (the
// training graph). All throw ValidationError on an out-of-range id.
double cn_score(const Graph& g, int u, int v);
double salton_score(const Graph& g, int u, int v);
double jaccard_score(const Graph& g, int u, int v);
double aa_score(const Graph& g, int u, int v);
double ra_score(const Graph& g, int u, int v);
double lhn1_score(const Graph& g, int u, int v);

// Largest adjacency eigenvalue by shifted power iteration (tolerance 1e-10).
double spectral_radius(const Graph& g);

// Path-weighted score matrix: geometric series of adjacency powers with
// damping beta, diagonal excluded. Requires beta < 1/spectral_radius
// (NumericalError otherwise, reporting the estimate).
Matrix katz_matrix(const Graph& g, double beta);

// Stationary restart-walk probabilities: row u holds the distribution of a
// walk restarting at u with probability 1-c. Score(u,v) reads both
// directions. Requires 0 < c < 1.
Matrix rwr_matrix(const Graph& g, double c);

// Degree-discounted resolvent with damping phi scaled by the spectral
// radius; constant prefactors are dropped (rank order is what matters
// downstream). Requires 0 < phi < 1.
Matrix lhn2_matrix(const Graph& g, double phi);

// Fixed-point meeting-probability iteration with decay lambda, identity
// start, the given number of full sweeps. Requires 0 < lambda < 1.
Matrix simrank_matrix(const Graph& g, double lambda, int iterations);

// Embedding similarity: 1 / (1 + Euclidean distance of rows u and v).
double ssne_score(const FeatureMatrix& r, int u, int v);

struct ScorerParams {
  std::optional<double> katz_beta;  // default min(0.01, 0.5/spectral_radius)
  double rwr_c = 0.8;
  double lhn2_phi = 0.9;
  double simrank_lambda = 0.8;
  int simrank_iterations = 5;
  int order = 10;
  EmbedDim dim = EmbedDim::proportion(0.1);
  double shift = 1e-8;
  double alpha = 0.0;
  SvdMethod svd = SvdMethod::kAuto;
  uint64_t seed = 0;
};

const std::vector<std::string>& scorer_names();
bool is_scorer_name(const std::string& name);

// Builds a scorer over the training graph. "ssne" runs the embedding
// pipeline with the parameters above.
std::unique_ptr<Scorer> make_scorer(const std::string& name, const Graph& train,
                                    const ScorerParams& params = {});

// SSNE scorer over a precomputed embedding (e.g. loaded from a dump).
std::unique_ptr<Scorer> make_ssne_scorer(FeatureMatrix features);

}  // namespace ssne
