#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssne/graph.hpp"
#include "ssne/matrix.hpp"
#include "ssne/snham.hpp"

namespace ssne {

// Elementwise log of the shifted co-occurrence matrix; finite everywhere
// for shift > 0.
struct TargetMatrix {
  Matrix values;
  double shift = 1e-8;
};

struct SvdFactors {
  Matrix u;                   // n x d, orthonormal columns
  std::vector<double> sigma;  // d values, descending, nonnegative
  Matrix v;                   // n x d, orthonormal columns
};

struct EmbeddingInfo {
  int order = 10;
  int dim = 0;
  std::optional<double> proportion;  // set when dim came from p * n
  double shift = 1e-8;
  double restart = 0.0;
  uint64_t seed = 0;
};

// Node embeddings: rows of u scaled by the singular values.
struct FeatureMatrix {
  Matrix r;  // n x d
  EmbeddingInfo info;
};

enum class SvdMethod {
  kAuto,       // exact up to kExactSvdMaxN nodes, randomized beyond
  kExact,      // dense full decomposition (LAPACK)
  kRandomized  // seeded subspace iteration, tol 1e-10, 300 sweeps max
};

inline constexpr int kExactSvdMaxN = 6000;

SvdMethod svd_method_from_name(const std::string& name);
std::string svd_method_name(SvdMethod m);

TargetMatrix shifted_log(const SnhamMatrix& s, double shift);
TargetMatrix shifted_log(Matrix values, double shift);  // consumes the matrix

// Top-d singular triplets of w. The exact path computes the full
// decomposition and slices; the randomized path iterates a seeded subspace
// until the singular values settle (NumericalError carries the achieved
// residual if they do not).
SvdFactors truncated_svd(const TargetMatrix& w, int d,
                         SvdMethod method = SvdMethod::kAuto, uint64_t seed = 0);

FeatureMatrix feature_matrix(const SvdFactors& f);

// Either an explicit dimension or a proportion of n (d = round(p*n),
// clamped to [1, n]).
struct EmbedDim {
  static EmbedDim dims(int d) { return {d, std::nullopt}; }
  static EmbedDim proportion(double p) { return {0, p}; }
  int d = 0;
  std::optional<double> p;
  int resolve(int n) const;
};

// Full pipeline: co-occurrence matrix, shifted log, truncated
// decomposition, embedding rows aligned with node ids.
FeatureMatrix embed(const Graph& g, int h, EmbedDim dim, double shift = 1e-8,
                    double alpha = 0.0, uint64_t seed = 0,
                    SvdMethod method = SvdMethod::kAuto);

// Binary dump: magic, n, d, h, shift, seed header + row-major 64-bit floats.
void save_embedding(const FeatureMatrix& f, const std::string& path);
FeatureMatrix load_embedding(const std::string& path);

}  // namespace ssne
