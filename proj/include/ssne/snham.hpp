#pragma once
#include <cstdint>
#include <string>

#include "ssne/graph.hpp"
#include "ssne/matrix.hpp"

namespace ssne {

// Row-stochastic transition matrix (rows sum to 1 or are all zero).
struct TransitionMatrix {
  Matrix values;
};

// Row-normalized sum of the row-normalized adjacency powers of order 1..h,
// optionally blended toward the first-order matrix by the restart weight.
struct SnhamMatrix {
  Matrix values;
  int order = 1;
  double restart = 0.0;
};

// Divides each nonnegative row by its sum; zero rows pass through.
// Throws ValidationError on a negative entry.
TransitionMatrix row_normalize(const Matrix& m);

// Memory guard for the dense n x n intermediates (bytes). Default allows
// roughly an 8k-node graph; computations above it throw NumericalError
// before allocating.
void set_dense_memory_cap(std::size_t bytes);
std::size_t dense_memory_cap();

// Builds the order-h matrix: powers of the adjacency matrix accumulated
// incrementally, each row-normalized, summed with restart weight alpha
// toward the first-order matrix, and the sum row-normalized.
// Requires h >= 1 and 0 <= alpha <= 1.
SnhamMatrix snham_matrix(const Graph& g, int h, double alpha = 0.0);

// Incremental builder: extends the accumulated sum power by power so a
// sweep over increasing h pays for each order once.
class SnhamAccumulator {
 public:
  SnhamAccumulator(const Graph& g, double alpha);

  // Advances to the given order (must be >= the current order).
  void advance_to(int h);
  int order() const { return order_; }

  // Snapshot at the current order: normalized copy of the running sum.
  SnhamMatrix snapshot() const;

 private:
  const Graph& graph_;
  double alpha_;
  int order_ = 0;
  Matrix power_;       // adjacency power at the current order
  Matrix power_next_;  // ping-pong buffer
  Matrix sum_;         // sum of normalized powers
  Matrix first_;       // normalized first-order matrix, kept when alpha > 0
};

// Binary cache: magic, n, h, alpha header, then row-major 64-bit floats.
void save_snham(const SnhamMatrix& s, const std::string& path);
SnhamMatrix load_snham(const std::string& path);

}  // namespace ssne
