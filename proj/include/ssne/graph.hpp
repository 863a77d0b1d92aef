#pragma once
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssne/rng.hpp"

namespace ssne {

using Edge = std::pair<int, int>;

// Undirected simple graph over node ids 0..n-1, stored as CSR with sorted
// neighbor lists. Immutable after construction and safe to share across
// threads.
struct Graph {
  int n = 0;
  long long m = 0;
  std::vector<int> offsets;    // size n+1
  std::vector<int> neighbors;  // size 2m, sorted within each node
  // When the graph came from a file with arbitrary ids, original_ids[i] is
  // the id node i had in the input (first-appearance order). Empty means
  // identity.
  std::vector<long long> original_ids;

  std::span<const int> adj(int u) const {
    return {neighbors.data() + offsets[u], neighbors.data() + offsets[u + 1]};
  }
  int degree(int u) const { return offsets[u + 1] - offsets[u]; }
  bool has_edge(int u, int v) const;
  bool complete() const { return m == static_cast<long long>(n) * (n - 1) / 2; }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) collapse to one; self-loops throw ValidationError.
  static Graph from_edges(int n, std::vector<Edge> edges,
                          std::vector<long long> original_ids = {});
};

// Parses "u v" lines; '#' starts a comment line. Arbitrary non-negative ids
// are compacted to 0..n-1 in first-appearance order (the map is kept in
// original_ids). Throws ValidationError on malformed lines (with the line
// number), self-loops, or empty input.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// One "u v" line per edge, using original ids when present.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

struct GraphStats {
  long long n = 0;
  long long m = 0;
  double avg_degree = 0;     // 2m/n
  double edge_sparsity = 0;  // 2m/(n(n-1))
  double avg_distance = 0;   // mean shortest-path hops over reachable pairs
  double clustering = 0;     // mean local clustering coefficient
  double heterogeneity = 0;  // <k^2>/<k>^2
  bool distance_exact = true;
};

// distance_sample acts as both the exact-mode threshold and the number of
// sampled BFS sources beyond it (the sampled estimate is flagged in the
// result). Independent of thread count.
GraphStats graph_stats(const Graph& g, int distance_sample = 10000);

struct TrainTestSplit {
  Graph train;
  std::vector<Edge> hidden_edges;  // test positives
  double fraction = 0;
  uint64_t seed = 0;
  long long requested = 0;  // round(fraction * m)
  bool shortfall() const {
    return static_cast<long long>(hidden_edges.size()) < requested;
  }
};

// Hides round(fraction*m) edges chosen by a seeded uniform shuffle,
// skipping any edge whose removal would drop an endpoint to degree 0.
// Succeeds with fewer hidden edges when the constraint forces it
// (shortfall() reports that). Deterministic given seed.
TrainTestSplit split_train_test(const Graph& g, double fraction, uint64_t seed);

// Uniform node pair with no edge in g, by rejection over ordered pairs.
// Throws ValidationError if g is complete.
Edge sample_nonexistent_edge(const Graph& g, RngStream& rng);

}  // namespace ssne
