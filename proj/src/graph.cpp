#include "ssne/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ssne/errors.hpp"

namespace ssne {

bool Graph::has_edge(int u, int v) const {
  auto a = adj(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int u = 0; u < n; ++u)
    for (int v : adj(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph Graph::from_edges(int n, std::vector<Edge> edges,
                        std::vector<long long> original_ids) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n = n;
  g.m = static_cast<long long>(edges.size());
  g.original_ids = std::move(original_ids);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) g.offsets[u + 1] = g.offsets[u] + deg[u];
  g.neighbors.resize(static_cast<std::size_t>(2) * g.m);
  std::vector<int> pos(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : edges) {
    g.neighbors[pos[u]++] = v;
    g.neighbors[pos[v]++] = u;
  }
  for (int u = 0; u < n; ++u) {
    auto b = g.neighbors.begin() + g.offsets[u];
    auto e = g.neighbors.begin() + g.offsets[u + 1];
    std::sort(b, e);
  }
  return g;
}

Graph load_edge_list(std::istream& in) {
  std::unordered_map<long long, int> id_of;
  std::vector<long long> original_ids;
  std::vector<Edge> edges;
  std::string line;
  long long line_no = 0;

  auto intern = [&](long long raw) {
    auto [it, inserted] = id_of.try_emplace(raw, static_cast<int>(original_ids.size()));
    if (inserted) original_ids.push_back(raw);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0)
      throw ValidationError("malformed edge at line " + std::to_string(line_no));
    if (a == b) throw ValidationError("self-loop at line " + std::to_string(line_no));
    edges.emplace_back(intern(a), intern(b));
  }
  if (edges.empty()) throw ValidationError("empty edge list");
  return Graph::from_edges(static_cast<int>(original_ids.size()), std::move(edges),
                           std::move(original_ids));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  auto name = [&](int u) -> long long {
    return g.original_ids.empty() ? u : g.original_ids[u];
  };
  for (auto [u, v] : g.edges()) out << name(u) << ' ' << name(v) << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  save_edge_list(g, out);
  if (!out) throw IoError("write failed: " + path);
}

namespace {

// BFS from src; returns (sum of distances to reached nodes, reached count
// excluding src). dist is scratch of size n, reset lazily via the stamp.
std::pair<long long, long long> bfs_distance_sum(const Graph& g, int src,
                                                 std::vector<int>& dist,
                                                 std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  long long sum = 0, reached = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.adj(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      sum += dist[v];
      ++reached;
      queue.push_back(v);
    }
  }
  return {sum, reached};
}

long long triangles_at(const Graph& g, int u) {
  // Counts ordered pairs (v, w) with v,w in adj(u), v adjacent to w, w > v.
  long long t = 0;
  auto nu = g.adj(u);
  for (int v : nu) {
    auto nv = g.adj(v);
    // merge-count common neighbors of u and v that are > v to avoid
    // counting each triangle corner twice
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j])
        ++i;
      else if (nu[i] > nv[j])
        ++j;
      else {
        if (nu[i] > v) ++t;
        ++i;
        ++j;
      }
    }
  }
  return t;
}

}  // namespace

GraphStats graph_stats(const Graph& g, int distance_sample) {
  if (g.n <= 0) throw ValidationError("graph_stats: empty graph");
  GraphStats s;
  s.n = g.n;
  s.m = g.m;
  s.avg_degree = 2.0 * static_cast<double>(g.m) / g.n;
  s.edge_sparsity = g.n > 1
                        ? 2.0 * static_cast<double>(g.m) /
                              (static_cast<double>(g.n) * (g.n - 1))
                        : 0.0;

  double k2 = 0.0;
  for (int u = 0; u < g.n; ++u) {
    double k = g.degree(u);
    k2 += k * k;
  }
  k2 /= g.n;
  s.heterogeneity = s.avg_degree > 0 ? k2 / (s.avg_degree * s.avg_degree) : 0.0;

  // Local clustering: per-node coefficients land in a preallocated array and
  // are reduced serially, so the result does not depend on thread count.
  std::vector<double> local(g.n, 0.0);
#pragma omp parallel for schedule(dynamic, 256)
  for (int u = 0; u < g.n; ++u) {
    long long k = g.degree(u);
    if (k < 2) continue;
    local[u] = 2.0 * static_cast<double>(triangles_at(g, u)) /
               (static_cast<double>(k) * (k - 1));
  }
  double csum = 0.0;
  for (int u = 0; u < g.n; ++u) csum += local[u];
  s.clustering = csum / g.n;

  // Average distance over reachable pairs, exact when n is within the
  // threshold, otherwise estimated from distance_sample random sources.
  s.distance_exact = g.n <= distance_sample;
  std::vector<int> sources;
  if (s.distance_exact) {
    sources.resize(g.n);
    for (int u = 0; u < g.n; ++u) sources[u] = u;
  } else {
    RngStream rng(mix_seed(0x5d157a7a2ce1a531ULL, static_cast<uint64_t>(g.n)));
    sources.resize(distance_sample);
    for (int i = 0; i < distance_sample; ++i)
      sources[i] = static_cast<int>(rng.below(static_cast<uint64_t>(g.n)));
  }
  std::vector<long long> sums(sources.size(), 0), counts(sources.size(), 0);
#pragma omp parallel
  {
    std::vector<int> dist(g.n), queue;
    queue.reserve(g.n);
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(sources.size()); ++i) {
      auto [sum, reached] = bfs_distance_sum(g, sources[i], dist, queue);
      sums[i] = sum;
      counts[i] = reached;
    }
  }
  long long total = 0, pairs = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    total += sums[i];
    pairs += counts[i];
  }
  s.avg_distance = pairs > 0 ? static_cast<double>(total) / pairs : 0.0;
  return s;
}

TrainTestSplit split_train_test(const Graph& g, double fraction, uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw ValidationError("fraction must be in (0,1)");
  for (int u = 0; u < g.n; ++u)
    if (g.degree(u) == 0) throw ValidationError("graph has an isolated node");

  std::vector<Edge> edges = g.edges();
  RngStream rng(mix_seed(seed, 0x73706c6974ULL));
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[rng.below(i)]);

  long long want = std::llround(fraction * static_cast<double>(g.m));
  std::vector<int> deg(g.n);
  for (int u = 0; u < g.n; ++u) deg[u] = g.degree(u);

  TrainTestSplit split;
  split.fraction = fraction;
  split.seed = seed;
  split.requested = want;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (static_cast<long long>(split.hidden_edges.size()) < want && deg[u] >= 2 &&
        deg[v] >= 2) {
      --deg[u];
      --deg[v];
      split.hidden_edges.emplace_back(u, v);
    } else {
      kept.emplace_back(u, v);
    }
  }
  split.train = Graph::from_edges(g.n, std::move(kept), g.original_ids);
  return split;
}

Edge sample_nonexistent_edge(const Graph& g, RngStream& rng) {
  if (g.n < 2 || g.complete())
    throw ValidationError("graph is complete; no nonexistent edge to sample");
  for (long long attempt = 0; attempt < (1LL << 40); ++attempt) {
    int u = static_cast<int>(rng.below(static_cast<uint64_t>(g.n)));
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(g.n)));
    if (u != v && !g.has_edge(u, v)) return {u, v};
  }
  throw NumericalError("nonexistent-edge sampling failed to terminate");
}

}  // namespace ssne
