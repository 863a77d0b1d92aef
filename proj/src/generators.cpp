#include "ssne/generators.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "ssne/errors.hpp"

namespace ssne {

Graph generate_ba(int n, int m_attach, uint64_t seed) {
  if (m_attach < 1 || n <= m_attach)
    throw ValidationError("generate_ba requires n > m_attach >= 1");
  RngStream rng(mix_seed(seed, 0x6261ULL));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m_attach);
  // endpoint multiset: picking a uniform element is degree-proportional
  std::vector<int> endpoints;
  endpoints.reserve(2 * static_cast<std::size_t>(n) * m_attach);

  for (int u = 0; u <= m_attach; ++u)
    for (int v = u + 1; v <= m_attach; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }

  std::vector<int> chosen;
  for (int u = m_attach + 1; u < n; ++u) {
    chosen.clear();
    while (static_cast<int>(chosen.size()) < m_attach) {
      int w = endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
      chosen.push_back(w);
    }
    for (int w : chosen) {
      edges.emplace_back(w, u);
      endpoints.push_back(w);
      endpoints.push_back(u);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_ws(int n, int k_ring, double p_rewire, uint64_t seed) {
  if (k_ring <= 0 || k_ring % 2 != 0) throw ValidationError("k_ring must be even and > 0");
  if (n <= k_ring) throw ValidationError("generate_ws requires n > k_ring");
  if (p_rewire < 0.0 || p_rewire > 1.0)
    throw ValidationError("p_rewire must be in [0,1]");
  RngStream rng(mix_seed(seed, 0x7773ULL));

  // adjacency sets keep the rewiring draws duplicate-free
  std::vector<std::set<int>> adj(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * k_ring / 2);
  for (int u = 0; u < n; ++u)
    for (int j = 1; j <= k_ring / 2; ++j) {
      int v = (u + j) % n;
      adj[u].insert(v);
      adj[v].insert(u);
      edges.emplace_back(u, v);
    }

  for (auto& [u, v] : edges) {
    if (rng.uniform() >= p_rewire) continue;
    if (static_cast<int>(adj[u].size()) >= n - 1) continue;  // u saturated
    int w;
    do {
      w = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    } while (w == u || adj[u].count(w));
    adj[u].erase(v);
    adj[v].erase(u);
    adj[u].insert(w);
    adj[w].insert(u);
    v = w;
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace ssne
