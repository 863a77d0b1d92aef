#pragma once
#include <cstdint>

#include "ssne/graph.hpp"

namespace ssne {

// Preferential attachment starting from a clique on m_attach+1 nodes; each
// new node attaches to m_attach distinct existing nodes with probability
// proportional to current degree (duplicate draws are rejected and redrawn).
// Deterministic given seed. Requires n > m_attach >= 1.
Graph generate_ba(int n, int m_attach, uint64_t seed);

// Ring lattice with k_ring/2 neighbors on each side; every lattice edge is
// rewired with probability p_rewire, replacing its far endpoint with a
// uniform non-duplicate, non-self target. <k> stays exactly k_ring.
// Requires k_ring even, 0 <= p_rewire <= 1, n > k_ring.
Graph generate_ws(int n, int k_ring, double p_rewire, uint64_t seed);

}  // namespace ssne
