#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ssne/errors.hpp"
#include "ssne/generators.hpp"
#include "ssne/scoring.hpp"
#include "oracles.hpp"

using namespace ssne;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph single_edge() { return Graph::from_edges(2, {{0, 1}}); }
Graph cycle4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_CASE("local indexes on the 4-cycle opposite corners") {
  Graph g = cycle4();
  CHECK(cn_score(g, 0, 2) == 2.0);
  CHECK(jaccard_score(g, 0, 2) == doctest::Approx(1.0));
  CHECK(ra_score(g, 0, 2) == doctest::Approx(1.0));
  CHECK(salton_score(g, 0, 2) == doctest::Approx(1.0));
}

TEST_CASE("local indexes on the 3-path endpoints") {
  Graph g = path3();
  CHECK(cn_score(g, 0, 2) == 1.0);
  CHECK(aa_score(g, 0, 2) == doctest::Approx(1.0 / std::log(2.0)));
  CHECK(lhn1_score(g, 0, 2) == doctest::Approx(1.0));
  CHECK(ra_score(g, 0, 2) == doctest::Approx(0.5));
}

TEST_CASE("no common neighbor means every local index is zero") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(cn_score(g, 0, 2) == 0.0);
  CHECK(salton_score(g, 0, 2) == 0.0);
  CHECK(jaccard_score(g, 0, 2) == 0.0);
  CHECK(aa_score(g, 0, 2) == 0.0);
  CHECK(ra_score(g, 0, 2) == 0.0);
  CHECK(lhn1_score(g, 0, 2) == 0.0);
}

TEST_CASE("out-of-range ids are rejected") {
  Graph g = path3();
  CHECK_THROWS_AS(cn_score(g, 0, 3), ValidationError);
  CHECK_THROWS_AS(aa_score(g, -1, 1), ValidationError);
}

TEST_CASE("local indexes match the set-based oracle on random graphs") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::random_graph(50, 150, seed);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) {
        auto common = oracle::common_neighbors(g, u, v);
        CHECK(cn_score(g, u, v) == static_cast<double>(common.size()));
        double aa = 0.0, ra = 0.0;
        for (int z : common) {
          aa += 1.0 / std::log(static_cast<double>(g.degree(z)));
          ra += 1.0 / g.degree(z);
        }
        CHECK(aa_score(g, u, v) == doctest::Approx(aa).epsilon(1e-12));
        CHECK(ra_score(g, u, v) == doctest::Approx(ra).epsilon(1e-12));
        auto su = oracle::neighbor_set(g, u), sv = oracle::neighbor_set(g, v);
        std::set<int> uni = su;
        uni.insert(sv.begin(), sv.end());
        double jac = uni.empty() ? 0.0 : static_cast<double>(common.size()) / uni.size();
        CHECK(jaccard_score(g, u, v) == doctest::Approx(jac).epsilon(1e-12));
      }
  }
}

TEST_CASE("spectral radius: single edge and star") {
  CHECK(spectral_radius(single_edge()) == doctest::Approx(1.0).epsilon(1e-8));
  // star with L leaves has radius sqrt(L)
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(spectral_radius(star) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("katz on a single edge follows the geometric series") {
  Matrix s = katz_matrix(single_edge(), 0.5);
  CHECK(s(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(s(0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));  // even-length walks
}

TEST_CASE("katz at small damping is first-order the adjacency") {
  Graph g = oracle::random_graph(15, 30, 2);
  const double beta = 1e-7;
  Matrix s = katz_matrix(g, beta);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      double a = g.has_edge(u, v) ? 1.0 : 0.0;
      CHECK(s(u, v) / beta == doctest::Approx(a).epsilon(1e-4).scale(1.0));
    }
}

TEST_CASE("katz rejects a divergent damping") {
  CHECK_THROWS_AS(katz_matrix(single_edge(), 1.0), NumericalError);
  CHECK_THROWS_WITH_AS(katz_matrix(cycle4(), 0.5), doctest::Contains("lambda_max"),
                       NumericalError);
}

TEST_CASE("katz matches the explicit resolvent for n<=30") {
  for (uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = oracle::random_graph(20, 50, seed);
    double beta = 0.5 / spectral_radius(g);
    Matrix got = katz_matrix(g, beta);
    // (I - beta A)^-1 - I via Gauss-Jordan
    Matrix m(g.n, g.n);
    for (int u = 0; u < g.n; ++u) {
      m(u, u) = 1.0;
      for (int v : g.adj(u)) m(u, v) = -beta;
    }
    Matrix inv = oracle::dense_inverse(m);
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        double expected = inv(u, v) - (u == v ? 1.0 : 0.0);
        CHECK(std::abs(got(u, v) - expected) <= 1e-8);
      }
  }
}

TEST_CASE("walk matrix on a single edge has the closed form") {
  Matrix pi = rwr_matrix(single_edge(), 0.8);
  // restart mass (1-c) c / (1-c^2) on the neighbor
  CHECK(pi(0, 1) == doctest::Approx(0.2 * 0.8 / (1.0 - 0.64)).epsilon(1e-12));
  auto scorer = make_scorer("rwr", single_edge());
  CHECK(scorer->score(0, 1) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("walk matrix rows are distributions") {
  Graph g = oracle::random_graph(25, 60, 7);
  Matrix pi = rwr_matrix(g, 0.8);
  for (int u = 0; u < g.n; ++u) {
    double sum = 0.0;
    for (int v = 0; v < g.n; ++v) sum += pi(u, v);
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("small continuation keeps the walker home") {
  Graph g = path3();
  Matrix pi = rwr_matrix(g, 1e-6);
  CHECK(pi(0, 0) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(pi(0, 2) <= 1e-9);
  CHECK_THROWS_AS(rwr_matrix(g, 0.0), ValidationError);
  CHECK_THROWS_AS(rwr_matrix(g, 1.0), ValidationError);
}

TEST_CASE("walk matrix matches the dense solve for n<=30") {
  for (uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = oracle::random_graph(18, 40, seed);
    const double c = 0.8;
    Matrix pi = rwr_matrix(g, c);
    // rows of pi solve pi_u = (1-c)(I - c S1^T)^-1 e_u
    Matrix m(g.n, g.n);
    for (int j = 0; j < g.n; ++j) {
      m(j, j) = 1.0;
      for (int w : g.adj(j)) m(j, w) -= c / g.degree(w);
    }
    Matrix inv = oracle::dense_inverse(m);
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v)
        CHECK(std::abs(pi(u, v) - (1.0 - c) * inv(v, u)) <= 1e-8);
  }
}

TEST_CASE("degree-discounted resolvent: closed form on a single edge") {
  // lambda = 1, phi = 0.5: resolvent of [[1,-.5],[-.5,1]] scaled by D^-1 twice
  Matrix s = lhn2_matrix(single_edge(), 0.5);
  CHECK(s(0, 1) == doctest::Approx((2.0 / 3.0)).epsilon(1e-9));
  CHECK(s(0, 0) == doctest::Approx((4.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("degree-discounted resolvent matches the dense solve for n<=30") {
  for (uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = oracle::random_graph(16, 36, seed + 10);
    const double phi = 0.9;
    double lambda = spectral_radius(g);
    Matrix got = lhn2_matrix(g, phi);
    Matrix m(g.n, g.n);
    for (int u = 0; u < g.n; ++u) {
      m(u, u) = 1.0;
      for (int v : g.adj(u)) m(u, v) = -phi / lambda;
    }
    Matrix inv = oracle::dense_inverse(m);
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        double expected = inv(u, v) / (static_cast<double>(g.degree(u)) * g.degree(v));
        CHECK(std::abs(got(u, v) - expected) <= 1e-8);
      }
  }
}

TEST_CASE("meeting scores: diagonal is one, bipartite pair stays zero") {
  Matrix s = simrank_matrix(single_edge(), 0.8, 5);
  CHECK(s(0, 0) == 1.0);
  CHECK(s(1, 1) == 1.0);
  CHECK(s(0, 1) == 0.0);  // the two walkers can never meet
}

TEST_CASE("meeting scores on the 3-path endpoints equal the decay") {
  Matrix s = simrank_matrix(path3(), 0.8, 20);
  CHECK(s(0, 2) == doctest::Approx(0.8).epsilon(1e-6));
}

TEST_CASE("meeting scores match the literal double sum") {
  for (uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = oracle::random_graph(12, 24, seed + 3);
    const double lambda = 0.8;
    const int iters = 4;
    Matrix got = simrank_matrix(g, lambda, iters);
    Matrix ref = Matrix::identity(g.n);
    for (int it = 0; it < iters; ++it) {
      Matrix next(g.n, g.n);
      for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) {
          if (u == v) {
            next(u, v) = 1.0;
            continue;
          }
          double sum = 0.0;
          for (int a : g.adj(u))
            for (int b : g.adj(v)) sum += ref(a, b);
          next(u, v) = lambda * sum /
                       (static_cast<double>(g.degree(u)) * g.degree(v));
        }
      ref = std::move(next);
    }
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v)
        CHECK(got(u, v) == doctest::Approx(ref(u, v)).epsilon(1e-10));
  }
}

TEST_CASE("embedding similarity basics") {
  FeatureMatrix f;
  f.r = Matrix(3, 2);
  f.r(1, 0) = 3.0;
  f.r(1, 1) = 4.0;
  f.r(2, 0) = 0.0;
  CHECK(ssne_score(f, 0, 2) == doctest::Approx(1.0));       // identical rows
  CHECK(ssne_score(f, 0, 1) == doctest::Approx(1.0 / 6.0));  // 3-4-5 triangle
  CHECK_THROWS_AS(ssne_score(f, 0, 3), ValidationError);
}

TEST_CASE("structurally equivalent endpoints embed closer than the edge pair") {
  Graph g = path3();
  FeatureMatrix r = embed(g, 2, EmbedDim::dims(2));
  CHECK(ssne_score(r, 0, 2) > ssne_score(r, 0, 1));
}

TEST_CASE("embedding similarity lies in (0,1] and decreases with distance") {
  Graph g = oracle::random_graph(30, 70, 1);
  FeatureMatrix r = embed(g, 4, EmbedDim::dims(6));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      double s = ssne_score(r, u, v);
      CHECK(s > 0.0);
      CHECK(s <= 1.0);
    }
}

TEST_CASE("every scorer is symmetric and finite on training non-edges") {
  Graph g = oracle::random_graph(24, 55, 6);
  ScorerParams params;
  params.dim = EmbedDim::dims(4);
  params.order = 3;
  for (const auto& name : scorer_names()) {
    auto scorer = make_scorer(name, g, params);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) {
        double a = scorer->score(u, v), b = scorer->score(v, u);
        CHECK(a == b);
        CHECK(std::isfinite(a));
      }
  }
}

TEST_CASE("unknown scorer name is rejected") {
  CHECK_THROWS_AS(make_scorer("pagerank", path3()), ValidationError);
  CHECK(is_scorer_name("ssne"));
  CHECK(!is_scorer_name("deepwalk"));
}
