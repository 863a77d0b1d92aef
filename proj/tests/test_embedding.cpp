#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "ssne/embedding.hpp"
#include "ssne/errors.hpp"
#include "ssne/generators.hpp"
#include "ssne/snham.hpp"
#include "oracles.hpp"

using namespace ssne;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

Matrix random_matrix(std::size_t r, std::size_t c, uint64_t seed) {
  Matrix m(r, c);
  RngStream rng(seed);
  for (double& x : m.data) x = 2.0 * rng.uniform() - 1.0;
  return m;
}

void check_orthonormal_columns(const Matrix& q, double tol) {
  for (std::size_t a = 0; a < q.cols; ++a)
    for (std::size_t b = a; b < q.cols; ++b) {
      double dot = 0.0;
      for (std::size_t r = 0; r < q.rows; ++r) dot += q(r, a) * q(r, b);
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= tol);
    }
}

double row_softmax_dev(const double* w, const double* target, int n) {
  double mx = w[0];
  for (int j = 1; j < n; ++j) mx = std::max(mx, w[j]);
  std::vector<double> e(n);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    e[j] = std::exp(w[j] - mx);
    sum += e[j];
  }
  double dev = 0.0;
  for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(e[j] / sum - target[j]));
  return dev;
}

}  // namespace

TEST_CASE("shifted_log basics") {
  Matrix m(1, 3);
  m(0, 0) = 0.0;
  m(0, 1) = 1.0 - 1e-8;
  m(0, 2) = 0.5;
  TargetMatrix w = shifted_log(std::move(m), 1e-8);
  CHECK(w.values(0, 0) == doctest::Approx(std::log(1e-8)));
  CHECK(std::abs(w.values(0, 1)) < 1e-7);
  CHECK(w.values(0, 2) == doctest::Approx(std::log(0.5 + 1e-8)));
  CHECK_THROWS_AS(shifted_log(Matrix(1, 1), 0.0), ValidationError);
  CHECK_THROWS_AS(shifted_log(Matrix(1, 1), -1.0), ValidationError);
}

TEST_CASE("3-path order-2 row logs match scalar evaluation") {
  SnhamMatrix s = snham_matrix(path3(), 2, 0.0);
  TargetMatrix w = shifted_log(s, 1e-8);
  CHECK(w.values(0, 0) == doctest::Approx(std::log(0.25)).epsilon(1e-6));
  CHECK(w.values(0, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-6));
}

TEST_CASE("softmax inverts the shifted log row exactly") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    int n = 10 + static_cast<int>(seed) * 17;
    Graph g = oracle::random_graph(n, 3 * n, seed);
    int h = 1 + static_cast<int>(seed % 10);
    const double sigma = 1e-8;
    SnhamMatrix s = snham_matrix(g, h, 0.0);
    TargetMatrix w = shifted_log(s, sigma);
    for (int u = 0; u < g.n; ++u) {
      std::vector<double> shifted(g.n);
      double rowsum = 0.0;
      for (int v = 0; v < g.n; ++v) rowsum += s.values(u, v) + sigma;
      for (int v = 0; v < g.n; ++v) shifted[v] = (s.values(u, v) + sigma) / rowsum;
      CHECK(row_softmax_dev(w.values.row(u), shifted.data(), g.n) <= 1e-12);
      // and the raw row is recovered up to the shift mass
      std::vector<double> raw(g.n);
      for (int v = 0; v < g.n; ++v) raw[v] = s.values(u, v);
      CHECK(row_softmax_dev(w.values.row(u), raw.data(), g.n) <= 10.0 * g.n * sigma);
    }
  }
}

TEST_CASE("identity spectrum") {
  TargetMatrix w{Matrix::identity(3), 1e-8};
  SvdFactors f = truncated_svd(w, 3, SvdMethod::kExact);
  for (double s : f.sigma) CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("diagonal matrix: top-2 values and reconstruction error") {
  Matrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 2.0;
  d(2, 2) = 1.0;
  TargetMatrix w{std::move(d), 1e-8};
  SvdFactors f = truncated_svd(w, 2, SvdMethod::kExact);
  CHECK(f.sigma[0] == doctest::Approx(3.0));
  CHECK(f.sigma[1] == doctest::Approx(2.0));
  CHECK(oracle::reconstruction_error(w.values, f.u, f.sigma, f.v) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exact factors match the one-sided Jacobi oracle on random input") {
  TargetMatrix w{random_matrix(50, 50, 77), 1e-8};
  oracle::JacobiSvd ref = oracle::jacobi_svd(w.values);
  SvdFactors f = truncated_svd(w, 50, SvdMethod::kExact);
  for (int i = 0; i < 50; ++i) CHECK(std::abs(f.sigma[i] - ref.sigma[i]) <= 1e-8);
  check_orthonormal_columns(f.u, 1e-8);
  check_orthonormal_columns(f.v, 1e-8);
}

TEST_CASE("rank drop equals the discarded singular value (20x20)") {
  TargetMatrix w{random_matrix(20, 20, 5), 1e-8};
  SvdFactors full = truncated_svd(w, 20, SvdMethod::kExact);
  SvdFactors cut = truncated_svd(w, 19, SvdMethod::kExact);
  double e_full = oracle::reconstruction_error(w.values, full.u, full.sigma, full.v);
  double e_cut = oracle::reconstruction_error(w.values, cut.u, cut.sigma, cut.v);
  double sigma20 = full.sigma.back();
  CHECK(std::abs(e_cut * e_cut - e_full * e_full - sigma20 * sigma20) <= 1e-8);
}

TEST_CASE("reconstruction error is non-increasing in the kept rank") {
  TargetMatrix w{random_matrix(30, 30, 9), 1e-8};
  double prev = 1e300;
  for (int d = 1; d <= 30; ++d) {
    SvdFactors f = truncated_svd(w, d, SvdMethod::kExact);
    double err = oracle::reconstruction_error(w.values, f.u, f.sigma, f.v);
    CHECK(err <= prev + 1e-9);
    prev = err;
  }
}

TEST_CASE("randomized engine agrees with exact on a decaying spectrum") {
  // build a matrix with known decay through the oracle pieces
  const int n = 40, d = 8;
  Matrix u = random_matrix(n, n, 21), v = random_matrix(n, n, 22);
  oracle::JacobiSvd qu = oracle::jacobi_svd(u), qv = oracle::jacobi_svd(v);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += qu.u(i, k) * std::pow(0.6, k) * qv.u(j, k);
      a(i, j) = s;
    }
  TargetMatrix w{std::move(a), 1e-8};
  SvdFactors exact = truncated_svd(w, d, SvdMethod::kExact);
  SvdFactors rnd = truncated_svd(w, d, SvdMethod::kRandomized, 3);
  for (int i = 0; i < d; ++i)
    CHECK(rnd.sigma[i] == doctest::Approx(exact.sigma[i]).epsilon(1e-8));
  check_orthonormal_columns(rnd.u, 1e-8);
  check_orthonormal_columns(rnd.v, 1e-8);
  SvdFactors rnd2 = truncated_svd(w, d, SvdMethod::kRandomized, 3);
  CHECK(rnd.u.data == rnd2.u.data);  // deterministic given seed
}

TEST_CASE("rank bounds are validated") {
  TargetMatrix w{Matrix::identity(4), 1e-8};
  CHECK_THROWS_AS(truncated_svd(w, 0, SvdMethod::kExact), ValidationError);
  CHECK_THROWS_AS(truncated_svd(w, 5, SvdMethod::kExact), ValidationError);
}

TEST_CASE("feature matrix scales the left factors") {
  SvdFactors f;
  f.u = Matrix::identity(3);
  f.sigma = {2.0, 1.0, 0.0};
  f.v = Matrix::identity(3);
  FeatureMatrix r = feature_matrix(f);
  CHECK(r.r(0, 0) == 2.0);
  CHECK(r.r(1, 1) == 1.0);
  CHECK(r.r(2, 2) == 0.0);

  f.sigma = {0.0, 0.0, 0.0};
  FeatureMatrix zero = feature_matrix(f);
  for (double x : zero.r.data) CHECK(x == 0.0);
}

TEST_CASE("pipeline distances match the oracle factorization on the 3-path") {
  Graph g = path3();
  FeatureMatrix r = embed(g, 2, EmbedDim::dims(2), 1e-8, 0.0, 0, SvdMethod::kExact);
  SnhamMatrix s = snham_matrix(g, 2, 0.0);
  TargetMatrix w = shifted_log(s, 1e-8);
  oracle::JacobiSvd ref = oracle::jacobi_svd(w.values);
  // pairwise row distances are invariant to the sign convention
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double dr = 0.0, dref = 0.0;
      for (int k = 0; k < 2; ++k) {
        double x = r.r(a, k) - r.r(b, k);
        double y = ref.u(a, k) * ref.sigma[k] - ref.u(b, k) * ref.sigma[k];
        dr += x * x;
        dref += y * y;
      }
      CHECK(std::sqrt(dr) == doctest::Approx(std::sqrt(dref)).epsilon(1e-8));
    }
}

TEST_CASE("column sign flips leave pairwise distances unchanged") {
  Graph g = oracle::random_graph(25, 60, 2);
  FeatureMatrix r = embed(g, 3, EmbedDim::dims(5));
  FeatureMatrix flipped = r;
  for (std::size_t i = 0; i < flipped.r.rows; ++i) flipped.r(i, 2) = -flipped.r(i, 2);
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      double da = 0.0, db = 0.0;
      for (std::size_t k = 0; k < r.r.cols; ++k) {
        double x = r.r(a, k) - r.r(b, k), y = flipped.r(a, k) - flipped.r(b, k);
        da += x * x;
        db += y * y;
      }
      CHECK(da == doctest::Approx(db).epsilon(1e-12));
    }
}

TEST_CASE("proportion resolves with clamping") {
  CHECK(EmbedDim::proportion(0.1).resolve(1000) == 100);
  CHECK(EmbedDim::proportion(0.001).resolve(50) == 1);  // clamp floor
  CHECK(EmbedDim::proportion(5.0).resolve(50) == 50);   // clamp ceiling
  CHECK(EmbedDim::proportion(0.25).resolve(10) == 3);   // round half up
  CHECK_THROWS_AS(EmbedDim::dims(0).resolve(10), ValidationError);
}

TEST_CASE("embedding dimensions follow p * n") {
  Graph g = generate_ws(200, 2, 0.1, 1);
  FeatureMatrix r = embed(g, 4, EmbedDim::proportion(0.1));
  CHECK(r.r.rows == 200);
  CHECK(r.r.cols == 20);
  CHECK(r.info.dim == 20);
}

TEST_CASE("same inputs and seed reproduce the embedding bit for bit") {
  Graph g = oracle::random_graph(40, 80, 4);
  FeatureMatrix a = embed(g, 3, EmbedDim::dims(6), 1e-8, 0.0, 11, SvdMethod::kExact);
  FeatureMatrix b = embed(g, 3, EmbedDim::dims(6), 1e-8, 0.0, 11, SvdMethod::kExact);
  CHECK(a.r.data == b.r.data);
}

TEST_CASE("embedding dump round-trips") {
  Graph g = oracle::random_graph(30, 60, 8);
  FeatureMatrix a = embed(g, 5, EmbedDim::proportion(0.2), 1e-8, 0.0, 3);
  std::string path = "embedding_roundtrip_test.bin";
  save_embedding(a, path);
  FeatureMatrix b = load_embedding(path);
  CHECK(b.r.data == a.r.data);
  CHECK(b.info.order == 5);
  CHECK(b.info.dim == a.info.dim);
  CHECK(b.info.seed == 3);
  std::remove(path.c_str());
}
