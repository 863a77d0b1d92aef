#include "ssne/scoring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ssne/errors.hpp"

namespace ssne {

namespace {

void check_ids(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n)
    throw ValidationError("node id out of range");
}

// Walks both sorted neighbor lists once, feeding each common neighbor to fn.
template <class F>
void for_common_neighbors(const Graph& g, int u, int v, F fn) {
  auto a = g.adj(u), b = g.adj(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

double cn_score(const Graph& g, int u, int v) {
  check_ids(g, u, v);
  long long c = 0;
  for_common_neighbors(g, u, v, [&](int) { ++c; });
  return static_cast<double>(c);
}

double salton_score(const Graph& g, int u, int v) {
  double c = cn_score(g, u, v);
  if (c == 0.0) return 0.0;
  return c / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
}

double jaccard_score(const Graph& g, int u, int v) {
  double c = cn_score(g, u, v);
  double uni = g.degree(u) + g.degree(v) - c;
  return uni > 0.0 ? c / uni : 0.0;
}

double aa_score(const Graph& g, int u, int v) {
  check_ids(g, u, v);
  double s = 0.0;
  for_common_neighbors(g, u, v, [&](int z) {
    // a common neighbor touches two distinct nodes, so its degree is >= 2
    assert(g.degree(z) >= 2);
    s += 1.0 / std::log(static_cast<double>(g.degree(z)));
  });
  return s;
}

double ra_score(const Graph& g, int u, int v) {
  check_ids(g, u, v);
  double s = 0.0;
  for_common_neighbors(g, u, v, [&](int z) { s += 1.0 / g.degree(z); });
  return s;
}

double lhn1_score(const Graph& g, int u, int v) {
  double c = cn_score(g, u, v);
  if (c == 0.0) return 0.0;
  return c / (static_cast<double>(g.degree(u)) * g.degree(v));
}

double spectral_radius(const Graph& g) {
  if (g.n == 0) throw ValidationError("empty graph");
  // Power iteration on A + I: the shift separates the dominant eigenvalue
  // when the spectrum is symmetric (bipartite graphs).
  std::vector<double> x(g.n, 1.0 / std::sqrt(static_cast<double>(g.n))), y(g.n);
  double prev = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    for (int u = 0; u < g.n; ++u) {
      double s = x[u];
      for (int v : g.adj(u)) s += x[v];
      y[u] = s;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (int u = 0; u < g.n; ++u) x[u] = y[u] / norm;
    double lambda = norm - 1.0;
    if (iter > 0 && std::abs(lambda - prev) <= 1e-10 * std::max(1.0, std::abs(lambda)))
      return lambda;
    prev = lambda;
  }
  throw NumericalError("spectral radius estimation did not converge");
}

namespace {

// Sums the geometric series column by column: x starts at e_v (scaled), each
// term applies the damped adjacency, acc collects terms. Columns are
// independent, so the loop parallelizes without affecting the result.
Matrix damped_series_matrix(const Graph& g, double damping, bool include_identity,
                            const std::vector<double>& col_scale) {
  const int n = g.n;
  Matrix s(n, n);
  bool truncated = false;
#pragma omp parallel
  {
    std::vector<double> x(n), next(n), acc(n);
#pragma omp for schedule(dynamic, 8)
    for (int v = 0; v < n; ++v) {
      std::fill(x.begin(), x.end(), 0.0);
      std::fill(acc.begin(), acc.end(), 0.0);
      x[v] = col_scale.empty() ? 1.0 : col_scale[v];
      if (include_identity) acc[v] = x[v];
      double maxterm = std::abs(x[v]);
      for (int iter = 0; iter < 100000 && maxterm > 1e-15; ++iter) {
        maxterm = 0.0;
        for (int u = 0; u < n; ++u) {
          double t = 0.0;
          for (int w : g.adj(u)) t += x[w];
          next[u] = damping * t;
          maxterm = std::max(maxterm, std::abs(next[u]));
        }
        std::swap(x, next);
        for (int u = 0; u < n; ++u) acc[u] += x[u];
      }
      if (maxterm > 1e-15) truncated = true;
      for (int u = 0; u < n; ++u) s(u, v) = acc[u];
    }
  }
  if (truncated)
    throw NumericalError("damped series did not reach tolerance within the sweep cap");
  return s;
}

}  // namespace

Matrix katz_matrix(const Graph& g, double beta) {
  double lambda = spectral_radius(g);
  if (lambda > 0.0 && beta >= 1.0 / lambda)
    throw NumericalError("katz series diverges: beta=" + std::to_string(beta) +
                         " >= 1/lambda_max, lambda_max~=" + std::to_string(lambda));
  if (beta < 0.0) throw ValidationError("beta must be nonnegative");
  return damped_series_matrix(g, beta, false, {});
}

Matrix rwr_matrix(const Graph& g, double c) {
  if (!(c > 0.0 && c < 1.0)) throw ValidationError("restart parameter must be in (0,1)");
  const int n = g.n;
  for (int u = 0; u < n; ++u)
    if (g.degree(u) == 0)
      throw NumericalError("walk matrix undefined with isolated node " + std::to_string(u));
  std::vector<double> invdeg(n);
  for (int u = 0; u < n; ++u) invdeg[u] = 1.0 / g.degree(u);

  Matrix pi(n, n);  // row u: stationary distribution of the walk restarting at u
#pragma omp parallel
  {
    std::vector<double> x(n), next(n);
#pragma omp for schedule(dynamic, 8)
    for (int u = 0; u < n; ++u) {
      std::fill(x.begin(), x.end(), 0.0);
      x[u] = 1.0;
      double* row = pi.row(u);
      for (int j = 0; j < n; ++j) row[j] = 0.0;
      row[u] = 1.0;
      // terms c^l (S1^T)^l e_u, each with l1 mass c^l
      double mass = 1.0;
      while (mass > 1e-15) {
        for (int j = 0; j < n; ++j) {
          double t = 0.0;
          for (int w : g.adj(j)) t += x[w] * invdeg[w];
          next[j] = c * t;
        }
        std::swap(x, next);
        for (int j = 0; j < n; ++j) row[j] += x[j];
        mass *= c;
      }
      for (int j = 0; j < n; ++j) row[j] *= (1.0 - c);
    }
  }
  return pi;
}

Matrix lhn2_matrix(const Graph& g, double phi) {
  if (!(phi > 0.0 && phi < 1.0)) throw ValidationError("phi must be in (0,1)");
  double lambda = spectral_radius(g);
  if (lambda <= 0.0) throw NumericalError("degenerate spectrum for lhn2");
  const int n = g.n;
  std::vector<double> scale(n);
  for (int v = 0; v < n; ++v)
    scale[v] = g.degree(v) > 0 ? 1.0 / g.degree(v) : 0.0;
  Matrix s = damped_series_matrix(g, phi / lambda, true, scale);
  const long long nn = n;
#pragma omp parallel for schedule(static)
  for (long long u = 0; u < nn; ++u) {
    double du = scale[u];
    double* row = s.row(static_cast<std::size_t>(u));
    for (int v = 0; v < n; ++v) row[v] *= du;
  }
  return s;
}

Matrix simrank_matrix(const Graph& g, double lambda, int iterations) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw ValidationError("lambda must be in (0,1)");
  if (iterations < 1) throw ValidationError("iterations must be >= 1");
  const int n = g.n;
  std::vector<double> invdeg(n, 0.0);
  for (int u = 0; u < n; ++u)
    if (g.degree(u) > 0) invdeg[u] = 1.0 / g.degree(u);

  Matrix s = Matrix::identity(n);
  Matrix x(n, n), t(n, n);
  for (int it = 0; it < iterations; ++it) {
    // x[u][w] = sum_{b in adj(w)} s[u][b] / k_w
    const long long nn = n;
#pragma omp parallel for schedule(dynamic, 32)
    for (long long u = 0; u < nn; ++u) {
      const double* srow = s.row(static_cast<std::size_t>(u));
      double* xrow = x.row(static_cast<std::size_t>(u));
      for (int w = 0; w < n; ++w) {
        double acc = 0.0;
        for (int b : g.adj(w)) acc += srow[b];
        xrow[w] = acc * invdeg[w];
      }
    }
    // t[u][v] = lambda / k_u * sum_{a in adj(u)} x[a][v]; diagonal pinned to 1
#pragma omp parallel for schedule(dynamic, 32)
    for (long long u = 0; u < nn; ++u) {
      double* trow = t.row(static_cast<std::size_t>(u));
      for (int v = 0; v < n; ++v) trow[v] = 0.0;
      for (int a : g.adj(u)) {
        const double* xrow = x.row(a);
        for (int v = 0; v < n; ++v) trow[v] += xrow[v];
      }
      double wgt = lambda * invdeg[u];
      for (int v = 0; v < n; ++v) trow[v] *= wgt;
      trow[u] = 1.0;
    }
    std::swap(s, t);
  }
  return s;
}

double ssne_score(const FeatureMatrix& r, int u, int v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= r.r.rows ||
      static_cast<std::size_t>(v) >= r.r.rows)
    throw ValidationError("node id out of range");
  const double* a = r.r.row(u);
  const double* b = r.r.row(v);
  double d2 = 0.0;
  for (std::size_t j = 0; j < r.r.cols; ++j) {
    double diff = a[j] - b[j];
    d2 += diff * diff;
  }
  return 1.0 / (1.0 + std::sqrt(d2));
}

namespace {

using LocalFn = double (*)(const Graph&, int, int);

class LocalScorer final : public Scorer {
 public:
  LocalScorer(std::string name, const Graph& g, LocalFn fn)
      : name_(std::move(name)), graph_(g), fn_(fn) {}
  double score(int u, int v) const override { return fn_(graph_, u, v); }
  const std::string& name() const override { return name_; }

 private:
  std::string name_;
  const Graph& graph_;
  LocalFn fn_;
};

class MatrixScorer final : public Scorer {
 public:
  MatrixScorer(std::string name, Matrix m, std::string params)
      : name_(std::move(name)), m_(std::move(m)), params_(std::move(params)) {}
  double score(int u, int v) const override {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= m_.rows ||
        static_cast<std::size_t>(v) >= m_.rows)
      throw ValidationError("node id out of range");
    if (u > v) std::swap(u, v);  // exact symmetry
    return m_(u, v);
  }
  const std::string& name() const override { return name_; }
  std::string params() const override { return params_; }

 private:
  std::string name_;
  Matrix m_;
  std::string params_;
};

class RwrScorer final : public Scorer {
 public:
  RwrScorer(Matrix pi, double c) : name_("rwr"), pi_(std::move(pi)), c_(c) {}
  double score(int u, int v) const override {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= pi_.rows ||
        static_cast<std::size_t>(v) >= pi_.rows)
      throw ValidationError("node id out of range");
    return pi_(u, v) + pi_(v, u);
  }
  const std::string& name() const override { return name_; }
  std::string params() const override { return "c=" + std::to_string(c_); }

 private:
  std::string name_;
  Matrix pi_;
  double c_;
};

class SsneScorer final : public Scorer {
 public:
  explicit SsneScorer(FeatureMatrix f) : name_("ssne"), features_(std::move(f)) {}
  double score(int u, int v) const override { return ssne_score(features_, u, v); }
  const std::string& name() const override { return name_; }
  std::string params() const override {
    std::string p = "h=" + std::to_string(features_.info.order) +
                    ";d=" + std::to_string(features_.info.dim);
    return p;
  }

 private:
  std::string name_;
  FeatureMatrix features_;
};

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& scorer_names() {
  static const std::vector<std::string> names = {
      "cn", "salton", "jaccard", "aa",      "ra",  "lhn1",
      "katz", "rwr",   "lhn2",    "simrank", "ssne"};
  return names;
}

bool is_scorer_name(const std::string& name) {
  const auto& all = scorer_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

std::unique_ptr<Scorer> make_scorer(const std::string& name, const Graph& train,
                                    const ScorerParams& params) {
  if (name == "cn") return std::make_unique<LocalScorer>(name, train, cn_score);
  if (name == "salton") return std::make_unique<LocalScorer>(name, train, salton_score);
  if (name == "jaccard") return std::make_unique<LocalScorer>(name, train, jaccard_score);
  if (name == "aa") return std::make_unique<LocalScorer>(name, train, aa_score);
  if (name == "ra") return std::make_unique<LocalScorer>(name, train, ra_score);
  if (name == "lhn1") return std::make_unique<LocalScorer>(name, train, lhn1_score);
  if (name == "katz") {
    double beta = params.katz_beta
                      ? *params.katz_beta
                      : std::min(0.01, 0.5 / std::max(spectral_radius(train), 1e-12));
    return std::make_unique<MatrixScorer>("katz", katz_matrix(train, beta),
                                          "beta=" + fmt_param(beta));
  }
  if (name == "rwr")
    return std::make_unique<RwrScorer>(rwr_matrix(train, params.rwr_c), params.rwr_c);
  if (name == "lhn2")
    return std::make_unique<MatrixScorer>("lhn2", lhn2_matrix(train, params.lhn2_phi),
                                          "phi=" + fmt_param(params.lhn2_phi));
  if (name == "simrank")
    return std::make_unique<MatrixScorer>(
        "simrank",
        simrank_matrix(train, params.simrank_lambda, params.simrank_iterations),
        "lambda=" + fmt_param(params.simrank_lambda) +
            ";iters=" + std::to_string(params.simrank_iterations));
  if (name == "ssne")
    return make_ssne_scorer(embed(train, params.order, params.dim, params.shift,
                                  params.alpha, params.seed, params.svd));
  throw ValidationError("unknown scorer: " + name);
}

std::unique_ptr<Scorer> make_ssne_scorer(FeatureMatrix features) {
  return std::make_unique<SsneScorer>(std::move(features));
}

}  // namespace ssne
