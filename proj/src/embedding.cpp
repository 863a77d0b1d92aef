#include "ssne/embedding.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "ssne/errors.hpp"

namespace ssne {

SvdMethod svd_method_from_name(const std::string& name) {
  if (name == "auto") return SvdMethod::kAuto;
  if (name == "exact") return SvdMethod::kExact;
  if (name == "rand") return SvdMethod::kRandomized;
  throw ValidationError("unknown svd method: " + name);
}

std::string svd_method_name(SvdMethod m) {
  switch (m) {
    case SvdMethod::kAuto: return "auto";
    case SvdMethod::kExact: return "exact";
    case SvdMethod::kRandomized: return "rand";
  }
  return "auto";
}

TargetMatrix shifted_log(Matrix values, double shift) {
  if (!(shift > 0.0)) throw ValidationError("shift must be positive");
  kernels::shifted_log(values, shift);
  return {std::move(values), shift};
}

TargetMatrix shifted_log(const SnhamMatrix& s, double shift) {
  return shifted_log(s.values, shift);
}

namespace {

SvdFactors exact_svd(const TargetMatrix& w, int d) {
  const int n = static_cast<int>(w.values.rows);
  // The row-major buffer, read column-major, is the transpose; feeding it to
  // the column-major driver swaps the roles of the two factor buffers and
  // avoids any layout copies.
  std::vector<double> a = w.values.data;
  std::vector<double> s(n);
  std::vector<double> ubuf(static_cast<std::size_t>(n) * n);
  std::vector<double> vtbuf(static_cast<std::size_t>(n) * n);
  int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', n, n, a.data(), n, s.data(),
                            ubuf.data(), n, vtbuf.data(), n);
  if (info != 0)
    throw NumericalError("dense svd failed (dgesdd info=" + std::to_string(info) + ")");

  SvdFactors f;
  f.sigma.assign(s.begin(), s.begin() + d);
  f.u = Matrix(n, d);
  f.v = Matrix(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      f.u(i, j) = vtbuf[static_cast<std::size_t>(i) * n + j];
      f.v(i, j) = ubuf[static_cast<std::size_t>(j) * n + i];
    }
  return f;
}

// Cyclic Jacobi eigensolver for a small symmetric matrix; eigenvalues
// descending, eigenvectors in columns.
void jacobi_eigh(Matrix& c, std::vector<double>& lam, Matrix& vec) {
  const std::size_t k = c.rows;
  vec = Matrix::identity(k);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) off += c(p, q) * c(p, q);
    if (off < 1e-28 * (k * k)) break;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        double apq = c(p, q);
        if (apq == 0.0) continue;
        double theta = (c(q, q) - c(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double cs = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * cs;
        for (std::size_t r = 0; r < k; ++r) {
          double crp = c(r, p), crq = c(r, q);
          c(r, p) = cs * crp - sn * crq;
          c(r, q) = sn * crp + cs * crq;
        }
        for (std::size_t r = 0; r < k; ++r) {
          double cpr = c(p, r), cqr = c(q, r);
          c(p, r) = cs * cpr - sn * cqr;
          c(q, r) = sn * cpr + cs * cqr;
        }
        for (std::size_t r = 0; r < k; ++r) {
          double vrp = vec(r, p), vrq = vec(r, q);
          vec(r, p) = cs * vrp - sn * vrq;
          vec(r, q) = sn * vrp + cs * vrq;
        }
      }
  }
  lam.resize(k);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<double> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = c(i, i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return diag[a] > diag[b];
  });
  Matrix sorted(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    lam[j] = diag[idx[j]];
    for (std::size_t i = 0; i < k; ++i) sorted(i, j) = vec(i, idx[j]);
  }
  vec = std::move(sorted);
}

// Modified Gram-Schmidt over columns, two passes. Columns that vanish get a
// deterministic replacement direction before re-orthogonalization.
void orthonormalize_columns(Matrix& q) {
  const std::size_t n = q.rows, k = q.cols;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += q(r, i) * q(r, j);
        for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, i);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += q(r, j) * q(r, j);
      norm = std::sqrt(norm);
      if (norm < 1e-150) {
        for (std::size_t r = 0; r < n; ++r) q(r, j) = 0.0;
        q(j % n, j) = 1.0;
        norm = 1.0;
        if (pass == 1) pass = 0;  // replacement needs another cleanup pass
      }
      double inv = 1.0 / norm;
      for (std::size_t r = 0; r < n; ++r) q(r, j) *= inv;
    }
  }
}

SvdFactors randomized_svd(const TargetMatrix& w, int d, uint64_t seed) {
  const std::size_t n = w.values.rows;
  const std::size_t k = std::min(n, static_cast<std::size_t>(d) + 10);
  constexpr double kTol = 1e-10;
  constexpr int kMaxIter = 300;

  Matrix q(n, k);
  RngStream rng(mix_seed(seed, 0x72737664ULL));
  for (double& x : q.data) x = rng.normal();

  Matrix y(n, k), b(n, k);
  kernels::gemm_nn(w.values, q, y);
  std::swap(q, y);
  orthonormalize_columns(q);

  std::vector<double> sigma(k, 0.0), prev(k, 0.0), lam;
  Matrix small(k, k), evec;
  double residual = 0.0;
  bool converged = false;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    kernels::gemm_tn(w.values, q, b);  // b = w^T q
    orthonormalize_columns(b);
    kernels::gemm_nn(w.values, b, y);  // y = w b
    std::swap(q, y);
    orthonormalize_columns(q);

    kernels::gemm_tn(w.values, q, b);  // b = w^T q
    kernels::gemm_tn(b, b, small);     // small = b^T b = q^T w w^T q
    jacobi_eigh(small, lam, evec);
    for (std::size_t i = 0; i < k; ++i) sigma[i] = std::sqrt(std::max(lam[i], 0.0));

    double scale = std::max(sigma[0], 1e-300);
    residual = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      residual = std::max(residual, std::abs(sigma[i] - prev[i]) / scale);
    if (iter > 0 && residual <= kTol) {
      converged = true;
      break;
    }
    prev = sigma;
  }
  if (!converged)
    throw NumericalError("randomized svd did not converge; residual=" +
                         std::to_string(residual));

  // u = q * evec; v = b * evec * sigma^-1
  SvdFactors f;
  f.sigma.assign(sigma.begin(), sigma.begin() + d);
  Matrix evec_d(k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < d; ++j) evec_d(i, j) = evec(i, j);
  f.u = Matrix(n, d);
  kernels::gemm_nn(q, evec_d, f.u);
  f.v = Matrix(n, d);
  kernels::gemm_nn(b, evec_d, f.v);
  double floor = std::max(sigma[0], 1e-300) * 1e-14;
  for (int j = 0; j < d; ++j) {
    double s = std::max(f.sigma[j], floor);
    for (std::size_t i = 0; i < n; ++i) f.v(i, j) /= s;
  }
  orthonormalize_columns(f.v);
  return f;
}

}  // namespace

SvdFactors truncated_svd(const TargetMatrix& w, int d, SvdMethod method,
                         uint64_t seed) {
  const int n = static_cast<int>(w.values.rows);
  if (d < 1 || d > n) throw ValidationError("svd rank must be in [1, n]");
  if (method == SvdMethod::kAuto)
    method = n <= kExactSvdMaxN ? SvdMethod::kExact : SvdMethod::kRandomized;
  return method == SvdMethod::kExact ? exact_svd(w, d) : randomized_svd(w, d, seed);
}

FeatureMatrix feature_matrix(const SvdFactors& f) {
  const std::size_t n = f.u.rows, d = f.u.cols;
  FeatureMatrix out;
  out.r = Matrix(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) out.r(i, j) = f.u(i, j) * f.sigma[j];
  out.info.dim = static_cast<int>(d);
  return out;
}

int EmbedDim::resolve(int n) const {
  if (p) {
    long long v = std::llround(*p * static_cast<double>(n));
    return static_cast<int>(std::clamp<long long>(v, 1, n));
  }
  if (d < 1 || d > n) throw ValidationError("embedding dimension must be in [1, n]");
  return d;
}

FeatureMatrix embed(const Graph& g, int h, EmbedDim dim, double shift, double alpha,
                    uint64_t seed, SvdMethod method) {
  int d = dim.resolve(g.n);
  SnhamMatrix s = snham_matrix(g, h, alpha);
  TargetMatrix w = shifted_log(std::move(s.values), shift);
  SvdFactors f = truncated_svd(w, d, method, seed);
  FeatureMatrix r = feature_matrix(f);
  r.info.order = h;
  r.info.proportion = dim.p;
  r.info.shift = shift;
  r.info.restart = alpha;
  r.info.seed = seed;
  return r;
}

namespace {
constexpr char kEmbMagic[8] = {'S', 'S', 'N', 'E', 'E', 'M', 'B', '1'};
}

void save_embedding(const FeatureMatrix& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  uint64_t n = f.r.rows, d = f.r.cols, h = static_cast<uint64_t>(f.info.order);
  out.write(kEmbMagic, sizeof(kEmbMagic));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&d), sizeof(d));
  out.write(reinterpret_cast<const char*>(&h), sizeof(h));
  out.write(reinterpret_cast<const char*>(&f.info.shift), sizeof(double));
  out.write(reinterpret_cast<const char*>(&f.info.seed), sizeof(uint64_t));
  out.write(reinterpret_cast<const char*>(f.r.data.data()),
            static_cast<std::streamsize>(f.r.data.size() * sizeof(double)));
  if (!out) throw IoError("write failed: " + path);
}

FeatureMatrix load_embedding(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kEmbMagic, sizeof(magic)) != 0)
    throw IoError(path + ": not an embedding file");
  uint64_t n = 0, d = 0, h = 0, seed = 0;
  double shift = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&d), sizeof(d));
  in.read(reinterpret_cast<char*>(&h), sizeof(h));
  in.read(reinterpret_cast<char*>(&shift), sizeof(shift));
  in.read(reinterpret_cast<char*>(&seed), sizeof(seed));
  FeatureMatrix f;
  f.r = Matrix(n, d);
  in.read(reinterpret_cast<char*>(f.r.data.data()),
          static_cast<std::streamsize>(f.r.data.size() * sizeof(double)));
  if (!in) throw IoError(path + ": truncated embedding file");
  f.info.order = static_cast<int>(h);
  f.info.dim = static_cast<int>(d);
  f.info.shift = shift;
  f.info.seed = seed;
  return f;
}

}  // namespace ssne
