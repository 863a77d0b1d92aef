#include "ssne/matrix.hpp"

#include <cassert>
#include <cmath>

#include "ssne/graph.hpp"

namespace ssne {

namespace {

inline void power_step_row(const Graph& g, const Matrix& p, Matrix& out, std::size_t u) {
  const std::size_t n = p.cols;
  double* dst = out.row(u);
  for (std::size_t j = 0; j < n; ++j) dst[j] = 0.0;
  const double* src = p.row(u);
  for (std::size_t w = 0; w < n; ++w) {
    double pw = src[w];
    if (pw == 0.0) continue;
    for (int j : g.adj(static_cast<int>(w))) dst[j] += pw;
  }
}

inline void normalize_row(double* r, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += r[j];
  if (s == 0.0) return;
  double inv = 1.0 / s;
  for (std::size_t j = 0; j < n; ++j) r[j] *= inv;
}

inline void accumulate_normalized_row(const double* src, double weight, double* acc,
                                      std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += src[j];
  if (s == 0.0) return;
  double w = weight / s;
  for (std::size_t j = 0; j < n; ++j) acc[j] += w * src[j];
}

inline void gemm_nn_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  double* ci = c.row(i);
  for (std::size_t j = 0; j < c.cols; ++j) ci[j] = 0.0;
  const double* ai = a.row(i);
  for (std::size_t k = 0; k < a.cols; ++k) {
    double aik = ai[k];
    if (aik == 0.0) continue;
    const double* bk = b.row(k);
    for (std::size_t j = 0; j < c.cols; ++j) ci[j] += aik * bk[j];
  }
}

// c = a^T b computed one output row at a time: row i of c is the
// combination of b's rows weighted by column i of a.
inline void gemm_tn_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  double* ci = c.row(i);
  for (std::size_t j = 0; j < c.cols; ++j) ci[j] = 0.0;
  for (std::size_t k = 0; k < a.rows; ++k) {
    double aki = a(k, i);
    if (aki == 0.0) continue;
    const double* bk = b.row(k);
    for (std::size_t j = 0; j < c.cols; ++j) ci[j] += aki * bk[j];
  }
}

}  // namespace

namespace kernels {

void adjacency_power_step(const Graph& g, const Matrix& p, Matrix& out) {
  assert(out.rows == p.rows && out.cols == p.cols);
  const long long n = static_cast<long long>(p.rows);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long u = 0; u < n; ++u) power_step_row(g, p, out, static_cast<std::size_t>(u));
}

void row_normalize(Matrix& m) {
  const long long n = static_cast<long long>(m.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) normalize_row(m.row(static_cast<std::size_t>(i)), m.cols);
}

void accumulate_normalized(const Matrix& p, double weight, Matrix& acc) {
  assert(acc.rows == p.rows && acc.cols == p.cols);
  const long long n = static_cast<long long>(p.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    accumulate_normalized_row(p.row(static_cast<std::size_t>(i)), weight,
                              acc.row(static_cast<std::size_t>(i)), p.cols);
}

void gemm_nn(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.rows && c.rows == a.rows && c.cols == b.cols);
  const long long n = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) gemm_nn_row(a, b, c, static_cast<std::size_t>(i));
}

void gemm_tn(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.rows == b.rows && c.rows == a.cols && c.cols == b.cols);
  const long long n = static_cast<long long>(a.cols);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) gemm_tn_row(a, b, c, static_cast<std::size_t>(i));
}

void shifted_log(Matrix& m, double shift) {
  const long long n = static_cast<long long>(m.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    double* r = m.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = std::log(r[j] + shift);
  }
}

}  // namespace kernels

namespace serial {

void adjacency_power_step(const Graph& g, const Matrix& p, Matrix& out) {
  assert(out.rows == p.rows && out.cols == p.cols);
  for (std::size_t u = 0; u < p.rows; ++u) power_step_row(g, p, out, u);
}

void row_normalize(Matrix& m) {
  for (std::size_t i = 0; i < m.rows; ++i) normalize_row(m.row(i), m.cols);
}

void accumulate_normalized(const Matrix& p, double weight, Matrix& acc) {
  for (std::size_t i = 0; i < p.rows; ++i)
    accumulate_normalized_row(p.row(i), weight, acc.row(i), p.cols);
}

void gemm_nn(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.rows && c.rows == a.rows && c.cols == b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) gemm_nn_row(a, b, c, i);
}

void gemm_tn(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.rows == b.rows && c.rows == a.cols && c.cols == b.cols);
  for (std::size_t i = 0; i < a.cols; ++i) gemm_tn_row(a, b, c, i);
}

void shifted_log(Matrix& m, double shift) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    double* r = m.row(i);
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = std::log(r[j] + shift);
  }
}

}  // namespace serial

}  // namespace ssne
