#pragma once
#include <cstddef>
#include <span>
#include <vector>

namespace ssne {

struct Graph;

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }

  void fill(double v) { data.assign(data.size(), v); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

// Data-parallel kernels. Each has a serial twin in ssne::serial with
// identical arithmetic; the parallel versions split work by row (or by
// sample) with a fixed per-row summation order, so their output is
// bit-identical to the serial reference for any thread count.
namespace kernels {

// out = p * A(g), where A is the adjacency matrix of g. out must be
// preallocated to p's shape and is overwritten.
void adjacency_power_step(const Graph& g, const Matrix& p, Matrix& out);

// Divides each row by its sum; all-zero rows pass through unchanged.
void row_normalize(Matrix& m);

// acc += weight * Normal(p), row by row (zero rows contribute nothing).
void accumulate_normalized(const Matrix& p, double weight, Matrix& acc);

// c = a * b
void gemm_nn(const Matrix& a, const Matrix& b, Matrix& c);
// c = a^T * b
void gemm_tn(const Matrix& a, const Matrix& b, Matrix& c);

// m = log(m + shift), elementwise.
void shifted_log(Matrix& m, double shift);

}  // namespace kernels

namespace serial {
void adjacency_power_step(const Graph& g, const Matrix& p, Matrix& out);
void row_normalize(Matrix& m);
void accumulate_normalized(const Matrix& p, double weight, Matrix& acc);
void gemm_nn(const Matrix& a, const Matrix& b, Matrix& c);
void gemm_tn(const Matrix& a, const Matrix& b, Matrix& c);
void shifted_log(Matrix& m, double shift);
}  // namespace serial

}  // namespace ssne
