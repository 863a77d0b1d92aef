#include "ssne/snham.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "ssne/errors.hpp"

namespace ssne {

TransitionMatrix row_normalize(const Matrix& m) {
  for (double v : m.data)
    if (v < 0.0) throw ValidationError("row_normalize: negative entry");
  TransitionMatrix t{m};
  kernels::row_normalize(t.values);
  return t;
}

namespace {
std::atomic<std::size_t> g_dense_cap{6ULL << 30};

void check_dense_budget(int n, int copies) {
  std::size_t need = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                     sizeof(double) * static_cast<std::size_t>(copies);
  if (need > g_dense_cap.load())
    throw NumericalError("dense workspace " + std::to_string(need) +
                         " bytes exceeds cap " + std::to_string(g_dense_cap.load()));
}
}  // namespace

void set_dense_memory_cap(std::size_t bytes) { g_dense_cap.store(bytes); }
std::size_t dense_memory_cap() { return g_dense_cap.load(); }

SnhamAccumulator::SnhamAccumulator(const Graph& g, double alpha)
    : graph_(g), alpha_(alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw ValidationError("alpha must be in [0,1]");
  // three working matrices, plus the snapshot copy, plus S1 when alpha > 0
  check_dense_budget(g.n, alpha > 0.0 ? 5 : 4);
  std::size_t n = static_cast<std::size_t>(g.n);
  power_ = Matrix(n, n);
  power_next_ = Matrix(n, n);
  sum_ = Matrix(n, n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj(u)) power_(u, v) = 1.0;
  if (alpha_ > 0.0) {
    first_ = power_;
    kernels::row_normalize(first_);
  }
}

void SnhamAccumulator::advance_to(int h) {
  if (h < 1) throw ValidationError("order must be >= 1");
  if (h < order_) throw ValidationError("accumulator cannot rewind");
  while (order_ < h) {
    if (order_ > 0) {
      kernels::adjacency_power_step(graph_, power_, power_next_);
      std::swap(power_, power_next_);
    }
    ++order_;
    kernels::accumulate_normalized(power_, 1.0 - alpha_, sum_);
  }
}

SnhamMatrix SnhamAccumulator::snapshot() const {
  if (order_ < 1) throw ValidationError("accumulator has not been advanced");
  SnhamMatrix out;
  out.order = order_;
  out.restart = alpha_;
  out.values = sum_;
  if (alpha_ > 0.0) {
    double w = alpha_ * order_;
    for (std::size_t i = 0; i < out.values.data.size(); ++i)
      out.values.data[i] += w * first_.data[i];
  }
  kernels::row_normalize(out.values);
  return out;
}

SnhamMatrix snham_matrix(const Graph& g, int h, double alpha) {
  if (h < 1) throw ValidationError("order must be >= 1");
  SnhamAccumulator acc(g, alpha);
  acc.advance_to(h);
  return acc.snapshot();
}

namespace {
constexpr char kSnhamMagic[8] = {'S', 'N', 'H', 'M', 'D', 'M', 'P', '1'};
}

void save_snham(const SnhamMatrix& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  uint64_t n = s.values.rows, h = static_cast<uint64_t>(s.order);
  out.write(kSnhamMagic, sizeof(kSnhamMagic));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&h), sizeof(h));
  out.write(reinterpret_cast<const char*>(&s.restart), sizeof(s.restart));
  out.write(reinterpret_cast<const char*>(s.values.data.data()),
            static_cast<std::streamsize>(s.values.data.size() * sizeof(double)));
  if (!out) throw IoError("write failed: " + path);
}

SnhamMatrix load_snham(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[8];
  uint64_t n = 0, h = 0;
  double alpha = 0;
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kSnhamMagic, sizeof(magic)) != 0)
    throw IoError(path + ": not a matrix cache file");
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&h), sizeof(h));
  in.read(reinterpret_cast<char*>(&alpha), sizeof(alpha));
  SnhamMatrix s;
  s.order = static_cast<int>(h);
  s.restart = alpha;
  s.values = Matrix(n, n);
  in.read(reinterpret_cast<char*>(s.values.data.data()),
          static_cast<std::streamsize>(s.values.data.size() * sizeof(double)));
  if (!in) throw IoError(path + ": truncated matrix cache");
  return s;
}

}  // namespace ssne
