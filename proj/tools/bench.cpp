// Timing harness for the data-parallel kernels: runs each one through the
// serial reference and the OpenMP version and reports the speedup. The two
// paths are also checked for bit-identical output as they go.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "ssne/evaluation.hpp"
#include "ssne/generators.hpp"
#include "ssne/graph.hpp"
#include "ssne/matrix.hpp"
#include "ssne/scoring.hpp"
#include "ssne/snham.hpp"

using namespace ssne;

namespace {

double time_of(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-24s serial %8.3fs   omp %8.3fs   speedup %5.2fx   %s\n", name, serial,
              parallel, serial / parallel, identical ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 2000;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("kernel benchmark: n=%d, %d repeats, omp threads=%d\n\n", n, repeats,
              omp_get_max_threads());

  Graph g = generate_ws(n, 6, 0.1, 7);

  Matrix p(n, n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj(u)) p(u, v) = 1.0;

  Matrix out_s(n, n), out_p(n, n);
  double ts = time_of([&] { serial::adjacency_power_step(g, p, out_s); }, repeats);
  double tp = time_of([&] { kernels::adjacency_power_step(g, p, out_p); }, repeats);
  report("adjacency_power_step", ts, tp, out_s.data == out_p.data);

  Matrix ns = out_s, np = out_p;
  ts = time_of([&] { ns = out_s; serial::row_normalize(ns); }, repeats);
  tp = time_of([&] { np = out_p; kernels::row_normalize(np); }, repeats);
  report("row_normalize", ts, tp, ns.data == np.data);

  Matrix acc_s(n, n), acc_p(n, n);
  ts = time_of([&] { serial::accumulate_normalized(out_s, 1.0, acc_s); }, repeats);
  tp = time_of([&] { kernels::accumulate_normalized(out_p, 1.0, acc_p); }, repeats);
  report("accumulate_normalized", ts, tp, acc_s.data == acc_p.data);

  int k = std::max(16, n / 10);
  Matrix q(n, k);
  RngStream rng(11);
  for (double& x : q.data) x = rng.normal();
  Matrix y_s(n, k), y_p(n, k);
  ts = time_of([&] { serial::gemm_nn(ns, q, y_s); }, repeats);
  tp = time_of([&] { kernels::gemm_nn(np, q, y_p); }, repeats);
  report("gemm_nn (n x n/10)", ts, tp, y_s.data == y_p.data);

  Matrix z_s(n, k), z_p(n, k);
  ts = time_of([&] { serial::gemm_tn(ns, q, z_s); }, repeats);
  tp = time_of([&] { kernels::gemm_tn(np, q, z_p); }, repeats);
  report("gemm_tn (n x n/10)", ts, tp, z_s.data == z_p.data);

  ts = time_of([&] { serial::shifted_log(ns, 1e-8); }, repeats);
  tp = time_of([&] { kernels::shifted_log(np, 1e-8); }, repeats);
  report("shifted_log", ts, tp, ns.data == np.data);

  // graph_stats runs its BFS sweep and triangle counts under omp already;
  // time it against a forced single-thread run.
  GraphStats st_p, st_s;
  int hw = omp_get_max_threads();
  tp = time_of([&] { st_p = graph_stats(g); }, repeats);
  omp_set_num_threads(1);
  ts = time_of([&] { st_s = graph_stats(g); }, repeats);
  omp_set_num_threads(hw);
  report("graph_stats", ts, tp,
         st_s.avg_distance == st_p.avg_distance && st_s.clustering == st_p.clustering);

  TrainTestSplit split = split_train_test(g, 0.2, 7);
  auto scorer = make_scorer("ra", split.train);
  AucResult a_p, a_s;
  tp = time_of([&] { a_p = auc(*scorer, split, 200000, 7); }, repeats);
  omp_set_num_threads(1);
  ts = time_of([&] { a_s = auc(*scorer, split, 200000, 7); }, repeats);
  omp_set_num_threads(hw);
  report("auc (200k samples)", ts, tp, a_s.auc == a_p.auc && a_s.ties == a_p.ties);

  return 0;
}
