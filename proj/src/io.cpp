#include "ssne/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "ssne/errors.hpp"

namespace ssne {

void write_manifest(const Manifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& [k, v] : m) out << k << '=' << v << '\n';
  if (!out) throw IoError("write failed: " + path);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void write_stats_csv(const GraphStats& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "n,m,avg_degree,edge_sparsity,avg_distance,clustering,heterogeneity,"
         "distance_exact\n";
  out << s.n << ',' << s.m << ',' << format_fixed(s.avg_degree) << ','
      << format_fixed(s.edge_sparsity) << ',' << format_fixed(s.avg_distance) << ','
      << format_fixed(s.clustering) << ',' << format_fixed(s.heterogeneity) << ','
      << (s.distance_exact ? 1 : 0) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_compare_csv(const std::vector<CompareRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "scorer,mean_auc,sd,params\n";
  for (const auto& r : rows)
    out << r.scorer << ',' << format_fixed(r.mean_auc) << ',' << format_fixed(r.sd)
        << ',' << r.params << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_grid_csv(const ExperimentGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "h,p,mean_auc,sd,error\n";
  for (const auto& c : grid.cells) {
    out << c.h << ',' << format_fixed(c.p) << ',';
    if (c.error.empty())
      out << format_fixed(c.mean_auc) << ',' << format_fixed(c.sd) << ",\n";
    else
      out << ",," << c.error << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_split(const TrainTestSplit& split, const std::string& prefix) {
  save_edge_list_file(split.train, prefix + ".train.edges");

  std::ofstream test(prefix + ".test.edges");
  if (!test) throw IoError("cannot write " + prefix + ".test.edges");
  auto name = [&](int u) -> long long {
    return split.train.original_ids.empty() ? u : split.train.original_ids[u];
  };
  for (auto [u, v] : split.hidden_edges) test << name(u) << ' ' << name(v) << '\n';
  if (!test) throw IoError("write failed: " + prefix + ".test.edges");

  Manifest meta;
  meta["seed"] = std::to_string(split.seed);
  meta["fraction"] = format_fixed(split.fraction, 6);
  meta["requested"] = std::to_string(split.requested);
  meta["hidden"] = std::to_string(split.hidden_edges.size());
  meta["shortfall"] = split.shortfall() ? "1" : "0";
  write_manifest(meta, prefix + ".meta");
}

}  // namespace ssne
