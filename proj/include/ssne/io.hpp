#pragma once
#include <map>
#include <string>
#include <vector>

#include "ssne/evaluation.hpp"
#include "ssne/graph.hpp"

namespace ssne {

// key=value reproducibility record, written next to every output.
using Manifest = std::map<std::string, std::string>;

void write_manifest(const Manifest& m, const std::string& path);

// FNV-1a over the file bytes, hex-encoded; good enough to pin inputs.
std::string file_digest(const std::string& path);

std::string format_fixed(double v, int decimals = 4);

// CSV emitters with fixed column order; floats carry 4 decimals.
void write_stats_csv(const GraphStats& s, const std::string& path);
void write_compare_csv(const std::vector<CompareRow>& rows, const std::string& path);
void write_grid_csv(const ExperimentGrid& grid, const std::string& path);

// split outputs: <prefix>.train.edges, <prefix>.test.edges, <prefix>.meta
void write_split(const TrainTestSplit& split, const std::string& prefix);

}  // namespace ssne
