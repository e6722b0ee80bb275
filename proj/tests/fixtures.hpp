#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nefdual/io.hpp"
#include "nefdual/polytope.hpp"

namespace fixtures {

inline std::string corpus_dir() { return std::string(NEFDUAL_DATA_DIR) + "/corpus"; }

inline nefdual::PolytopeFile file(const std::string& name) {
  return nefdual::read_polytope_file(corpus_dir() + "/" + name);
}

inline nefdual::Polytope polytope(const std::string& name) { return nefdual::hull(file(name).points); }

// Corpus polytope file names, sorted.
inline std::vector<std::string> corpus() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir())) {
    auto name = e.path().filename().string();
    if (name.ends_with(".txt") && name != "partitions.txt") out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BundledPartition {
  std::string file;
  std::string spec;
};

inline std::vector<BundledPartition> bundled_partitions() {
  std::ifstream in(corpus_dir() + "/partitions.txt");
  std::vector<BundledPartition> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    BundledPartition b;
    ss >> b.file >> b.spec;
    out.push_back(b);
  }
  return out;
}

// File-order parts converted to canonical vertex indices.
inline std::vector<nefdual::Part> canonical_parts(const std::string& name, const std::string& spec) {
  auto f = file(name);
  auto p = nefdual::hull(f.points);
  auto map = nefdual::file_to_canonical(f, p);
  std::vector<nefdual::Part> out;
  for (const auto& part : nefdual::parse_partition_spec(spec, f.points.size())) {
    nefdual::Part q;
    for (auto v : part) q.push_back(map[v]);
    out.push_back(q);
  }
  return out;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixtures
