#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nefdual/nef_partition.hpp"
#include "nefdual/polytope.hpp"

namespace nefdual {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Points as listed in a polytope file, in file order.
//
//   # comment
//   d n
//   x_11 ... x_1d
//   ...
//
// Coordinates are integers or "p/q" rationals.
struct PolytopeFile {
  std::size_t dim = 0;
  std::vector<Point> points;
};

PolytopeFile parse_polytope_file(std::istream& in, Space space = Space::M);
PolytopeFile parse_polytope_file(std::string_view text, Space space = Space::M);
PolytopeFile read_polytope_file(const std::string& path, Space space = Space::M);

// Header plus the canonical vertex list.
std::string write_polytope_file(const Polytope& p);

// "0,2;1,3": semicolon-separated parts of zero-based indices. Rejects empty
// parts, out-of-range indices and repeated indices.
std::vector<Part> parse_partition_spec(std::string_view spec, std::size_t point_count);

std::string format_partition_spec(const std::vector<Part>& parts);

// Maps file-order points to canonical vertex indices of `p`. Throws
// ParseError if a point is repeated or is not a vertex.
std::vector<std::size_t> file_to_canonical(const PolytopeFile& file, const Polytope& p);

}  // namespace nefdual
