#include "nefdual/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace nefdual {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     token + "'");
  }
  return std::stoul(token);
}

}  // namespace

PolytopeFile parse_polytope_file(std::istream& in, Space space) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("missing header line 'd n'");
  auto header = tokens(line);
  if (header.size() != 2) {
    throw ParseError("line " + std::to_string(line_no) + ": header must be 'd n'");
  }
  PolytopeFile file;
  file.dim = parse_count(header[0], line_no);
  std::size_t n = parse_count(header[1], line_no);
  if (file.dim == 0) throw ParseError("dimension must be positive");
  if (n == 0) throw ParseError("a polytope file needs at least one point");
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(n) + " points, found " + std::to_string(i));
    }
    auto row = tokens(line);
    if (row.size() != file.dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(file.dim) + " coordinates, got " +
                       std::to_string(row.size()));
    }
    Point p(space, {});
    for (const auto& t : row) {
      try {
        p.coords.push_back(parse_rational(t));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    file.points.push_back(std::move(p));
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing content after " +
                     std::to_string(n) + " points");
  }
  return file;
}

PolytopeFile parse_polytope_file(std::string_view text, Space space) {
  std::istringstream in{std::string(text)};
  return parse_polytope_file(in, space);
}

PolytopeFile read_polytope_file(const std::string& path, Space space) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_polytope_file(in, space);
}

std::string write_polytope_file(const Polytope& p) {
  std::string out = std::to_string(p.ambient_dim()) + " " + std::to_string(p.vertices().size()) + "\n";
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (j) out += ' ';
      out += to_string(v[j]);
    }
    out += '\n';
  }
  return out;
}

std::vector<Part> parse_partition_spec(std::string_view spec, std::size_t point_count) {
  if (spec.empty()) throw ParseError("empty partition spec");
  std::vector<Part> parts;
  std::vector<bool> seen(point_count, false);
  std::size_t start = 0;
  while (true) {
    auto end = spec.find(';', start);
    auto text = spec.substr(start, end == std::string_view::npos ? spec.npos : end - start);
    if (text.empty()) throw ParseError("partition spec '" + std::string(spec) + "' has an empty part");
    Part part;
    std::size_t s = 0;
    while (true) {
      auto comma = text.find(',', s);
      std::string item(text.substr(s, comma == std::string_view::npos ? text.npos : comma - s));
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("partition spec: bad index '" + item + "'");
      }
      std::size_t idx = std::stoul(item);
      if (idx >= point_count) {
        throw ParseError("partition spec: index " + item + " out of range (" +
                         std::to_string(point_count) + " points)");
      }
      if (seen[idx]) throw ParseError("partition spec: index " + item + " appears twice");
      seen[idx] = true;
      part.push_back(idx);
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    parts.push_back(std::move(part));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::string format_partition_spec(const std::vector<Part>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(parts[i][j]);
    }
  }
  return out;
}

std::vector<std::size_t> file_to_canonical(const PolytopeFile& file, const Polytope& p) {
  std::vector<std::size_t> map;
  std::vector<bool> used(p.vertices().size(), false);
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    auto idx = p.vertex_index(file.points[i]);
    if (!idx) {
      throw ParseError("point " + std::to_string(i) + " " + to_string(file.points[i]) +
                       " is not a vertex of the polytope");
    }
    if (used[*idx]) {
      throw ParseError("point " + std::to_string(i) + " " + to_string(file.points[i]) +
                       " is listed twice");
    }
    used[*idx] = true;
    map.push_back(*idx);
  }
  return map;
}

}  // namespace nefdual
