#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nefdual/duality.hpp"
#include "nefdual/io.hpp"

namespace nefdual {

inline constexpr const char* kReportSchema = "nefdual.report/1";

// The user's input, with the bridge between file order and canonical order.
struct ReportInput {
  std::string command;
  std::string path;
  PolytopeFile file;
  std::vector<std::size_t> file_to_canonical;
  std::vector<Part> file_parts;  // empty for nef-enumerate
};

nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Polytope& p);
nlohmann::json to_json(const CheckResult& c);

nlohmann::json validation_report(const ReportInput& in, const Polytope& delta,
                                 const std::variant<NefPartition, Rejection>& result,
                                 double elapsed_ms);

nlohmann::json duality_report(const ReportInput& in, const DualityResult& result, double elapsed_ms);

nlohmann::json enumeration_report(const ReportInput& in, std::size_t r,
                                  const std::vector<std::vector<Part>>& file_partitions,
                                  double elapsed_ms);

// One-line human-readable rejection with coordinates instead of indices.
std::string rejection_text(const Polytope& delta, const Rejection& r,
                           const std::vector<std::size_t>& file_to_canonical);

// Converts canonical vertex indices to file indices; each part ascending.
std::vector<Part> to_file_parts(const std::vector<Part>& canonical_parts,
                                const std::vector<std::size_t>& file_to_canonical);

}  // namespace nefdual
