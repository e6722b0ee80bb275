#include "nefdual/report.hpp"

#include <algorithm>

namespace nefdual {

using nlohmann::json;

json to_json(const Point& p) {
  json out = json::array();
  for (const auto& x : p.coords) out.push_back(to_string(x));
  return out;
}

json to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return verts;
}

json to_json(const CheckResult& c) {
  return {{"passed", c.passed}, {"witness", c.passed ? json(nullptr) : json(c.witness)}};
}

namespace {

std::size_t file_index(std::size_t canonical, const std::vector<std::size_t>& file_to_canonical) {
  auto it = std::find(file_to_canonical.begin(), file_to_canonical.end(), canonical);
  return static_cast<std::size_t>(it - file_to_canonical.begin());
}

json base_report(const ReportInput& in) {
  json points = json::array();
  for (const auto& p : in.file.points) points.push_back(to_json(p));
  json input = {{"file", in.path}, {"dimension", in.file.dim}, {"points", points}};
  if (!in.file_parts.empty()) input["parts"] = in.file_parts;
  return {{"schema", kReportSchema}, {"command", in.command}, {"input", input}};
}

json canonical_section(const ReportInput& in, const Polytope& delta) {
  json out = {{"vertices", to_json(delta)}, {"file_to_canonical", in.file_to_canonical}};
  if (!in.file_parts.empty()) {
    std::vector<Part> parts;
    for (const auto& part : in.file_parts) {
      Part p;
      for (auto v : part) p.push_back(in.file_to_canonical[v]);
      std::sort(p.begin(), p.end());
      parts.push_back(std::move(p));
    }
    out["parts"] = parts;
  }
  return out;
}

json rejection_json(const Polytope& delta, const Rejection& r,
                    const std::vector<std::size_t>& file_to_canonical) {
  using K = Rejection::Kind;
  json out = {{"kind", to_string(r.kind)}, {"part", nullptr}, {"vertex", nullptr},
              {"cone", nullptr}, {"functional", nullptr}};
  if (r.kind != K::NotCovering) out["part"] = r.part;
  if (r.kind == K::NotDisjoint || r.kind == K::NotCovering || r.kind == K::NotConvex) {
    out["vertex"] = {{"file_index", file_index(r.vertex, file_to_canonical)},
                     {"coords", to_json(delta.vertices()[r.vertex])}};
  }
  if (r.kind == K::NotPiecewiseLinear || r.kind == K::NotIntegral || r.kind == K::NotConvex) {
    const auto& f = delta.facets()[r.cone];
    out["cone"] = {{"index", r.cone}, {"facet_normal", to_json(f.normal)},
                   {"facet_offset", to_string(f.offset)}};
  }
  if (r.functional) out["functional"] = to_json(*r.functional);
  return out;
}

json polytope_list(const std::vector<Polytope>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

}  // namespace

std::vector<Part> to_file_parts(const std::vector<Part>& canonical_parts,
                                const std::vector<std::size_t>& file_to_canonical) {
  std::vector<Part> out;
  for (const auto& part : canonical_parts) {
    Part p;
    for (auto v : part) p.push_back(file_index(v, file_to_canonical));
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  return out;
}

std::string rejection_text(const Polytope& delta, const Rejection& r,
                           const std::vector<std::size_t>& file_to_canonical) {
  using K = Rejection::Kind;
  std::string s = to_string(r.kind);
  if (r.kind != K::NotCovering) s += " part=" + std::to_string(r.part);
  if (r.kind == K::NotDisjoint || r.kind == K::NotCovering || r.kind == K::NotConvex) {
    s += " vertex=" + std::to_string(file_index(r.vertex, file_to_canonical)) + " " +
         to_string(delta.vertices()[r.vertex]);
  }
  if (r.kind == K::NotPiecewiseLinear || r.kind == K::NotIntegral || r.kind == K::NotConvex) {
    s += " cone=" + describe(delta.facets()[r.cone]);
  }
  if (r.functional) s += " functional=" + to_string(*r.functional);
  return s;
}

json validation_report(const ReportInput& in, const Polytope& delta,
                       const std::variant<NefPartition, Rejection>& result, double elapsed_ms) {
  json out = base_report(in);
  out["canonical"] = canonical_section(in, delta);
  if (const auto* np = std::get_if<NefPartition>(&result)) {
    out["valid"] = true;
    out["rejection"] = nullptr;
    out["delta_parts"] = polytope_list(np->delta_parts());
    out["nabla_parts"] = polytope_list(np->nabla_parts());
  } else {
    out["valid"] = false;
    out["rejection"] = rejection_json(delta, std::get<Rejection>(result), in.file_to_canonical);
  }
  out["timings"] = {{"total_ms", elapsed_ms}};
  return out;
}

json duality_report(const ReportInput& in, const DualityResult& result, double elapsed_ms) {
  const NefPartition& np = result.source;
  json out = base_report(in);
  out["canonical"] = canonical_section(in, np.delta());
  out["valid"] = true;
  out["rejection"] = nullptr;
  out["delta_parts"] = polytope_list(np.delta_parts());
  out["nabla_parts"] = polytope_list(np.nabla_parts());
  out["nabla"] = {{"vertices", to_json(result.nabla)}};
  json dual_parts = json::array();
  if (result.dual) {
    for (const auto& part : result.dual->parts()) {
      json verts = json::array();
      for (auto v : part) verts.push_back(to_json(result.nabla.vertices()[v]));
      dual_parts.push_back({{"indices", part}, {"vertices", verts}});
    }
  }
  out["dual_parts"] = dual_parts;
  json matrix = json::array();
  for (const auto& row : check_relations(np).matrix) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    matrix.push_back(r);
  }
  out["relation_matrix"] = matrix;
  json checks = json::object();
  for (const auto& c : result.checks) checks[c.name] = to_json(c);
  out["checks"] = checks;
  out["all_passed"] = result.all_passed();
  out["timings"] = {{"total_ms", elapsed_ms}};
  return out;
}

json enumeration_report(const ReportInput& in, std::size_t r,
                        const std::vector<std::vector<Part>>& file_partitions, double elapsed_ms) {
  json out = base_report(in);
  out["input"]["r"] = r;
  json list = json::array();
  for (const auto& parts : file_partitions) {
    list.push_back({{"spec", format_partition_spec(parts)}, {"parts", parts}});
  }
  out["partitions"] = list;
  out["count"] = file_partitions.size();
  out["timings"] = {{"total_ms", elapsed_ms}};
  return out;
}

}  // namespace nefdual
