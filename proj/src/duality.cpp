#include "nefdual/duality.hpp"

#include <algorithm>
#include <optional>

namespace nefdual {

namespace {

Polytope sum_all(const std::vector<Polytope>& parts) {
  Polytope total = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) total = minkowski_sum(total, parts[i]);
  return total;
}

std::string vertex_list(const Polytope& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertices()[i]);
  }
  return s + "}";
}

// First vertex in the symmetric difference of two canonical vertex lists.
std::string mismatch(const Polytope& got, const Polytope& want) {
  for (const auto& v : got.vertices()) {
    if (!want.vertex_index(v)) return "extra vertex " + to_string(v) + " in " + vertex_list(got);
  }
  for (const auto& v : want.vertices()) {
    if (!got.vertex_index(v)) return "missing vertex " + to_string(v) + " in " + vertex_list(got);
  }
  return "polytopes differ";
}

CheckResult guarded(const std::string& name, const auto& body) {
  CheckResult out{name, false, {}};
  try {
    out.witness = body();
    out.passed = out.witness.empty();
  } catch (const std::exception& e) {
    out.witness = e.what();
  }
  return out;
}

}  // namespace

Polytope nabla(const NefPartition& np) {
  std::vector<Point> pts;
  for (const auto& part : np.nabla_parts()) {
    pts.insert(pts.end(), part.vertices().begin(), part.vertices().end());
  }
  Polytope out = hull(pts);
  const Polytope polar = polar_dual(np.delta());
  for (const auto& v : out.vertices()) {
    if (!contains(polar, v)) {
      throw InvariantViolation("nabla vertex " + to_string(v) + " lies outside Delta*");
    }
  }
  return out;
}

CheckResult verify_prop31(const NefPartition& np) {
  return guarded("prop31", [&]() -> std::string {
    Polytope sum = sum_all(np.nabla_parts());
    Polytope polar = polar_dual(np.delta());
    return sum == polar ? "" : "sum of nabla_i vs Delta*: " + mismatch(sum, polar);
  });
}

CheckResult verify_prop32(const NefPartition& np) {
  return guarded("prop32", [&]() -> std::string {
    Polytope polar = polar_dual(nabla(np));
    Polytope sum = sum_all(np.delta_parts());
    if (sum != polar) return "sum of Delta_i vs nabla*: " + mismatch(sum, polar);
    if (!is_lattice(polar)) return "nabla* is not a lattice polytope";
    return "";
  });
}

CheckResult verify_cor33(const NefPartition& np) {
  return guarded("cor33", [&]() -> std::string {
    auto check = check_reflexive(nabla(np));
    return check.reflexive ? "" : "nabla is not reflexive: " + check.reason;
  });
}

CheckResult verify_cor212(const NefPartition& np) {
  return guarded("cor212", [&]() -> std::string {
    auto report = check_relations(np);
    return report.passed() ? "" : report.witnesses.front();
  });
}

NefPartition dual_nef_partition(const NefPartition& np) {
  const Polytope big = nabla(np);
  const std::size_t r = np.size();
  std::vector<Part> parts(r);
  std::vector<int> owner(big.vertices().size(), -1);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& v : np.nabla_parts()[i].vertices()) {
      if (v.is_zero()) continue;
      auto idx = big.vertex_index(v);
      if (!idx) {
        throw InvariantViolation("vertex " + to_string(v) + " of nabla_" + std::to_string(i) +
                                 " is not a vertex of nabla");
      }
      if (owner[*idx] >= 0) {
        throw InvariantViolation("vertex " + to_string(v) + " lies in nabla_" +
                                 std::to_string(owner[*idx]) + " and nabla_" + std::to_string(i));
      }
      owner[*idx] = static_cast<int>(i);
      parts[i].push_back(*idx);
    }
    std::sort(parts[i].begin(), parts[i].end());
  }
  for (std::size_t v = 0; v < owner.size(); ++v) {
    if (owner[v] < 0) {
      throw InvariantViolation("vertex " + to_string(big.vertices()[v]) +
                               " of nabla belongs to no nabla_i");
    }
  }

  auto validated = validate_partition(big, parts);
  if (auto* rej = std::get_if<Rejection>(&validated)) {
    throw InvariantViolation("dual partition is not a nef-partition: " + describe(*rej));
  }
  NefPartition dual = std::move(std::get<NefPartition>(validated));

  for (std::size_t i = 0; i < r; ++i) {
    const Polytope& delta_i = np.delta_parts()[i];
    const PLFunction& psi = dual.phi()[i];
    for (std::size_t v = 0; v < big.vertices().size(); ++v) {
      const Point& y = big.vertices()[v];
      std::optional<Rational> mn;
      for (const auto& x : delta_i.vertices()) {
        Rational value = pairing(x, y);
        if (!mn || value < *mn) mn = value;
      }
      if (psi.vertex_values()[v] != -*mn) {
        throw InvariantViolation("psi_" + std::to_string(i) + "(" + to_string(y) +
                                 ") != -min over Delta_i of <x,y>");
      }
    }
    for (std::size_t c = 0; c < psi.functionals().size(); ++c) {
      Point piece = -psi.functionals()[c];
      if (!delta_i.vertex_index(piece)) {
        throw InvariantViolation("linear piece of psi_" + std::to_string(i) + " on cone " +
                                 std::to_string(c) + " is -<" + to_string(piece) +
                                 ",.> but that is not a vertex of Delta_i");
      }
    }
  }
  return dual;
}

CheckResult verify_cor35(const NefPartition& np, const NefPartition& dual) {
  return guarded("cor35", [&]() -> std::string {
    if (dual.size() != np.size()) return "dual has a different number of parts";
    for (std::size_t i = 0; i < np.size(); ++i) {
      Polytope recovered = support_polytope(dual.phi()[i]);
      if (recovered != np.delta_parts()[i]) {
        return "support polytope of psi_" + std::to_string(i) + " vs Delta_" + std::to_string(i) +
               ": " + mismatch(recovered, np.delta_parts()[i]);
      }
    }
    return "";
  });
}

CheckResult verify_involution(const NefPartition& np) {
  return guarded("involution", [&]() -> std::string {
    NefPartition twice = dual_nef_partition(dual_nef_partition(np));
    if (twice.delta() != np.delta()) {
      return "base polytope differs: " + mismatch(twice.delta(), np.delta());
    }
    if (twice.canonical_parts() != np.canonical_parts()) return "part family differs";
    return "";
  });
}

bool DualityResult::all_passed() const {
  return dual.has_value() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

DualityResult run_full_duality(const NefPartition& np) {
  DualityResult out{np, nabla(np), std::nullopt, {}};
  out.checks.push_back(verify_prop31(np));
  out.checks.push_back(verify_prop32(np));
  out.checks.push_back(verify_cor33(np));
  out.checks.push_back(verify_cor212(np));
  try {
    out.dual = dual_nef_partition(np);
    out.checks.push_back(verify_cor35(np, *out.dual));
  } catch (const std::exception& e) {
    out.checks.push_back({"cor35", false, e.what()});
  }
  out.checks.push_back(verify_involution(np));
  return out;
}

}  // namespace nefdual
