#include "nefdual/nef_partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <optional>
#include <stdexcept>

namespace nefdual {

const char* to_string(Rejection::Kind kind) {
  switch (kind) {
    case Rejection::Kind::EmptyPart: return "EmptyPart";
    case Rejection::Kind::NotDisjoint: return "NotDisjoint";
    case Rejection::Kind::NotCovering: return "NotCovering";
    case Rejection::Kind::NotPiecewiseLinear: return "NotPiecewiseLinear";
    case Rejection::Kind::NotIntegral: return "NotIntegral";
    case Rejection::Kind::NotConvex: return "NotConvex";
  }
  return "?";
}

std::string describe(const Rejection& r) {
  std::string s = to_string(r.kind);
  using K = Rejection::Kind;
  switch (r.kind) {
    case K::EmptyPart:
      s += " part=" + std::to_string(r.part);
      break;
    case K::NotDisjoint:
      s += " part=" + std::to_string(r.part) + " vertex=" + std::to_string(r.vertex);
      break;
    case K::NotCovering:
      s += " vertex=" + std::to_string(r.vertex);
      break;
    case K::NotPiecewiseLinear:
      s += " part=" + std::to_string(r.part) + " cone=" + std::to_string(r.cone);
      break;
    case K::NotIntegral:
      s += " part=" + std::to_string(r.part) + " cone=" + std::to_string(r.cone);
      break;
    case K::NotConvex:
      s += " part=" + std::to_string(r.part) + " vertex=" + std::to_string(r.vertex) +
           " cone=" + std::to_string(r.cone);
      break;
  }
  if (r.functional) s += " functional=" + to_string(*r.functional);
  return s;
}

std::vector<Part> NefPartition::canonical_parts() const {
  std::vector<Part> out = parts_;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

std::vector<Polytope> build_delta_parts(const Polytope& delta, const std::vector<Part>& parts) {
  const Point zero = origin(delta.space(), delta.ambient_dim());
  std::vector<Polytope> out;
  for (const auto& part : parts) {
    std::vector<Point> pts{zero};
    for (auto v : part) pts.push_back(delta.vertices()[v]);
    out.push_back(hull(pts));
  }

  std::vector<Point> all;
  for (const auto& p : out) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  require(hull(all) == delta, "Conv(Delta_1 u ... u Delta_r) differs from Delta");
  const Polytope zero_poly = hull({zero});
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      auto meet = intersect(out[i], out[j]);
      require(meet && *meet == zero_poly, "Delta_" + std::to_string(i) + " and Delta_" +
                                              std::to_string(j) + " meet outside the origin");
    }
  }
  return out;
}

std::vector<Polytope> build_nabla_parts(const Polytope& delta, const std::vector<PLFunction>& phi) {
  const Polytope polar = polar_dual(delta);
  const Point zero = origin(polar.space(), polar.ambient_dim());
  std::vector<Polytope> out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Polytope nabla = support_polytope(phi[i]);
    const std::string name = "nabla_" + std::to_string(i);
    require(is_lattice(nabla), name + " is not a lattice polytope");
    require(contains(nabla, zero), name + " does not contain the origin");
    for (const auto& v : nabla.vertices()) {
      require(contains(polar, v), name + " vertex " + to_string(v) + " lies outside Delta*");
    }
    out.push_back(std::move(nabla));
  }

  PLFunction total = phi.front();
  for (std::size_t i = 1; i < phi.size(); ++i) total = total + phi[i];
  for (const auto& value : total.vertex_values()) {
    require(value == 1, "sum of the phi_i is not 1 on every vertex");
  }
  require(support_polytope(total) == polar, "support polytope of sum phi_i differs from Delta*");
  return out;
}

}  // namespace

std::variant<NefPartition, Rejection> validate_partition(const Polytope& delta,
                                                         std::vector<Part> parts) {
  auto reflexive = check_reflexive(delta);
  if (!reflexive.reflexive) throw NotReflexive(reflexive.reason);
  const std::size_t n = delta.vertices().size();
  if (parts.empty()) throw std::invalid_argument("validate_partition: no parts given");
  for (auto& part : parts) {
    for (auto v : part) {
      if (v >= n) {
        throw std::out_of_range("validate_partition: vertex index " + std::to_string(v) +
                                " out of range (polytope has " + std::to_string(n) + " vertices)");
      }
    }
    std::sort(part.begin(), part.end());
  }

  using K = Rejection::Kind;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) return Rejection{.kind = K::EmptyPart, .part = i};
  }
  std::vector<std::optional<std::size_t>> owner(n);
  std::optional<Rejection> overlap;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto v : parts[i]) {
      if (owner[v]) {
        if (!overlap || v < overlap->vertex) overlap = Rejection{.kind = K::NotDisjoint, .part = i, .vertex = v};
      } else {
        owner[v] = i;
      }
    }
  }
  if (overlap) return *overlap;
  for (std::size_t v = 0; v < n; ++v) {
    if (!owner[v]) return Rejection{.kind = K::NotCovering, .vertex = v};
  }

  auto fan = face_fan(delta);
  std::vector<PLFunction> phi;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Rational> values(n, Rational(0));
    for (auto v : parts[i]) values[v] = 1;
    auto built = pl_from_vertex_values(fan, std::move(values));
    if (auto* bad = std::get_if<NotPiecewiseLinear>(&built)) {
      return Rejection{.kind = K::NotPiecewiseLinear, .part = i, .cone = bad->cone};
    }
    auto& f = std::get<PLFunction>(built);
    if (auto cone = f.integrality_violation()) {
      return Rejection{K::NotIntegral, i, 0, *cone, f.functionals()[*cone]};
    }
    if (auto bad = f.convexity_violation()) {
      return Rejection{K::NotConvex, i, bad->vertex, bad->cone, f.functionals()[bad->cone]};
    }
    phi.push_back(std::move(f));
  }

  NefPartition np;
  np.fan_ = fan;
  np.delta_parts_ = build_delta_parts(delta, parts);
  np.nabla_parts_ = build_nabla_parts(delta, phi);
  np.parts_ = std::move(parts);
  np.phi_ = std::move(phi);
  return np;
}

std::vector<Polytope> delta_parts(const NefPartition& np) { return np.delta_parts(); }

std::vector<Polytope> nabla_parts(const NefPartition& np) { return np.nabla_parts(); }

RelationReport check_relations(const NefPartition& np) {
  const std::size_t r = np.size();
  RelationReport report;
  report.matrix.assign(r, std::vector<Rational>(r));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      const Rational bound = (i == j) ? -1 : 0;
      std::optional<Rational> mn;
      for (const auto& x : np.delta_parts()[j].vertices()) {
        for (const auto& y : np.nabla_parts()[i].vertices()) {
          Rational value = pairing(x, y);
          if (value < bound) {
            report.pointwise_ok = false;
            report.witnesses.push_back("<" + to_string(x) + "," + to_string(y) + "> = " +
                                       to_string(value) + " < " + to_string(bound) +
                                       " for Delta_" + std::to_string(j) + ", nabla_" +
                                       std::to_string(i));
          }
          if (!mn || value < *mn) mn = value;
        }
      }
      report.matrix[j][i] = *mn;
      if (*mn != bound) {
        report.matrix_ok = false;
        report.witnesses.push_back("m[" + std::to_string(j) + "][" + std::to_string(i) +
                                   "] = " + to_string(*mn) + ", expected " + to_string(bound));
      }
    }
  }

  const auto& verts = np.delta().vertices();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = 0; v < verts.size(); ++v) {
      std::optional<Rational> mn;
      for (const auto& y : np.nabla_parts()[i].vertices()) {
        Rational value = pairing(verts[v], y);
        if (!mn || value < *mn) mn = value;
      }
      if (-*mn != np.phi()[i].vertex_values()[v]) {
        report.phi_recovered_ok = false;
        report.witnesses.push_back("phi_" + std::to_string(i) + "(" + to_string(verts[v]) +
                                   ") = " + to_string(np.phi()[i].vertex_values()[v]) +
                                   " but -min <x,nabla_i> = " + to_string(Rational(-*mn)));
      }
    }
  }
  return report;
}

std::vector<std::vector<Part>> set_partitions(std::size_t n, std::size_t r) {
  std::vector<std::vector<Part>> out;
  if (r == 0 || r > n) return out;
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  auto emit = [&] {
    std::vector<Part> parts(r);
    for (std::size_t v = 0; v < n; ++v) parts[a[v]].push_back(v);
    out.push_back(std::move(parts));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (n - i < r - blocks) return;
    if (i == n) {
      if (blocks == r) emit();
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < r; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("NEFDUAL_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

}  // namespace

std::vector<NefPartition> enumerate_nef_partitions(const Polytope& delta, std::size_t r,
                                                   unsigned threads) {
  auto reflexive = check_reflexive(delta);
  if (!reflexive.reflexive) throw NotReflexive(reflexive.reason);
  const std::size_t n = delta.vertices().size();
  if (r < 1 || r > n) {
    throw std::invalid_argument("enumerate_nef_partitions: r must lie in [1, " +
                                std::to_string(n) + "]");
  }
  const auto candidates = set_partitions(n, r);
  std::vector<std::optional<NefPartition>> results(candidates.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < candidates.size(); k += step) {
      auto v = validate_partition(delta, candidates[k]);
      if (auto* np = std::get_if<NefPartition>(&v)) results[k] = std::move(*np);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(threads),
                                                           static_cast<unsigned>(candidates.size())));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, work, w, workers));
    for (auto& j : jobs) j.get();
  }
  std::vector<NefPartition> out;
  for (auto& res : results) {
    if (res) out.push_back(std::move(*res));
  }
  return out;
}

}  // namespace nefdual
