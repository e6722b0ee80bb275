#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nefdual/fan.hpp"
#include "nefdual/polytope.hpp"

namespace nefdual {

using Part = std::vector<std::size_t>;  // vertex indices, ascending

class NotReflexive : public GeometryError {
 public:
  explicit NotReflexive(const std::string& reason)
      : GeometryError("NotReflexive: " + reason) {}
};

// Why a vertex partition is not a nef-partition. Only the fields relevant
// to `kind` are meaningful.
struct Rejection {
  enum class Kind { EmptyPart, NotDisjoint, NotCovering, NotPiecewiseLinear, NotIntegral, NotConvex };
  Kind kind;
  std::size_t part = 0;
  std::size_t vertex = 0;
  std::size_t cone = 0;
  std::optional<Point> functional{};  // the offending u_sigma for NotIntegral / NotConvex

  bool operator==(const Rejection&) const = default;
};

const char* to_string(Rejection::Kind kind);
std::string describe(const Rejection& r);

// A reflexive polytope with a validated nef-partition of its vertices and
// everything derived from it. Parts keep the caller's labeling.
class NefPartition {
 public:
  const Polytope& delta() const { return fan_->base(); }
  const std::shared_ptr<const FaceFan>& fan() const { return fan_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Part>& parts() const { return parts_; }
  const std::vector<PLFunction>& phi() const { return phi_; }
  // Conv({0} u E_i)
  const std::vector<Polytope>& delta_parts() const { return delta_parts_; }
  // {y : <x,y> >= -phi_i(x)}
  const std::vector<Polytope>& nabla_parts() const { return nabla_parts_; }

  // Parts sorted by minimum vertex index.
  std::vector<Part> canonical_parts() const;

 private:
  friend std::variant<NefPartition, Rejection> validate_partition(const Polytope&,
                                                                  std::vector<Part>);
  std::shared_ptr<const FaceFan> fan_;
  std::vector<Part> parts_;
  std::vector<PLFunction> phi_;
  std::vector<Polytope> delta_parts_;
  std::vector<Polytope> nabla_parts_;
};

// Accepts the partition iff every indicator function extends to an
// integral convex function on the face fan. Throws NotReflexive for the
// base polytope and std::out_of_range for bad vertex indices. A successful
// result has already passed the structural invariants of Delta_i and
// nabla_i (InvariantViolation otherwise).
std::variant<NefPartition, Rejection> validate_partition(const Polytope& delta,
                                                         std::vector<Part> parts);

std::vector<Polytope> delta_parts(const NefPartition& np);
std::vector<Polytope> nabla_parts(const NefPartition& np);

struct RelationReport {
  // matrix[j][i] = min over x in vertices(Delta_j), y in vertices(nabla_i) of <x,y>
  std::vector<std::vector<Rational>> matrix;
  bool matrix_ok = true;
  bool pointwise_ok = true;
  bool phi_recovered_ok = true;
  std::vector<std::string> witnesses;  // one line per violation

  bool passed() const { return matrix_ok && pointwise_ok && phi_recovered_ok; }
};

RelationReport check_relations(const NefPartition& np);

// Every set partition of the vertices into exactly r nonempty parts that
// is a nef-partition, in canonical order. `threads` == 0 picks the
// NEFDUAL_THREADS environment variable (default 1).
std::vector<NefPartition> enumerate_nef_partitions(const Polytope& delta, std::size_t r,
                                                   unsigned threads = 0);

// All set partitions of {0..n-1} into exactly r nonempty blocks, each
// block ascending, blocks ordered by minimum, the list sorted.
std::vector<std::vector<Part>> set_partitions(std::size_t n, std::size_t r);

}  // namespace nefdual
