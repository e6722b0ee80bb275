#pragma once

#include <string>
#include <vector>

#include "nefdual/nef_partition.hpp"

namespace nefdual {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // exact description of the first discrepancy; empty on pass
};

// Conv(nabla_1 u ... u nabla_r); verified to lie inside Delta*.
Polytope nabla(const NefPartition& np);

// Delta* = nabla_1 + ... + nabla_r
CheckResult verify_prop31(const NefPartition& np);
// nabla* = Delta_1 + ... + Delta_r
CheckResult verify_prop32(const NefPartition& np);
// nabla is reflexive
CheckResult verify_cor33(const NefPartition& np);
// The pairing relations between the Delta_j and nabla_i.
CheckResult verify_cor212(const NefPartition& np);

// The dual nef-partition on nabla. Part i is the set of nonzero vertices
// of nabla_i, expressed as vertex indices of nabla; 0 can be a vertex of
// nabla_i but never of nabla, so it is left out. Throws InvariantViolation
// if any step of the construction fails.
NefPartition dual_nef_partition(const NefPartition& np);

// Delta_i is recovered as the support polytope of psi_i.
CheckResult verify_cor35(const NefPartition& np, const NefPartition& dual);

// Applying the duality twice gives back Delta and the unlabeled parts.
CheckResult verify_involution(const NefPartition& np);

struct DualityResult {
  NefPartition source;
  Polytope nabla;
  std::optional<NefPartition> dual;  // absent only if the construction failed
  std::vector<CheckResult> checks;   // prop31, prop32, cor33, cor212, cor35, involution

  bool all_passed() const;
};

DualityResult run_full_duality(const NefPartition& np);

}  // namespace nefdual
