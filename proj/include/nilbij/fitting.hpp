#pragma once

#include <vector>

#include "nilbij/subspaces.hpp"

namespace nilbij {

/// X = W + V with Q nilpotent on W and invertible on V, both Q-invariant.
struct FittingPair {
  Subspace w;     // union of ker Q^i
  Subspace v;     // intersection of im Q^i
  SubspaceMap r;  // Q restricted to V
  SubspaceMap s;  // Q restricted to W

  bool operator==(const FittingPair&) const = default;
};

/// W = ker Q^n, V = im Q^n; both chains are stable from i = n on.
FittingPair fitting_decompose(const Matrix& q);

/// The operator acting as R on V and S on W. Throws NotComplement,
/// NotAutomorphism (R singular) or NotNilpotent (S not nilpotent).
Matrix fitting_assemble(const Subspace& v, const Subspace& w, const SubspaceMap& r, const SubspaceMap& s);

/// ker(Q^i) and im(Q^i) for i = 0..max_power.
std::vector<Subspace> kernel_chain(const Matrix& q, std::size_t max_power);
std::vector<Subspace> image_chain(const Matrix& q, std::size_t max_power);

}  // namespace nilbij
