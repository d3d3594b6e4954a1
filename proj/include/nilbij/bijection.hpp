#pragma once

// The bijection Nil(X) x X <-> Lin(X) for X = F_q^n.
//
// forward(T, v):
//   V = span{v, Tv, T^2 v, ...} with ordered basis (v, Tv, ..., T^{k-1} v),
//   V' = steinitz_complement(V), and T splits into T|V, T_{V'V}, T_{V'V'}.
//   The off-diagonal block becomes the complement W = graph(T_{V'V}),
//   T_{V'V'} is transported to a nilpotent S on W along canonical_iso,
//   and the ordered basis becomes an automorphism R of V. The result is the
//   operator with Fitting pair (W, V, R, S).
//
// inverse(Q) runs the same steps backwards from the Fitting decomposition.

#include <vector>

#include "nilbij/fitting.hpp"

namespace nilbij {

struct NilPointed {
  Matrix t;  // nilpotent
  Vector v;

  bool operator==(const NilPointed&) const = default;
};

/// Least k >= 0 with T^k v = 0. Throws NotNilpotent.
std::size_t degree(const Matrix& t, const Vector& v);

/// (v, Tv, ..., T^{k-1} v) for k = degree(t, v).
std::vector<Vector> orbit_basis(const Matrix& t, const Vector& v);

/// Throws NotNilpotent when t is not nilpotent.
Matrix forward(const Matrix& t, const Vector& v);
inline Matrix forward(const NilPointed& tv) { return forward(tv.t, tv.v); }

NilPointed inverse(const Matrix& q);

}  // namespace nilbij
