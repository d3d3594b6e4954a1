#pragma once

// Subspaces of F_q^n in canonical form, and the constructions on
// complementary pairs that the main bijection is built from.
//
// Every subspace carries a reference basis: the nonzero rows of the reduced
// row echelon form of any spanning set. Maps between subspaces are matrices
// in those reference bases, so equal maps have equal matrices.

#include <span>
#include <utility>
#include <vector>

#include "nilbij/linalg.hpp"

namespace nilbij {

class Subspace {
 public:
  /// The canonical span of `vectors` inside F_q^ambient.
  static Subspace span(FieldPtr field, std::size_t ambient, std::span<const Vector> vectors);
  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace full(FieldPtr field, std::size_t ambient);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Reference basis (RREF rows), ordered by pivot.
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& x) const;
  /// Coordinates of x in the reference basis. Throws NotInSubspace.
  Vector coords(const Vector& x) const;
  /// The vector with coordinates c in the reference basis.
  Vector embed(const Vector& c) const;

  bool operator==(const Subspace& o) const noexcept {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
  }

 private:
  Subspace(FieldPtr field, std::size_t ambient, std::vector<Vector> basis,
           std::vector<std::size_t> pivots);

  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace span(FieldPtr field, std::size_t ambient, std::span<const Vector> vectors) {
  return Subspace::span(std::move(field), ambient, vectors);
}
inline bool contains(const Subspace& v, const Vector& x) { return v.contains(x); }
inline Vector coords(const Subspace& v, const Vector& x) { return v.coords(x); }

bool are_complementary(const Subspace& v, const Subspace& u);

/// Splits the ambient space as V + U. Throws NotComplement unless the pair is complementary.
class DirectSum {
 public:
  DirectSum(const Subspace& v, const Subspace& u);

  /// Coordinates (in V's and U's reference bases) of the two components of x.
  std::pair<Vector, Vector> split(const Vector& x) const;

  const Subspace& first() const noexcept { return v_; }
  const Subspace& second() const noexcept { return u_; }

 private:
  Subspace v_;
  Subspace u_;
  Matrix to_coords_;  // inverse of [basis(V) | basis(U)] as columns
};

/// A linear map between two subspaces, as a (dim codomain) x (dim domain)
/// matrix in the reference bases.
class SubspaceMap {
 public:
  SubspaceMap(Subspace domain, Subspace codomain, Matrix matrix);

  static SubspaceMap identity(const Subspace& v);
  static SubspaceMap zero(const Subspace& domain, const Subspace& codomain);

  const Subspace& domain() const noexcept { return domain_; }
  const Subspace& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// Image of an ambient vector lying in the domain, as an ambient vector.
  Vector operator()(const Vector& x) const;

  bool operator==(const SubspaceMap& o) const noexcept {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
  }

 private:
  Subspace domain_;
  Subspace codomain_;
  Matrix matrix_;
};

/// g after f. Throws DimensionMismatch unless f's codomain is g's domain.
SubspaceMap compose(const SubspaceMap& g, const SubspaceMap& f);
/// Throws NotAutomorphism if the map is not invertible.
SubspaceMap invert(const SubspaceMap& f);

/// span{e_j : j not a pivot of V}.
Subspace steinitz_complement(const Subspace& v);

/// The isomorphism U -> W sending u to the unique w in W with w - u in V.
SubspaceMap canonical_iso(const Subspace& v, const Subspace& u, const Subspace& w);

/// Graph of f : U -> V, span{u + f(u)}. A complement of V when U is.
Subspace map_to_complement(const SubspaceMap& f);
/// The map U -> V whose graph is W; f(u) = i(u) - u for i = canonical_iso(V, U, W).
SubspaceMap complement_to_map(const Subspace& w, const Subspace& v, const Subspace& u);

struct BlockDecomposition {
  SubspaceMap vv;  // T restricted to V
  SubspaceMap uv;  // V-component of T on U
  SubspaceMap uu;  // U-component of T on U
};

/// Blocks of T relative to X = V + U with T V inside V. Throws NotInvariant / NotComplement.
BlockDecomposition block_decompose(const Matrix& t, const Subspace& v, const Subspace& u);

struct OrderedBasis {
  Subspace subspace;
  std::vector<Vector> vectors;
};

/// Throws NotBasis unless `vectors` is a basis of `subspace`.
OrderedBasis make_ordered_basis(const Subspace& subspace, std::vector<Vector> vectors);

/// The automorphism R of V with R(r_i) = b_i, where r is V's reference basis.
SubspaceMap basis_to_automorphism(const OrderedBasis& b);
/// (R(r_1), ..., R(r_m)). Throws NotAutomorphism if R is singular.
OrderedBasis automorphism_to_basis(const SubspaceMap& r);

}  // namespace nilbij
