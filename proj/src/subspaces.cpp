#include "nilbij/subspaces.hpp"

#include <string>

namespace nilbij {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::dimension_mismatch, "ambient dimensions " + dims(a.ambient_dim(), b.ambient_dim()));
  }
}

Matrix coordinate_columns(const Subspace& target, std::span<const Vector> vectors) {
  std::vector<Vector> cols;
  cols.reserve(vectors.size());
  for (const auto& x : vectors) cols.push_back(target.coords(x));
  return Matrix::from_columns(target.field(), target.dim(), cols);
}

}  // namespace

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(FieldPtr field, std::size_t ambient, std::vector<Vector> basis,
                   std::vector<std::size_t> pivots)
    : field_(std::move(field)), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::span<const Vector> vectors) {
  std::vector<Code> data;
  data.reserve(vectors.size() * ambient);
  for (const auto& x : vectors) {
    require_same_field(field, x.field());
    if (x.size() != ambient) {
      throw Error(Errc::dimension_mismatch, "vector length " + dims(x.size(), ambient));
    }
    data.insert(data.end(), x.entries().begin(), x.entries().end());
  }
  auto [reduced, pivots] = rref(Matrix(field, vectors.size(), ambient, std::move(data)));
  std::vector<Vector> basis;
  basis.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(reduced.row(i));
  return Subspace(std::move(field), ambient, std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
  return Subspace(std::move(field), ambient, {}, {});
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < ambient; ++i) {
    basis.push_back(Vector::unit(field, ambient, i));
    pivots.push_back(i);
  }
  return Subspace(std::move(field), ambient, std::move(basis), std::move(pivots));
}

bool Subspace::contains(const Vector& x) const {
  require_same_field(field_, x.field());
  if (x.size() != ambient_) throw Error(Errc::dimension_mismatch, "vector length " + dims(x.size(), ambient_));
  // In RREF, the coefficient of basis row i is the entry of x at pivot i.
  Vector rest = x;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Code c = rest[pivots_[i]];
    if (c != 0) rest = rest - basis_[i].scaled(c);
  }
  return rest.is_zero();
}

Vector Subspace::coords(const Vector& x) const {
  if (!contains(x)) throw Error(Errc::not_in_subspace, "vector lies outside the subspace");
  std::vector<Code> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = x[pivots_[i]];
  return Vector(field_, std::move(c));
}

Vector Subspace::embed(const Vector& c) const {
  require_same_field(field_, c.field());
  if (c.size() != dim()) throw Error(Errc::dimension_mismatch, "coordinate length " + dims(c.size(), dim()));
  Vector out = Vector::zero(field_, ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (c[i] != 0) out = out + basis_[i].scaled(c[i]);
  }
  return out;
}

bool are_complementary(const Subspace& v, const Subspace& u) {
  require_same_ambient(v, u);
  if (v.dim() + u.dim() != v.ambient_dim()) return false;
  std::vector<Vector> all = v.basis();
  all.insert(all.end(), u.basis().begin(), u.basis().end());
  return Subspace::span(v.field(), v.ambient_dim(), all).dim() == v.ambient_dim();
}

// ---------------------------------------------------------------- DirectSum

DirectSum::DirectSum(const Subspace& v, const Subspace& u)
    : v_(v), u_(u), to_coords_(v.field(), 0, 0) {
  if (!are_complementary(v, u)) throw Error(Errc::not_complement, "subspaces are not complementary");
  std::vector<Vector> cols = v.basis();
  cols.insert(cols.end(), u.basis().begin(), u.basis().end());
  to_coords_ = mat_inverse(Matrix::from_columns(v.field(), v.ambient_dim(), cols));
}

std::pair<Vector, Vector> DirectSum::split(const Vector& x) const {
  const Vector c = to_coords_ * x;
  const auto all = c.entries();
  const auto m = static_cast<std::ptrdiff_t>(v_.dim());
  return {Vector(v_.field(), std::vector<Code>(all.begin(), all.begin() + m)),
          Vector(v_.field(), std::vector<Code>(all.begin() + m, all.end()))};
}

// ---------------------------------------------------------------- SubspaceMap

SubspaceMap::SubspaceMap(Subspace domain, Subspace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  require_same_field(domain_.field(), codomain_.field());
  require_same_field(domain_.field(), matrix_.field());
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw Error(Errc::dimension_mismatch, "map matrix is " + std::to_string(matrix_.rows()) + "x" +
                                              std::to_string(matrix_.cols()) + ", subspaces have dim " +
                                              dims(codomain_.dim(), domain_.dim()));
  }
}

SubspaceMap SubspaceMap::identity(const Subspace& v) {
  return SubspaceMap(v, v, Matrix::identity(v.field(), v.dim()));
}

SubspaceMap SubspaceMap::zero(const Subspace& domain, const Subspace& codomain) {
  return SubspaceMap(domain, codomain, Matrix(domain.field(), codomain.dim(), domain.dim()));
}

Vector SubspaceMap::operator()(const Vector& x) const {
  return codomain_.embed(matrix_ * domain_.coords(x));
}

SubspaceMap compose(const SubspaceMap& g, const SubspaceMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(Errc::dimension_mismatch, "composition of maps with mismatched subspaces");
  }
  return SubspaceMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

SubspaceMap invert(const SubspaceMap& f) {
  if (f.domain().dim() != f.codomain().dim()) {
    throw Error(Errc::not_automorphism, "map between subspaces of different dimension");
  }
  return SubspaceMap(f.codomain(), f.domain(), mat_inverse(f.matrix()));
}

// ---------------------------------------------------------------- constructions

Subspace steinitz_complement(const Subspace& v) {
  std::vector<bool> pivot(v.ambient_dim(), false);
  for (auto c : v.pivots()) pivot[c] = true;
  std::vector<Vector> units;
  for (std::size_t j = 0; j < v.ambient_dim(); ++j) {
    if (!pivot[j]) units.push_back(Vector::unit(v.field(), v.ambient_dim(), j));
  }
  return Subspace::span(v.field(), v.ambient_dim(), units);
}

SubspaceMap canonical_iso(const Subspace& v, const Subspace& u, const Subspace& w) {
  if (!are_complementary(v, u)) throw Error(Errc::not_complement, "U is not a complement of V");
  const DirectSum vw(v, w);
  std::vector<Vector> cols;
  cols.reserve(u.dim());
  // u = v' + w with v' in V, so w is the element of W with w - u in V.
  for (const auto& b : u.basis()) cols.push_back(vw.split(b).second);
  return SubspaceMap(u, w, Matrix::from_columns(v.field(), w.dim(), cols));
}

Subspace map_to_complement(const SubspaceMap& f) {
  const Subspace& u = f.domain();
  const Subspace& v = f.codomain();
  if (!are_complementary(v, u)) throw Error(Errc::not_complement, "domain and codomain are not complementary");
  std::vector<Vector> graph;
  graph.reserve(u.dim());
  for (const auto& b : u.basis()) graph.push_back(b + f(b));
  return Subspace::span(u.field(), u.ambient_dim(), graph);
}

SubspaceMap complement_to_map(const Subspace& w, const Subspace& v, const Subspace& u) {
  if (!are_complementary(v, u)) throw Error(Errc::not_complement, "U is not a complement of V");
  const DirectSum vw(v, w);
  std::vector<Vector> cols;
  cols.reserve(u.dim());
  // u = v' + i(u), so f(u) = i(u) - u = -v'.
  for (const auto& b : u.basis()) cols.push_back(-vw.split(b).first);
  return SubspaceMap(u, v, Matrix::from_columns(v.field(), v.dim(), cols));
}

BlockDecomposition block_decompose(const Matrix& t, const Subspace& v, const Subspace& u) {
  require_same_field(t.field(), v.field());
  if (!t.is_square() || t.rows() != v.ambient_dim()) {
    throw Error(Errc::dimension_mismatch, "operator does not act on the ambient space");
  }
  const DirectSum vu(v, u);

  std::vector<Vector> vv_cols;
  for (const auto& b : v.basis()) {
    const Vector image = t * b;
    if (!v.contains(image)) throw Error(Errc::not_invariant, "T does not map V into V");
    vv_cols.push_back(v.coords(image));
  }
  std::vector<Vector> uv_cols, uu_cols;
  for (const auto& b : u.basis()) {
    auto [cv, cu] = vu.split(t * b);
    uv_cols.push_back(std::move(cv));
    uu_cols.push_back(std::move(cu));
  }
  const FieldPtr& f = t.field();
  return BlockDecomposition{
      SubspaceMap(v, v, Matrix::from_columns(f, v.dim(), vv_cols)),
      SubspaceMap(u, v, Matrix::from_columns(f, v.dim(), uv_cols)),
      SubspaceMap(u, u, Matrix::from_columns(f, u.dim(), uu_cols)),
  };
}

// ---------------------------------------------------------------- torsor

OrderedBasis make_ordered_basis(const Subspace& subspace, std::vector<Vector> vectors) {
  if (vectors.size() != subspace.dim()) {
    throw Error(Errc::not_basis, "expected " + std::to_string(subspace.dim()) + " vectors, got " +
                                     std::to_string(vectors.size()));
  }
  for (const auto& x : vectors) {
    if (!subspace.contains(x)) throw Error(Errc::not_basis, "vector lies outside the subspace");
  }
  if (!is_invertible(coordinate_columns(subspace, vectors))) {
    throw Error(Errc::not_basis, "vectors are linearly dependent");
  }
  return OrderedBasis{subspace, std::move(vectors)};
}

SubspaceMap basis_to_automorphism(const OrderedBasis& b) {
  const Matrix m = coordinate_columns(b.subspace, b.vectors);
  if (!is_invertible(m)) throw Error(Errc::not_basis, "vectors are not a basis");
  return SubspaceMap(b.subspace, b.subspace, m);
}

OrderedBasis automorphism_to_basis(const SubspaceMap& r) {
  if (!(r.domain() == r.codomain())) {
    throw Error(Errc::not_automorphism, "map is not an operator on one subspace");
  }
  if (!is_invertible(r.matrix())) throw Error(Errc::not_automorphism, "map is singular");
  std::vector<Vector> out;
  out.reserve(r.domain().dim());
  for (std::size_t j = 0; j < r.domain().dim(); ++j) out.push_back(r.domain().embed(r.matrix().column(j)));
  return OrderedBasis{r.domain(), std::move(out)};
}

}  // namespace nilbij
