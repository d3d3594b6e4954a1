#include "nilbij/fitting.hpp"

namespace nilbij {

namespace {

SubspaceMap restrict_to(const Matrix& q, const Subspace& x) {
  std::vector<Vector> cols;
  cols.reserve(x.dim());
  for (const auto& b : x.basis()) {
    const Vector image = q * b;
    if (!x.contains(image)) throw Error(Errc::not_invariant, "subspace is not invariant");
    cols.push_back(x.coords(image));
  }
  return SubspaceMap(x, x, Matrix::from_columns(q.field(), x.dim(), cols));
}

Subspace kernel_of(const Matrix& m) {
  const auto basis = kernel_basis(m);
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace image_of(const Matrix& m) {
  const auto basis = image_basis(m);
  return Subspace::span(m.field(), m.rows(), basis);
}

}  // namespace

FittingPair fitting_decompose(const Matrix& q) {
  if (!q.is_square()) throw Error(Errc::non_square, "Fitting decomposition needs a square operator");
  const Matrix stable = mat_pow(q, q.rows());
  Subspace w = kernel_of(stable);
  Subspace v = image_of(stable);
  SubspaceMap r = restrict_to(q, v);
  SubspaceMap s = restrict_to(q, w);
  return FittingPair{std::move(w), std::move(v), std::move(r), std::move(s)};
}

Matrix fitting_assemble(const Subspace& v, const Subspace& w, const SubspaceMap& r, const SubspaceMap& s) {
  if (!(r.domain() == v) || !(r.codomain() == v)) {
    throw Error(Errc::dimension_mismatch, "R is not an operator on V");
  }
  if (!(s.domain() == w) || !(s.codomain() == w)) {
    throw Error(Errc::dimension_mismatch, "S is not an operator on W");
  }
  const DirectSum vw(v, w);
  if (!is_invertible(r.matrix())) throw Error(Errc::not_automorphism, "R is singular");
  if (!is_nilpotent(s.matrix())) throw Error(Errc::not_nilpotent, "S is not nilpotent");

  const std::size_t n = v.ambient_dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto [cv, cw] = vw.split(Vector::unit(v.field(), n, j));
    cols.push_back(v.embed(r.matrix() * cv) + w.embed(s.matrix() * cw));
  }
  return Matrix::from_columns(v.field(), n, cols);
}

std::vector<Subspace> kernel_chain(const Matrix& q, std::size_t max_power) {
  std::vector<Subspace> out;
  Matrix power = mat_pow(q, 0);
  for (std::size_t i = 0; i <= max_power; ++i) {
    out.push_back(kernel_of(power));
    power = power * q;
  }
  return out;
}

std::vector<Subspace> image_chain(const Matrix& q, std::size_t max_power) {
  std::vector<Subspace> out;
  Matrix power = mat_pow(q, 0);
  for (std::size_t i = 0; i <= max_power; ++i) {
    out.push_back(image_of(power));
    power = power * q;
  }
  return out;
}

}  // namespace nilbij
