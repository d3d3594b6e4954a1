#include "nilbij/bijection.hpp"

#include <stdexcept>

namespace nilbij {

namespace {

void require_operator_and_vector(const Matrix& t, const Vector& v) {
  if (!t.is_square()) throw Error(Errc::non_square, "T must be square");
  require_same_field(t.field(), v.field());
  if (v.size() != t.rows()) throw Error(Errc::dimension_mismatch, "v does not lie in the space T acts on");
}

}  // namespace

std::size_t degree(const Matrix& t, const Vector& v) { return orbit_basis(t, v).size(); }

std::vector<Vector> orbit_basis(const Matrix& t, const Vector& v) {
  require_operator_and_vector(t, v);
  if (!is_nilpotent(t)) throw Error(Errc::not_nilpotent, "T is not nilpotent");
  std::vector<Vector> orbit;
  for (Vector x = v; !x.is_zero(); x = t * x) {
    orbit.push_back(x);
    if (orbit.size() > t.rows()) throw std::logic_error("orbit of a nilpotent exceeded the dimension");
  }
  if (Subspace::span(t.field(), t.rows(), orbit).dim() != orbit.size()) {
    throw std::logic_error("iterates v, Tv, ... are linearly dependent");
  }
  return orbit;
}

Matrix forward(const Matrix& t, const Vector& v) {
  const FieldPtr& field = t.field();
  const std::size_t n = t.rows();

  auto orbit = orbit_basis(t, v);
  const Subspace span_v = Subspace::span(field, n, orbit);
  const Subspace comp = steinitz_complement(span_v);

  const auto blocks = block_decompose(t, span_v, comp);
  if (!is_nilpotent(blocks.uu.matrix())) {
    throw std::logic_error("diagonal block of a nilpotent is not nilpotent");
  }

  const Subspace graph = map_to_complement(blocks.uv);
  const SubspaceMap iso = canonical_iso(span_v, comp, graph);
  const SubspaceMap s = compose(iso, compose(blocks.uu, invert(iso)));
  const SubspaceMap r = basis_to_automorphism(make_ordered_basis(span_v, std::move(orbit)));

  return fitting_assemble(span_v, graph, r, s);
}

NilPointed inverse(const Matrix& q) {
  const auto [w, v_part, r, s] = fitting_decompose(q);
  const FieldPtr& field = q.field();
  const std::size_t n = q.rows();
  const std::size_t k = v_part.dim();

  const auto orbit = automorphism_to_basis(r).vectors;
  Vector v = k > 0 ? orbit.front() : Vector::zero(field, n);

  const Subspace comp = steinitz_complement(v_part);
  const SubspaceMap off_diagonal = complement_to_map(w, v_part, comp);
  const SubspaceMap iso = canonical_iso(v_part, comp, w);
  const SubspaceMap nil_block = compose(invert(iso), compose(s, iso));

  // T on the basis (orbit, comp basis), then change back to standard coordinates.
  std::vector<Vector> basis, images;
  basis.reserve(n);
  images.reserve(n);
  for (std::size_t j = 0; j < k; ++j) {
    basis.push_back(orbit[j]);
    images.push_back(j + 1 < k ? orbit[j + 1] : Vector::zero(field, n));
  }
  for (const auto& u : comp.basis()) {
    basis.push_back(u);
    images.push_back(off_diagonal(u) + nil_block(u));
  }
  Matrix t = Matrix::from_columns(field, n, images) * mat_inverse(Matrix::from_columns(field, n, basis));
  return NilPointed{std::move(t), std::move(v)};
}

}  // namespace nilbij
