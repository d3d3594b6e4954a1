#include "nilbij/linalg.hpp"

#include <string>
#include <utility>

namespace nilbij {

namespace {

void check_codes(const FieldPtr& field, std::span<const Code> codes) {
  if (!field) throw Error(Errc::invalid_field, "null field");
  for (Code c : codes) {
    if (!field->contains(c)) {
      throw Error(Errc::invalid_field, "element code " + std::to_string(c) + " outside GF(" +
                                           std::to_string(field->order()) + ")");
    }
  }
}

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_square(const Matrix& t) {
  if (!t.is_square()) throw Error(Errc::non_square, "operator is " + shape(t.rows(), t.cols()));
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(FieldPtr field, std::vector<Code> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  check_codes(field_, entries_);
}

Vector Vector::zero(FieldPtr field, std::size_t n) {
  return Vector(std::move(field), std::vector<Code>(n, 0));
}

Vector Vector::unit(FieldPtr field, std::size_t n, std::size_t i) {
  std::vector<Code> e(n, 0);
  e.at(i) = 1;
  return Vector(std::move(field), std::move(e));
}

void Vector::set(std::size_t i, Code c) {
  if (!field_->contains(c)) throw Error(Errc::invalid_field, "element code out of range");
  entries_.at(i) = c;
}

bool Vector::is_zero() const noexcept {
  for (Code c : entries_) {
    if (c != 0) return false;
  }
  return true;
}

Vector Vector::operator+(const Vector& o) const {
  require_same_field(field_, o.field_);
  if (size() != o.size()) throw Error(Errc::dimension_mismatch, "vector lengths differ");
  Vector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = field_->add(entries_[i], o.entries_[i]);
  return out;
}

Vector Vector::operator-(const Vector& o) const { return *this + (-o); }

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& c : out.entries_) c = field_->neg(c);
  return out;
}

Vector Vector::scaled(Code c) const {
  Vector out = *this;
  for (auto& e : out.entries_) e = field_->mul(c, e);
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw Error(Errc::invalid_field, "null field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::dimension_mismatch, "data has " + std::to_string(data_.size()) +
                                              " entries for a " + shape(rows_, cols_) + " matrix");
  }
  check_codes(field_, data_);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Code>>& rows,
                         std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  std::vector<Code> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::dimension_mismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_field(field, columns[j].field());
    if (columns[j].size() != rows) throw Error(Errc::dimension_mismatch, "column length differs");
    for (std::size_t i = 0; i < rows; ++i) m.data_[i * m.cols_ + j] = columns[j][i];
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Code c) {
  if (i >= rows_ || j >= cols_) throw Error(Errc::dimension_mismatch, "index out of range");
  if (!field_->contains(c)) throw Error(Errc::invalid_field, "element code out of range");
  data_[i * cols_ + j] = c;
}

Vector Matrix::row(std::size_t i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return Vector(field_, std::vector<Code>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Code> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
  return Vector(field_, std::move(out));
}

bool Matrix::is_zero() const noexcept {
  for (Code c : data_) {
    if (c != 0) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(Errc::dimension_mismatch, shape(rows_, cols_) + " + " + shape(o.rows_, o.cols_));
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(Errc::dimension_mismatch, shape(rows_, cols_) + " - " + shape(o.rows_, o.cols_));
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
  return out;
}

// ---------------------------------------------------------------- products

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw Error(Errc::dimension_mismatch,
                shape(a.rows(), a.cols()) + " * " + shape(b.rows(), b.cols()));
  }
  const Field& f = *a.field();
  std::vector<Code> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Code ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Code& slot = out[i * b.cols() + j];
        slot = f.add(slot, f.mul(ail, b(l, j)));
      }
    }
  }
  return Matrix(a.field(), a.rows(), b.cols(), std::move(out));
}

Vector apply(const Matrix& t, const Vector& x) {
  require_same_field(t.field(), x.field());
  if (t.cols() != x.size()) {
    throw Error(Errc::dimension_mismatch,
                shape(t.rows(), t.cols()) + " applied to length " + std::to_string(x.size()));
  }
  const Field& f = *t.field();
  std::vector<Code> out(t.rows(), 0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Code acc = 0;
    for (std::size_t j = 0; j < t.cols(); ++j) acc = f.add(acc, f.mul(t(i, j), x[j]));
    out[i] = acc;
  }
  return Vector(t.field(), std::move(out));
}

Matrix mat_pow(const Matrix& t, std::uint64_t e) {
  require_square(t);
  Matrix result = Matrix::identity(t.field(), t.rows());
  Matrix base = t;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- echelon

Rref rref(const Matrix& a) {
  const Field& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Code> m(a.data().begin(), a.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> Code& { return m[i * cols + j]; };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
    }
    const Code lead_inv = f.inv(at(r, c));
    for (std::size_t j = c; j < cols; ++j) at(r, j) = f.mul(lead_inv, at(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Code factor = at(i, c);
      for (std::size_t j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{Matrix(a.field(), rows, cols, std::move(m)), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  const auto [reduced, pivots] = rref(a);
  const Field& f = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Code> x(a.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(reduced(i, free));
    basis.emplace_back(a.field(), std::move(x));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& a) {
  std::vector<Vector> basis;
  for (auto c : rref(a).pivots) basis.push_back(a.column(c));
  return basis;
}

bool is_invertible(const Matrix& t) {
  require_square(t);
  return rank(t) == t.rows();
}

bool is_nilpotent(const Matrix& t) {
  require_square(t);
  return mat_pow(t, t.rows()).is_zero();
}

Matrix mat_inverse(const Matrix& t) {
  require_square(t);
  const std::size_t n = t.rows();
  Matrix augmented(t.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented.set(i, j, t(i, j));
    augmented.set(i, n + i, 1);
  }
  const auto [reduced, pivots] = rref(augmented);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error(Errc::not_automorphism, "matrix is singular");
  }
  Matrix out(t.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, reduced(i, n + j));
  }
  return out;
}

}  // namespace nilbij
