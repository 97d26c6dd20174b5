#include "triadcert/linalg.hpp"

#include <utility>

#include "triadcert/kernels.hpp"

namespace triadcert {

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(FieldSpec field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::DimensionMismatch, "vectors need at least one entry");
  for (const auto& e : entries_)
    if (e.field() != field_) throw Error(ErrorCode::FieldMismatch, "vector entry from another field");
}

Vector Vector::zeros(FieldSpec field, std::size_t n) {
  return Vector(field, std::vector<Scalar>(n, field.zero()));
}

Vector Vector::unit(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zeros(field, n);
  v[i] = field.one();
  return v;
}

Vector Vector::from_codes(FieldSpec field, const std::vector<std::uint32_t>& codes) {
  std::vector<Scalar> entries;
  entries.reserve(codes.size());
  for (auto c : codes) entries.push_back(field.from_code(c));
  return Vector(field, std::move(entries));
}

std::vector<std::uint32_t> Vector::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.code());
  return out;
}

bool Vector::is_zero() const { return leading_index() == entries_.size(); }

std::size_t Vector::leading_index() const {
  std::size_t i = 0;
  while (i < entries_.size() && entries_[i].is_zero()) ++i;
  return i;
}

void Vector::require_shape(const Vector& o) const {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "vectors over different fields");
  if (o.size() != size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(size()) + " and " + std::to_string(o.size()));
}

Vector& Vector::operator+=(const Vector& o) {
  require_shape(o);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_shape(o);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  a.require_shape(b);
  return a.entries_ == b.entries_;
}

bool vector_less(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (scalar_less(a[i], b[i])) return true;
    if (scalar_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
  Matrix m(rows.front().field(), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_ || rows[r].field() != m.field_)
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::outer(const Vector& y, const Vector& z) {
  if (y.field() != z.field()) throw Error(ErrorCode::FieldMismatch, "outer product across fields");
  Matrix m(y.field(), y.size(), z.size());
  for (std::size_t r = 0; r < y.size(); ++r)
    for (std::size_t c = 0; c < z.size(); ++c) m(r, c) = y[r] * z[c];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return Vector(field_, std::move(out));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Scalar Functional::operator()(const Vector& v) const {
  if (v.size() != dim())
    throw Error(ErrorCode::DimensionMismatch,
                "functional on dimension " + std::to_string(dim()) + " applied to length " + std::to_string(v.size()));
  Scalar acc = field().zero();
  for (std::size_t i = 0; i < v.size(); ++i) acc += coefficients_[i] * v[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Elimination

EchelonForm rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t mat_rank(const Matrix& m) {
  if (m.field().finite()) {
    std::vector<kernels::Code> codes(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) codes[r * m.cols() + c] = m(r, c).code();
    return kernels::rank_inplace(m.field().data(), codes, m.rows(), m.cols());
  }
  return rref(m).pivots.size();
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
  const EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = Vector::unit(m.field(), m.cols(), f);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  const EchelonForm canon = rref(Matrix::from_rows(basis));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < canon.pivots.size(); ++r) out.push_back(canon.reduced.row(r));
  return out;
}

std::size_t span_dim(const std::vector<Vector>& vs) {
  if (vs.empty()) return 0;
  return mat_rank(Matrix::from_rows(vs));
}

std::vector<std::size_t> independent_prefix_basis(const std::vector<Vector>& vs) {
  std::vector<std::size_t> chosen;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    rows.push_back(vs[i]);
    if (span_dim(rows) == rows.size()) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

std::optional<std::vector<Scalar>> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  // Solve [b_1 ... b_d] c = v via the reduced form of the augmented system.
  std::vector<Vector> cols = basis;
  cols.push_back(v);
  const EchelonForm ef = rref(Matrix::from_columns(cols));
  const std::size_t d = basis.size();
  if (!ef.pivots.empty() && ef.pivots.back() == d) return std::nullopt;
  std::vector<Scalar> c(d, v.field().zero());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) c[ef.pivots[r]] = ef.reduced(r, d);
  return c;
}

// ---------------------------------------------------------------------------
// Projective enumeration

std::uint64_t projective_count(const FieldSpec& field, std::size_t dim) {
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "projective enumeration over the rationals");
  return kernels::projective_count(field.order(), dim);
}

Vector projective_point(const FieldSpec& field, std::size_t dim, std::uint64_t index) {
  std::vector<kernels::Code> codes(dim);
  kernels::unrank_projective(field.data(), index, codes);
  return Vector::from_codes(field, codes);
}

std::vector<Functional> projective_functionals(const FieldSpec& field, std::size_t dim) {
  const std::uint64_t count = projective_count(field, dim);
  if (count == kernels::kCountOverflow) throw Error(ErrorCode::CapExceeded, "too many hyperplanes");
  std::vector<Functional> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(projective_point(field, dim, i));
  return out;
}

Vector normalize_projective(Vector v) {
  const std::size_t lead = v.leading_index();
  if (lead == v.size()) return v;
  v *= v[lead].inverse();
  return v;
}

bool is_parallel(const Vector& a, const Vector& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "parallelism across fields");
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "parallelism across dimensions");
  return span_dim({a, b}) <= 1;
}

}  // namespace triadcert
