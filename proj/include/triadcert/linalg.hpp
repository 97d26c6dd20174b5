#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triadcert/field.hpp"

namespace triadcert {

class Vector {
 public:
  Vector(FieldSpec field, std::vector<Scalar> entries);

  static Vector zeros(FieldSpec field, std::size_t n);
  static Vector unit(FieldSpec field, std::size_t n, std::size_t i);
  /// Finite fields only.
  static Vector from_codes(FieldSpec field, const std::vector<std::uint32_t>& codes);

  FieldSpec field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::vector<std::uint32_t> codes() const;

  bool is_zero() const;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading_index() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  void require_shape(const Vector& o) const;

  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Lexicographic order by scalar_less.
bool vector_less(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  /// The 2-tensor y ⊗ z as the matrix y zᵀ.
  static Matrix outer(const Vector& y, const Vector& z);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// A linear functional on F^n given by its coefficients in the dual basis.
/// As a hyperplane normal it stands for {v : η(v) = 0}.
class Functional {
 public:
  explicit Functional(Vector coefficients) : coefficients_(std::move(coefficients)) {}

  const Vector& coefficients() const { return coefficients_; }
  std::size_t dim() const { return coefficients_.size(); }
  FieldSpec field() const { return coefficients_.field(); }

  /// η(v). Throws DimensionMismatch on a length mismatch.
  Scalar operator()(const Vector& v) const;

 private:
  Vector coefficients_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

EchelonForm rref(Matrix m);
std::size_t mat_rank(const Matrix& m);
/// Right nullspace basis, itself in reduced row echelon form.
std::vector<Vector> nullspace_basis(const Matrix& m);
std::size_t span_dim(const std::vector<Vector>& vs);
/// Indices of the first maximal independent subfamily, scanning left to right.
std::vector<std::size_t> independent_prefix_basis(const std::vector<Vector>& vs);

/// Coordinates of v in terms of basis (linearly independent), or nothing when
/// v is outside their span.
std::optional<std::vector<Scalar>> coordinates(const std::vector<Vector>& basis, const Vector& v);

/// (q^dim - 1)/(q - 1) functionals, one per hyperplane, normalized so the
/// first nonzero coefficient is 1, in lexicographic order.
std::vector<Functional> projective_functionals(const FieldSpec& field, std::size_t dim);
std::uint64_t projective_count(const FieldSpec& field, std::size_t dim);
/// index-th element of projective_functionals' order as a vector.
Vector projective_point(const FieldSpec& field, std::size_t dim, std::uint64_t index);

/// Scales v so its first nonzero entry is 1; the zero vector is returned as is.
Vector normalize_projective(Vector v);

/// True iff one vector is a multiple of the other. The zero vector is
/// parallel to everything.
bool is_parallel(const Vector& a, const Vector& b);

}  // namespace triadcert
