#pragma once

#include <optional>
#include <vector>

#include "triadcert/linalg.hpp"

namespace triadcert {

/// The product tensor x ⊗ y ⊗ z, kept as its three factors.
struct Triad {
  Vector x;
  Vector y;
  Vector z;

  FieldSpec field() const { return x.field(); }
  bool is_zero_product() const { return x.is_zero() || y.is_zero() || z.is_zero(); }
};

using CoefficientVector = std::vector<Scalar>;

/// An ordered, nonempty list of triads of identical shape standing for
/// θ = Σ x_i ⊗ y_i ⊗ z_i.
class TriadList {
 public:
  explicit TriadList(std::vector<Triad> triads);

  FieldSpec field() const { return triads_.front().field(); }
  std::size_t size() const { return triads_.size(); }
  std::size_t dx() const { return triads_.front().x.size(); }
  std::size_t dy() const { return triads_.front().y.size(); }
  std::size_t dz() const { return triads_.front().z.size(); }

  const Triad& operator[](std::size_t i) const { return triads_[i]; }
  const std::vector<Triad>& triads() const { return triads_; }
  auto begin() const { return triads_.begin(); }
  auto end() const { return triads_.end(); }

  std::vector<Vector> xs() const;
  std::vector<Vector> ys() const;
  std::vector<Vector> zs() const;

  /// Same triads read over another field of the same characteristic family
  /// (entries re-parsed from their string form).
  TriadList reinterpret(const FieldSpec& field) const;

 private:
  std::vector<Triad> triads_;
};

/// Dense dx × dy × dz array, entry (a, b, c) at index (a*dy + b)*dz + c.
class Tensor3 {
 public:
  Tensor3(FieldSpec field, std::size_t dx, std::size_t dy, std::size_t dz);

  FieldSpec field() const { return field_; }
  std::size_t dx() const { return dx_; }
  std::size_t dy() const { return dy_; }
  std::size_t dz() const { return dz_; }
  std::size_t size() const { return data_.size(); }

  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * dy_ + b) * dz_ + c];
  }
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dy_ + b) * dz_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  /// Mode-k unfolding (k = 1, 2, 3) as a d_k × (product of the other dims) matrix.
  Matrix unfolding(int mode) const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend bool operator==(const Tensor3& a, const Tensor3& b);
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  void require_shape(const Tensor3& o) const;

  FieldSpec field_;
  std::size_t dx_, dy_, dz_;
  std::vector<Scalar> data_;
};

Tensor3 expand(const Triad& t);
Tensor3 expand(const TriadList& t);

/// Σ α_i y_i z_iᵀ, a dy × dz matrix.
Matrix pencil(const TriadList& t, const CoefficientVector& alpha);
/// Θ(η) = pencil(t, (η(x_1), ..., η(x_n))).
Matrix contract_first(const TriadList& t, const Functional& eta);
CoefficientVector evaluate_first(const TriadList& t, const Functional& eta);

/// Number of nonzero entries.
std::size_t weight(const CoefficientVector& alpha);

/// The canonical triad of a nonzero product tensor, or nothing when the
/// tensor is zero or some unfolding has rank above one.
std::optional<Triad> is_product_tensor(const Tensor3& t);

/// Canonical scaling: first nonzero entries of x and y are 1 and the scale
/// sits in z. A triad whose product vanishes maps to all-zero factors.
Triad canonical_triad(const Triad& t);
bool triad_less(const Triad& a, const Triad& b);
bool triad_equal(const Triad& a, const Triad& b);

/// Sorted canonical triads, zero products included.
std::vector<Triad> canonical_multiset(const TriadList& t);
bool same_decomposition(const TriadList& a, const TriadList& b);
std::size_t nonzero_terms(const TriadList& t);

}  // namespace triadcert
