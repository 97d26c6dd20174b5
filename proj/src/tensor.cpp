#include "triadcert/tensor.hpp"

#include <algorithm>

namespace triadcert {

TriadList::TriadList(std::vector<Triad> triads) : triads_(std::move(triads)) {
  if (triads_.empty()) throw Error(ErrorCode::LengthMismatch, "a triad list needs at least one triad");
  const Triad& first = triads_.front();
  for (const auto& t : triads_) {
    if (t.x.field() != first.x.field() || t.y.field() != first.x.field() || t.z.field() != first.x.field())
      throw Error(ErrorCode::FieldMismatch, "triads over different fields");
    if (t.x.size() != first.x.size() || t.y.size() != first.y.size() || t.z.size() != first.z.size())
      throw Error(ErrorCode::DimensionMismatch, "triads of different shapes");
  }
}

std::vector<Vector> TriadList::xs() const {
  std::vector<Vector> out;
  for (const auto& t : triads_) out.push_back(t.x);
  return out;
}

std::vector<Vector> TriadList::ys() const {
  std::vector<Vector> out;
  for (const auto& t : triads_) out.push_back(t.y);
  return out;
}

std::vector<Vector> TriadList::zs() const {
  std::vector<Vector> out;
  for (const auto& t : triads_) out.push_back(t.z);
  return out;
}

TriadList TriadList::reinterpret(const FieldSpec& field) const {
  auto convert = [&](const Vector& v) {
    std::vector<Scalar> entries;
    for (const auto& e : v.entries()) entries.push_back(field.parse(e.to_string()));
    return Vector(field, std::move(entries));
  };
  std::vector<Triad> out;
  for (const auto& t : triads_) out.push_back(Triad{convert(t.x), convert(t.y), convert(t.z)});
  return TriadList(std::move(out));
}

// ---------------------------------------------------------------------------
// Tensor3

Tensor3::Tensor3(FieldSpec field, std::size_t dx, std::size_t dy, std::size_t dz)
    : field_(field), dx_(dx), dy_(dy), dz_(dz), data_(dx * dy * dz, field.zero()) {}

bool Tensor3::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Tensor3::unfolding(int mode) const {
  switch (mode) {
    case 1: {
      Matrix m(field_, dx_, dy_ * dz_);
      for (std::size_t a = 0; a < dx_; ++a)
        for (std::size_t b = 0; b < dy_; ++b)
          for (std::size_t c = 0; c < dz_; ++c) m(a, b * dz_ + c) = (*this)(a, b, c);
      return m;
    }
    case 2: {
      Matrix m(field_, dy_, dx_ * dz_);
      for (std::size_t a = 0; a < dx_; ++a)
        for (std::size_t b = 0; b < dy_; ++b)
          for (std::size_t c = 0; c < dz_; ++c) m(b, a * dz_ + c) = (*this)(a, b, c);
      return m;
    }
    case 3: {
      Matrix m(field_, dz_, dx_ * dy_);
      for (std::size_t a = 0; a < dx_; ++a)
        for (std::size_t b = 0; b < dy_; ++b)
          for (std::size_t c = 0; c < dz_; ++c) m(c, a * dy_ + b) = (*this)(a, b, c);
      return m;
    }
    default: throw Error(ErrorCode::DimensionMismatch, "unfolding mode must be 1, 2 or 3");
  }
}

void Tensor3::require_shape(const Tensor3& o) const {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "tensors over different fields");
  if (o.dx_ != dx_ || o.dy_ != dy_ || o.dz_ != dz_) throw Error(ErrorCode::DimensionMismatch, "tensor shapes differ");
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  a.require_shape(b);
  return a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Operations

Tensor3 expand(const Triad& t) {
  Tensor3 out(t.field(), t.x.size(), t.y.size(), t.z.size());
  for (std::size_t a = 0; a < t.x.size(); ++a) {
    if (t.x[a].is_zero()) continue;
    for (std::size_t b = 0; b < t.y.size(); ++b) {
      const Scalar xy = t.x[a] * t.y[b];
      for (std::size_t c = 0; c < t.z.size(); ++c) out(a, b, c) = xy * t.z[c];
    }
  }
  return out;
}

Tensor3 expand(const TriadList& t) {
  Tensor3 out(t.field(), t.dx(), t.dy(), t.dz());
  for (const auto& triad : t) out += expand(triad);
  return out;
}

Matrix pencil(const TriadList& t, const CoefficientVector& alpha) {
  if (alpha.size() != t.size())
    throw Error(ErrorCode::LengthMismatch, "coefficient vector of length " + std::to_string(alpha.size()) +
                                               " for " + std::to_string(t.size()) + " triads");
  Matrix m(t.field(), t.dy(), t.dz());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (alpha[i].is_zero()) continue;
    const Triad& tr = t[i];
    for (std::size_t r = 0; r < t.dy(); ++r) {
      const Scalar ay = alpha[i] * tr.y[r];
      for (std::size_t c = 0; c < t.dz(); ++c) m(r, c) += ay * tr.z[c];
    }
  }
  return m;
}

CoefficientVector evaluate_first(const TriadList& t, const Functional& eta) {
  if (eta.dim() != t.dx())
    throw Error(ErrorCode::DimensionMismatch, "functional dimension " + std::to_string(eta.dim()) +
                                                  " does not match x-mode dimension " + std::to_string(t.dx()));
  CoefficientVector alpha;
  for (const auto& tr : t) alpha.push_back(eta(tr.x));
  return alpha;
}

Matrix contract_first(const TriadList& t, const Functional& eta) { return pencil(t, evaluate_first(t, eta)); }

std::size_t weight(const CoefficientVector& alpha) {
  return static_cast<std::size_t>(
      std::count_if(alpha.begin(), alpha.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

std::optional<Triad> is_product_tensor(const Tensor3& t) {
  if (t.is_zero()) return std::nullopt;
  for (int mode = 1; mode <= 3; ++mode)
    if (mat_rank(t.unfolding(mode)) > 1) return std::nullopt;
  std::size_t a0 = 0, b0 = 0, c0 = 0;
  bool found = false;
  for (std::size_t a = 0; a < t.dx() && !found; ++a)
    for (std::size_t b = 0; b < t.dy() && !found; ++b)
      for (std::size_t c = 0; c < t.dz() && !found; ++c)
        if (!t(a, b, c).is_zero()) {
          a0 = a, b0 = b, c0 = c;
          found = true;
        }
  const Scalar inv = t(a0, b0, c0).inverse();
  Vector x = Vector::zeros(t.field(), t.dx());
  Vector y = Vector::zeros(t.field(), t.dy());
  Vector z = Vector::zeros(t.field(), t.dz());
  for (std::size_t a = 0; a < t.dx(); ++a) x[a] = t(a, b0, c0) * inv;
  for (std::size_t b = 0; b < t.dy(); ++b) y[b] = t(a0, b, c0) * inv;
  for (std::size_t c = 0; c < t.dz(); ++c) z[c] = t(a0, b0, c);
  return Triad{std::move(x), std::move(y), std::move(z)};
}

Triad canonical_triad(const Triad& t) {
  if (t.is_zero_product())
    return Triad{Vector::zeros(t.field(), t.x.size()), Vector::zeros(t.field(), t.y.size()),
                 Vector::zeros(t.field(), t.z.size())};
  const Scalar xl = t.x[t.x.leading_index()];
  const Scalar yl = t.y[t.y.leading_index()];
  return Triad{xl.inverse() * t.x, yl.inverse() * t.y, (xl * yl) * t.z};
}

bool triad_less(const Triad& a, const Triad& b) {
  if (vector_less(a.x, b.x)) return true;
  if (vector_less(b.x, a.x)) return false;
  if (vector_less(a.y, b.y)) return true;
  if (vector_less(b.y, a.y)) return false;
  return vector_less(a.z, b.z);
}

bool triad_equal(const Triad& a, const Triad& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

std::vector<Triad> canonical_multiset(const TriadList& t) {
  std::vector<Triad> out;
  for (const auto& tr : t) out.push_back(canonical_triad(tr));
  std::sort(out.begin(), out.end(), triad_less);
  return out;
}

bool same_decomposition(const TriadList& a, const TriadList& b) {
  if (a.size() != b.size()) return false;
  const auto ca = canonical_multiset(a);
  const auto cb = canonical_multiset(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!triad_equal(ca[i], cb[i])) return false;
  return true;
}

std::size_t nonzero_terms(const TriadList& t) {
  return static_cast<std::size_t>(
      std::count_if(t.begin(), t.end(), [](const Triad& tr) { return !tr.is_zero_product(); }));
}

}  // namespace triadcert
