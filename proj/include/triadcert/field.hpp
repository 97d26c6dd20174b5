#pragma once

// Exact scalars over Q, GF(p) and GF(p^k).
//
// A FieldSpec is a handle to an interned, immutable field description: two
// specs built from the same description compare equal and share storage, so
// field identity is a pointer comparison. Finite field elements are stored as
// a code in [0, q): the coefficient list (c_0, ..., c_{k-1}) of an extension
// element in the basis 1, x, ..., x^{k-1} maps to sum c_i p^i. Code order is
// the enumeration order of the field.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "triadcert/error.hpp"

namespace triadcert {

enum class FieldKind { rational, prime, extension };

/// Plain description of a field, as it appears in instance files.
struct FieldDescription {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;
  std::vector<std::int64_t> modulus;  // constant term first
};

class Scalar;

namespace detail {

// Multiplication/addition tables are materialized for q up to this bound.
inline constexpr std::uint64_t kTableLimit = 256;

struct FieldData {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint64_t q = 0;  // 0 for rational
  std::vector<std::uint32_t> modulus;
  bool tabled = false;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> inv_table;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return tabled ? add_table[a * q + b] : add_slow(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tabled ? mul_table[a * q + b] : mul_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return tabled ? neg_table[a] : neg_slow(a); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  // a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const { return tabled ? inv_table[a] : inv_slow(a); }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_slow(std::uint32_t a) const;
  std::uint32_t inv_slow(std::uint32_t a) const;
};

}  // namespace detail

class FieldSpec {
 public:
  static FieldSpec rational();
  static FieldSpec prime(std::uint64_t p);
  /// modulus lists coefficients from the constant term to the leading one.
  static FieldSpec extension(std::uint64_t p, const std::vector<std::int64_t>& modulus);
  /// GF(4) with x^2 = x + 1.
  static FieldSpec gf4();

  FieldKind kind() const { return data_->kind; }
  bool finite() const { return data_->kind != FieldKind::rational; }
  std::uint32_t characteristic() const { return data_->p; }
  std::uint32_t degree() const { return data_->k; }
  /// Number of elements; 0 for the rationals.
  std::uint64_t order() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  std::string name() const;
  FieldDescription description() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Finite fields only; code < order().
  Scalar from_code(std::uint32_t code) const;
  /// Parses the scalar grammar: "3", "-2/5", "x+1", "2x^2+x".
  Scalar parse(std::string_view text) const;

  const detail::FieldData& data() const { return *data_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.data_ == b.data_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.data_ != b.data_; }

 private:
  explicit FieldSpec(const detail::FieldData* data) : data_(data) {}
  friend class Scalar;

  const detail::FieldData* data_;
};

FieldSpec field_make(const FieldDescription& desc);

class Scalar {
 public:
  Scalar(FieldSpec field, std::uint32_t code);
  explicit Scalar(mpq_class value);

  FieldSpec field() const { return FieldSpec(field_); }
  bool is_zero() const;
  bool is_one() const;

  /// Finite fields only.
  std::uint32_t code() const { return std::get<std::uint32_t>(value_); }
  /// Rational field only.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Coefficients over GF(p), constant term first (length k). Finite fields only.
  std::vector<std::uint32_t> coefficients() const;

  Scalar inverse() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void require_same(const Scalar& o) const;

  const detail::FieldData* field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Total order used for canonical sorting: code order for finite fields,
/// numeric order for the rationals.
bool scalar_less(const Scalar& a, const Scalar& b);

/// All elements of a finite field in code order (0, 1, then upward).
std::vector<Scalar> field_enumerate(const FieldSpec& field);

bool is_prime(std::uint64_t n);

}  // namespace triadcert
