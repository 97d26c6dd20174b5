#include "triadcert/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace triadcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::HypothesesViolated: return "HypothesesViolated";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first, over GF(p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t t = (c * g[i]) % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - t) % p);
    }
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t e = 1; e <= k / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(e + 1, 0);
      std::uint64_t v = low;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[e] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void build_tables(detail::FieldData& f) {
  if (f.q > detail::kTableLimit) return;
  const auto q = static_cast<std::uint32_t>(f.q);
  f.add_table.resize(std::size_t{q} * q);
  f.mul_table.resize(std::size_t{q} * q);
  f.neg_table.resize(q);
  f.inv_table.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    f.neg_table[a] = f.neg_slow(a);
    if (a != 0) f.inv_table[a] = f.inv_slow(a);
    for (std::uint32_t b = 0; b < q; ++b) {
      f.add_table[std::size_t{a} * q + b] = f.add_slow(a, b);
      f.mul_table[std::size_t{a} * q + b] = f.mul_slow(a, b);
    }
  }
  f.tabled = true;
}

struct Registry {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint32_t, Poly>, std::unique_ptr<detail::FieldData>> fields;

  const detail::FieldData* intern(FieldKind kind, std::uint32_t p, const Poly& modulus) {
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(static_cast<int>(kind), p, modulus);
    auto it = fields.find(key);
    if (it != fields.end()) return it->second.get();
    auto data = std::make_unique<detail::FieldData>();
    data->kind = kind;
    data->p = p;
    if (kind == FieldKind::prime) {
      data->k = 1;
      data->q = p;
    } else if (kind == FieldKind::extension) {
      data->k = static_cast<std::uint32_t>(modulus.size() - 1);
      data->modulus = modulus;
      data->q = 1;
      for (std::uint32_t i = 0; i < data->k; ++i) data->q *= p;
    }
    if (kind != FieldKind::rational) build_tables(*data);
    const auto* raw = data.get();
    fields.emplace(std::move(key), std::move(data));
    return raw;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

namespace detail {

std::uint32_t FieldData::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (kind == FieldKind::prime) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FieldData::neg_slow(std::uint32_t a) const {
  if (kind == FieldKind::prime) return a == 0 ? 0 : p - a;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t c = a % p;
    out += ((p - c) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FieldData::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (kind == FieldKind::prime) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
  Poly fa(k), fb(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    fa[i] = a % p;
    fb[i] = b % p;
    a /= p;
    b /= p;
  }
  Poly prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
  const Poly r = poly_rem(prod, modulus, p);
  std::uint32_t out = 0, scale = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += r[i] * scale;
    scale *= p;
  }
  return out;
}

std::uint32_t FieldData::inv_slow(std::uint32_t a) const {
  // a^(q-2) by square-and-multiply.
  std::uint64_t e = q - 2;
  std::uint32_t base = a, acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul_slow(acc, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rational() { return FieldSpec(registry().intern(FieldKind::rational, 0, {})); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p > (1ull << 31)) throw Error(ErrorCode::InvalidModulus, "characteristic too large");
  return FieldSpec(registry().intern(FieldKind::prime, static_cast<std::uint32_t>(p), {}));
}

FieldSpec FieldSpec::extension(std::uint64_t p, const std::vector<std::int64_t>& modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p > (1ull << 31)) throw Error(ErrorCode::InvalidModulus, "characteristic too large");
  const auto pp = static_cast<std::uint32_t>(p);
  if (modulus.size() < 3)
    throw Error(ErrorCode::DegreeTooSmall, "extension modulus must have degree at least 2");
  Poly f;
  f.reserve(modulus.size());
  for (auto c : modulus) f.push_back(reduce_mod(c, pp));
  if (f.back() != 1) throw Error(ErrorCode::InvalidModulus, "modulus must be monic");
  const std::size_t k = f.size() - 1;
  long double q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= pp;
  if (q > static_cast<long double>(1ull << 31))
    throw Error(ErrorCode::InvalidModulus, "field order exceeds 2^31");
  if (!poly_irreducible(f, pp))
    throw Error(ErrorCode::ReducibleModulus, "modulus factors over GF(" + std::to_string(p) + ")");
  return FieldSpec(registry().intern(FieldKind::extension, pp, f));
}

FieldSpec FieldSpec::gf4() { return extension(2, {1, 1, 1}); }

FieldSpec field_make(const FieldDescription& desc) {
  switch (desc.kind) {
    case FieldKind::rational: return FieldSpec::rational();
    case FieldKind::prime: return FieldSpec::prime(desc.p);
    case FieldKind::extension: return FieldSpec::extension(desc.p, desc.modulus);
  }
  return FieldSpec::rational();
}

std::string FieldSpec::name() const {
  switch (kind()) {
    case FieldKind::rational: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(characteristic()) + ")";
    case FieldKind::extension: {
      std::string poly;
      for (std::size_t i = modulus().size(); i-- > 0;) {
        const auto c = modulus()[i];
        if (c == 0) continue;
        if (!poly.empty()) poly += "+";
        if (i == 0 || c != 1) poly += std::to_string(c);
        if (i >= 1) poly += "x";
        if (i >= 2) poly += "^" + std::to_string(i);
      }
      return "GF(" + std::to_string(characteristic()) + "^" + std::to_string(degree()) + ")[" + poly + "]";
    }
  }
  return "?";
}

FieldDescription FieldSpec::description() const {
  FieldDescription d;
  d.kind = kind();
  d.p = characteristic();
  for (auto c : modulus()) d.modulus.push_back(c);
  return d;
}

Scalar FieldSpec::zero() const { return finite() ? Scalar(*this, 0) : Scalar(mpq_class(0)); }
Scalar FieldSpec::one() const { return finite() ? Scalar(*this, 1) : Scalar(mpq_class(1)); }

Scalar FieldSpec::from_int(long long v) const {
  if (!finite()) return Scalar(mpq_class(static_cast<long>(v)));
  return Scalar(*this, reduce_mod(v, characteristic()));
}

Scalar FieldSpec::from_code(std::uint32_t code) const {
  if (!finite()) throw Error(ErrorCode::InfiniteField, "codes exist only for finite fields");
  if (code >= order()) throw Error(ErrorCode::ParseError, "element code out of range");
  return Scalar(*this, code);
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const FieldSpec& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty scalar");
    Scalar out = field_.kind() == FieldKind::extension ? parse_polynomial() : parse_fraction();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int sign() {
    int s = 1;
    while (peek('+') || peek('-')) {
      if (text_[pos_] == '-') s = -s;
      ++pos_;
    }
    return s;
  }

  Scalar reduce(const mpz_class& v) const {
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class r = v % p;
    if (r < 0) r += p;
    return Scalar(field_, static_cast<std::uint32_t>(r.get_ui()));
  }

  Scalar parse_fraction() {
    const int s = sign();
    mpz_class num = digits();
    mpz_class den = 1;
    if (peek('/')) {
      ++pos_;
      const int ds = sign();
      den = digits();
      if (ds < 0) den = -den;
      if (den == 0) fail("zero denominator");
    }
    if (s < 0) num = -num;
    if (!field_.finite()) {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    const Scalar d = reduce(den);
    if (d.is_zero()) fail("denominator vanishes modulo the characteristic");
    return reduce(num) / d;
  }

  Scalar parse_polynomial() {
    Scalar acc = field_.zero();
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (!first && !peek('+') && !peek('-')) fail("expected '+' or '-'");
      const int s = sign();
      mpz_class coef = 1;
      bool have_coef = false;
      if (at_digit()) {
        coef = digits();
        have_coef = true;
        if (peek('*')) ++pos_;
      }
      unsigned long exponent = 0;
      if (peek('x')) {
        ++pos_;
        exponent = 1;
        if (peek('^')) {
          ++pos_;
          const mpz_class e = digits();
          if (!e.fits_ulong_p()) fail("exponent too large");
          exponent = e.get_ui();
        }
      } else if (!have_coef) {
        fail("expected coefficient or 'x'");
      }
      Scalar term = reduce(s < 0 ? mpz_class(-coef) : coef);
      const Scalar xi = field_.from_code(field_.characteristic());
      Scalar power = field_.one();
      Scalar base = xi;
      for (unsigned long e = exponent; e > 0; e >>= 1) {
        if (e & 1) power *= base;
        base *= base;
      }
      acc += term * power;
      first = false;
    }
    if (first) fail("empty polynomial");
    return acc;
  }

  const FieldSpec& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar FieldSpec::parse(std::string_view text) const { return ScalarParser(*this, text).parse(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(FieldSpec field, std::uint32_t code) : field_(field.data_), value_(code) {
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "integer code given for the rationals");
}

Scalar::Scalar(mpq_class value) : field_(FieldSpec::rational().data_), value_(std::move(value)) {}

bool Scalar::is_zero() const {
  if (field_->kind == FieldKind::rational) return rational() == 0;
  return code() == 0;
}

bool Scalar::is_one() const {
  if (field_->kind == FieldKind::rational) return rational() == 1;
  return code() == 1;
}

std::vector<std::uint32_t> Scalar::coefficients() const {
  std::vector<std::uint32_t> out(field_->k);
  std::uint32_t c = code();
  for (auto& v : out) {
    v = c % field_->p;
    c /= field_->p;
  }
  return out;
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::FieldMismatch, field().name() + " vs " + o.field().name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_->kind == FieldKind::rational) return Scalar(mpq_class(1 / rational()));
  return Scalar(field(), field_->inv(code()));
}

Scalar Scalar::operator-() const {
  if (field_->kind == FieldKind::rational) return Scalar(mpq_class(-rational()));
  return Scalar(field(), field_->neg(code()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (field_->kind == FieldKind::rational)
    std::get<mpq_class>(value_) += o.rational();
  else
    value_ = field_->add(code(), o.code());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (field_->kind == FieldKind::rational)
    std::get<mpq_class>(value_) -= o.rational();
  else
    value_ = field_->sub(code(), o.code());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (field_->kind == FieldKind::rational)
    std::get<mpq_class>(value_) *= o.rational();
  else
    value_ = field_->mul(code(), o.code());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (field_->kind == FieldKind::rational)
    std::get<mpq_class>(value_) /= o.rational();
  else
    value_ = field_->mul(code(), field_->inv(o.code()));
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (a.field_->kind == FieldKind::rational) return a.rational() == b.rational();
  return a.code() == b.code();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "ordering across fields");
  if (!a.field().finite()) return a.rational() < b.rational();
  return a.code() < b.code();
}

std::string Scalar::to_string() const {
  switch (field_->kind) {
    case FieldKind::rational: return rational().get_str();
    case FieldKind::prime: return std::to_string(code());
    case FieldKind::extension: {
      const auto coeffs = coefficients();
      std::string out;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        const auto c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

std::vector<Scalar> field_enumerate(const FieldSpec& field) {
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(field.order());
  for (std::uint64_t c = 0; c < field.order(); ++c) out.emplace_back(field, static_cast<std::uint32_t>(c));
  return out;
}

}  // namespace triadcert
