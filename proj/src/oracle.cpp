#include "triadcert/oracle.hpp"

#include <atomic>

#include "triadcert/conditions.hpp"
#include "triadcert/kernels.hpp"

namespace triadcert {

namespace {

using kernels::Code;
using Sequence = std::vector<std::uint32_t>;

class ClassTable {
 public:
  ClassTable(const FieldSpec& field, std::size_t dx, std::size_t dy, std::size_t dz, const OracleOptions& opts)
      : field_(field), f_(field.data()), dx_(dx), dy_(dy), dz_(dz), size_(dx * dy * dz) {
    if (!field.finite()) throw Error(ErrorCode::InfiniteField, "the oracle enumerates finite fields only");
    px_ = kernels::projective_count(f_.q, dx);
    py_ = kernels::projective_count(f_.q, dy);
    const std::uint64_t zall = kernels::power_count(f_.q, dz);
    if (px_ == kernels::kCountOverflow || py_ == kernels::kCountOverflow || zall == kernels::kCountOverflow)
      throw Error(ErrorCode::CapExceeded, "product class count overflows");
    pz_ = zall - 1;
    const long double total = static_cast<long double>(px_) * py_ * pz_;
    if (total > static_cast<long double>(opts.class_cap))
      throw Error(ErrorCode::CapExceeded, "product classes exceed the cap of " + std::to_string(opts.class_cap));
    count_ = px_ * py_ * pz_;
    expanded_.resize(count_ * size_);
    std::vector<Code> x(dx), y(dy), z(dz);
    for (std::uint64_t idx = 0; idx < count_; ++idx) {
      factors(idx, x, y, z);
      Code* out = &expanded_[idx * size_];
      for (std::size_t a = 0; a < dx; ++a)
        for (std::size_t b = 0; b < dy; ++b) {
          const Code xy = f_.mul(x[a], y[b]);
          for (std::size_t c = 0; c < dz; ++c) out[(a * dy + b) * dz + c] = f_.mul(xy, z[c]);
        }
    }
  }

  std::uint64_t count() const { return count_; }
  std::size_t size() const { return size_; }
  const detail::FieldData& field_data() const { return f_; }
  const Code* tensor(std::uint64_t idx) const { return &expanded_[idx * size_]; }

  void factors(std::uint64_t idx, std::vector<Code>& x, std::vector<Code>& y, std::vector<Code>& z) const {
    const std::uint64_t zi = idx % pz_;
    const std::uint64_t yi = (idx / pz_) % py_;
    const std::uint64_t xi = idx / (pz_ * py_);
    kernels::unrank_projective(f_, xi, x);
    kernels::unrank_projective(f_, yi, y);
    kernels::unrank_vector(f_, zi + 1, z);
  }

  Triad triad(std::uint64_t idx) const {
    std::vector<Code> x(dx_), y(dy_), z(dz_);
    factors(idx, x, y, z);
    return Triad{Vector::from_codes(field_, x), Vector::from_codes(field_, y), Vector::from_codes(field_, z)};
  }

  // Class index of a product tensor, or nothing when r is zero or not a product.
  std::optional<std::uint64_t> classify(const Code* r) const {
    std::size_t first = 0;
    while (first < size_ && r[first] == 0) ++first;
    if (first == size_) return std::nullopt;
    const std::size_t a0 = first / (dy_ * dz_);
    const std::size_t b0 = (first / dz_) % dy_;
    const std::size_t c0 = first % dz_;
    const Code inv = f_.inv(r[first]);
    Code x[kMaxDim], y[kMaxDim], z[kMaxDim];
    for (std::size_t a = 0; a < dx_; ++a) x[a] = f_.mul(r[(a * dy_ + b0) * dz_ + c0], inv);
    for (std::size_t b = 0; b < dy_; ++b) y[b] = f_.mul(r[(a0 * dy_ + b) * dz_ + c0], inv);
    for (std::size_t c = 0; c < dz_; ++c) z[c] = r[(a0 * dy_ + b0) * dz_ + c];
    for (std::size_t a = 0; a < dx_; ++a)
      for (std::size_t b = 0; b < dy_; ++b) {
        const Code xy = f_.mul(x[a], y[b]);
        for (std::size_t c = 0; c < dz_; ++c)
          if (r[(a * dy_ + b) * dz_ + c] != f_.mul(xy, z[c])) return std::nullopt;
      }
    const std::uint64_t xi = kernels::rank_projective(f_, std::span<const Code>(x, dx_));
    const std::uint64_t yi = kernels::rank_projective(f_, std::span<const Code>(y, dy_));
    const std::uint64_t zi = kernels::rank_vector(f_, std::span<const Code>(z, dz_)) - 1;
    return (xi * py_ + yi) * pz_ + zi;
  }

  static constexpr std::size_t kMaxDim = 64;

 private:
  FieldSpec field_;
  const detail::FieldData& f_;
  std::size_t dx_, dy_, dz_, size_;
  std::uint64_t px_ = 0, py_ = 0, pz_ = 0, count_ = 0;
  std::vector<Code> expanded_;
};

std::vector<Code> tensor_codes(const Tensor3& t) {
  std::vector<Code> out;
  out.reserve(t.size());
  for (const auto& s : t.data()) out.push_back(s.code());
  return out;
}

void check_dims(const Tensor3& t) {
  if (t.dx() > ClassTable::kMaxDim || t.dy() > ClassTable::kMaxDim || t.dz() > ClassTable::kMaxDim)
    throw Error(ErrorCode::CapExceeded, "mode dimension too large for the oracle");
}

class Search {
 public:
  Search(const ClassTable& table, const OracleOptions& opts) : table_(table), opts_(opts) {}

  // Extends prefix (last element `from`) by `remaining` more classes summing to residual.
  // With collect == nullptr, stops at the first completion.
  bool extend(std::vector<Code>& residual, std::size_t remaining, std::uint64_t from, Sequence& prefix,
              std::vector<Sequence>* collect) {
    tick();
    if (remaining == 1) {
      const auto idx = table_.classify(residual.data());
      if (!idx || *idx < from) return false;
      if (collect) {
        prefix.push_back(static_cast<std::uint32_t>(*idx));
        collect->push_back(prefix);
        prefix.pop_back();
      }
      return true;
    }
    const auto& f = table_.field_data();
    const std::size_t size = table_.size();
    bool found = false;
    for (std::uint64_t i = from; i < table_.count(); ++i) {
      const Code* c = table_.tensor(i);
      for (std::size_t e = 0; e < size; ++e) residual[e] = f.sub(residual[e], c[e]);
      prefix.push_back(static_cast<std::uint32_t>(i));
      const bool hit = extend(residual, remaining - 1, i, prefix, collect);
      prefix.pop_back();
      for (std::size_t e = 0; e < size; ++e) residual[e] = f.add(residual[e], c[e]);
      if (hit) {
        found = true;
        if (!collect) return true;
      }
    }
    return found;
  }

 private:
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= opts_.node_budget)
      throw Error(ErrorCode::CapExceeded, "oracle node budget of " + std::to_string(opts_.node_budget) + " exhausted");
  }

  const ClassTable& table_;
  const OracleOptions& opts_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Exceptions must not escape an OpenMP region; the first one is rethrown after.
class ErrorSlot {
 public:
  template <class F>
  auto guard(F&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (...) {
#pragma omp critical(triadcert_oracle_error)
      if (!error_) error_ = std::current_exception();
      failed_.store(true);
      return decltype(fn())();
    }
  }
  bool failed() const { return failed_.load(); }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
  std::atomic<bool> failed_{false};
};

bool decomposable(const ClassTable& table, const std::vector<Code>& target, std::size_t r, const OracleOptions& opts) {
  if (r == 0) {
    for (auto c : target)
      if (c != 0) return false;
    return true;
  }
  Search search(table, opts);
  if (r == 1) {
    std::vector<Code> residual = target;
    Sequence prefix;
    return search.extend(residual, 1, 0, prefix, nullptr);
  }
  const auto& f = table.field_data();
  ErrorSlot slot;
  auto pred = [&](std::uint64_t first) {
    if (slot.failed()) return false;
    return slot.guard([&] {
      std::vector<Code> residual = target;
      const Code* c = table.tensor(first);
      for (std::size_t e = 0; e < residual.size(); ++e) residual[e] = f.sub(residual[e], c[e]);
      Sequence prefix{static_cast<std::uint32_t>(first)};
      return search.extend(residual, r - 1, first, prefix, nullptr);
    });
  };
  const auto hit = par::first_match(table.count(), pred, opts.exec);
  slot.rethrow();
  return hit.has_value();
}

std::vector<Sequence> decompositions(const ClassTable& table, const std::vector<Code>& target, std::size_t n,
                                     const OracleOptions& opts) {
  Search search(table, opts);
  if (n == 1) {
    std::vector<Code> residual = target;
    Sequence prefix;
    std::vector<Sequence> out;
    search.extend(residual, 1, 0, prefix, &out);
    return out;
  }
  const auto& f = table.field_data();
  ErrorSlot slot;
  auto body = [&](std::uint64_t first) {
    if (slot.failed()) return std::vector<Sequence>{};
    return slot.guard([&] {
      std::vector<Code> residual = target;
      const Code* c = table.tensor(first);
      for (std::size_t e = 0; e < residual.size(); ++e) residual[e] = f.sub(residual[e], c[e]);
      Sequence prefix{static_cast<std::uint32_t>(first)};
      std::vector<Sequence> out;
      search.extend(residual, n - 1, first, prefix, &out);
      return out;
    });
  };
  auto out = par::collect<Sequence>(table.count(), body, opts.exec);
  slot.rethrow();
  return out;
}

}  // namespace

std::vector<Triad> enumerate_product_classes(const FieldSpec& field, std::size_t dx, std::size_t dy, std::size_t dz,
                                             const OracleOptions& opts) {
  const ClassTable table(field, dx, dy, dz, opts);
  std::vector<Triad> out;
  out.reserve(table.count());
  for (std::uint64_t i = 0; i < table.count(); ++i) out.push_back(table.triad(i));
  return out;
}

std::optional<std::size_t> tensor_rank_exhaustive(const Tensor3& t, std::size_t cap, const OracleOptions& opts) {
  check_dims(t);
  const ClassTable table(t.field(), t.dx(), t.dy(), t.dz(), opts);
  const auto target = tensor_codes(t);
  for (std::size_t r = 0; r <= cap; ++r)
    if (decomposable(table, target, r, opts)) return r;
  return std::nullopt;
}

std::vector<DecompositionClass> enumerate_decompositions(const Tensor3& t, std::size_t n, const OracleOptions& opts) {
  if (n == 0) throw Error(ErrorCode::LengthMismatch, "decompositions need at least one term");
  check_dims(t);
  const ClassTable table(t.field(), t.dx(), t.dy(), t.dz(), opts);
  std::vector<DecompositionClass> out;
  for (const auto& seq : decompositions(table, tensor_codes(t), n, opts)) {
    DecompositionClass cls;
    for (auto idx : seq) cls.triads.push_back(table.triad(idx));
    out.push_back(std::move(cls));
  }
  return out;
}

bool same_class(const DecompositionClass& c, const TriadList& t) {
  const auto canon = canonical_multiset(t);
  if (canon.size() != c.triads.size()) return false;
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (!triad_equal(canon[i], c.triads[i])) return false;
  return true;
}

OracleResult verify_theorem1(const TriadList& t, const OracleOptions& opts) {
  const CertReport hyp = check_hypotheses(t);
  if (!hyp.holds) throw Error(ErrorCode::HypothesesViolated, hyp.note);
  const Tensor3 target = expand(t);
  OracleResult res;
  {
    const ClassTable table(t.field(), t.dx(), t.dy(), t.dz(), opts);
    res.classes = table.count();
  }
  res.rank = tensor_rank_exhaustive(target, t.size(), opts);
  res.decompositions = enumerate_decompositions(target, t.size(), opts);
  res.unique = res.decompositions.size() == 1;
  res.matches_input = res.unique && same_class(res.decompositions.front(), t);
  return res;
}

}  // namespace triadcert
