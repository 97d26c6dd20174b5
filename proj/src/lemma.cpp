#include "triadcert/lemma.hpp"

#include <algorithm>
#include <functional>

#include "triadcert/kernels.hpp"

namespace triadcert {

namespace {

using kernels::Code;

void require_family(const std::vector<Vector>& xs, const std::vector<Vector>& vs) {
  if (xs.size() != vs.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(xs.size()) + " x's vs " + std::to_string(vs.size()) + " v's");
  if (xs.empty()) throw Error(ErrorCode::LengthMismatch, "empty vector families");
  const FieldSpec field = xs.front().field();
  const std::size_t dim = xs.front().size();
  for (const auto* family : {&xs, &vs})
    for (const auto& v : *family) {
      if (v.field() != field) throw Error(ErrorCode::FieldMismatch, "vector families over different fields");
      if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "vectors of different lengths");
    }
}

std::vector<Code> flatten(const std::vector<Vector>& vs) {
  std::vector<Code> out;
  for (const auto& v : vs)
    for (const auto& e : v.entries()) out.push_back(e.code());
  return out;
}

// Subspaces in reduced echelon form: blocks by pivot set (lexicographic), and
// inside a block the free entries read row by row as a base-q number.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const detail::FieldData& f, std::size_t n, std::size_t m) : f_(f), n_(n), m_(m) {
    std::vector<std::size_t> pivots(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t row, std::size_t start) {
      if (row == m) {
        add_block(pivots);
        return;
      }
      for (std::size_t c = start; c + (m - row) <= n; ++c) {
        pivots[row] = c;
        rec(row + 1, c + 1);
      }
    };
    rec(0, 0);
  }

  std::uint64_t count() const { return total_; }

  void basis(std::uint64_t idx, std::vector<Code>& out) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
    const std::size_t blk = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    std::uint64_t local = idx - offsets_[blk];
    out.assign(m_ * n_, 0);
    for (std::size_t r = 0; r < m_; ++r) out[r * n_ + pivots_[blk][r]] = 1;
    const auto& free = free_[blk];
    for (std::size_t k = free.size(); k-- > 0;) {
      out[free[k]] = static_cast<Code>(local % f_.q);
      local /= f_.q;
    }
  }

 private:
  void add_block(const std::vector<std::size_t>& pivots) {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = pivots[r] + 1; c < n_; ++c)
        if (!is_pivot[c]) free.push_back(r * n_ + c);
    const std::uint64_t size = kernels::power_count(f_.q, free.size());
    if (size == kernels::kCountOverflow || total_ > kernels::kCountOverflow - size)
      throw Error(ErrorCode::CapExceeded, "subspace count overflows");
    offsets_.push_back(total_);
    total_ += size;
    pivots_.push_back(pivots);
    free_.push_back(std::move(free));
  }

  const detail::FieldData& f_;
  std::size_t n_, m_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::vector<std::size_t>> pivots_;
  std::vector<std::vector<std::size_t>> free_;
};

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t m) {
  if (m > n) return 0;
  // Π_{i<m} (q^(n-i) - 1) / (q^(i+1) - 1), kept exact by dividing after each step.
  unsigned __int128 num = 1, den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t a = kernels::power_count(q, n - i);
    const std::uint64_t b = kernels::power_count(q, i + 1);
    if (a == kernels::kCountOverflow || b == kernels::kCountOverflow) return kernels::kCountOverflow;
    num *= (a - 1);
    den *= (b - 1);
    if (num >> 100) return kernels::kCountOverflow;
  }
  const unsigned __int128 out = num / den;
  if (out >= kernels::kCountOverflow) return kernels::kCountOverflow;
  return static_cast<std::uint64_t>(out);
}

std::vector<std::vector<Vector>> enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t m) {
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "subspace enumeration over Q");
  const SubspaceEnumerator en(field.data(), n, m);
  std::vector<std::vector<Vector>> out;
  std::vector<Code> codes;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    en.basis(i, codes);
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < m; ++r)
      basis.push_back(Vector::from_codes(field, std::vector<Code>(codes.begin() + r * n, codes.begin() + (r + 1) * n)));
    out.push_back(std::move(basis));
  }
  return out;
}

CertReport check_lemma_hypothesis(const std::vector<Vector>& xs, const std::vector<Vector>& vs,
                                  const EnumerationOptions& opts) {
  require_family(xs, vs);
  const FieldSpec field = xs.front().field();
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "hyperplane enumeration over Q");
  const std::size_t n = xs.size();
  const std::size_t dim = xs.front().size();

  CertReport rep;
  rep.condition = Condition::LemmaHypothesis;
  rep.n = n;
  rep.d = dim;

  // (a) the v's span F^d; otherwise a hyperplane contains all of them.
  if (span_dim(vs) < dim) {
    const auto normals = nullspace_basis(Matrix::from_rows(vs));
    rep.holds = false;
    rep.witness = Witness{Witness::Kind::hyperplane, normalize_projective(normals.front()).entries(), {}, {}};
    rep.note = "the v's do not span the ambient space";
    return rep;
  }
  // (b) nonzero, pairwise nonparallel x's.
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i].is_zero()) {
      rep.holds = false;
      rep.witness = Witness{Witness::Kind::indices, {}, {}, {i + 1}};
      rep.note = "x_" + std::to_string(i + 1) + " is zero";
      return rep;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (is_parallel(xs[j], xs[i])) {
        rep.holds = false;
        rep.witness = Witness{Witness::Kind::indices, {}, {}, {j + 1, i + 1}};
        rep.note = "x_" + std::to_string(j + 1) + " and x_" + std::to_string(i + 1) + " are parallel";
        return rep;
      }
  }
  // (c) hyperplane counts.
  const std::uint64_t count = kernels::projective_count(field.order(), dim);
  if (count == kernels::kCountOverflow || count > opts.cap)
    throw Error(ErrorCode::CapExceeded, "hyperplane count exceeds the cap");
  const auto& f = field.data();
  const auto xc = flatten(xs), vc = flatten(vs);
  auto zeros_on = [&](const std::vector<Code>& family, const std::vector<Code>& eta) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Code acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc = f.add(acc, f.mul(eta[k], family[i * dim + k]));
      hits += acc == 0;
    }
    return hits;
  };
  auto pred = [&](std::uint64_t idx) {
    std::vector<Code> eta(dim);
    kernels::unrank_projective(f, idx, eta);
    const std::size_t cv = zeros_on(vc, eta);
    return cv + 1 >= dim && zeros_on(xc, eta) < cv;
  };
  const auto hit = par::first_match(count, pred, opts.exec);
  rep.checked = hit ? *hit + 1 : count;
  if (hit) {
    rep.holds = false;
    rep.witness = Witness{Witness::Kind::hyperplane, projective_point(field, dim, *hit).entries(), {}, {}};
    rep.note = "hyperplane contains more v's than x's";
  }
  return rep;
}

namespace {

bool parallel_match(const Vector& v, const Vector& x) {
  if (v.is_zero() || x.is_zero()) return v.is_zero() && x.is_zero();
  return is_parallel(v, x);
}

// Kuhn's augmenting paths on the rows not yet fixed.
bool has_perfect_matching(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& row_used,
                          const std::vector<bool>& col_used) {
  const std::size_t n = adj.size();
  std::vector<int> match_col(n, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!adj[r][c] || col_used[c] || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]), seen)) {
        match_col[c] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    if (row_used[r]) continue;
    std::vector<bool> seen(n, false);
    if (!augment(r, seen)) return false;
  }
  return true;
}

}  // namespace

std::optional<MatchResult> find_matching(const std::vector<Vector>& xs, const std::vector<Vector>& vs) {
  require_family(xs, vs);
  const std::size_t n = xs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = parallel_match(vs[i], xs[j]);

  std::vector<bool> row_used(n, false), col_used(n, false);
  if (!has_perfect_matching(adj, row_used, col_used)) return std::nullopt;
  MatchResult out;
  for (std::size_t i = 0; i < n; ++i) {
    row_used[i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!adj[i][j] || col_used[j]) continue;
      col_used[j] = true;
      if (has_perfect_matching(adj, row_used, col_used)) {
        out.permutation.push_back(j);
        break;
      }
      col_used[j] = false;
    }
  }
  const FieldSpec field = xs.front().field();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector& x = xs[out.permutation[i]];
    const std::size_t lead = x.leading_index();
    out.scalars.push_back(lead == x.size() ? field.one() : vs[i][lead] / x[lead]);
  }
  return out;
}

bool verify_matching(const std::vector<Vector>& xs, const std::vector<Vector>& vs, const MatchResult& match) {
  const std::size_t n = xs.size();
  if (vs.size() != n || match.permutation.size() != n || match.scalars.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = match.permutation[i];
    if (j >= n || seen[j] || match.scalars[i].is_zero()) return false;
    seen[j] = true;
    if (match.scalars[i] * xs[j] != vs[i]) return false;
  }
  return true;
}

CertReport check_subspace_generalization(const std::vector<Vector>& xs, const std::vector<Vector>& vs,
                                         std::size_t m, const EnumerationOptions& opts) {
  require_family(xs, vs);
  const FieldSpec field = xs.front().field();
  if (!field.finite()) throw Error(ErrorCode::InfiniteField, "subspace enumeration over Q");
  const std::size_t n = xs.size();
  const std::size_t dim = xs.front().size();
  if (m > dim) throw Error(ErrorCode::DimensionMismatch, "subspace dimension exceeds the ambient dimension");
  const std::uint64_t expected = gaussian_binomial(field.order(), dim, m);
  if (expected == kernels::kCountOverflow || expected > opts.cap)
    throw Error(ErrorCode::CapExceeded, "subspace count exceeds the cap");

  CertReport rep;
  rep.condition = Condition::SubspaceGeneralization;
  rep.n = n;
  rep.d = dim;
  const auto& f = field.data();
  const SubspaceEnumerator en(f, dim, m);
  const auto xc = flatten(xs), vc = flatten(vs);

  // v ∈ S iff appending v to the basis does not raise the rank above m.
  auto inside = [&](const std::vector<Code>& basis, const std::vector<Code>& family, std::size_t i,
                    std::vector<Code>& scratch) {
    scratch.assign(basis.begin(), basis.end());
    scratch.insert(scratch.end(), family.begin() + i * dim, family.begin() + (i + 1) * dim);
    return kernels::rank_inplace(f, scratch, m + 1, dim) == m;
  };
  auto pred = [&](std::uint64_t idx) {
    std::vector<Code> basis, scratch;
    en.basis(idx, basis);
    std::size_t cv = 0, cx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cv += inside(basis, vc, i, scratch);
      cx += inside(basis, xc, i, scratch);
    }
    return cv >= m && cx < cv;
  };
  const auto hit = par::first_match(en.count(), pred, opts.exec);
  rep.checked = hit ? *hit + 1 : en.count();
  if (hit) {
    std::vector<Code> basis;
    en.basis(*hit, basis);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m; ++r)
      rows.push_back(Vector::from_codes(field, std::vector<Code>(basis.begin() + r * dim, basis.begin() + (r + 1) * dim)));
    rep.holds = false;
    rep.witness = Witness{Witness::Kind::subspace, {}, std::move(rows), {}};
    rep.note = "subspace of dimension " + std::to_string(m) + " contains more v's than x's";
  }
  return rep;
}

}  // namespace triadcert
