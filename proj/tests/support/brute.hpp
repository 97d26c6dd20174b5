#pragma once

// Deliberately naive reference computations. None of them reuse the
// library's elimination, projective enumeration or search code.

#include <cstdint>
#include <vector>

#include "triadcert/field.hpp"
#include "triadcert/linalg.hpp"
#include "triadcert/tensor.hpp"

namespace triadcert::testing {

/// All q^n vectors of F^n in base-q order of codes, first coordinate fastest.
inline std::vector<std::vector<Scalar>> all_tuples(const FieldSpec& f, std::size_t n) {
  const auto elems = field_enumerate(f);
  std::vector<std::vector<Scalar>> out;
  std::vector<std::size_t> digit(n, 0);
  for (;;) {
    std::vector<Scalar> t;
    for (auto d : digit) t.push_back(elems[d]);
    out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < n && ++digit[i] == elems.size()) digit[i++] = 0;
    if (i == n) return out;
  }
}

/// Rows are dependent iff some nonzero combination vanishes.
inline bool rows_independent(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return true;
  const std::size_t cols = rows[0].size();
  for (const auto& c : all_tuples(f, rows.size())) {
    bool nonzero = false;
    for (const auto& s : c) nonzero = nonzero || !s.is_zero();
    if (!nonzero) continue;
    bool vanishes = true;
    for (std::size_t j = 0; j < cols && vanishes; ++j) {
      Scalar acc = f.zero();
      for (std::size_t i = 0; i < rows.size(); ++i) acc += c[i] * rows[i][j];
      vanishes = acc.is_zero();
    }
    if (vanishes) return false;
  }
  return true;
}

/// Size of the largest independent subset of rows.
inline std::size_t brute_rank(const Matrix& m) {
  const FieldSpec f = m.field();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.rows()); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (k <= best) continue;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (mask >> r & 1) rows.push_back(m.row(r).entries());
    if (rows_independent(f, rows)) best = k;
  }
  return best;
}

inline Matrix naive_pencil(const TriadList& t, const std::vector<Scalar>& alpha) {
  Matrix m(t.field(), t.dy(), t.dz());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t b = 0; b < t.dy(); ++b)
      for (std::size_t c = 0; c < t.dz(); ++c) m(b, c) += alpha[i] * t[i].y[b] * t[i].z[c];
  return m;
}

/// Condition U over all q^n coefficient vectors, no projective reduction.
inline bool naive_condition_u(const TriadList& t) {
  const std::size_t d = brute_rank(Matrix::from_rows(t.xs()));
  const std::size_t bound = t.size() + 2 - d;
  for (const auto& alpha : all_tuples(t.field(), t.size())) {
    std::size_t w = 0;
    for (const auto& a : alpha) w += !a.is_zero();
    if (brute_rank(naive_pencil(t, alpha)) < std::min(w, bound)) return false;
  }
  return true;
}

/// Every nonzero product tensor of the given shape, one per distinct tensor.
inline std::vector<Tensor3> naive_products(const FieldSpec& f, std::size_t dx, std::size_t dy, std::size_t dz) {
  std::vector<Tensor3> out;
  for (const auto& x : all_tuples(f, dx))
    for (const auto& y : all_tuples(f, dy))
      for (const auto& z : all_tuples(f, dz)) {
        Tensor3 t = expand(Triad{Vector(f, x), Vector(f, y), Vector(f, z)});
        if (t.is_zero()) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || o == t;
        if (!seen) out.push_back(std::move(t));
      }
  return out;
}

/// Number of multisets of n product tensors summing to target (n <= 2).
inline std::size_t naive_decomposition_count(const std::vector<Tensor3>& products, const Tensor3& target,
                                             std::size_t n) {
  std::size_t count = 0;
  if (n == 1) {
    for (const auto& p : products) count += p == target;
  } else if (n == 2) {
    for (std::size_t i = 0; i < products.size(); ++i)
      for (std::size_t j = i; j < products.size(); ++j) {
        Tensor3 s = products[i];
        s += products[j];
        count += s == target;
      }
  }
  return count;
}

/// Smallest r <= 2 with target a sum of r products, or 3 meaning "more".
inline std::size_t naive_rank(const std::vector<Tensor3>& products, const Tensor3& target) {
  if (target.is_zero()) return 0;
  for (std::size_t r = 1; r <= 2; ++r)
    if (naive_decomposition_count(products, target, r) > 0) return r;
  return 3;
}

}  // namespace triadcert::testing
