#pragma once

// Brute-force ground truth over small finite fields: tensor rank by
// exhaustive search and the full list of n-term decompositions.
//
// Product tensors are enumerated as canonical classes (x, y normalized to a
// leading 1, z any nonzero vector), ordered by (x index, y index, z code).
// A decomposition is a non-decreasing sequence of class indices whose last
// element is read off the residual directly, so each multiset is visited once
// and the search costs O(P^(n-1)) residual tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "triadcert/exec.hpp"
#include "triadcert/tensor.hpp"

namespace triadcert {

struct OracleOptions {
  std::uint64_t node_budget = 100'000'000;
  std::uint64_t class_cap = std::uint64_t{1} << 20;
  Exec exec;
};

struct DecompositionClass {
  std::vector<Triad> triads;  // canonical, sorted by class index
};

struct OracleResult {
  std::optional<std::size_t> rank;  // nothing: exceeds the cap
  std::vector<DecompositionClass> decompositions;
  bool unique = false;         // exactly one class
  bool matches_input = false;  // that class is the input's canonical multiset
  std::uint64_t classes = 0;
};

std::vector<Triad> enumerate_product_classes(const FieldSpec& field, std::size_t dx, std::size_t dy, std::size_t dz,
                                             const OracleOptions& opts = {});

/// Smallest r <= cap with T a sum of r product tensors.
std::optional<std::size_t> tensor_rank_exhaustive(const Tensor3& t, std::size_t cap, const OracleOptions& opts = {});

/// Every multiset of n product classes summing to T, in lexicographic order
/// of class-index sequences.
std::vector<DecompositionClass> enumerate_decompositions(const Tensor3& t, std::size_t n,
                                                         const OracleOptions& opts = {});

/// Expands t and runs both searches at n = |t|. Throws HypothesesViolated
/// when some x_i is zero or two x's are parallel.
OracleResult verify_theorem1(const TriadList& t, const OracleOptions& opts = {});

bool same_class(const DecompositionClass& c, const TriadList& t);

}  // namespace triadcert
