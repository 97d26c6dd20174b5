#pragma once

// Hyperplane-counting criterion under which a family {v_i} must be a scaled
// permutation of a pairwise nonparallel family {x_i}, together with a matcher
// and the m-dimensional subspace version of the counting assertion.

#include <optional>
#include <vector>

#include "triadcert/conditions.hpp"

namespace triadcert {

struct MatchResult {
  std::vector<std::size_t> permutation;  // v_i = scalars[i] * x_{permutation[i]}, 0-based
  CoefficientVector scalars;
};

/// Holds iff (a) the v's span the ambient space F^d, (b) the x's are nonzero
/// and pairwise nonparallel, and (c) every hyperplane H containing at least
/// d − 1 of the v's contains at least as many x's as v's.
CertReport check_lemma_hypothesis(const std::vector<Vector>& xs, const std::vector<Vector>& vs,
                                  const EnumerationOptions& opts = {});

/// Lexicographically smallest permutation matching each v_i to a parallel x.
std::optional<MatchResult> find_matching(const std::vector<Vector>& xs, const std::vector<Vector>& vs);
bool verify_matching(const std::vector<Vector>& xs, const std::vector<Vector>& vs, const MatchResult& match);

/// For every m-dimensional subspace S: #{v_i ∈ S} >= m implies
/// #{x_i ∈ S} >= #{v_i ∈ S}. Subspaces are enumerated as reduced echelon bases.
CertReport check_subspace_generalization(const std::vector<Vector>& xs, const std::vector<Vector>& vs,
                                         std::size_t m, const EnumerationOptions& opts = {});

/// Number of m-dimensional subspaces of F_q^n, or kernels::kCountOverflow.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t m);

/// All m-dimensional subspaces of F^n as reduced echelon row bases, in the
/// enumeration order of check_subspace_generalization.
std::vector<std::vector<Vector>> enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t m);

}  // namespace triadcert
