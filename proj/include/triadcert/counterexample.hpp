#pragma once

#include <optional>
#include <string>

#include "triadcert/conditions.hpp"

namespace triadcert {

struct AlternativeDecomposition {
  TriadList original;
  CoefficientVector witness;
  TriadList alternative;
  std::size_t pivot = 0;             // 0-based index with α_pivot != 0
  std::size_t pencil_rank = 0;       // 0 or 1
  std::optional<Vector> pencil_y;    // Σ α_i y_i ⊗ z_i = y ⊗ z when rank is 1
  std::optional<Vector> pencil_z;
  std::size_t nonzero_terms = 0;     // of the alternative
};

/// First α in Condition U's enumeration order with weight >= 2 and pencil
/// rank <= 1. Over Q only weight-2 supports are searched, exactly.
std::optional<CoefficientVector> find_rank_one_witness(const TriadList& t, const EnumerationOptions& opts = {});

/// Rewrites θ with the pencil identity Σ α_i y_i ⊗ z_i = y ⊗ z solved for
/// the pivot term:
///   θ = α_p⁻¹ x_p ⊗ y ⊗ z + Σ_{i≠p} (x_i − α_p⁻¹ α_i x_p) ⊗ y_i ⊗ z_i.
/// The rewritten term sits at the pivot position. A zero pencil makes that
/// term vanish, leaving n−1 nonzero terms. Throws WeightTooSmall when
/// weight(α) < 2 and RankNotOne when the pencil has rank >= 2.
AlternativeDecomposition build_alternative(const TriadList& t, const CoefficientVector& alpha);

/// Same tensor, and either fewer nonzero terms or a different canonical multiset.
bool verify_alternative(const AlternativeDecomposition& alt);

/// Human-readable account of the construction.
std::string transcript(const AlternativeDecomposition& alt);

/// a⊗a⊗a, b⊗b⊗b, c⊗(a+b)⊗(a+b) with a, b the unit vectors of F^2 in
/// modes two and three and x-factors e₁, e₂, e₃ of F^3. Supported over GF(2),
/// GF(4) and Q.
TriadList builtin_example(const FieldSpec& field);

}  // namespace triadcert
