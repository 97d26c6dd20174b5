#pragma once

// Code-level finite field kernels used by the enumeration loops. Elements are
// raw field codes; matrices are row-major spans.

#include <cstdint>
#include <span>

#include "triadcert/field.hpp"

namespace triadcert::kernels {

using Code = std::uint32_t;
inline constexpr std::uint64_t kCountOverflow = ~std::uint64_t{0};

/// Rank by Gaussian elimination. Destroys m.
std::size_t rank_inplace(const detail::FieldData& f, std::span<Code> m, std::size_t rows, std::size_t cols);

/// q^dim, or kCountOverflow.
std::uint64_t power_count(std::uint64_t q, std::size_t dim);

/// (q^dim - 1) / (q - 1), or kCountOverflow.
std::uint64_t projective_count(std::uint64_t q, std::size_t dim);

/// The index-th projective representative in lexicographic order, where
/// entries compare by code and the first nonzero entry is 1.
void unrank_projective(const detail::FieldData& f, std::uint64_t index, std::span<Code> out);

/// Inverse of unrank_projective; v must be normalized.
std::uint64_t rank_projective(const detail::FieldData& f, std::span<const Code> v);

/// Scales v so its first nonzero entry is 1. Returns false for the zero vector.
bool normalize_projective(const detail::FieldData& f, std::span<Code> v);

/// All-code vector for index in [0, q^dim), first entry most significant.
void unrank_vector(const detail::FieldData& f, std::uint64_t index, std::span<Code> out);
std::uint64_t rank_vector(const detail::FieldData& f, std::span<const Code> v);

}  // namespace triadcert::kernels
