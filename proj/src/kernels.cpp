#include "triadcert/kernels.hpp"

#include <utility>

namespace triadcert::kernels {

std::size_t rank_inplace(const detail::FieldData& f, std::span<Code> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
    const Code inv = f.inv(m[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Code e = m[r * cols + c];
      if (e == 0) continue;
      const Code factor = f.mul(e, inv);
      for (std::size_t j = c; j < cols; ++j)
        m[r * cols + j] = f.sub(m[r * cols + j], f.mul(factor, m[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

std::uint64_t power_count(std::uint64_t q, std::size_t dim) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (out > kCountOverflow / q) return kCountOverflow;
    out *= q;
  }
  return out;
}

std::uint64_t projective_count(std::uint64_t q, std::size_t dim) {
  const std::uint64_t total = power_count(q, dim);
  if (total == kCountOverflow) return kCountOverflow;
  return (total - 1) / (q - 1);
}

// Lexicographic order over normalized vectors puts longer zero prefixes first:
// the block with leading position dim-1 (one vector), then dim-2 (q vectors),
// down to leading position 0 (q^(dim-1) vectors).
void unrank_projective(const detail::FieldData& f, std::uint64_t index, std::span<Code> out) {
  const std::size_t dim = out.size();
  for (std::size_t lead = dim; lead-- > 0;) {
    const std::size_t tail = dim - 1 - lead;
    const std::uint64_t block = power_count(f.q, tail);
    if (index < block) {
      for (std::size_t i = 0; i < lead; ++i) out[i] = 0;
      out[lead] = 1;
      unrank_vector(f, index, out.subspan(lead + 1));
      return;
    }
    index -= block;
  }
}

std::uint64_t rank_projective(const detail::FieldData& f, std::span<const Code> v) {
  const std::size_t dim = v.size();
  std::size_t lead = 0;
  while (lead < dim && v[lead] == 0) ++lead;
  std::uint64_t offset = 0;
  for (std::size_t l = dim - 1; l > lead; --l) offset += power_count(f.q, dim - 1 - l);
  return offset + rank_vector(f, v.subspan(lead + 1));
}

bool normalize_projective(const detail::FieldData& f, std::span<Code> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  if (v[lead] != 1) {
    const Code inv = f.inv(v[lead]);
    for (std::size_t i = lead; i < v.size(); ++i) v[i] = f.mul(v[i], inv);
  }
  return true;
}

void unrank_vector(const detail::FieldData& f, std::uint64_t index, std::span<Code> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Code>(index % f.q);
    index /= f.q;
  }
}

std::uint64_t rank_vector(const detail::FieldData& f, std::span<const Code> v) {
  std::uint64_t out = 0;
  for (const Code c : v) out = out * f.q + c;
  return out;
}

}  // namespace triadcert::kernels
