#include "triadcert/counterexample.hpp"

#include <sstream>

#include "triadcert/kernels.hpp"

namespace triadcert {

std::optional<CoefficientVector> find_rank_one_witness(const TriadList& t, const EnumerationOptions& opts) {
  const FieldSpec field = t.field();
  if (!field.finite()) return weight_two_collapse(t);
  const std::uint64_t proj = kernels::projective_count(field.order(), t.size());
  if (proj == kernels::kCountOverflow || proj > opts.cap)
    throw Error(ErrorCode::CapExceeded, "coefficient space exceeds the enumeration cap");

  const auto& f = field.data();
  std::vector<kernels::Code> blocks;
  for (const auto& tr : t)
    for (std::size_t r = 0; r < t.dy(); ++r)
      for (std::size_t c = 0; c < t.dz(); ++c) blocks.push_back(f.mul(tr.y[r].code(), tr.z[c].code()));
  const std::size_t cells = t.dy() * t.dz();

  // Same order as check_condition_u: α = 0 at position 0, then projective representatives.
  auto alpha_at = [&](std::uint64_t idx) {
    std::vector<kernels::Code> alpha(t.size(), 0);
    if (idx > 0) kernels::unrank_projective(f, idx - 1, alpha);
    return alpha;
  };
  auto pred = [&](std::uint64_t idx) {
    const auto alpha = alpha_at(idx);
    std::size_t w = 0;
    std::vector<kernels::Code> m(cells, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      ++w;
      for (std::size_t e = 0; e < cells; ++e) m[e] = f.add(m[e], f.mul(alpha[i], blocks[i * cells + e]));
    }
    return w >= 2 && kernels::rank_inplace(f, m, t.dy(), t.dz()) <= 1;
  };
  const auto hit = par::first_match(proj + 1, pred, opts.exec);
  if (!hit) return std::nullopt;
  CoefficientVector out;
  for (auto c : alpha_at(*hit)) out.push_back(field.from_code(c));
  return out;
}

AlternativeDecomposition build_alternative(const TriadList& t, const CoefficientVector& alpha) {
  if (alpha.size() != t.size()) throw Error(ErrorCode::LengthMismatch, "coefficient vector length");
  if (weight(alpha) < 2) throw Error(ErrorCode::WeightTooSmall, "witness must have at least two nonzero entries");
  const Matrix m = pencil(t, alpha);
  const std::size_t rank = rref(m).pivots.size();
  if (rank > 1) throw Error(ErrorCode::RankNotOne, "pencil has rank " + std::to_string(rank));

  const FieldSpec field = t.field();
  std::size_t pivot = 0;
  while (alpha[pivot].is_zero()) ++pivot;
  const Scalar inv = alpha[pivot].inverse();

  std::optional<Vector> y, z;
  if (rank == 1) {
    std::size_t r0 = 0, c0 = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero() && y == std::nullopt) {
          r0 = r;
          c0 = c;
          y = m.column(c0);
        }
    z = m(r0, c0).inverse() * m.row(r0);
  }

  const Vector& xp = t[pivot].x;
  std::vector<Triad> terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == pivot) {
      if (rank == 1)
        terms.push_back(Triad{inv * xp, *y, *z});
      else
        terms.push_back(Triad{inv * xp, Vector::zeros(field, t.dy()), Vector::zeros(field, t.dz())});
    } else {
      terms.push_back(Triad{t[i].x - (inv * alpha[i]) * xp, t[i].y, t[i].z});
    }
  }
  TriadList alt(std::move(terms));
  const std::size_t nz = nonzero_terms(alt);
  return AlternativeDecomposition{t, alpha, std::move(alt), pivot, rank, std::move(y), std::move(z), nz};
}

bool verify_alternative(const AlternativeDecomposition& alt) {
  if (expand(alt.original) != expand(alt.alternative)) return false;
  if (nonzero_terms(alt.alternative) < alt.original.size()) return true;
  return !same_decomposition(alt.original, alt.alternative);
}

namespace {

std::string show(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

std::string show(const CoefficientVector& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + a[i].to_string();
  return out + ")";
}

}  // namespace

std::string transcript(const AlternativeDecomposition& alt) {
  std::ostringstream os;
  const std::size_t n = alt.original.size();
  const std::size_t p = alt.pivot + 1;
  os << "field " << alt.original.field().name() << ", n = " << n << "\n";
  os << "witness alpha = " << show(alt.witness) << " (weight " << weight(alt.witness) << ")\n";
  const Matrix m = pencil(alt.original, alt.witness);
  os << "pencil sum_i alpha_i y_i (x) z_i =\n";
  for (std::size_t r = 0; r < m.rows(); ++r) os << "  " << show(m.row(r)) << "\n";
  if (alt.pencil_rank == 1) {
    os << "rank 1: pencil = y (x) z with y = " << show(*alt.pencil_y) << ", z = " << show(*alt.pencil_z) << "\n";
  } else {
    os << "rank 0: the weighted terms cancel\n";
  }
  os << "pivot " << p << ": alpha_" << p << " = " << alt.witness[alt.pivot].to_string() << "\n";
  os << "solve for y_" << p << " (x) z_" << p << " and substitute:\n";
  os << "  theta = alpha_" << p << "^-1 x_" << p << " (x) y (x) z + sum_{i != " << p << "} (x_i - alpha_" << p
     << "^-1 alpha_i x_" << p << ") (x) y_i (x) z_i\n";
  os << "alternative decomposition:\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Triad& tr = alt.alternative[i];
    os << "  " << i + 1 << ": " << show(tr.x) << " (x) " << show(tr.y) << " (x) " << show(tr.z)
       << (tr.is_zero_product() ? "  [zero]" : "") << "\n";
  }
  const bool same_tensor = expand(alt.original) == expand(alt.alternative);
  os << "re-expansion matches original: " << (same_tensor ? "yes" : "NO") << "\n";
  if (alt.nonzero_terms < n)
    os << "nonzero terms: " << alt.nonzero_terms << " < " << n << " (representation is not minimal)\n";
  else
    os << "canonical multisets differ: " << (same_decomposition(alt.original, alt.alternative) ? "NO" : "yes")
       << "\n";
  return os.str();
}

TriadList builtin_example(const FieldSpec& field) {
  const bool supported = field.kind() == FieldKind::rational ||
                         (field.kind() == FieldKind::prime && field.characteristic() == 2) ||
                         (field.kind() == FieldKind::extension && field.characteristic() == 2 && field.degree() == 2);
  if (!supported) throw Error(ErrorCode::UnsupportedField, "built-in example exists over GF(2), GF(4) and Q only");
  const Vector a = Vector::unit(field, 2, 0);
  const Vector b = Vector::unit(field, 2, 1);
  const Vector ab = a + b;
  return TriadList({
      Triad{Vector::unit(field, 3, 0), a, a},
      Triad{Vector::unit(field, 3, 1), b, b},
      Triad{Vector::unit(field, 3, 2), ab, ab},
  });
}

}  // namespace triadcert
