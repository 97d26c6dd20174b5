#include "triadcert/conditions.hpp"

#include <algorithm>
#include <random>

#include "triadcert/kernels.hpp"

namespace triadcert {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::U: return "U";
    case Condition::W: return "W";
    case Condition::Kruskal: return "Kruskal";
    case Condition::Hypotheses: return "Hypotheses";
    case Condition::LemmaHypothesis: return "LemmaHypothesis";
    case Condition::SubspaceGeneralization: return "SubspaceGeneralization";
  }
  return "?";
}

std::size_t u_bound(std::size_t n, std::size_t d) { return n + 2 - d; }

CertReport check_hypotheses(const TriadList& t) {
  CertReport rep;
  rep.condition = Condition::Hypotheses;
  rep.n = t.size();
  rep.d = span_dim(t.xs());
  for (std::size_t i = 0; i < t.size(); ++i) {
    ++rep.checked;
    if (t[i].x.is_zero()) {
      rep.holds = false;
      rep.witness = Witness{Witness::Kind::indices, {}, {}, {i + 1}};
      rep.note = "x_" + std::to_string(i + 1) + " is zero";
      return rep;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      ++rep.checked;
      if (is_parallel(t[i].x, t[j].x)) {
        rep.holds = false;
        rep.witness = Witness{Witness::Kind::indices, {}, {}, {i + 1, j + 1}};
        rep.note = "x_" + std::to_string(i + 1) + " and x_" + std::to_string(j + 1) + " are parallel";
        return rep;
      }
    }
  return rep;
}

namespace {

using kernels::Code;

// Flattened y_i z_iᵀ blocks for fast pencil assembly.
struct PencilKernel {
  const detail::FieldData* f;
  std::size_t n, rows, cols, bound;
  std::vector<Code> blocks;

  PencilKernel(const TriadList& t, std::size_t d)
      : f(&t.field().data()), n(t.size()), rows(t.dy()), cols(t.dz()), bound(u_bound(t.size(), d)) {
    blocks.resize(n * rows * cols);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          blocks[(i * rows + r) * cols + c] = f->mul(t[i].y[r].code(), t[i].z[c].code());
  }

  std::size_t pencil_rank(const std::vector<Code>& alpha, std::vector<Code>& scratch) const {
    scratch.assign(rows * cols, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      const Code* blk = &blocks[i * rows * cols];
      for (std::size_t e = 0; e < rows * cols; ++e) scratch[e] = f->add(scratch[e], f->mul(alpha[i], blk[e]));
    }
    return kernels::rank_inplace(*f, scratch, rows, cols);
  }

  bool violates(const std::vector<Code>& alpha, std::vector<Code>& scratch) const {
    const auto w = static_cast<std::size_t>(std::count_if(alpha.begin(), alpha.end(), [](Code c) { return c != 0; }));
    return pencil_rank(alpha, scratch) < std::min(w, bound);
  }
};

void require_enumerable(const TriadList& t, std::uint64_t count, const EnumerationOptions& opts) {
  if (!t.field().finite())
    throw Error(ErrorCode::InfiniteField, "Condition U/W cannot be certified by enumeration over Q");
  if (count == kernels::kCountOverflow || count > opts.cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(count) + " projective classes exceed the cap of " +
                                            std::to_string(opts.cap));
}

CoefficientVector to_scalars(const FieldSpec& field, const std::vector<Code>& codes) {
  CoefficientVector out;
  for (auto c : codes) out.push_back(field.from_code(c));
  return out;
}

void fill_witness(CertReport& rep, const TriadList& t, CoefficientVector alpha) {
  rep.holds = false;
  rep.witness_rank = mat_rank(pencil(t, alpha));
  rep.witness = Witness{Witness::Kind::coefficients, std::move(alpha), {}, {}};
}

}  // namespace

CertReport check_condition_u(const TriadList& t, const EnumerationOptions& opts) {
  CertReport rep;
  rep.condition = Condition::U;
  rep.n = t.size();
  rep.d = span_dim(t.xs());
  const std::uint64_t proj = t.field().finite() ? kernels::projective_count(t.field().order(), t.size()) : 0;
  require_enumerable(t, proj, opts);

  const PencilKernel kernel(t, rep.d);
  auto alpha_at = [&](std::uint64_t idx, std::vector<Code>& alpha) {
    alpha.assign(t.size(), 0);
    if (idx > 0) kernels::unrank_projective(*kernel.f, idx - 1, alpha);
  };
  auto pred = [&](std::uint64_t idx) {
    std::vector<Code> alpha, scratch;
    alpha_at(idx, alpha);
    return kernel.violates(alpha, scratch);
  };
  const auto hit = par::first_match(proj + 1, pred, opts.exec);
  if (!hit) {
    rep.checked = proj + 1;
    return rep;
  }
  rep.checked = *hit + 1;
  std::vector<Code> alpha;
  alpha_at(*hit, alpha);
  fill_witness(rep, t, to_scalars(t.field(), alpha));
  return rep;
}

CertReport check_condition_w(const TriadList& t, const EnumerationOptions& opts) {
  CertReport rep;
  rep.condition = Condition::W;
  rep.n = t.size();
  const auto xs = t.xs();
  const auto basis_idx = independent_prefix_basis(xs);
  rep.d = basis_idx.size();
  if (!t.field().finite())
    throw Error(ErrorCode::InfiniteField, "Condition U/W cannot be certified by enumeration over Q");
  const std::uint64_t proj = rep.d == 0 ? 0 : kernels::projective_count(t.field().order(), rep.d);
  require_enumerable(t, proj, opts);

  // Row i holds the coordinates of x_i in the chosen basis, so α = C c.
  std::vector<Vector> basis;
  for (auto i : basis_idx) basis.push_back(xs[i]);
  std::vector<Code> coords(t.size() * rep.d, 0);
  for (std::size_t i = 0; i < t.size() && rep.d > 0; ++i) {
    const auto c = coordinates(basis, xs[i]);
    for (std::size_t j = 0; j < rep.d; ++j) coords[i * rep.d + j] = (*c)[j].code();
  }

  const PencilKernel kernel(t, rep.d);
  const auto& f = *kernel.f;
  auto alpha_at = [&](std::uint64_t idx, std::vector<Code>& alpha) {
    alpha.assign(t.size(), 0);
    if (idx == 0) return;
    std::vector<Code> c(rep.d);
    kernels::unrank_projective(f, idx - 1, c);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Code acc = 0;
      for (std::size_t j = 0; j < rep.d; ++j) acc = f.add(acc, f.mul(coords[i * rep.d + j], c[j]));
      alpha[i] = acc;
    }
  };
  auto pred = [&](std::uint64_t idx) {
    std::vector<Code> alpha, scratch;
    alpha_at(idx, alpha);
    return kernel.violates(alpha, scratch);
  };
  const auto hit = par::first_match(proj + 1, pred, opts.exec);
  if (!hit) {
    rep.checked = proj + 1;
    return rep;
  }
  rep.checked = *hit + 1;
  std::vector<Code> alpha;
  alpha_at(*hit, alpha);
  fill_witness(rep, t, to_scalars(t.field(), alpha));
  return rep;
}

WitnessCheck verify_u_witness(const TriadList& t, const CoefficientVector& alpha) {
  WitnessCheck out;
  out.rank = rref(pencil(t, alpha)).pivots.size();
  out.weight = weight(alpha);
  out.bound = std::min(out.weight, u_bound(t.size(), span_dim(t.xs())));
  out.violates = out.rank < out.bound;
  return out;
}

bool in_condition_w_set(const TriadList& t, const CoefficientVector& alpha) {
  if (alpha.size() != t.size()) throw Error(ErrorCode::LengthMismatch, "coefficient vector length");
  // α = X η where X has rows x_i: α must lie in the column space of X.
  const Matrix x = Matrix::from_rows(t.xs());
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < x.cols(); ++c) cols.push_back(x.column(c));
  const std::size_t base = span_dim(cols);
  cols.push_back(Vector(t.field(), alpha));
  return span_dim(cols) == base;
}

namespace {

// Nonzero rational s with rank(s A + B) <= 1, from the 2x2 minors of the
// pencil, which are polynomials of degree <= 2 in s.
std::vector<mpq_class> rational_pair_candidates(const Matrix& a, const Matrix& b) {
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < a.rows(); ++r2)
      for (std::size_t c1 = 0; c1 < a.cols(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < a.cols(); ++c2) {
          auto A = [&](std::size_t r, std::size_t c) { return a(r, c).rational(); };
          auto B = [&](std::size_t r, std::size_t c) { return b(r, c).rational(); };
          const mpq_class q2 = A(r1, c1) * A(r2, c2) - A(r1, c2) * A(r2, c1);
          const mpq_class q1 = A(r1, c1) * B(r2, c2) + B(r1, c1) * A(r2, c2) - A(r1, c2) * B(r2, c1) -
                               B(r1, c2) * A(r2, c1);
          const mpq_class q0 = B(r1, c1) * B(r2, c2) - B(r1, c2) * B(r2, c1);
          if (q2 == 0 && q1 == 0 && q0 == 0) continue;
          std::vector<mpq_class> roots;
          if (q2 == 0) {
            if (q1 != 0) roots.push_back(mpq_class(-q0 / q1));
          } else {
            const mpq_class disc = q1 * q1 - 4 * q2 * q0;
            if (disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) &&
                mpz_perfect_square_p(disc.get_den_mpz_t())) {
              mpz_class sn, sd;
              mpz_sqrt(sn.get_mpz_t(), disc.get_num_mpz_t());
              mpz_sqrt(sd.get_mpz_t(), disc.get_den_mpz_t());
              const mpq_class root(sn, sd);
              roots.push_back(mpq_class((-q1 + root) / (2 * q2)));
              roots.push_back(mpq_class((-q1 - root) / (2 * q2)));
            }
          }
          std::vector<mpq_class> out;
          for (auto& s : roots) {
            s.canonicalize();
            if (s != 0) out.push_back(s);
          }
          return out;
        }
  return {mpq_class(1)};
}

}  // namespace

std::optional<CoefficientVector> weight_two_collapse(const TriadList& t) {
  const FieldSpec field = t.field();
  const std::size_t n = t.size();
  std::vector<Matrix> blocks;
  for (const auto& tr : t) blocks.push_back(Matrix::outer(tr.y, tr.z));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> candidates;
      if (field.finite()) {
        for (std::uint64_t c = 1; c < field.order(); ++c)
          candidates.push_back(field.from_code(static_cast<std::uint32_t>(c)));
      } else {
        for (auto& s : rational_pair_candidates(blocks[i], blocks[j])) candidates.emplace_back(s);
      }
      for (const auto& s : candidates) {
        CoefficientVector alpha(n, field.zero());
        alpha[i] = s;
        alpha[j] = field.one();
        if (rref(pencil(t, alpha)).pivots.size() <= 1) return alpha;
      }
    }
  return std::nullopt;
}

std::optional<CoefficientVector> refute_condition_u(const TriadList& t, std::uint64_t trials, std::uint64_t seed) {
  const FieldSpec field = t.field();
  const std::size_t n = t.size();
  auto violates = [&](const CoefficientVector& alpha) { return verify_u_witness(t, alpha).violates; };

  // Weight 2: the bound is min(2, n - d + 2) = 2, so a violation is rank <= 1.
  if (auto alpha = weight_two_collapse(t)) return alpha;

  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    CoefficientVector alpha;
    for (std::size_t i = 0; i < n; ++i) {
      if (field.finite()) {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
        alpha.push_back(field.from_code(static_cast<std::uint32_t>(dist(rng))));
      } else {
        std::uniform_int_distribution<int> dist(-3, 3);
        alpha.push_back(field.from_int(dist(rng)));
      }
    }
    if (violates(alpha)) return alpha;
  }
  return std::nullopt;
}

std::size_t k_rank(const std::vector<Vector>& vs) {
  const std::size_t n = vs.size();
  const std::size_t limit = std::min(n, vs.empty() ? 0 : vs.front().size());
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<Vector> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) subset.push_back(vs[i]);
      if (span_dim(subset) < k) return k - 1;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return limit;
}

CertReport check_kruskal(const TriadList& t) {
  CertReport rep;
  rep.condition = Condition::Kruskal;
  rep.n = t.size();
  rep.d = span_dim(t.xs());
  rep.ranks = {k_rank(t.xs()), k_rank(t.ys()), k_rank(t.zs())};
  const std::size_t sum = rep.ranks[0] + rep.ranks[1] + rep.ranks[2];
  rep.holds = sum >= 2 * t.size() + 2;
  rep.checked = 3;
  rep.note = "external bound: k_x + k_y + k_z >= 2n + 2";
  if (!rep.holds) rep.witness = Witness{Witness::Kind::k_ranks, {}, {}, rep.ranks};
  return rep;
}

}  // namespace triadcert
