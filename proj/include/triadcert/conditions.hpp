#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triadcert/exec.hpp"
#include "triadcert/tensor.hpp"

namespace triadcert {

enum class Condition { U, W, Kruskal, Hypotheses, LemmaHypothesis, SubspaceGeneralization };
std::string_view to_string(Condition c);

struct Witness {
  enum class Kind { coefficients, indices, hyperplane, subspace, k_ranks };
  Kind kind = Kind::coefficients;
  CoefficientVector coefficients;        // α, or a hyperplane normal
  std::vector<Vector> basis;             // subspace witnesses
  std::vector<std::size_t> indices;      // 1-based positions, or k-ranks
};

/// Outcome of a check. witness is present exactly when holds is false.
struct CertReport {
  Condition condition = Condition::U;
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::size_t> witness_rank;  // pencil rank at a U/W witness
  std::vector<std::size_t> ranks;           // k-ranks (Kruskal)
  std::uint64_t checked = 0;                // enumeration positions examined
  std::string note;
};

struct EnumerationOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;  // max projective classes
  Exec exec;
};

/// n - d + 2, the right-hand cap of the Condition U inequality.
std::size_t u_bound(std::size_t n, std::size_t d);

CertReport check_hypotheses(const TriadList& t);

/// Exhaustive over α = 0 followed by the lexicographic projective
/// representatives of F^n; checked counts positions up to the witness.
CertReport check_condition_u(const TriadList& t, const EnumerationOptions& opts = {});

/// Same inequality, over α = (η(x_1), ..., η(x_n)). η ranges over the zero
/// functional and then the projective functionals on the span of the x's,
/// coordinatized by its first independent x's.
CertReport check_condition_w(const TriadList& t, const EnumerationOptions& opts = {});

/// Sampling refutation that also works over Q: every weight-2 support is
/// solved exactly, then trials random α are drawn (integers in [-3, 3] over Q,
/// uniform elements otherwise). Finding nothing proves nothing.
std::optional<CoefficientVector> refute_condition_u(const TriadList& t, std::uint64_t trials, std::uint64_t seed);

/// First pair i < j with some nonzero s making rank(s y_i z_iᵀ + y_j z_jᵀ) <= 1,
/// returned as α with α_i = s, α_j = 1. Exact over Q: the 2x2 minors of the
/// pencil are polynomials of degree <= 2 in s.
std::optional<CoefficientVector> weight_two_collapse(const TriadList& t);

/// Independent re-check of a Condition U witness.
struct WitnessCheck {
  std::size_t rank = 0;
  std::size_t weight = 0;
  std::size_t bound = 0;  // min(weight, n - d + 2)
  bool violates = false;
};
WitnessCheck verify_u_witness(const TriadList& t, const CoefficientVector& alpha);

/// True iff α = (η(x_1), ..., η(x_n)) for some functional η.
bool in_condition_w_set(const TriadList& t, const CoefficientVector& alpha);

std::size_t k_rank(const std::vector<Vector>& vs);

/// k_x + k_y + k_z >= 2n + 2.
CertReport check_kruskal(const TriadList& t);

}  // namespace triadcert
