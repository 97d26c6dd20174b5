#include <doctest.h>

#include <functional>

#include "support/random.hpp"
#include "triadcert/counterexample.hpp"
#include "triadcert/oracle.hpp"

using namespace triadcert;
using namespace triadcert::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("rank one witness examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3), f4 = FieldSpec::gf4();
  const auto w4 = find_rank_one_witness(builtin_example(f4));
  REQUIRE(w4);
  CHECK(normalize_projective(Vector(f4, *w4)) ==
        normalize_projective(Vector(f4, {f4.parse("1+x"), f4.one(), f4.parse("x")})));
  CHECK(*w4 == check_condition_u(builtin_example(f4)).witness->coefficients);
  CHECK_FALSE(find_rank_one_witness(builtin_example(f2)));

  const Vector y(f3, {f3.one(), f3.from_int(2)});
  const TriadList same({{Vector::unit(f3, 2, 0), y, y}, {Vector::unit(f3, 2, 1), y, y}});
  const auto w = find_rank_one_witness(same);
  REQUIRE(w);
  // (1, 1) precedes (1, -1) and already gives the rank-one pencil 2 y⊗y.
  CHECK(*w == CoefficientVector{f3.one(), f3.one()});
  CHECK(mat_rank(pencil(same, {f3.one(), f3.from_int(-1)})) == 0);
}

TEST_CASE("alternative over GF(4)") {
  const FieldSpec f4 = FieldSpec::gf4();
  const TriadList t = builtin_example(f4);
  const CoefficientVector alpha{f4.parse("1+x"), f4.one(), f4.parse("x")};
  const AlternativeDecomposition alt = build_alternative(t, alpha);
  CHECK(alt.pencil_rank == 1);
  CHECK(alt.pivot == 0);
  CHECK(expand(alt.alternative) == expand(t));
  CHECK_FALSE(same_decomposition(alt.alternative, t));
  CHECK(alt.nonzero_terms == 3);
  CHECK(verify_alternative(alt));
  const Vector a = Vector::unit(f4, 2, 0), b = Vector::unit(f4, 2, 1);
  const Vector u = a + f4.parse("x") * b;
  const Triad expected{f4.parse("1+x").inverse() * Vector::unit(f4, 3, 0), u, u};
  CHECK(triad_equal(canonical_triad(alt.alternative[0]), canonical_triad(expected)));

  // The CLI's scaled witness gives the same first term.
  const AlternativeDecomposition scaled = build_alternative(t, *find_rank_one_witness(t));
  CHECK(triad_equal(canonical_triad(scaled.alternative[0]), canonical_triad(expected)));
  CHECK(transcript(alt).find("alternative decomposition") != std::string::npos);
}

TEST_CASE("zero pencil yields a shorter representation") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const Vector y(f3, {f3.one(), f3.one()});
  const TriadList same({{Vector::unit(f3, 2, 0), y, y}, {Vector::unit(f3, 2, 1), y, y}});
  const AlternativeDecomposition alt = build_alternative(same, {f3.one(), f3.from_int(-1)});
  CHECK(alt.pencil_rank == 0);
  CHECK(alt.nonzero_terms == 1);
  CHECK(verify_alternative(alt));
  CHECK(expand(alt.alternative) == expand(same));

  const FieldSpec q = FieldSpec::rational();
  const Vector yq(q, {q.one(), q.from_int(3)});
  const TriadList tq({{Vector::unit(q, 2, 0), yq, yq}, {Vector::unit(q, 2, 1), yq, yq}});
  CHECK(verify_alternative(build_alternative(tq, {q.one(), q.from_int(-1)})));
  const FieldSpec f2 = FieldSpec::prime(2);
  const TriadList t2 = tq.reinterpret(f2);
  const AlternativeDecomposition a2 = build_alternative(t2, {f2.one(), f2.one()});
  CHECK(verify_alternative(a2));
  CHECK(a2.nonzero_terms == 1);
}

TEST_CASE("alternative error paths") {
  const FieldSpec f2 = FieldSpec::prime(2);
  const TriadList t = builtin_example(f2);
  CHECK(code_of([&] { build_alternative(t, {f2.one(), f2.one(), f2.one()}); }) == ErrorCode::RankNotOne);
  CHECK(code_of([&] { build_alternative(t, {f2.one(), f2.zero(), f2.zero()}); }) == ErrorCode::WeightTooSmall);
  CHECK(code_of([&] { build_alternative(t, {f2.one(), f2.one()}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { builtin_example(FieldSpec::prime(3)); }) == ErrorCode::UnsupportedField);
}

TEST_CASE("builtin examples") {
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::gf4(), FieldSpec::rational()}) {
    const TriadList t = builtin_example(f);
    CHECK(t.size() == 3);
    CHECK(t.dx() == 3);
    CHECK(t.dy() == 2);
    CHECK(t.dz() == 2);
    CHECK(span_dim(t.xs()) == 3);
  }
}

TEST_CASE("rational rank-one witness is exact") {
  const FieldSpec q = FieldSpec::rational();
  const auto w = find_rank_one_witness(builtin_example(q));
  // No weight-2 collapse exists: the y factors are pairwise nonparallel.
  CHECK_FALSE(w);
}

TEST_CASE("necessity and sufficiency at n = d") {
  Rng rng(51);
  int failures = 0, holds = 0;
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = pick(rng, 1, 3);
      const TriadList t = random_full_rank_x(f, n, pick(rng, 1, 2), pick(rng, 1, 2), rng);
      const CertReport u = check_condition_u(t);
      const auto w = find_rank_one_witness(t);
      CHECK(u.holds == !w.has_value());
      const OracleResult res = verify_theorem1(t);
      if (u.holds) {
        ++holds;
        CHECK(res.rank == n);
        CHECK(res.unique);
        CHECK(res.matches_input);
      } else {
        ++failures;
        const AlternativeDecomposition alt = build_alternative(t, *w);
        CHECK(verify_alternative(alt));
        const bool not_unique = !res.rank || *res.rank < n || !res.unique;
        CHECK(not_unique);
      }
    }
  }
  CHECK(failures > 0);
  CHECK(holds > 0);
}
