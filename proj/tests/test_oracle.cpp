#include <doctest.h>

#include "support/brute.hpp"
#include "support/random.hpp"
#include "triadcert/counterexample.hpp"
#include "triadcert/oracle.hpp"

using namespace triadcert;
using namespace triadcert::testing;

TEST_CASE("product class counts") {
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(enumerate_product_classes(f2, 2, 2, 2).size() == 27);
  CHECK(enumerate_product_classes(f2, 3, 3, 3).size() == 343);
  CHECK(enumerate_product_classes(f2, 1, 1, 1).size() == 1);
  CHECK(enumerate_product_classes(FieldSpec::prime(3), 2, 2, 2).size() == 4 * 4 * 8);
  OracleOptions tiny;
  tiny.class_cap = 10;
  CHECK_THROWS_AS(enumerate_product_classes(f2, 2, 2, 2, tiny), Error);
  CHECK_THROWS_AS(enumerate_product_classes(FieldSpec::rational(), 2, 2, 2), Error);

  // Distinct tensors, each canonical.
  const auto cls = enumerate_product_classes(FieldSpec::gf4(), 2, 1, 2);
  const auto naive = naive_products(FieldSpec::gf4(), 2, 1, 2);
  CHECK(cls.size() == naive.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    CHECK(triad_equal(canonical_triad(cls[i]), cls[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK(expand(cls[i]) != expand(cls[j]));
  }
}

TEST_CASE("rank examples") {
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(tensor_rank_exhaustive(Tensor3(f2, 2, 2, 2), 3) == 0u);
  CHECK(tensor_rank_exhaustive(expand(builtin_example(f2)), 3) == 3u);
  const Vector e1 = Vector::unit(f2, 2, 0), e2 = Vector::unit(f2, 2, 1);
  CHECK(tensor_rank_exhaustive(expand(TriadList({{e1, e1, e1}, {e2, e2, e2}})), 3) == 2u);
  CHECK_FALSE(tensor_rank_exhaustive(expand(builtin_example(f2)), 2));
}

TEST_CASE("decomposition examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f4 = FieldSpec::gf4();
  const auto d2 = enumerate_decompositions(expand(builtin_example(f2)), 3);
  REQUIRE(d2.size() == 1);
  CHECK(same_class(d2[0], builtin_example(f2)));
  CHECK(enumerate_decompositions(expand(builtin_example(f4)), 3).size() >= 2);
  CHECK(enumerate_decompositions(Tensor3(f2, 2, 2, 2), 1).empty());
}

TEST_CASE("verify_theorem1 examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f4 = FieldSpec::gf4();
  const OracleResult r2 = verify_theorem1(builtin_example(f2));
  CHECK(r2.rank == 3u);
  CHECK(r2.unique);
  CHECK(r2.matches_input);
  CHECK(r2.classes == 7 * 3 * 3);
  const OracleResult r4 = verify_theorem1(builtin_example(f4));
  CHECK_FALSE(r4.unique);
  const Vector e = Vector::unit(f2, 2, 0);
  const OracleResult one = verify_theorem1(TriadList({{e, e, e}}));
  CHECK(one.rank == 1u);
  CHECK(one.unique);
  try {
    verify_theorem1(TriadList({{e, e, e}, {e, Vector::unit(f2, 2, 1), e}}));
    FAIL("expected HypothesesViolated");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::HypothesesViolated);
  }
}

TEST_CASE("node budget is a hard error") {
  OracleOptions tiny;
  tiny.node_budget = 10;
  try {
    enumerate_decompositions(expand(builtin_example(FieldSpec::prime(2))), 3, tiny);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("completeness against naive multisets on GF(2) 2x2x2") {
  const FieldSpec f2 = FieldSpec::prime(2);
  const auto products = naive_products(f2, 2, 2, 2);
  REQUIRE(products.size() == 27);
  // Every tensor of rank <= 2 arises as a sum of two products or one.
  std::vector<Tensor3> targets{Tensor3(f2, 2, 2, 2)};
  for (std::size_t i = 0; i < products.size(); ++i) {
    targets.push_back(products[i]);
    for (std::size_t j = i + 1; j < products.size(); ++j) {
      Tensor3 s = products[i];
      s += products[j];
      targets.push_back(s);
    }
  }
  // and one tensor that needs three terms
  targets.push_back(expand(TriadList({{Vector::unit(f2, 2, 0), Vector::unit(f2, 2, 0), Vector::unit(f2, 2, 1)},
                                      {Vector::unit(f2, 2, 0), Vector::unit(f2, 2, 1), Vector::unit(f2, 2, 0)},
                                      {Vector::unit(f2, 2, 1), Vector::unit(f2, 2, 0), Vector::unit(f2, 2, 0)}})));
  for (const auto& t : targets) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto classes = enumerate_decompositions(t, n);
      CHECK(classes.size() == naive_decomposition_count(products, t, n));
      for (const auto& c : classes) {
        Tensor3 sum(f2, 2, 2, 2);
        for (const auto& tr : c.triads) sum += expand(tr);
        CHECK(sum == t);
      }
    }
    const std::size_t nr = naive_rank(products, t);
    const auto r = tensor_rank_exhaustive(t, 2);
    if (nr <= 2)
      CHECK(r == nr);
    else
      CHECK_FALSE(r);
  }
  CHECK(tensor_rank_exhaustive(targets.back(), 3) == 3u);
}

TEST_CASE("soundness and monotonicity on random instances") {
  Rng rng(41);
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (int it = 0; it < 25; ++it) {
      const std::size_t n = pick(rng, 1, 3);
      const TriadList t = random_triads(f, n, pick(rng, 1, 3), pick(rng, 1, 2), pick(rng, 1, 3), rng);
      const Tensor3 target = expand(t);
      const auto r = tensor_rank_exhaustive(target, n);
      REQUIRE(r);
      CHECK(*r <= n);
      for (const auto& c : enumerate_decompositions(target, *r ? *r : 1)) {
        Tensor3 sum(f, t.dx(), t.dy(), t.dz());
        for (const auto& tr : c.triads) sum += expand(tr);
        CHECK(sum == target);
        CHECK(c.triads.size() == (*r ? *r : 1));
      }
    }
  }
}
