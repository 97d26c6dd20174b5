#include <doctest.h>

#include "support/brute.hpp"
#include "support/random.hpp"
#include "triadcert/linalg.hpp"

using namespace triadcert;
using namespace triadcert::testing;

namespace {

Vector vec(const FieldSpec& f, std::initializer_list<const char*> entries) {
  std::vector<Scalar> e;
  for (const char* s : entries) e.push_back(f.parse(s));
  return Vector(f, std::move(e));
}

std::vector<std::string> show(const std::vector<Vector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) {
    std::string s;
    for (const auto& e : v.entries()) s += e.to_string() + ",";
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("mat_rank examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f4 = FieldSpec::gf4();
  CHECK(mat_rank(Matrix::identity(f2, 2)) == 2);
  const Vector a = vec(f2, {"1", "0"}), b = vec(f2, {"0", "1"});
  Matrix m = Matrix::outer(a, a) + Matrix::outer(b, b) + Matrix::outer(a + b, a + b);
  CHECK(m == Matrix::from_rows({vec(f2, {"0", "1"}), vec(f2, {"1", "0"})}));
  CHECK(mat_rank(m) == 2);

  const Vector a4 = vec(f4, {"1", "0"}), b4 = vec(f4, {"0", "1"});
  const Matrix p = f4.parse("1+x") * Matrix::outer(a4, a4) + Matrix::outer(b4, b4) +
                   f4.parse("x") * Matrix::outer(a4 + b4, a4 + b4);
  CHECK(mat_rank(p) == 1);
  const Vector u = a4 + f4.parse("x") * b4;
  CHECK(p == Matrix::outer(u, u));
  CHECK(mat_rank(Matrix(f2, 3, 2)) == 0);
}

TEST_CASE("mat_rank over Q") {
  const FieldSpec q = FieldSpec::rational();
  const Matrix m = Matrix::from_rows({vec(q, {"1", "2", "3"}), vec(q, {"4", "5", "6"}), vec(q, {"7", "8", "9"})});
  CHECK(mat_rank(m) == 2);
  CHECK(mat_rank(Matrix::from_rows({vec(q, {"1/2", "1/3"}), vec(q, {"3", "2"})})) == 1);
}

TEST_CASE("nullspace examples") {
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(nullspace_basis(Matrix::identity(f2, 3)).empty());
  CHECK(show(nullspace_basis(Matrix::from_rows({vec(f2, {"1", "1"})}))) == std::vector<std::string>{"1,1,"});
  CHECK(show(nullspace_basis(Matrix(f2, 2, 2))) == std::vector<std::string>{"1,0,", "0,1,"});
  const FieldSpec q = FieldSpec::rational();
  const auto ns = nullspace_basis(Matrix::from_rows({vec(q, {"1", "2", "3"}), vec(q, {"4", "5", "6"})}));
  REQUIRE(ns.size() == 1);
  CHECK(show(ns) == std::vector<std::string>{"1,-2,1,"});
}

TEST_CASE("span_dim examples") {
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(span_dim({Vector::unit(f2, 3, 0), Vector::unit(f2, 3, 1), Vector::unit(f2, 3, 2)}) == 3);
  const Vector a = vec(f2, {"1", "0"}), b = vec(f2, {"0", "1"});
  CHECK(span_dim({a, b, a + b}) == 2);
}

TEST_CASE("projective functionals") {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
  std::vector<Vector> cs;
  for (const auto& e : projective_functionals(f2, 2)) cs.push_back(e.coefficients());
  CHECK(show(cs) == std::vector<std::string>{"0,1,", "1,0,", "1,1,"});
  CHECK(projective_functionals(f3, 2).size() == 4);
  CHECK(projective_functionals(f2, 1).size() == 1);
  CHECK(projective_count(f3, 3) == 13);
  CHECK_THROWS_AS(projective_functionals(FieldSpec::rational(), 2), Error);

  // Pairwise nonparallel and covering every nonzero vector.
  for (const FieldSpec& f : {f2, f3, FieldSpec::gf4()}) {
    const auto fs = projective_functionals(f, 3);
    REQUIRE(fs.size() == projective_count(f, 3));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& c = fs[i].coefficients();
      CHECK(c[c.leading_index()].is_one());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(is_parallel(c, fs[j].coefficients()));
      CHECK(vector_less(fs[i ? i - 1 : 0].coefficients(), c) == (i > 0));
    }
    for (const auto& t : all_tuples(f, 3)) {
      const Vector v(f, t);
      if (v.is_zero()) continue;
      int hits = 0;
      for (const auto& e : fs) hits += is_parallel(v, e.coefficients());
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("is_parallel") {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3);
  CHECK(is_parallel(vec(f2, {"1", "0"}), vec(f2, {"1", "0"})));
  CHECK_FALSE(is_parallel(vec(f2, {"1", "0"}), vec(f2, {"0", "1"})));
  CHECK(is_parallel(vec(f3, {"1", "1"}), vec(f3, {"2", "2"})));
  CHECK(is_parallel(vec(f3, {"0", "0"}), vec(f3, {"2", "1"})));
}

TEST_CASE("functional dimension mismatch") {
  const FieldSpec f2 = FieldSpec::prime(2);
  const Functional eta(vec(f2, {"1", "1"}));
  try {
    (void)eta(vec(f2, {"1", "0", "1"}));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("rank equals transpose rank and rank-nullity") {
  Rng rng(11);
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::gf4(), FieldSpec::rational()}) {
    for (int it = 0; it < 300; ++it) {
      const Matrix m = random_matrix(f, pick(rng, 1, 6), pick(rng, 1, 6), rng);
      const std::size_t r = mat_rank(m);
      CHECK(r == mat_rank(m.transpose()));
      const auto ns = nullspace_basis(m);
      CHECK(m.cols() == r + ns.size());
      for (const auto& v : ns) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Scalar acc = f.zero();
          for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
          CHECK(acc.is_zero());
        }
      }
      if (!ns.empty()) CHECK(span_dim(ns) == ns.size());
    }
  }
}

TEST_CASE("mat_rank against brute force over GF(3)") {
  Rng rng(5);
  const FieldSpec f = FieldSpec::prime(3);
  for (int it = 0; it < 400; ++it) {
    const Matrix m = random_matrix(f, pick(rng, 1, 4), pick(rng, 1, 4), rng);
    CHECK(mat_rank(m) == brute_rank(m));
  }
}

TEST_CASE("coordinates and independent prefix") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const Vector a = vec(f3, {"1", "0", "1"}), b = vec(f3, {"0", "1", "2"});
  CHECK(independent_prefix_basis({a, a, b, a + b}) == std::vector<std::size_t>{0, 2});
  const auto c = coordinates({a, b}, f3.from_int(2) * a + b);
  REQUIRE(c);
  CHECK((*c)[0] == f3.from_int(2));
  CHECK((*c)[1].is_one());
  CHECK_FALSE(coordinates({a, b}, Vector::unit(f3, 3, 0)));
}
