// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "support/brute.hpp"
#include "support/random.hpp"
#include "triadcert/counterexample.hpp"
#include "triadcert/json_io.hpp"
#include "triadcert/lemma.hpp"
#include "triadcert/oracle.hpp"

using namespace triadcert;
using namespace triadcert::testing;
using io::Json;

namespace {

struct CliRun {
  int code;
  Json out;
  double seconds;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "triadcert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {code, out.str().empty() ? Json() : Json::parse(out.str()), s};
}

std::string example_json(const std::string& field) {
  return io::to_json(builtin_example(field == "f2" ? FieldSpec::prime(2) : FieldSpec::gf4())).dump(2);
}

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
  Verdict v{false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  failures += !v.pass;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3fs", s);
  std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << v.detail << " (" << secs << ")"
            << std::endl;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

bool projectively_equal(const Vector& a, const Vector& b) { return normalize_projective(a) == normalize_projective(b); }

}  // namespace

int main() {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3), f4 = FieldSpec::gf4();
  std::vector<TriadList> corpus;

  report(1, "U over GF(2)", [&]() -> Verdict {
    const CliRun r = run_cli({"check-u"}, example_json("f2"));
    const bool ok = r.code == 0 && r.out["holds"] == true && r.out["checked"] == 8 && r.seconds < 1.0;
    return {ok, "exit " + std::to_string(r.code) + ", checked " + r.out["checked"].dump() + ", " + fmt(r.seconds)};
  });

  report(2, "U over GF(4)", [&]() -> Verdict {
    const CliRun r = run_cli({"check-u"}, example_json("f4"));
    if (r.code != 1) return {false, "exit " + std::to_string(r.code)};
    const TriadList t = builtin_example(f4);
    const Vector w = io::parse_vector(f4, r.out["witness"], "/witness");
    const Vector target(f4, {f4.parse("1+x"), f4.one(), f4.parse("x")});
    const Matrix p = pencil(t, w.entries());
    const Vector u(f4, {f4.one(), f4.parse("x")});  // a + ξb
    // rank one with both factors parallel to a + ξb
    bool factors = mat_rank(p) == 1;
    for (std::size_t c = 0; c < p.cols() && factors; ++c) factors = is_parallel(p.column(c), u);
    for (std::size_t r2 = 0; r2 < p.rows() && factors; ++r2) factors = is_parallel(p.row(r2), u);
    const Matrix exact = pencil(t, target.entries());
    factors = factors && exact == Matrix::outer(u, u);
    const bool ok = projectively_equal(w, target) && factors && r.seconds < 1.0;
    return {ok, "witness " + r.out["witness"].dump() + ", pencil (a+xb)(a+xb)^T " + (factors ? "yes" : "no") + ", " +
                    fmt(r.seconds)};
  });

  report(3, "GF(2) pencil ranks equal min(weight, 2)", [&]() -> Verdict {
    const TriadList t = builtin_example(f2);
    std::size_t good = 0, total = 0;
    for (const auto& alpha : all_tuples(f2, 3)) {
      ++total;
      good += mat_rank(pencil(t, alpha)) == std::min<std::size_t>(weight(alpha), 2);
    }
    return {good == 8 && total == 8, std::to_string(good) + "/" + std::to_string(total) + " coefficient vectors"};
  });

  report(4, "oracle uniqueness over GF(2)", [&]() -> Verdict {
    const CliRun r = run_cli({"verify-unique"}, example_json("f2"));
    const bool cli_ok = r.code == 0 && r.out["rank"] == 3 && r.out["decompositions"].size() == 1;
    // The same triads with modes two and three padded to F^3: 343 classes.
    const Vector a = Vector::unit(f2, 3, 0), b = Vector::unit(f2, 3, 1), c = Vector::unit(f2, 3, 2);
    const TriadList padded({{a, a, a}, {b, b, b}, {c, a + b, a + b}});
    const auto t0 = std::chrono::steady_clock::now();
    const OracleResult big = verify_theorem1(padded);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool big_ok = big.classes == 343 && big.rank == 3u && big.unique && big.matches_input;
    return {cli_ok && big_ok && r.seconds + s < 10.0,
            "3x2x2: rank " + r.out["rank"].dump() + ", " + std::to_string(r.out["decompositions"].size()) +
                " class over " + r.out["classes"].dump() + " product classes, " + fmt(r.seconds) +
                "; 3x3x3: " + std::to_string(big.decompositions.size()) + " class over " +
                std::to_string(big.classes) + " product classes, " + fmt(s)};
  });

  report(5, "counterexample over GF(4)", [&]() -> Verdict {
    const CliRun r = run_cli({"counterexample"}, example_json("f4"));
    if (r.code != 1 || !r.out.contains("alternative")) return {false, "exit " + std::to_string(r.code)};
    const io::Instance alt = io::parse_instance(r.out["alternative"]["alternative"]);
    const TriadList orig = builtin_example(f4);
    const bool same_tensor = expand(alt.triads) == expand(orig);
    const bool differs = !same_decomposition(alt.triads, orig);
    const bool ok = same_tensor && differs && alt.triads.size() == 3 && nonzero_terms(alt.triads) == 3 &&
                    r.seconds < 1.0;
    return {ok, std::string("re-expansion ") + (same_tensor ? "equal" : "differs") + ", multisets " +
                    (differs ? "differ" : "coincide") + ", " + fmt(r.seconds)};
  });

  report(6, "necessity at n = d", [&]() -> Verdict {
    Rng rng(2024);
    int instances = 0, u_fail = 0, built = 0, invalid = 0;
    for (int it = 0; it < 100; ++it) {
      const FieldSpec& f = it % 2 ? f3 : f2;
      const std::size_t n = pick(rng, 1, 4);
      const TriadList t = random_full_rank_x(f, n, pick(rng, 1, 4), pick(rng, 1, 4), rng);
      corpus.push_back(t);
      ++instances;
      if (check_condition_u(t).holds) continue;
      ++u_fail;
      const auto w = find_rank_one_witness(t);
      if (!w) {
        ++invalid;
        continue;
      }
      const AlternativeDecomposition alt = build_alternative(t, *w);
      if (verify_alternative(alt))
        ++built;
      else
        ++invalid;
    }
    return {invalid == 0 && built == u_fail && u_fail > 0,
            std::to_string(instances) + " instances, U failed on " + std::to_string(u_fail) + ", verified witnesses " +
                std::to_string(built) + ", invalid " + std::to_string(invalid)};
  });

  report(7, "oracle agrees with the theorem on random GF(2) instances", [&]() -> Verdict {
    Rng rng(7);
    int accepted = 0, counterexamples = 0, drawn = 0;
    const auto t0 = std::chrono::steady_clock::now();
    while (accepted < 50 && drawn < 100000) {
      ++drawn;
      const TriadList t = random_triads(f2, pick(rng, 1, 3), pick(rng, 1, 3), pick(rng, 1, 3), pick(rng, 1, 3), rng);
      if (!check_hypotheses(t).holds || !check_condition_u(t).holds) continue;
      corpus.push_back(t);
      ++accepted;
      const OracleResult res = verify_theorem1(t);
      if (!(res.rank == t.size() && res.unique && res.matches_input)) ++counterexamples;
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {accepted == 50 && counterexamples == 0 && s < 300.0,
            std::to_string(accepted) + " instances (" + std::to_string(drawn) + " drawn), " +
                std::to_string(counterexamples) + " counterexamples, " + fmt(s)};
  });

  report(8, "U implies W", [&]() -> Verdict {
    Rng rng(8);
    for (const FieldSpec& f : {f2, f3, f4})
      for (int it = 0; it < 100; ++it)
        corpus.push_back(random_triads(f, pick(rng, 1, 5), pick(rng, 1, 4), pick(rng, 1, 3), pick(rng, 1, 3), rng));
    int u_holds = 0, violations = 0;
    for (const auto& t : corpus) {
      if (!check_condition_u(t).holds) continue;
      ++u_holds;
      violations += !check_condition_w(t).holds;
    }
    return {violations == 0, std::to_string(corpus.size()) + " instances, U held on " + std::to_string(u_holds) +
                                 ", W failed on " + std::to_string(violations) + " of those"};
  });

  report(9, "Kruskal contrast", [&]() -> Verdict {
    const TriadList t = builtin_example(f2);
    const CertReport k = check_kruskal(t);
    const bool u = check_condition_u(t).holds;
    std::size_t sum = 0;
    for (auto r : k.ranks) sum += r;
    const bool ok = k.ranks == std::vector<std::size_t>{3, 2, 2} && sum == 7 && !k.holds && u;
    return {ok, "k-ranks (" + std::to_string(k.ranks.at(0)) + "," + std::to_string(k.ranks.at(1)) + "," +
                    std::to_string(k.ranks.at(2)) + "), sum " + std::to_string(sum) + " < 8, Kruskal " +
                    (k.holds ? "holds" : "fails") + ", U " + (u ? "holds" : "fails")};
  });

  report(10, "hyperplane lemma", [&]() -> Verdict {
    Rng rng(10);
    int accepted = 0, drawn = 0, match_fail = 0, sub_fail = 0;
    while (accepted < 100 && drawn < 100000) {
      ++drawn;
      const FieldSpec& f = drawn % 2 ? f3 : f2;
      const std::size_t d = pick(rng, 1, 3);
      const std::size_t n = pick(rng, d, std::min<std::uint64_t>(6, projective_count(f, d)));
      const auto xs = random_projective_family(f, n, d, rng);
      std::vector<Vector> vs = scaled_permutation(xs, rng);
      if (drawn % 3 == 0) vs[pick(rng, 0, n - 1)] = random_vector(f, d, rng, true);
      if (!check_lemma_hypothesis(xs, vs).holds) continue;
      ++accepted;
      const auto m = find_matching(xs, vs);
      if (!m || !verify_matching(xs, vs, *m)) ++match_fail;
      for (std::size_t k = 1; k < d; ++k) sub_fail += !check_subspace_generalization(xs, vs, k).holds;
    }
    return {accepted == 100 && match_fail == 0 && sub_fail == 0,
            std::to_string(accepted) + " instances, matching failures " + std::to_string(match_fail) +
                ", subspace failures " + std::to_string(sub_fail)};
  });

  report(11, "mat_rank against brute force on GF(2) matrices up to 4x4", [&]() -> Verdict {
    std::uint64_t total = 0, mismatches = 0;
    for (std::size_t rows = 1; rows <= 4; ++rows)
      for (std::size_t cols = 1; cols <= 4; ++cols)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (rows * cols)); ++bits) {
          Matrix m(f2, rows, cols);
          for (std::size_t i = 0; i < rows * cols; ++i)
            if (bits >> i & 1) m(i / cols, i % cols) = f2.one();
          ++total;
          mismatches += mat_rank(m) != brute_rank(m);
        }
    return {mismatches == 0, std::to_string(total) + " matrices, " + std::to_string(mismatches) + " mismatches"};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
