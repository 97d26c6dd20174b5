#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "triadcert/json_io.hpp"

namespace triadcert::cli {

namespace {

using io::Json;

struct Settings {
  std::string input = "-";
  int jobs = 0;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> budget;
  std::string verify_witness;
  std::string field = "f2";
  std::optional<std::size_t> max_rank;
  std::optional<std::size_t> m;
  bool verbose = false;
};

class Runner {
 public:
  Runner(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err)
      : s_(s), in_(in), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int dispatch(const std::string& command) {
    if (command == "example") return example();
    if (command == "lemma") return lemma();
    const io::Instance inst = io::parse_instance(read_json());
    if (command == "check-u") return check_u(inst);
    if (command == "check-w") return check_w(inst);
    if (command == "hypotheses") return report(check_hypotheses(inst.triads));
    if (command == "kruskal") return report(check_kruskal(inst.triads));
    if (command == "krank") return krank(inst);
    if (command == "rank") return rank(inst);
    if (command == "verify-unique") return verify_unique(inst);
    if (command == "counterexample") return counterexample(inst);
    err_ << "unknown command " << command << "\n";
    return kUsage;
  }

 private:
  Json read_json() {
    std::stringstream buf;
    if (s_.input == "-") {
      buf << in_.rdbuf();
    } else {
      std::ifstream f(s_.input);
      if (!f) throw Error(ErrorCode::ParseError, "cannot open " + s_.input);
      buf << f.rdbuf();
    }
    return io::parse_text(buf.str());
  }

  EnumerationOptions enum_options(const io::Instance* inst) const {
    EnumerationOptions o;
    o.exec = Exec{s_.jobs};
    if (inst && inst->options.cap) o.cap = *inst->options.cap;
    if (s_.cap) o.cap = *s_.cap;
    return o;
  }

  OracleOptions oracle_options(const io::Instance& inst) const {
    OracleOptions o;
    o.exec = Exec{s_.jobs};
    if (inst.options.node_budget) o.node_budget = *inst.options.node_budget;
    if (s_.budget) o.node_budget = *s_.budget;
    if (inst.options.cap) o.class_cap = *inst.options.cap;
    if (s_.cap) o.class_cap = *s_.cap;
    return o;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  void summary(const std::string& line) {
    if (!s_.verbose) return;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    err_ << line << " [" << ms << " ms]\n";
  }

  int report(const CertReport& r) {
    emit(io::to_json(r));
    summary(std::string(to_string(r.condition)) + (r.holds ? ": holds" : ": fails") + " (n=" +
            std::to_string(r.n) + ", d=" + std::to_string(r.d) + ", checked " + std::to_string(r.checked) + ")");
    return r.holds ? kHolds : kFails;
  }

  int verify_witness(const io::Instance& inst, bool w_set) {
    const Json j = io::parse_text(s_.verify_witness);
    const auto alpha = io::parse_coefficients(inst.triads.field(), j, "/witness");
    if (alpha.size() != inst.triads.size())
      throw Error(ErrorCode::LengthMismatch, "witness length differs from the number of triads");
    const WitnessCheck chk = verify_u_witness(inst.triads, alpha);
    Json out = io::to_json(chk);
    bool violation = chk.violates;
    if (w_set) {
      const bool in_set = in_condition_w_set(inst.triads, alpha);
      out["in_w_set"] = in_set;
      violation = violation && in_set;
    }
    out["reproduced"] = violation;
    emit(out);
    summary(violation ? "witness reproduces the violation" : "witness does not violate the condition");
    return violation ? kFails : kHolds;
  }

  int check_u(const io::Instance& inst) {
    if (!s_.verify_witness.empty()) return verify_witness(inst, false);
    if (!inst.triads.field().finite()) {
      const std::uint64_t trials = s_.trials.value_or(inst.options.trials.value_or(10000));
      const std::uint64_t seed = s_.seed.value_or(inst.options.seed.value_or(1));
      const auto alpha = refute_condition_u(inst.triads, trials, seed);
      if (!alpha) {
        Json j;
        j["condition"] = "U";
        j["holds"] = nullptr;
        j["witness"] = nullptr;
        j["trials"] = trials;
        j["note"] = "infinite field: no violation found by sampling; this certifies nothing";
        emit(j);
        summary("U: undetermined over Q");
        return kUsage;
      }
      CertReport r;
      r.condition = Condition::U;
      r.holds = false;
      r.n = inst.triads.size();
      r.d = span_dim(inst.triads.xs());
      r.witness = Witness{Witness::Kind::coefficients, *alpha, {}, {}};
      r.witness_rank = verify_u_witness(inst.triads, *alpha).rank;
      r.note = "refuted by sampling over Q";
      return report(r);
    }
    return report(check_condition_u(inst.triads, enum_options(&inst)));
  }

  int check_w(const io::Instance& inst) {
    if (!s_.verify_witness.empty()) return verify_witness(inst, true);
    return report(check_condition_w(inst.triads, enum_options(&inst)));
  }

  int krank(const io::Instance& inst) {
    Json j;
    j["n"] = inst.triads.size();
    j["k_ranks"] = {k_rank(inst.triads.xs()), k_rank(inst.triads.ys()), k_rank(inst.triads.zs())};
    emit(j);
    summary("k-ranks computed");
    return kHolds;
  }

  int rank(const io::Instance& inst) {
    const std::size_t cap = s_.max_rank.value_or(inst.triads.size());
    const auto r = tensor_rank_exhaustive(expand(inst.triads), cap, oracle_options(inst));
    Json j;
    if (r)
      j["rank"] = *r;
    else
      j["rank"] = "exceeds cap";
    j["cap"] = cap;
    j["n"] = inst.triads.size();
    emit(j);
    summary(r ? "rank " + std::to_string(*r) : "rank exceeds " + std::to_string(cap));
    return r ? kHolds : kFails;
  }

  int verify_unique(const io::Instance& inst) {
    const CertReport hyp = check_hypotheses(inst.triads);
    if (!hyp.holds) return report(hyp);
    if (s_.verbose) err_ << "searching decompositions over " << inst.triads.field().name() << "\n";
    const OracleResult res = verify_theorem1(inst.triads, oracle_options(inst));
    emit(io::to_json(res));
    const bool ok = res.rank && *res.rank == inst.triads.size() && res.matches_input;
    summary("classes " + std::to_string(res.classes) + ", decompositions " + std::to_string(res.decompositions.size()) +
            (ok ? ": unique" : ": not unique"));
    return ok ? kHolds : kFails;
  }

  int counterexample(const io::Instance& inst) {
    const CertReport u = check_condition_u(inst.triads, enum_options(&inst));
    Json j;
    j["condition_u"] = io::to_json(u);
    if (u.holds) {
      j["status"] = "condition U holds";
      emit(j);
      summary("no counterexample: Condition U holds");
      return kHolds;
    }
    const auto alpha = find_rank_one_witness(inst.triads, enum_options(&inst));
    if (!alpha) {
      j["status"] = "U failed, uniqueness undetermined; consult oracle";
      emit(j);
      summary("U fails without a rank-one witness");
      return kFails;
    }
    const AlternativeDecomposition alt = build_alternative(inst.triads, *alpha);
    const bool ok = verify_alternative(alt);
    j["status"] = ok ? (alt.nonzero_terms < inst.triads.size() ? "not minimal" : "not unique")
                     : "U failed, uniqueness undetermined; consult oracle";
    j["alternative"] = io::to_json(alt);
    emit(j);
    err_ << transcript(alt);
    summary(std::string("counterexample ") + (ok ? "verified" : "not verified"));
    return kFails;
  }

  int lemma() {
    const io::VectorPair pair = io::parse_vector_pair(read_json());
    const EnumerationOptions opts = enum_options(nullptr);
    if (!s_.verify_witness.empty()) {
      const Json w = io::parse_text(s_.verify_witness);
      const Functional eta(io::parse_vector(pair.xs.front().field(), w, "/witness"));
      std::size_t cv = 0, cx = 0;
      for (const auto& v : pair.vs) cv += eta(v).is_zero();
      for (const auto& x : pair.xs) cx += eta(x).is_zero();
      const bool violation = !eta.coefficients().is_zero() && cv + 1 >= eta.dim() && cx < cv;
      Json j;
      j["v_count"] = cv;
      j["x_count"] = cx;
      j["reproduced"] = violation;
      emit(j);
      return violation ? kFails : kHolds;
    }
    const CertReport hyp = check_lemma_hypothesis(pair.xs, pair.vs, opts);
    Json j;
    j["hypothesis"] = io::to_json(hyp);
    const auto match = find_matching(pair.xs, pair.vs);
    j["matching"] = match ? io::to_json(*match) : Json(nullptr);
    const auto m = s_.m ? s_.m : pair.m;
    bool generalization_ok = true;
    if (m) {
      const CertReport gen = check_subspace_generalization(pair.xs, pair.vs, *m, opts);
      generalization_ok = gen.holds;
      j["subspaces"] = io::to_json(gen);
    }
    emit(j);
    summary(std::string("lemma hypothesis ") + (hyp.holds ? "holds" : "fails") + ", matching " +
            (match ? "found" : "absent"));
    return hyp.holds && match && generalization_ok ? kHolds : kFails;
  }

  int example() {
    FieldSpec field = FieldSpec::prime(2);
    if (s_.field == "f4")
      field = FieldSpec::gf4();
    else if (s_.field == "rational")
      field = FieldSpec::rational();
    else if (s_.field != "f2")
      throw Error(ErrorCode::UnsupportedField, "--field must be f2, f4 or rational");
    emit(io::to_json(builtin_example(field)));
    return kHolds;
  }

  const Settings& s_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CapExceeded: return kBudget;
    default: return kUsage;
  }
}

constexpr const char* kScalarHelp = R"(Scalars are JSON strings: integers ("3", "-1"), fractions ("2/3"), or
for extension fields polynomials in x over the prime field ("x+1", "2x^2+x").
Fields: {"kind":"prime","p":2} | {"kind":"extension","p":2,"modulus":[1,1,1]}
| {"kind":"rational"}; the modulus is listed from constant to leading term.
Exit codes: 0 holds, 1 fails with witness, 2 usage or input error, 3 budget exceeded.)";

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of 3-tensor decomposition uniqueness"};
  app.footer(kScalarHelp);
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* sub, bool takes_instance) {
    if (takes_instance) sub->add_option("instance", s.input, "instance JSON file, '-' for stdin");
    sub->add_option("--jobs", s.jobs, "worker threads (1 = serial)");
    sub->add_flag("--verbose,-v", s.verbose, "human summary on stderr");
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", s.cap, "enumeration cap"); };

  auto* cu = app.add_subcommand("check-u", "certify Condition U over a finite field");
  add_common(cu, true);
  add_cap(cu);
  cu->add_option("--verify-witness", s.verify_witness, "JSON array α to re-check");
  cu->add_option("--seed", s.seed, "sampling seed (rational field)");
  cu->add_option("--trials", s.trials, "sampling trials (rational field)");

  auto* cw = app.add_subcommand("check-w", "certify Condition W over a finite field");
  add_common(cw, true);
  add_cap(cw);
  cw->add_option("--verify-witness", s.verify_witness, "JSON array α to re-check");

  add_common(app.add_subcommand("hypotheses", "nonzero, pairwise nonparallel x factors"), true);
  add_common(app.add_subcommand("kruskal", "k_x + k_y + k_z >= 2n + 2"), true);
  add_common(app.add_subcommand("krank", "k-ranks of the three factor families"), true);

  auto* rk = app.add_subcommand("rank", "tensor rank by exhaustive search");
  add_common(rk, true);
  add_cap(rk);
  rk->add_option("--max-rank", s.max_rank, "largest rank tried (default n)");
  rk->add_option("--budget", s.budget, "node budget");

  auto* vu = app.add_subcommand("verify-unique", "oracle check of rank n and uniqueness");
  add_common(vu, true);
  add_cap(vu);
  vu->add_option("--budget", s.budget, "node budget");

  auto* ce = app.add_subcommand("counterexample", "construct a second decomposition when Condition U fails");
  add_common(ce, true);
  add_cap(ce);

  auto* lm = app.add_subcommand("lemma", "hyperplane-counting criterion and matching for two vector lists");
  add_common(lm, true);
  add_cap(lm);
  lm->add_option("--m", s.m, "also check the m-dimensional subspace version");
  lm->add_option("--verify-witness", s.verify_witness, "JSON array hyperplane normal to re-check");

  auto* ex = app.add_subcommand("example", "print the built-in three-triad instance");
  add_common(ex, false);
  ex->add_option("--field", s.field, "f2, f4 or rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    Runner runner(s, in, out, err);
    return runner.dispatch(app.get_subcommands().front()->get_name());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace triadcert::cli
