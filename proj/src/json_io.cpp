#include "triadcert/json_io.hpp"

namespace triadcert::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::uint64_t as_count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

FieldDescription parse_field(const Json& j) {
  const std::string path = "/field";
  const Json& kind = member(j, "kind", path);
  if (!kind.is_string()) bad(path + "/kind", "expected a string");
  FieldDescription d;
  const auto k = kind.get<std::string>();
  if (k == "rational") {
    d.kind = FieldKind::rational;
  } else if (k == "prime") {
    d.kind = FieldKind::prime;
    d.p = as_count(member(j, "p", path), path + "/p");
  } else if (k == "extension") {
    d.kind = FieldKind::extension;
    d.p = as_count(member(j, "p", path), path + "/p");
    const Json& mod = member(j, "modulus", path);
    if (!mod.is_array()) bad(path + "/modulus", "expected an array");
    for (std::size_t i = 0; i < mod.size(); ++i) {
      if (!mod[i].is_number_integer()) bad(path + "/modulus/" + std::to_string(i), "expected an integer");
      d.modulus.push_back(mod[i].get<std::int64_t>());
    }
  } else {
    bad(path + "/kind", "unknown field kind \"" + k + "\"");
  }
  return d;
}

Json field_to_json(const FieldSpec& field) {
  Json j;
  switch (field.kind()) {
    case FieldKind::rational: j["kind"] = "rational"; break;
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = field.characteristic();
      break;
    case FieldKind::extension:
      j["kind"] = "extension";
      j["p"] = field.characteristic();
      j["modulus"] = field.modulus();
      break;
  }
  return j;
}

Scalar parse_scalar(const FieldSpec& field, const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return field.parse(j.get<std::string>());
    if (j.is_number_integer()) return field.parse(j.dump());
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    bad(path, msg);
  }
  bad(path, "expected a scalar string");
}

Vector parse_vector(const FieldSpec& field, const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected a nonempty array of scalars");
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < j.size(); ++i) entries.push_back(parse_scalar(field, j[i], path + "/" + std::to_string(i)));
  return Vector(field, std::move(entries));
}

CoefficientVector parse_coefficients(const FieldSpec& field, const Json& j, const std::string& path) {
  return parse_vector(field, j, path).entries();
}

Instance parse_instance(const Json& j) {
  const FieldSpec field = field_make(parse_field(member(j, "field", "")));
  const Json& triads = member(j, "triads", "");
  if (!triads.is_array() || triads.empty()) bad("/triads", "expected a nonempty array");
  std::vector<Triad> out;
  for (std::size_t i = 0; i < triads.size(); ++i) {
    const std::string p = "/triads/" + std::to_string(i);
    Triad t{parse_vector(field, member(triads[i], "x", p), p + "/x"),
            parse_vector(field, member(triads[i], "y", p), p + "/y"),
            parse_vector(field, member(triads[i], "z", p), p + "/z")};
    if (!out.empty() && (t.x.size() != out[0].x.size() || t.y.size() != out[0].y.size() || t.z.size() != out[0].z.size()))
      bad(p, "factor dimensions differ from /triads/0");
    out.push_back(std::move(t));
  }
  InstanceOptions opts;
  if (auto it = j.find("options"); it != j.end()) {
    const std::string p = "/options";
    if (!it->is_object()) bad(p, "expected an object");
    if (it->contains("cap")) opts.cap = as_count((*it)["cap"], p + "/cap");
    if (it->contains("seed")) opts.seed = as_count((*it)["seed"], p + "/seed");
    if (it->contains("trials")) opts.trials = as_count((*it)["trials"], p + "/trials");
    if (it->contains("node_budget")) opts.node_budget = as_count((*it)["node_budget"], p + "/node_budget");
  }
  return Instance{TriadList(std::move(out)), opts};
}

VectorPair parse_vector_pair(const Json& j) {
  const FieldSpec field = field_make(parse_field(member(j, "field", "")));
  VectorPair out;
  for (const char* key : {"xs", "vs"}) {
    const Json& list = member(j, key, "");
    const std::string p = std::string("/") + key;
    if (!list.is_array() || list.empty()) bad(p, "expected a nonempty array of vectors");
    auto& dest = std::string(key) == "xs" ? out.xs : out.vs;
    for (std::size_t i = 0; i < list.size(); ++i) dest.push_back(parse_vector(field, list[i], p + "/" + std::to_string(i)));
  }
  if (j.contains("m")) out.m = as_count(j["m"], "/m");
  return out;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& e : v.entries()) j.push_back(e.to_string());
  return j;
}

Json to_json(const CoefficientVector& a) {
  Json j = Json::array();
  for (const auto& e : a) j.push_back(e.to_string());
  return j;
}

Json to_json(const Triad& t) {
  Json j;
  j["x"] = to_json(t.x);
  j["y"] = to_json(t.y);
  j["z"] = to_json(t.z);
  return j;
}

Json to_json(const TriadList& t) {
  Json j;
  j["field"] = field_to_json(t.field());
  j["triads"] = Json::array();
  for (const auto& tr : t) j["triads"].push_back(to_json(tr));
  return j;
}

Json to_json(const Tensor3& t) {
  Json j = Json::array();
  for (std::size_t a = 0; a < t.dx(); ++a) {
    Json slab = Json::array();
    for (std::size_t b = 0; b < t.dy(); ++b) {
      Json fiber = Json::array();
      for (std::size_t c = 0; c < t.dz(); ++c) fiber.push_back(t(a, b, c).to_string());
      slab.push_back(std::move(fiber));
    }
    j.push_back(std::move(slab));
  }
  return j;
}

Json to_json(const CertReport& r) {
  Json j;
  j["condition"] = std::string(to_string(r.condition));
  j["holds"] = r.holds;
  if (r.witness) {
    const Witness& w = *r.witness;
    switch (w.kind) {
      case Witness::Kind::coefficients: j["witness"] = to_json(w.coefficients); break;
      case Witness::Kind::hyperplane: j["witness"] = to_json(w.coefficients); break;
      case Witness::Kind::indices: j["witness"] = w.indices; break;
      case Witness::Kind::k_ranks: j["witness"] = w.indices; break;
      case Witness::Kind::subspace: {
        Json rows = Json::array();
        for (const auto& v : w.basis) rows.push_back(to_json(v));
        j["witness"] = std::move(rows);
        break;
      }
    }
  } else {
    j["witness"] = nullptr;
  }
  j["n"] = r.n;
  j["d"] = r.d;
  if (r.witness_rank) j["witness_rank"] = *r.witness_rank;
  if (!r.ranks.empty()) j["k_ranks"] = r.ranks;
  j["checked"] = r.checked;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const WitnessCheck& w) {
  Json j;
  j["violates"] = w.violates;
  j["rank"] = w.rank;
  j["weight"] = w.weight;
  j["bound"] = w.bound;
  return j;
}

Json to_json(const OracleResult& r) {
  Json j;
  if (r.rank)
    j["rank"] = *r.rank;
  else
    j["rank"] = "exceeds cap";
  j["unique"] = r.unique;
  j["matches_input"] = r.matches_input;
  j["classes"] = r.classes;
  j["decompositions"] = Json::array();
  for (const auto& d : r.decompositions) {
    Json cls = Json::array();
    for (const auto& t : d.triads) cls.push_back(to_json(t));
    j["decompositions"].push_back(std::move(cls));
  }
  return j;
}

Json to_json(const AlternativeDecomposition& a) {
  Json j;
  j["witness"] = to_json(a.witness);
  j["pivot"] = a.pivot + 1;
  j["pencil_rank"] = a.pencil_rank;
  if (a.pencil_y) {
    j["pencil_y"] = to_json(*a.pencil_y);
    j["pencil_z"] = to_json(*a.pencil_z);
  }
  j["original"] = to_json(a.original);
  j["alternative"] = to_json(a.alternative);
  j["nonzero_terms"] = a.nonzero_terms;
  j["verified"] = verify_alternative(a);
  return j;
}

Json to_json(const MatchResult& m) {
  Json j;
  Json perm = Json::array();
  for (auto p : m.permutation) perm.push_back(p + 1);
  j["permutation"] = std::move(perm);
  j["scalars"] = to_json(m.scalars);
  return j;
}

}  // namespace triadcert::io
