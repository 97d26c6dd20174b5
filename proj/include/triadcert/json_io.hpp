#pragma once

// JSON forms of instances and reports. Scalars travel as strings in the
// scalar grammar ("1", "2/3", "x+1"); integers are also accepted on input.
// Output objects keep a fixed key order so serialization is byte-stable.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "triadcert/conditions.hpp"
#include "triadcert/counterexample.hpp"
#include "triadcert/lemma.hpp"
#include "triadcert/oracle.hpp"

namespace triadcert::io {

using Json = nlohmann::ordered_json;

struct InstanceOptions {
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> node_budget;
};

struct Instance {
  TriadList triads;
  InstanceOptions options;
};

struct VectorPair {
  std::vector<Vector> xs;
  std::vector<Vector> vs;
  std::optional<std::size_t> m;
};

FieldDescription parse_field(const Json& j);
Json field_to_json(const FieldSpec& field);

/// path names the location for error messages, e.g. "/triads/0/x/1".
Scalar parse_scalar(const FieldSpec& field, const Json& j, const std::string& path);
Vector parse_vector(const FieldSpec& field, const Json& j, const std::string& path);
CoefficientVector parse_coefficients(const FieldSpec& field, const Json& j, const std::string& path);

Instance parse_instance(const Json& j);
VectorPair parse_vector_pair(const Json& j);
/// Parses text, mapping JSON syntax errors to ParseError with a byte offset.
Json parse_text(const std::string& text);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const CoefficientVector& a);
Json to_json(const Triad& t);
Json to_json(const TriadList& t);
Json to_json(const Tensor3& t);
Json to_json(const CertReport& r);
Json to_json(const WitnessCheck& w);
Json to_json(const OracleResult& r);
Json to_json(const AlternativeDecomposition& a);
Json to_json(const MatchResult& m);

}  // namespace triadcert::io
