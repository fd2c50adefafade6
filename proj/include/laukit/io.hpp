#pragma once

#include <string>

#include "laukit/algebra.hpp"
#include "laukit/analysis.hpp"
#include "laukit/linear_map.hpp"
#include "laukit/morphisms.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace laukit {

using Json = nlohmann::ordered_json;

/// Scalar grammar (no whitespace):
///   scalar   := real | imag | real sign imag
///   real     := rational
///   imag     := rational "i" | "i" | "-i"
///   rational := ["-"] digits ["/" digits]
/// Throws ParseError with the byte offset of the offending token; a zero
/// denominator reports "zero denominator" at the denominator's position.
Scalar parse_scalar(const std::string& text);

/// Algebra file: {"name", "dim", "basis", "table"} where table[i][j] is the
/// length-dim coefficient vector of e_i * e_j, each entry in the scalar
/// grammar. Serialization is canonical: fixed field order, scalars in
/// reduced lowest-terms form, two-space indentation, trailing newline —
/// parse/serialize/parse is the identity and catalog output is byte-stable.
Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& j, bool checked = true);
std::string write_algebra(const Algebra& a);
AlgebraPtr read_algebra(const std::string& text, bool checked = true);
AlgebraPtr load_algebra_file(const std::string& path, bool checked = true);
void save_algebra_file(const std::string& path, const Algebra& a);

/// Map file: {"domain", "codomain", "matrix"} with embedded algebra objects
/// and the matrix as rows of scalar strings (row count = codomain dim).
Json map_to_json(const LinearMap& t);
LinearMap map_from_json(const Json& j, bool checked = true);
std::string write_map(const LinearMap& t);
LinearMap read_map(const std::string& text, bool checked = true);
LinearMap load_map_file(const std::string& path, bool checked = true);
void save_map_file(const std::string& path, const LinearMap& t);

// Report serializers used by the CLI and the bindings.
Json element_to_json(const Element& x);
Json fingerprint_to_json(const AlgebraPtr& a, const Fingerprint& fp);
Json associativity_to_json(const AssociativityReport& rep);
Json hom_report_to_json(const HomReport& rep);
Json char_report_to_json(const CharReport& rep);
Json iso_report_to_json(const IsoReport& rep);
Json subspace_report_to_json(const SubspaceReport& rep);
Json norm_report_to_json(const NormReport& rep);
Json certificate_to_json(const Certificate& c);

/// Canonical text for any JSON document this tool emits.
std::string dump_canonical(const Json& j);

}  // namespace laukit
