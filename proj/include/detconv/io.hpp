#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "detconv/gsvd.hpp"
#include "detconv/multipoly.hpp"
#include "detconv/permanent.hpp"
#include "detconv/poly_matrix.hpp"
#include "detconv/rational_matrix.hpp"

namespace detconv::io {

using json = nlohmann::ordered_json;

// Reads and parses a JSON file; syntax errors report the byte offset.
json read_json_file(const std::string& path);

// Every parser takes the field path of its argument so diagnostics can name
// the offending field, e.g. "a1.entries[1][0]".
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

// {"arity": k, "terms": [{"exp": [...], "coeff": "n/d"}, ...]}; a string is
// read with the univariate shorthand parser.
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, const std::string& field);

// {"rows": r, "cols": c, "entries": [[...], ...]} or a bare array of rows.
json to_json(const RationalMatrix& m);
json to_json(const PolyMatrix& m);
RationalMatrix rational_matrix_from_json(const json& j, const std::string& field);
// Entries may be rationals or polynomials; rationals become constants of the
// given arity.
PolyMatrix poly_matrix_from_json(const json& j, const std::string& field, std::size_t arity);

// {"m", "s", "t", "grid": [[...], ...]}
json to_json(const GsvcpCoeffs& c);
GsvcpCoeffs gsvcp_coeffs_from_json(const json& j, const std::string& field);

// {"a1": matrix, "a2": matrix}
GsvcpInstance gsvcp_instance_from_json(const json& j, const std::string& field);

// {"a": [[...], ...], "b": [[...], ...]}, one vector per rank-one term.
RankDecomposition rank_decomposition_from_json(const json& j, const std::string& field);

const json& require_field(const json& j, const std::string& key, const std::string& field);
std::size_t size_from_json(const json& j, const std::string& field);

}  // namespace detconv::io
