#pragma once

#include "snfpart/partition.hpp"
#include "snfpart/poly_matrix.hpp"
#include "snfpart/polynomial.hpp"
#include "snfpart/snf.hpp"

#include <json.hpp>

namespace snfpart {

using json = nlohmann::json;

// [{"coeff": "<decimal>", "monomial": [[row, col, exp], ...]}, ...] in canonical term order.
json polynomial_to_json(const Polynomial& p);
// Throws ParseError on malformed input.
Polynomial polynomial_from_json(const json& j);

// {"rows": d, "cols": e, "origin": [r, s], "entries": [[<polynomial>, ...], ...]}
json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

// {"diagonal": [...], "P": <matrix>, "Q": <matrix>, "verified": bool, "algorithm": "recurrence"|"inductive"}
json snf_to_json(const SnfResult& r, bool verified);

json partition_to_json(const Partition& p);

} // namespace snfpart
