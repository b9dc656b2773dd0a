#pragma once

#include <string>

#include "json.hpp"
#include "qcu/ulrich.hpp"

namespace qcu {

using Json = nlohmann::json;

// Polynomials are stored as strings in the ring's variable names; scalars as
// "a" or "a/b" in lowest terms.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const RingPtr& ring, const Json& j);
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const RingPtr& ring, const Json& j);

Json candidate_to_json(const UlrichCandidate& c);
/// Throws InvalidInput on missing or malformed fields.
UlrichCandidate candidate_from_json(const Json& j);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace qcu
