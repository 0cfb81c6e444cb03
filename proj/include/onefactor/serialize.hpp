#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "onefactor/equivalence.hpp"
#include "onefactor/factors.hpp"
#include "onefactor/oracle.hpp"
#include "onefactor/pairing.hpp"
#include "onefactor/product.hpp"

namespace onefactor {

using Json = nlohmann::json;

// {"n", "index", "isolated", "edges": [[u,v],...]}; index/isolated may be null.
Json to_json(const Factor& f);
// Parses and canonicalizes edges. Structural validity is left to
// validate_factor(); malformed JSON raises std::invalid_argument.
Factor factor_from_json(const Json& j);

Json to_json(const Factorization& fz);
Factorization factorization_from_json(const Json& j);

// Factor schema on flattened vertices plus s, t, k, l and
// "vertex_encoding": "positional".
Json to_json(const ProductFactor& pf);
ProductFactor product_factor_from_json(const Json& j);

Json to_json(const EquivalenceReport& r);
EquivalenceReport equivalence_report_from_json(const Json& j);

Json to_json(const ExactCResult& r);

Json to_json(const UnionWalk& w);

// Compact, key-sorted dump; identical values give identical bytes.
std::string dump(const Json& j);

// One undirected graph per factor, vertices labelled 0..n-1.
std::string to_dot(const std::vector<Factor>& factors);

// The union of two factors with f-edges and g-edges in different colors and
// the walk's start highlighted.
std::string pair_to_dot(const Factor& f, const Factor& g, const UnionWalk& walk);

}  // namespace onefactor
