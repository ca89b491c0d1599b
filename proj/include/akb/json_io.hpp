#pragma once

#include <json.hpp>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/branching.hpp"
#include "akb/partition.hpp"
#include "akb/scopes.hpp"

namespace akb {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Multipartition& lambda);  // {"components": [[...], ...]}
Json to_json(const Multicharge& a);          // {"e": .., "charge": [...]}
Json to_json(const Node& x);                 // [row, col, component], component 1-based
Json to_json(const AbacusDisplay& d);
Json to_json(const BlockDescriptor& d);
Json to_json(const SMove& s);
Json to_json(const ScopesReport& rep);
Json to_json(const LaurentPolynomial& p);  // {"degree": multiplicity}, string keys
Json to_json(const BranchingResult& br);
Json to_json(const ScopesCertificate& cert);

/// Accepts {"components": [...]} or a bare array of arrays. InputError on bad shape.
Multipartition multipartition_from_json(const Json& j);
Multicharge multicharge_from_json(const Json& j);
AbacusDisplay abacus_from_json(const Json& j);
BlockDescriptor block_descriptor_from_json(const Json& j);
LaurentPolynomial polynomial_from_json(const Json& j);
ScopesCertificate certificate_from_json(const Json& j);

/// Parses text as JSON first and falls back to the "((4,3,1),(2),-)" notation.
Multipartition parse_multipartition_arg(std::string_view text);

}  // namespace akb
