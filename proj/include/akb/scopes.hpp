#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akb/blocks.hpp"
#include "akb/branching.hpp"

namespace akb {

using Pair = std::pair<Multipartition, Multipartition>;

/// Descriptor of the block holding the phi_i images of B's members.
BlockDescriptor phi_block(const Block& block, const Multicharge& a, int i);

/// (lambda, phi_i(lambda)) for every member, lexicographically decreasing in lambda.
std::vector<Pair> scopes_pairing(const Block& block, const Multicharge& a, int i);

/// Pairs lambda > mu of B whose images are not in the same strict order. No precondition.
std::vector<Pair> lex_violations(const Block& block, const Multicharge& a, int i);

/// True iff phi_i is strictly increasing on B. HypothesisError if B fails the
/// scopes condition or has delta_i(B) < 0.
bool verify_lex_preserved(const Block& block, const Multicharge& a, int i);

/// The good node of each residue that has one, highest residue class last.
std::vector<Node> good_nodes(const Multipartition& lambda, const Multicharge& a);
/// The good i-node, if any.
std::optional<Node> good_node(const Multipartition& lambda, const Multicharge& a, int i);
/// Reducible to the empty multipartition by removing good nodes.
bool is_kleshchev(const Multipartition& lambda, const Multicharge& a);

/// is_kleshchev(lambda) == is_kleshchev(phi_i(lambda)) on all of B.
/// HypothesisError naming the first member with an addable i-node.
bool verify_kleshchev_preserved(const Block& block, const Multicharge& a, int i);

struct CertifiedPair {
    Multipartition source;
    Multipartition image;
    bool source_kleshchev = false;
    bool image_kleshchev = false;
    bool operator==(const CertifiedPair&) const = default;
};

struct ScopesCertificate {
    static constexpr int schema = 1;
    Multicharge multicharge;
    int i = 0;
    BlockDescriptor block;
    BlockDescriptor image;
    int delta = 0;
    int k = 0;
    int weight_b = 0;
    int weight_c = 0;
    std::vector<CertifiedPair> pairs;
    LaurentPolynomial polynomial;
    std::vector<std::string> checks;  // names of the checks that ran and passed

    bool operator==(const ScopesCertificate&) const = default;
};

/// Runs every embedded check on B and packages the result. HypothesisError if
/// B fails the scopes condition or delta_i(B) < 0; VerificationError naming the
/// first failed check otherwise. The catalog supplies the image block.
ScopesCertificate certificate(const Block& block, const Multicharge& a, int i, BlockCatalog& catalog,
                              int max_delta = 6);
ScopesCertificate certificate(const Block& block, const Multicharge& a, int i, int max_delta = 6);

}  // namespace akb
