#include "akb/scopes.hpp"

#include <algorithm>
#include <unordered_map>

#include "akb/abacus.hpp"
#include "akb/error.hpp"

namespace akb {

BlockDescriptor phi_block(const Block& block, const Multicharge& a, int i) {
    if (block.members.empty()) throw InputError("empty block");
    return block_of(phi(block.members.front(), a, i), a);
}

std::vector<Pair> scopes_pairing(const Block& block, const Multicharge& a, int i) {
    std::vector<Pair> out;
    out.reserve(block.members.size());
    for (const auto& lambda : block.members) out.emplace_back(lambda, phi(lambda, a, i));
    std::sort(out.begin(), out.end(), [](const Pair& x, const Pair& y) { return lex_cmp(x.first, y.first) > 0; });
    return out;
}

std::vector<Pair> lex_violations(const Block& block, const Multicharge& a, int i) {
    const auto pairs = scopes_pairing(block, a, i);
    std::vector<Pair> bad;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p + 1; q < pairs.size(); ++q)
            if (lex_cmp(pairs[p].second, pairs[q].second) <= 0) bad.emplace_back(pairs[p].first, pairs[q].first);
    return bad;
}

namespace {

void require_condition(const Block& block, const ScopesReport& rep) {
    if (!rep.holds)
        throw HypothesisError("block of " + block.members.front().to_string() + " fails w(B) <= w(C) + K r for i = " +
                              std::to_string(rep.i));
    if (rep.delta < 0)
        throw HypothesisError("block of " + block.members.front().to_string() + " has delta_" +
                              std::to_string(rep.i) + " < 0");
}

std::string memo_key(const Multipartition& lambda, const Multicharge& a) {
    std::string key = std::to_string(a.e);
    for (int c : a.charge) key += ',' + std::to_string(mod_e(c, a.e));
    return key + ':' + lambda.to_string();
}

}  // namespace

bool verify_lex_preserved(const Block& block, const Multicharge& a, int i) {
    if (block.members.empty()) throw InputError("empty block");
    require_condition(block, scopes_condition(block.members.front(), a, i));
    return lex_violations(block, a, i).empty();
}

std::optional<Node> good_node(const Multipartition& lambda, const Multicharge& a, int i) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    const int res = mod_e(i, a.e);
    struct Signed {
        Node node;
        bool removable;
    };
    std::vector<Signed> seq;
    for (const Node& x : removable_nodes(lambda))
        if (residue(x, a) == res) seq.push_back({x, true});
    for (const Node& x : addable_nodes(lambda))
        if (residue(x, a) == res) seq.push_back({x, false});
    std::sort(seq.begin(), seq.end(), [](const Signed& x, const Signed& y) { return node_above(x.node, y.node); });
    // Read from the top; a removable node followed lower down by an addable one cancels.
    std::vector<Node> normal;
    for (const auto& s : seq) {
        if (s.removable) normal.push_back(s.node);
        else if (!normal.empty()) normal.pop_back();
    }
    if (normal.empty()) return std::nullopt;
    return normal.front();
}

std::vector<Node> good_nodes(const Multipartition& lambda, const Multicharge& a) {
    std::vector<Node> out;
    for (int i = 0; i < a.e; ++i)
        if (auto x = good_node(lambda, a, i)) out.push_back(*x);
    return out;
}

bool is_kleshchev(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.size() == 0) return true;
    thread_local std::unordered_map<std::string, bool> memo;
    const std::string key = memo_key(lambda, a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    for (const Node& x : good_nodes(lambda, a))
        if (is_kleshchev(lambda.without_node(x), a)) {
            result = true;
            break;
        }
    memo.emplace(key, result);
    return result;
}

bool verify_kleshchev_preserved(const Block& block, const Multicharge& a, int i) {
    for (const auto& lambda : block.members)
        if (!addable_i_nodes(lambda, a, i).empty())
            throw HypothesisError(lambda.to_string() + " has an addable node of residue " +
                                  std::to_string(mod_e(i, a.e)));
    return std::all_of(block.members.begin(), block.members.end(), [&](const Multipartition& lambda) {
        return is_kleshchev(lambda, a) == is_kleshchev(phi(lambda, a, i), a);
    });
}

ScopesCertificate certificate(const Block& block, const Multicharge& a, int i, BlockCatalog& catalog, int max_delta) {
    if (block.members.empty()) throw InputError("empty block");
    const auto rep = scopes_condition(block.members.front(), a, i);
    require_condition(block, rep);

    ScopesCertificate cert;
    cert.multicharge = a;
    cert.i = rep.i;
    cert.block = rep.block;
    cert.delta = rep.delta;
    cert.k = rep.k;
    cert.weight_b = rep.weight_b;
    cert.weight_c = rep.weight_c;
    cert.checks.push_back("scopes-condition");

    const auto pairs = scopes_pairing(block, a, i);
    for (const auto& [lambda, image] : pairs)
        if (has_forbidden_config(lambda, a, i))
            throw VerificationError("no-forbidden-configuration", lambda.to_string());
    cert.checks.push_back("no-forbidden-configuration");
    for (const auto& [lambda, image] : pairs)
        if (!addable_i_nodes(lambda, a, i).empty())
            throw VerificationError("no-addable-i-nodes", lambda.to_string());
    cert.checks.push_back("no-addable-i-nodes");

    // Bijection onto the image block.
    const int image_size = block.members.front().size() - cert.delta;
    const Block* target = catalog.find(image_size, residue_counts(pairs.front().second, a));
    if (target == nullptr) throw VerificationError("phi-bijection", "image block not found");
    std::vector<Multipartition> images;
    for (const auto& p : pairs) images.push_back(p.second);
    std::sort(images.begin(), images.end(),
              [](const Multipartition& x, const Multipartition& y) { return lex_cmp(x, y) > 0; });
    if (images != target->members)
        throw VerificationError("phi-bijection", "images of the block of " + block.members.front().to_string() +
                                                     " do not match the members of the image block");
    cert.checks.push_back("phi-bijection");
    cert.image = block_of(target->members.front(), a);
    if (cert.image.weight != cert.block.weight)
        throw VerificationError("phi-weight", "w(B) = " + std::to_string(cert.block.weight) +
                                                  ", w(phi(B)) = " + std::to_string(cert.image.weight));
    cert.checks.push_back("phi-weight");

    for (std::size_t p = 0; p + 1 < pairs.size(); ++p)
        if (lex_cmp(pairs[p].second, pairs[p + 1].second) <= 0)
            throw VerificationError("lex-order-preserved",
                                    pairs[p].first.to_string() + " > " + pairs[p + 1].first.to_string() +
                                        " but the images are not in the same order");
    cert.checks.push_back("lex-order-preserved");

    for (const auto& [lambda, image] : pairs) {
        CertifiedPair cp{lambda, image, is_kleshchev(lambda, a), is_kleshchev(image, a)};
        if (cp.source_kleshchev != cp.image_kleshchev)
            throw VerificationError("kleshchev-preserved", lambda.to_string() + " and " + image.to_string());
        cert.pairs.push_back(std::move(cp));
    }
    cert.checks.push_back("kleshchev-preserved");

    const LaurentPolynomial expected = expected_spectrum(cert.delta);
    for (const auto& [lambda, image] : pairs) {
        auto br = branching_polynomial(lambda, a, i, max_delta);
        if (br.polynomial != expected || !(br.target == image))
            throw VerificationError("branching-degree-spectrum",
                                    lambda.to_string() + " gives " + br.polynomial.to_string() + ", expected " +
                                        expected.to_string());
    }
    cert.polynomial = expected;
    cert.checks.push_back("branching-degree-spectrum");
    return cert;
}

ScopesCertificate certificate(const Block& block, const Multicharge& a, int i, int max_delta) {
    BlockCatalog catalog(a);
    return certificate(block, a, i, catalog, max_delta);
}

}  // namespace akb
