#include <doctest.h>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/error.hpp"
#include "akb/json_io.hpp"
#include "akb/scopes.hpp"
#include "oracles.hpp"

using namespace akb;

namespace {

Multipartition mp(std::string_view s) { return parse_multipartition(s); }

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

const std::vector<std::string> kAllChecks{"scopes-condition",    "no-forbidden-configuration", "no-addable-i-nodes",
                                          "phi-bijection",       "phi-weight",                 "lex-order-preserved",
                                          "kleshchev-preserved", "branching-degree-spectrum"};

}  // namespace

TEST_CASE("single-component Kleshchev partitions are the e-restricted ones") {
    for (int e : {2, 3, 4})
        for (int charge : {0, 1})
            for (int n = 0; n <= 8; ++n)
                for (const auto& p : partitions_of(n))
                    CHECK(is_kleshchev(Multipartition{p}, Multicharge(e, {charge})) ==
                          oracle::e_restricted(parts_of(p), e));
}

TEST_CASE("Kleshchev multipartitions have restricted components") {
    for (const auto& a : {Multicharge(2, {0, 1}), Multicharge(3, {0, 0}), Multicharge(3, {0, 1, 2})})
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : multipartitions_of(n, a.r())) {
                if (!is_kleshchev(lambda, a)) continue;
                for (const auto& p : lambda.components()) CHECK(oracle::e_restricted(parts_of(p), a.e));
            }
}

TEST_CASE("good nodes") {
    // (2,1) with e = 2: removable nodes have residue 1 and no addable 1-node cancels them.
    const Multicharge a(2, {0});
    const auto g = good_node(mp("((2,1))"), a, 1);
    REQUIRE(g.has_value());
    CHECK(*g == Node{1, 2, 0});
    CHECK_FALSE(good_node(mp("((2,1))"), a, 0).has_value());
    CHECK(good_nodes(mp("(-)"), a).empty());
}

TEST_CASE("phi pairs a small block bijectively and keeps the order") {
    const Multicharge a(2, {0, 0});
    BlockCatalog catalog(a);
    const Block& b = catalog.block_containing(mp("((1),(1))"));
    const auto pairs = scopes_pairing(b, a, 0);
    REQUIRE(pairs.size() == b.members.size());
    CHECK(lex_violations(b, a, 0).empty());
    CHECK(verify_lex_preserved(b, a, 0));
    CHECK(verify_kleshchev_preserved(b, a, 0));
    CHECK(phi_block(b, a, 0).n == 0);
}

TEST_CASE("certificate for a small block") {
    const Multicharge a(2, {0, 0});
    BlockCatalog catalog(a);
    const Block& b = catalog.block_containing(mp("((1),(1))"));
    const auto cert = certificate(b, a, 0, catalog);
    CHECK(cert.checks == kAllChecks);
    CHECK(cert.delta == 2);
    CHECK(cert.polynomial.to_string() == "v + v^-1");
    CHECK(cert.pairs.size() == b.members.size());
    CHECK(cert.weight_b == cert.image.weight);
    CHECK(ScopesCertificate::schema == 1);
    const Json j = to_json(cert);
    CHECK(j.at("schema") == 1);
    CHECK(certificate_from_json(j) == cert);
}

TEST_CASE("blocks failing the condition are rejected as a hypothesis error") {
    const Multicharge a(5, {0, -2, 1});
    const auto mu = mp("((4,3,1),(4,2^3),(3,2))");
    const Block b{residue_counts(mu, a), {mu}};
    CHECK_THROWS_AS(certificate(b, a, 0), HypothesisError);
    CHECK_THROWS_AS(verify_lex_preserved(b, a, 0), HypothesisError);
}

TEST_CASE("certificate for the five-runner core block at i = 1") {
    const Multicharge a(5, {0, -2, 1});
    BlockCatalog catalog(a, 23);
    const auto mu = mp("((4,3,1),(4,2^3),(3,2))");
    const Block& b = catalog.block_containing(mu);
    const auto cert = certificate(b, a, 1, catalog);
    CHECK(cert.k == 1);
    CHECK(cert.delta == 4);
    CHECK(cert.weight_b == cert.weight_c);
    CHECK(cert.checks == kAllChecks);
    CHECK(cert.polynomial == expected_spectrum(4));
    CHECK(certificate_from_json(to_json(cert)) == cert);
}
