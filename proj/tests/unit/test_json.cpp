#include <doctest.h>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/branching.hpp"
#include "akb/error.hpp"
#include "akb/json_io.hpp"

using namespace akb;

namespace {
Multipartition mp(std::string_view s) { return parse_multipartition(s); }
}  // namespace

TEST_CASE("multipartitions and multicharges") {
    const auto lambda = mp("((4,3,1),-,(2,2))");
    const Json j = to_json(lambda);
    CHECK(j.dump() == R"({"components":[[4,3,1],[],[2,2]]})");
    CHECK(multipartition_from_json(j) == lambda);
    CHECK(multipartition_from_json(Json::parse("[[4,3,1],[],[2,2]]")) == lambda);
    CHECK_THROWS_AS(multipartition_from_json(Json::parse("[[1,2]]")), InputError);

    const Multicharge a(5, {0, -2, 1});
    CHECK(to_json(a).dump() == R"({"e":5,"charge":[0,-2,1]})");
    CHECK(multicharge_from_json(to_json(a)) == a);
}

TEST_CASE("argument parsing accepts text and JSON") {
    CHECK(parse_multipartition_arg("((1),(2))") == mp("((1),(2))"));
    CHECK(parse_multipartition_arg("[[1],[2]]") == mp("((1),(2))"));
    CHECK(parse_multipartition_arg(R"({"components":[[1],[2]]})") == mp("((1),(2))"));
}

TEST_CASE("nodes are written with 1-based components") {
    CHECK(to_json(Node{2, 1, 0}).dump() == "[2,1,1]");
}

TEST_CASE("abacus displays round-trip") {
    const Multicharge a(4, {-1, 0, 1});
    const auto d = AbacusDisplay::of(mp("((1),-,(1,1))"), a);
    CHECK(abacus_from_json(to_json(d)) == d);
}

TEST_CASE("block descriptors round-trip") {
    const Multicharge a(4, {1, 0, 2});
    const auto d = block_of(mp("((1,1),(2),(2,1))"), a);
    CHECK(d.weight == 3);
    CHECK(block_descriptor_from_json(to_json(d)) == d);
}

TEST_CASE("polynomials use string degree keys in descending order") {
    const auto p = expected_spectrum(3);
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"3":1,"1":2,"-1":2,"-3":1})");
    CHECK(polynomial_from_json(j) == p);
    CHECK_THROWS(polynomial_from_json(Json::parse(R"({"x":1})")));
}
