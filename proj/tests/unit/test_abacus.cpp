#include <doctest.h>
#include <random>
#include <set>
#include <string>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/error.hpp"
#include "oracles.hpp"

using namespace akb;

namespace {

Multipartition mp(std::string_view s) { return parse_multipartition(s); }

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

/// Positions in [lo, hi] occupied by beads.
std::set<int> window(const BetaSet& b, int lo, int hi) {
    std::set<int> out;
    for (int p = lo; p <= hi; ++p)
        if (b.contains(p)) out.insert(p);
    return out;
}

/// Beads everywhere below `full_below`, plus `extra`.
BetaSet beads(int full_below, std::vector<int> extra) {
    std::sort(extra.begin(), extra.end(), std::greater<>());
    return BetaSet(full_below, extra);
}

}  // namespace

TEST_CASE("beta sets of the three-component display") {
    CHECK(window(beta_set(Partition{1}, -1), -6, 3) == std::set<int>{-1, -3, -4, -5, -6});
    CHECK(window(beta_set(Partition{}, 0), -6, 3) == std::set<int>{-1, -2, -3, -4, -5, -6});
    CHECK(window(beta_set(Partition{1, 1}, 1), -6, 3) == std::set<int>{1, 0, -2, -3, -4, -5, -6});
    CHECK(beta_set(Partition{1, 1}, 1).charge() == 1);
    const auto [p, c] = partition_of(beads(-1, {1, 0}));
    CHECK(p == Partition({1, 1}));
    CHECK(c == 1);
}

TEST_CASE("beta sets agree with the direct formula and round-trip") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int a : {-3, 0, 2}) {
                const auto b = beta_set(lambda, a);
                const auto expected = oracle::beta_window(parts_of(lambda), a, 4);
                const int lo = *expected.begin();
                CHECK(window(b, lo, a + n + 1) == expected);
                CHECK(b.contains(lo - 1));
                const auto [back, charge] = partition_of(b);
                CHECK(back == lambda);
                CHECK(charge == a);
            }
}

TEST_CASE("bad bead sets are rejected") {
    CHECK_THROWS_AS(BetaSet(0, {3, 3}), InputError);
    CHECK_THROWS_AS(BetaSet(0, {-1}), InputError);
}

TEST_CASE("lowest bead levels") {
    const Multicharge a(4, {-1, 0, 1});
    const auto levels = lowest_levels(mp("((1),-,(1,1))"), a);
    CHECK(levels[2] == std::vector<int>{0, 0, -1, -2});
    CHECK(levels[1] == std::vector<int>{-1, -1, -1, -1});
    CHECK(levels[0] == std::vector<int>{-1, -1, -2, -1});
    const Multicharge b(5, {0, -2, 1});
    CHECK(lowest_levels(mp("((4,3,1),(4,2^3),(3,2))"), b)[0] == std::vector<int>{-1, 0, -2, 0, -2});
}

TEST_CASE("e-cores match the hook-length oracle") {
    for (int e : {2, 3, 4})
        for (int n = 0; n <= 9; ++n)
            for (const auto& lambda : partitions_of(n)) {
                CHECK(is_e_core(beta_set(lambda, 0), e) == oracle::e_core(parts_of(lambda), e));
                const auto red = to_multicore(Multipartition{lambda}, Multicharge(e, {0}));
                CHECK(red.hooks_removed == oracle::e_weight(parts_of(lambda), e));
                CHECK(oracle::e_core(parts_of(red.core[0]), e));
            }
}

TEST_CASE("phi on a single three-runner abacus") {
    const BetaSet lambda = beads(3, {4, 6, 8, 10, 12, 13, 16});
    CHECK(phi(lambda, 3, 1) == beads(3, {3, 7, 8, 9, 12, 13, 15}));
    CHECK(phi(lambda, 3, 0) == beads(0, {0, 1, 3, 4, 5, 9, 10, 11, 13, 16}));
    // The map is an involution on positions.
    for (int i = 0; i < 3; ++i) CHECK(phi(phi(lambda, 3, i), 3, i) == lambda);
}

TEST_CASE("phi swaps removable and addable i-nodes") {
    const Multicharge a(3, {0, 1});
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : multipartitions_of(n, 2))
            for (int i = 0; i < 3; ++i) {
                int rem = 0, add = 0;
                for (const auto& x : removable_nodes(lambda)) rem += residue(x, a) == i;
                for (const auto& x : addable_nodes(lambda)) add += residue(x, a) == i;
                CHECK(phi(lambda, a, i).size() == n - rem + add);
            }
}

TEST_CASE("forbidden bead-gap configuration") {
    CHECK(has_forbidden_config(mp("((1))"), Multicharge(2, {0}), 1));
    CHECK_FALSE(has_forbidden_config(mp("(-)"), Multicharge(2, {0}), 1));
}

TEST_CASE("multicores, gamma and s-moves") {
    const Multicharge a(3, {0, 1});
    const auto m = multicore_from_levels({{-1, -1, -1}, {1, -1, -2}}, a);
    CHECK(is_multicore(m, a));
    CHECK(lowest_levels(m, a) == LevelMatrix{{-1, -1, -1}, {1, -1, -2}});
    CHECK(gamma(m, a, 0, 1, 0) == 2);
    CHECK(gamma_diff(m, a, 0, 2, 1, 0) == 3);
    CHECK(gamma_diff(m, a, 0, 2, 1, 0) == -gamma_diff(m, a, 2, 0, 1, 0));
    CHECK(gamma_diff(m, a, 0, 2, 1, 0) == -gamma_diff(m, a, 0, 2, 0, 1));
    const auto s = s_move(m, a, 0, 2, 1, 0);
    CHECK(is_multicore(s, a));
    CHECK(hub(s, a) == hub(m, a));
    CHECK(weight(s, a) == weight(m, a) - 2 * (3 - 2));
    CHECK_THROWS_AS(multicore_from_levels({{-1, -1, -1}, {1, -1, -1}}, a), InputError);
    CHECK_THROWS_AS(gamma(mp("((3),-)"), a, 0, 0, 1), InputError);
}

TEST_CASE("display rendering") {
    const auto d = AbacusDisplay::of(mp("((1),-,(1,1))"), Multicharge(4, {-1, 0, 1}));
    const std::string text = render(d);
    CHECK(text.find("-1 o o . o") != std::string::npos);
    CHECK(text.find("0 o o . .") != std::string::npos);
    CHECK(parse_rendered(text) == d);
    CHECK_THROWS_AS(render(d, LevelWindow{0, 1}), InputError);

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const int e = 2 + static_cast<int>(rng() % 4);
        const std::size_t r = 1 + rng() % 3;
        std::vector<int> charge;
        for (std::size_t j = 0; j < r; ++j) charge.push_back(static_cast<int>(rng() % 9) - 4);
        const auto all = multipartitions_of(static_cast<int>(rng() % 7), r);
        const auto& lambda = all[rng() % all.size()];
        const Multicharge mc(e, charge);
        const auto disp = AbacusDisplay::of(lambda, mc);
        CHECK(parse_rendered(render(disp)) == disp);
        CHECK(disp.multipartition() == lambda);
        CHECK(disp.multicharge() == mc);
    }
}
