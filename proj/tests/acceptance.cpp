// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/branching.hpp"
#include "akb/partition.hpp"
#include "akb/verify.hpp"

using namespace akb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(Outcome& out) : out_(out) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }

    /// The named checks ran at least once and never failed.
    void expect_checks(const CheckLog& log, const std::vector<std::string>& names) {
        for (const auto& name : names) {
            const CheckResult* r = log.find(name);
            if (r == nullptr || r->instances == 0) {
                fail(name + " never ran");
            } else if (r->violations != 0) {
                fail(name + " failed " + std::to_string(r->violations) + " of " + std::to_string(r->instances) +
                     (r->samples.empty() ? "" : ", e.g. " + r->samples.front()));
            } else {
                note(name + " " + std::to_string(r->instances));
            }
        }
    }

    /// Checks that only appear when they fail must be absent or clean.
    void expect_no_failures(const CheckLog& log, const std::string& name) {
        if (const CheckResult* r = log.find(name); r != nullptr && r->violations != 0)
            fail(name + " failed " + std::to_string(r->violations) + " times");
    }

    void note(const std::string& s) { out_.detail += (out_.detail.empty() ? "" : "; ") + s; }

private:
    void fail(const std::string& what) {
        out_.ok = false;
        note("FAILED " + what);
    }
    Outcome& out_;
};

std::set<int> window(const BetaSet& b, int lo, int hi) {
    std::set<int> out;
    for (int p = lo; p <= hi; ++p)
        if (b.contains(p)) out.insert(p);
    return out;
}

Grid desk_grid() { return Grid::from_caps(Caps{}); }

Grid small_e_grid(int max_n) {
    Grid g;
    g.es = {2, 3, 4};
    g.max_r = 3;
    g.max_n = max_n;
    return g;
}

/// Logs shared between criteria so each suite runs once.
struct SharedLogs {
    std::optional<CheckLog> scopes;
    std::optional<CheckLog> core;

    const CheckLog& scopes_log() {
        if (!scopes) {
            scopes.emplace();
            check_scopes_laws(*scopes, desk_grid());
        }
        return *scopes;
    }
    const CheckLog& core_log() {
        if (!core) {
            core.emplace();
            check_core_block_laws(*core, desk_grid());
        }
        return *core;
    }
};

SharedLogs shared;

void residues_reproduced(Criterion& c) {
    const Multicharge a(4, {1, 0, 2});
    const auto lambda = parse_multipartition("((1,1),(2),(2,1))");
    const auto mu = parse_multipartition("((1),(2,1),(1,1,1))");
    const std::vector<int> expected{0, 0, 1, 1, 1, 2, 3};
    c.expect(residue_multiset(lambda, a) == expected, "residues of the first multipartition");
    c.expect(residue_multiset(mu, a) == expected, "residues of the second multipartition");
    c.expect(same_block(lambda, mu, a), "same block");
}

void beta_sets_reproduced(Criterion& c) {
    c.expect(window(beta_set(Partition{1}, -1), -8, 4) == std::set<int>{-1, -3, -4, -5, -6, -7, -8}, "(1) at -1");
    c.expect(window(beta_set(Partition{}, 0), -8, 4) == std::set<int>{-1, -2, -3, -4, -5, -6, -7, -8}, "empty at 0");
    c.expect(window(beta_set(Partition{1, 1}, 1), -8, 4) == std::set<int>{1, 0, -2, -3, -4, -5, -6, -7, -8},
             "(1,1) at 1");
}

void k_values_reproduced(Criterion& c) {
    const Multicharge a(5, {0, -2, 1});
    const auto mu = parse_multipartition("((4,3,1),(4,2^3),(3,2))");
    c.expect(is_multicore(mu, a) && is_core_block(mu, a).is_core, "the multicore lies in a core block");
    c.expect(k_value(mu, a, 0) == -1, "K_0 = -1");
    c.expect(k_value(mu, a, 1) == 1, "K_1 = 1");
    c.expect(k_value(mu, a, 3) == 0, "K_3 = 0");
    const auto tuples = base_tuples(mu, a);
    c.expect(tuples.size() == 2, "exactly two base tuples");
    if (tuples.size() != 2) return;
    bool only_b1 = std::abs(tuples[0][1] - tuples[1][1]) == 1;
    for (std::size_t i = 0; i < tuples[0].size(); ++i)
        if (i != 1 && tuples[0][i] != tuples[1][i]) only_b1 = false;
    c.expect(only_b1, "the tuples differ only in b_1, by one");
    // Uniform normalisation: subtract b_0 and compare with (2,4,2,3,1), (2,3,2,3,1).
    std::set<std::vector<int>> got, want{{0, 2, 0, 1, -1}, {0, 1, 0, 1, -1}};
    for (auto t : tuples) {
        const int b0 = t[0];
        for (int& x : t) x -= b0;
        got.insert(t);
    }
    c.expect(got == want, "normalised tuples");
}

void weight_laws(Criterion& c) {
    CheckLog log;
    Grid g = small_e_grid(7);
    g.weight_n = 7;
    g.hub_n = 6;
    check_weight_laws(log, g);
    c.expect_checks(log, {"rim-hook-removal-weight", "same-hub-weight-difference", "classical-e-weight"});
}

void s_move_laws(Criterion& c) {
    CheckLog log;
    Grid g = small_e_grid(6);
    g.smove_n = 6;
    check_s_move_laws(log, g);
    c.expect_checks(log, {"s-move-hub", "s-move-weight"});
}

void core_block_equivalence(Criterion& c) {
    c.expect_checks(shared.core_log(), {"core-block-characterisations-agree", "core-weight-minimal",
                                        "core-block-unique", "core-block-chain"});
}

void d_bounds(Criterion& c) {
    CheckLog log;
    check_s_move_laws(log, desk_grid());
    c.expect_checks(log, {"delta-interval", "d-after-s-move", "d-after-s-move-gamma-one"});
    c.expect_checks(shared.core_log(),
                    {"k-at-most-d", "d-chain-bound", "d-master-bound", "core-d-at-most-one-above"});
}

void forbidden_configuration(Criterion& c) {
    c.expect_checks(shared.scopes_log(), {"no-forbidden-configuration", "no-addable-i-nodes"});
}

void graded_spectrum(Criterion& c) {
    c.expect(expected_spectrum(2).to_string() == "v + v^-1", "delta = 2 spectrum");
    c.expect(expected_spectrum(3).to_string() == "v^3 + 2v + 2v^-1 + v^-3", "delta = 3 spectrum");
    const auto& log = shared.scopes_log();
    c.expect_checks(log, {"branching-degree-spectrum", "removal-orders-agree"});
    c.expect_no_failures(log, "phi-target");
}

void order_and_kleshchev(Criterion& c) {
    const auto& log = shared.scopes_log();
    c.expect_checks(log, {"phi-bijection-all-blocks", "phi-weight-all-blocks", "phi-bijection", "phi-weight",
                          "lex-order-preserved", "kleshchev-preserved", "kleshchev-count-preserved", "certificate"});
    CheckLog k;
    Grid g = desk_grid();
    g.kleshchev_n = 8;
    check_kleshchev_laws(k, g);
    c.expect_checks(k, {"kleshchev-single-component-restricted", "kleshchev-components-restricted"});
}

void mahonian_laws(Criterion& c) {
    CheckLog log;
    Grid g = desk_grid();
    g.mahonian_n = 8;
    check_branching_laws(log, g);
    c.expect_checks(log, {"mahonian-product-formula", "spectrum-palindromic", "spectrum-at-one-is-factorial"});
}

void full_verification(Criterion& c) {
    const auto report = verify_all(Caps{});
    c.expect(report.ok(), "verify-all reports every check clean");
    std::size_t failing = 0;
    for (const auto& r : report.checks) failing += r.violations != 0;
    c.note(std::to_string(report.checks.size()) + " checks, " + std::to_string(failing) + " failing");
    c.expect(report.seconds < 600.0, "finishes in under 10 minutes");
}

struct Entry {
    int id;
    const char* title;
    double limit_seconds;  // 0 for no limit
    std::function<void(Criterion&)> run;
};

}  // namespace

int main() {
    const std::vector<Entry> entries{
        {1, "residue multisets and block membership", 1, residues_reproduced},
        {2, "beta-sets of the three-component display", 0, beta_sets_reproduced},
        {3, "K values and base tuples of the five-runner core block", 1, k_values_reproduced},
        {4, "weight laws", 120, weight_laws},
        {5, "s-move laws", 0, s_move_laws},
        {6, "core-block characterisations and chains", 0, core_block_equivalence},
        {7, "d bounds", 300, d_bounds},
        {8, "no forbidden bead-gap configuration", 0, forbidden_configuration},
        {9, "graded shift spectrum", 0, graded_spectrum},
        {10, "order and Kleshchev preservation", 0, order_and_kleshchev},
        {11, "Mahonian numbers and spectrum shape", 0, mahonian_laws},
        {12, "verify-all over the default grid", 600, full_verification},
    };

    bool all = true;
    for (const auto& e : entries) {
        Outcome out;
        Criterion c(out);
        const auto t0 = Clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            out.ok = false;
            c.note(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (e.limit_seconds > 0 && secs >= e.limit_seconds) {
            out.ok = false;
            c.note("took longer than " + std::to_string(static_cast<int>(e.limit_seconds)) + " s");
        }
        all = all && out.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (out.ok ? "PASS" : "FAIL") << "  " << e.id << ". " << e.title << " (" << timing << ")";
        if (!out.detail.empty()) std::cout << ": " << out.detail;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
