#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "akb/blocks.hpp"

namespace akb {

/// Outcome of one named law over every instance it was tried on.
struct CheckResult {
    std::string name;
    long long instances = 0;
    long long violations = 0;
    std::vector<std::string> samples;  // first few counterexamples

    bool ok() const noexcept { return violations == 0; }
};

/// Collects results keyed by check name, in first-use order.
class CheckLog {
public:
    void record(const std::string& name, bool ok, const std::function<std::string()>& detail = {});
    void pass(const std::string& name) { record(name, true); }
    /// Makes the check visible even if no instance reaches it.
    void touch(const std::string& name);

    const CheckResult* find(const std::string& name) const;
    std::vector<CheckResult> results() const;
    bool ok() const;

private:
    std::map<std::string, std::size_t> index_;
    std::vector<CheckResult> results_;
};

/// Parameter range for the exhaustive suites. Each suite caps n by its own
/// limit as well as by max_n, so the pairwise and chain searches stay small.
struct Grid {
    std::vector<int> es{2, 3, 4};
    std::size_t max_r = 3;
    int max_n = 6;
    int max_delta = 6;

    int pair_n = 6;         // pairwise order checks
    int triple_n = 4;       // transitivity
    int node_pair_n = 5;    // node order, bead steps
    int beta_n = 10;        // beta-set round trip, charges in [-6, 6]
    int weight_n = 7;       // rim hooks, classical weight
    int hub_n = 6;          // hub and same-hub laws
    int smove_n = 6;        // s-moves over multicores
    int equivalence_n = 6;  // core-block characterisations
    int bijection_n = 6;    // phi on every block, no condition
    int kleshchev_n = 8;    // single-component Kleshchev oracle
    int mahonian_n = 8;

    static Grid from_caps(const Caps& caps);
};

/// Multicharges a_1 = 0, a_j in 0..e-1 for r = 1..max_r.
std::vector<Multicharge> grid_charges(int e, std::size_t max_r);

void check_multipartition_laws(CheckLog& log, const Grid& grid);
void check_abacus_laws(CheckLog& log, const Grid& grid);
void check_weight_laws(CheckLog& log, const Grid& grid);
void check_s_move_laws(CheckLog& log, const Grid& grid);
void check_core_block_laws(CheckLog& log, const Grid& grid);
void check_scopes_laws(CheckLog& log, const Grid& grid);
void check_kleshchev_laws(CheckLog& log, const Grid& grid);
void check_branching_laws(CheckLog& log, const Grid& grid);

struct VerifyReport {
    Grid grid;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool ok() const;
};

/// Every suite over the grid derived from caps. `progress` receives suite names.
VerifyReport verify_all(const Caps& caps, const std::function<void(const std::string&)>& progress = {});

}  // namespace akb
