#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "akb/abacus.hpp"
#include "akb/partition.hpp"

namespace akb {

/// Limits applied before any enumeration starts.
struct Caps {
    int max_n = 8;
    std::size_t max_r = 3;
    int max_e = 5;
    int max_delta = 6;
};

/// c_i(lambda): number of nodes of residue i, for i = 0..e-1.
std::vector<int> residue_counts(const Multipartition& lambda, const Multicharge& a);

/// Weight from residue counts, computed as (2 sum_j c_{a_j} - sum_i (c_i - c_{i+1})^2) / 2.
int weight_from_counts(const std::vector<int>& counts, const Multicharge& a);
int weight(const Multipartition& lambda, const Multicharge& a);

/// (delta_0, ..., delta_{e-1}); always sums to -r.
using Hub = std::vector<int>;

/// delta_i^j: removable minus addable i-nodes of component j.
int delta_ij(const Multipartition& lambda, const Multicharge& a, int i, std::size_t j);
/// deltas[j][i] = delta_i^j.
std::vector<std::vector<int>> delta_matrix(const Multipartition& lambda, const Multicharge& a);
Hub hub(const Multipartition& lambda, const Multicharge& a);

struct BlockDescriptor {
    int n = 0;
    std::size_t r = 1;
    int e = 2;
    std::vector<int> charge_residues;  // a_j mod e
    std::vector<int> residue_counts;
    Hub hub;
    int weight = 0;
    int core_weight = 0;

    bool operator==(const BlockDescriptor&) const = default;
};

BlockDescriptor block_of(const Multipartition& lambda, const Multicharge& a);

/// Equal residue multisets. InputError unless |lambda| = |mu|.
bool same_block(const Multipartition& lambda, const Multipartition& mu, const Multicharge& a);

struct Block {
    std::vector<int> residue_counts;
    std::vector<Multipartition> members;  // lexicographically decreasing
};

/// Every r-multipartition of n grouped into blocks; blocks ordered by their
/// lexicographically least member. InputError when n or r exceed the caps.
std::vector<Block> enumerate_blocks(int n, const Multicharge& a, const Caps& caps = {});

/// Memoised block enumeration for one multicharge, shared by the verifiers.
class BlockCatalog {
public:
    explicit BlockCatalog(Multicharge a, int size_limit = 24);

    const Multicharge& multicharge() const noexcept { return a_; }
    const std::vector<Block>& blocks(int n);
    /// The block of size n with these residue counts, or nullptr if none.
    const Block* find(int n, const std::vector<int>& counts);
    const Block& block_containing(const Multipartition& lambda);

private:
    Multicharge a_;
    int size_limit_;
    std::map<int, std::vector<Block>> blocks_;
    std::map<int, std::map<std::vector<int>, std::size_t>> index_;
};

/// Offsets t_j (t_1 = 0) such that shifting component j by t_j levels, i.e.
/// a_j -> a_j + t_j e, leaves every runner with levels in some {x, x+1}.
/// All such offset vectors, the all-zero one first when it qualifies.
std::vector<std::vector<int>> core_witnesses(const LevelMatrix& levels);

struct CoreBlockCheck {
    bool is_core = false;
    std::vector<int> offsets;  // preferred witness when is_core
};

/// Whether the multicore m lies in a core block. InputError if m is not a multicore.
CoreBlockCheck is_core_block(const Multipartition& m, const Multicharge& a);

struct SMove {
    int i = 0;
    int l = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    int gamma = 0;  // gamma_{il}^{jk} before the move
    int weight_before = 0;
    int weight_after = 0;

    bool operator==(const SMove&) const = default;
};

struct CoreBlockResult {
    BlockDescriptor core;
    Multipartition start;                 // to_multicore(lambda)
    Multipartition end;                   // a multicore in the core block
    std::vector<SMove> chain;             // s-moves from start to end
    std::vector<Multipartition> path;     // start, ..., end
    std::size_t strict_prefix = 0;        // moves made while some gamma_diff >= 3
};

/// The core block of lambda together with a weight-non-increasing s-move chain
/// into it: greedy strict decreases first, then a breadth-first search over
/// weight-preserving or decreasing moves.
CoreBlockResult core_block_of(const Multipartition& lambda, const Multicharge& a);

using BaseTuple = std::vector<int>;

/// Base tuples relative to the preferred witness a_j + t_j e. InputError unless
/// m is a multicore in a core block.
std::vector<BaseTuple> base_tuples(const Multipartition& m, const Multicharge& a);

/// K_i for the core block containing the multicore m: for each witness take
/// the base tuple with b_i largest and b_{i-1} smallest, then the best witness.
int k_value(const Multipartition& m, const Multicharge& a, int i);

/// min_j delta_i^j.
int d_min(const Multipartition& m, const Multicharge& a, int i);

struct ScopesReport {
    bool holds = false;
    int i = 0;
    int r = 1;
    int weight_b = 0;
    int weight_c = 0;
    int k = 0;
    int delta = 0;
    BlockDescriptor block;
    BlockDescriptor core;
    std::vector<SMove> chain;
};

/// w(B) <= w(C) + K_i r for the block B of lambda, with delta_i(B) attached.
ScopesReport scopes_condition(const Multipartition& lambda, const Multicharge& a, int i);

}  // namespace akb
