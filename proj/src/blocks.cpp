#include "akb/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <set>

#include "akb/error.hpp"

namespace akb {

std::vector<int> residue_counts(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    std::vector<int> counts(static_cast<std::size_t>(a.e), 0);
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const auto parts = lambda[j].parts();
        for (std::size_t b = 0; b < parts.size(); ++b)
            for (int c = 1; c <= parts[b]; ++c)
                ++counts[static_cast<std::size_t>(mod_e(static_cast<long long>(a.charge[j]) + c - 1 - static_cast<long long>(b), a.e))];
    }
    return counts;
}

int weight_from_counts(const std::vector<int>& counts, const Multicharge& a) {
    const auto e = static_cast<std::size_t>(a.e);
    long long twice = 0;
    for (int aj : a.charge) twice += 2LL * counts[static_cast<std::size_t>(mod_e(aj, a.e))];
    for (std::size_t i = 0; i < e; ++i) {
        const long long d = counts[i] - counts[(i + 1) % e];
        twice -= d * d;
    }
    assert(twice % 2 == 0 && "weight must be an integer");
    return static_cast<int>(twice / 2);
}

int weight(const Multipartition& lambda, const Multicharge& a) {
    return weight_from_counts(residue_counts(lambda, a), a);
}

int delta_ij(const Multipartition& lambda, const Multicharge& a, int i, std::size_t j) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    const int res = mod_e(i, a.e);
    int delta = 0;
    for (const Node& x : removable_nodes(lambda))
        if (x.comp == j && residue(x, a) == res) ++delta;
    for (const Node& x : addable_nodes(lambda))
        if (x.comp == j && residue(x, a) == res) --delta;
    return delta;
}

std::vector<std::vector<int>> delta_matrix(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    std::vector<std::vector<int>> out(lambda.r(), std::vector<int>(static_cast<std::size_t>(a.e), 0));
    for (const Node& x : removable_nodes(lambda)) ++out[x.comp][static_cast<std::size_t>(residue(x, a))];
    for (const Node& x : addable_nodes(lambda)) --out[x.comp][static_cast<std::size_t>(residue(x, a))];
    return out;
}

Hub hub(const Multipartition& lambda, const Multicharge& a) {
    Hub h(static_cast<std::size_t>(a.e), 0);
    for (const auto& row : delta_matrix(lambda, a))
        for (std::size_t i = 0; i < row.size(); ++i) h[i] += row[i];
    return h;
}

BlockDescriptor block_of(const Multipartition& lambda, const Multicharge& a) {
    BlockDescriptor d;
    d.n = lambda.size();
    d.r = lambda.r();
    d.e = a.e;
    for (int aj : a.charge) d.charge_residues.push_back(mod_e(aj, a.e));
    d.residue_counts = residue_counts(lambda, a);
    d.hub = hub(lambda, a);
    d.weight = weight_from_counts(d.residue_counts, a);
    d.core_weight = core_block_of(lambda, a).core.weight;
    return d;
}

bool same_block(const Multipartition& lambda, const Multipartition& mu, const Multicharge& a) {
    if (lambda.size() != mu.size()) throw InputError("same_block needs multipartitions of equal size");
    return residue_counts(lambda, a) == residue_counts(mu, a);
}

namespace {

std::vector<Block> group_into_blocks(int n, const Multicharge& a) {
    std::map<std::vector<int>, std::vector<Multipartition>> groups;
    for (auto& lambda : multipartitions_of(n, a.r())) {
        auto counts = residue_counts(lambda, a);
        groups[std::move(counts)].push_back(std::move(lambda));
    }
    std::vector<Block> blocks;
    for (auto& [counts, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [](const Multipartition& x, const Multipartition& y) { return lex_cmp(x, y) > 0; });
        blocks.push_back({counts, std::move(members)});
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
        return lex_cmp(x.members.back(), y.members.back()) < 0;
    });
    return blocks;
}

}  // namespace

std::vector<Block> enumerate_blocks(int n, const Multicharge& a, const Caps& caps) {
    if (n < 0) throw InputError("n must be non-negative");
    if (n > caps.max_n) throw InputError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(caps.max_n));
    if (a.r() > caps.max_r)
        throw InputError("r = " + std::to_string(a.r()) + " exceeds the cap " + std::to_string(caps.max_r));
    if (a.e > caps.max_e) throw InputError("e = " + std::to_string(a.e) + " exceeds the cap " + std::to_string(caps.max_e));
    return group_into_blocks(n, a);
}

BlockCatalog::BlockCatalog(Multicharge a, int size_limit) : a_(std::move(a)), size_limit_(size_limit) {}

const std::vector<Block>& BlockCatalog::blocks(int n) {
    auto it = blocks_.find(n);
    if (it != blocks_.end()) return it->second;
    if (n > size_limit_) throw InputError("block catalogue size limit exceeded at n = " + std::to_string(n));
    auto blocks = n < 0 ? std::vector<Block>{} : group_into_blocks(n, a_);
    auto& idx = index_[n];
    for (std::size_t b = 0; b < blocks.size(); ++b) idx.emplace(blocks[b].residue_counts, b);
    return blocks_.emplace(n, std::move(blocks)).first->second;
}

const Block* BlockCatalog::find(int n, const std::vector<int>& counts) {
    const auto& all = blocks(n);
    const auto& idx = index_[n];
    auto it = idx.find(counts);
    return it == idx.end() ? nullptr : &all[it->second];
}

const Block& BlockCatalog::block_containing(const Multipartition& lambda) {
    const Block* b = find(lambda.size(), residue_counts(lambda, a_));
    if (b == nullptr) throw InputError("no block contains " + lambda.to_string());
    return *b;
}

std::vector<std::vector<int>> core_witnesses(const LevelMatrix& levels) {
    const std::size_t r = levels.size();
    if (r == 0) return {};
    const std::size_t e = levels[0].size();
    // Candidate offsets of each component relative to component 1.
    std::vector<std::vector<int>> candidates(r);
    candidates[0] = {0};
    for (std::size_t j = 1; j < r; ++j) {
        int lo = std::numeric_limits<int>::min(), hi = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < e; ++i) {
            const int d = levels[j][i] - levels[0][i];
            lo = std::max(lo, -1 - d);
            hi = std::min(hi, 1 - d);
        }
        for (int t = lo; t <= hi; ++t) candidates[j].push_back(t);
        std::sort(candidates[j].begin(), candidates[j].end(), [](int x, int y) {
            return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y;
        });
        if (candidates[j].empty()) return {};
    }
    std::vector<std::vector<int>> out;
    std::vector<int> t(r, 0);
    auto valid = [&] {
        for (std::size_t i = 0; i < e; ++i) {
            int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
            for (std::size_t j = 0; j < r; ++j) {
                lo = std::min(lo, levels[j][i] + t[j]);
                hi = std::max(hi, levels[j][i] + t[j]);
            }
            if (hi - lo > 1) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t j) -> void {
        if (j == r) {
            if (valid()) out.push_back(t);
            return;
        }
        for (int c : candidates[j]) {
            t[j] = c;
            self(self, j + 1);
        }
    };
    search(search, 1);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        auto cost = [](const auto& v) {
            int s = 0;
            for (int c : v) s += std::abs(c);
            return s;
        };
        return cost(x) < cost(y);
    });
    return out;
}

CoreBlockCheck is_core_block(const Multipartition& m, const Multicharge& a) {
    if (!is_multicore(m, a)) throw InputError("expected a multicore, got " + m.to_string());
    auto witnesses = core_witnesses(lowest_levels(m, a));
    if (witnesses.empty()) return {};
    return {true, std::move(witnesses.front())};
}

namespace {

bool levels_in_core_block(const LevelMatrix& levels) {
    return !core_witnesses(levels).empty();
}

int gamma_of(const LevelMatrix& lv, std::size_t i, std::size_t l, std::size_t j, std::size_t k) {
    return (lv[j][i] - lv[k][i]) - (lv[j][l] - lv[k][l]);
}

LevelMatrix apply_move(LevelMatrix lv, std::size_t i, std::size_t l, std::size_t j, std::size_t k) {
    --lv[j][i];
    ++lv[j][l];
    --lv[k][l];
    ++lv[k][i];
    return lv;
}

struct MoveIndex {
    std::size_t i, l, j, k;
};

std::vector<MoveIndex> all_moves(std::size_t r, std::size_t e) {
    std::vector<MoveIndex> out;
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            if (j == k) continue;
            for (std::size_t i = 0; i < e; ++i)
                for (std::size_t l = 0; l < e; ++l)
                    if (i != l) out.push_back({i, l, j, k});
        }
    return out;
}

}  // namespace

CoreBlockResult core_block_of(const Multipartition& lambda, const Multicharge& a) {
    const std::size_t r = a.r();
    const auto e = static_cast<std::size_t>(a.e);
    const auto moves = all_moves(r, e);

    CoreBlockResult out;
    out.start = to_multicore(lambda, a).core;
    LevelMatrix lv = lowest_levels(out.start, a);
    Multipartition current = out.start;
    int current_weight = weight(current, a);
    out.path.push_back(current);

    // Strictly decreasing phase.
    for (;;) {
        const MoveIndex* best = nullptr;
        int best_gamma = 2;
        for (const auto& mv : moves) {
            const int g = gamma_of(lv, mv.i, mv.l, mv.j, mv.k);
            if (g > best_gamma) {
                best_gamma = g;
                best = &mv;
            }
        }
        if (best == nullptr) break;
        lv = apply_move(lv, best->i, best->l, best->j, best->k);
        Multipartition next = multicore_from_levels(lv, a);
        const int w = weight(next, a);
        out.chain.push_back({static_cast<int>(best->i), static_cast<int>(best->l), best->j, best->k, best_gamma,
                             current_weight, w});
        current = std::move(next);
        current_weight = w;
        out.path.push_back(current);
    }
    out.strict_prefix = out.chain.size();

    if (!levels_in_core_block(lv)) {
        // Breadth-first search over moves with gamma >= 2 (weight does not increase).
        struct Visit {
            LevelMatrix levels;
            std::size_t parent;
            MoveIndex move;
            int gamma;
        };
        std::vector<Visit> visits{{lv, 0, {0, 0, 0, 0}, 0}};
        std::set<LevelMatrix> seen{lv};
        std::size_t found = 0;
        bool ok = false;
        for (std::size_t head = 0; head < visits.size() && !ok; ++head) {
            for (const auto& mv : moves) {
                const int g = gamma_of(visits[head].levels, mv.i, mv.l, mv.j, mv.k);
                if (g < 2) continue;
                LevelMatrix next = apply_move(visits[head].levels, mv.i, mv.l, mv.j, mv.k);
                if (!seen.insert(next).second) continue;
                visits.push_back({std::move(next), head, mv, g});
                if (levels_in_core_block(visits.back().levels)) {
                    found = visits.size() - 1;
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) throw VerificationError("core-block-chain", "no weight-non-increasing s-move chain from " +
                                                                 out.start.to_string() + " reaches a core block");
        std::vector<std::size_t> trail;
        for (std::size_t v = found; v != 0; v = visits[v].parent) trail.push_back(v);
        std::reverse(trail.begin(), trail.end());
        for (std::size_t v : trail) {
            Multipartition next = multicore_from_levels(visits[v].levels, a);
            const int w = weight(next, a);
            const auto& mv = visits[v].move;
            out.chain.push_back({static_cast<int>(mv.i), static_cast<int>(mv.l), mv.j, mv.k, visits[v].gamma,
                                 current_weight, w});
            current = std::move(next);
            current_weight = w;
            out.path.push_back(current);
        }
    }

    out.end = current;
    out.core.n = current.size();
    out.core.r = r;
    out.core.e = a.e;
    for (int aj : a.charge) out.core.charge_residues.push_back(mod_e(aj, a.e));
    out.core.residue_counts = residue_counts(current, a);
    out.core.hub = hub(current, a);
    out.core.weight = current_weight;
    out.core.core_weight = current_weight;
    return out;
}

namespace {

LevelMatrix shifted(const LevelMatrix& levels, const std::vector<int>& offsets) {
    LevelMatrix out = levels;
    for (std::size_t j = 0; j < out.size(); ++j)
        for (auto& x : out[j]) x += offsets[j];
    return out;
}

// Per runner: the admissible base values as {smallest, largest}.
std::vector<std::pair<int, int>> base_ranges(const LevelMatrix& lv) {
    const std::size_t e = lv[0].size();
    std::vector<std::pair<int, int>> out(e);
    for (std::size_t i = 0; i < e; ++i) {
        int lo = lv[0][i], hi = lv[0][i];
        for (const auto& row : lv) {
            lo = std::min(lo, row[i]);
            hi = std::max(hi, row[i]);
        }
        out[i] = hi == lo ? std::pair{lo - 1, lo} : std::pair{lo, lo};
    }
    return out;
}

std::vector<std::vector<int>> require_core_witnesses(const Multipartition& m, const Multicharge& a) {
    if (!is_multicore(m, a)) throw InputError("expected a multicore, got " + m.to_string());
    auto w = core_witnesses(lowest_levels(m, a));
    if (w.empty()) throw InputError(m.to_string() + " does not lie in a core block");
    return w;
}

}  // namespace

std::vector<BaseTuple> base_tuples(const Multipartition& m, const Multicharge& a) {
    const auto witnesses = require_core_witnesses(m, a);
    const auto ranges = base_ranges(shifted(lowest_levels(m, a), witnesses.front()));
    std::vector<BaseTuple> out{{}};
    for (const auto& [lo, hi] : ranges) {
        std::vector<BaseTuple> next;
        for (const auto& prefix : out)
            for (int b = lo; b <= hi; ++b) {
                auto t = prefix;
                t.push_back(b);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

int k_value(const Multipartition& m, const Multicharge& a, int i) {
    const auto witnesses = require_core_witnesses(m, a);
    const LevelMatrix lv = lowest_levels(m, a);
    const auto cur = static_cast<std::size_t>(mod_e(i, a.e));
    const auto prev = static_cast<std::size_t>(mod_e(i - 1, a.e));
    const int correction = cur == 0 ? 2 : 1;
    int best = std::numeric_limits<int>::min();
    for (const auto& t : witnesses) {
        const auto ranges = base_ranges(shifted(lv, t));
        best = std::max(best, ranges[cur].second - ranges[prev].first - correction);
    }
    return best;
}

int d_min(const Multipartition& m, const Multicharge& a, int i) {
    const auto res = static_cast<std::size_t>(mod_e(i, a.e));
    int best = std::numeric_limits<int>::max();
    for (const auto& row : delta_matrix(m, a)) best = std::min(best, row[res]);
    return best;
}

ScopesReport scopes_condition(const Multipartition& lambda, const Multicharge& a, int i) {
    ScopesReport rep;
    rep.i = mod_e(i, a.e);
    rep.r = static_cast<int>(a.r());
    CoreBlockResult core = core_block_of(lambda, a);
    rep.block.n = lambda.size();
    rep.block.r = a.r();
    rep.block.e = a.e;
    rep.block.charge_residues = core.core.charge_residues;
    rep.block.residue_counts = residue_counts(lambda, a);
    rep.block.hub = hub(lambda, a);
    rep.block.weight = weight_from_counts(rep.block.residue_counts, a);
    rep.block.core_weight = core.core.weight;
    rep.core = core.core;
    rep.weight_b = rep.block.weight;
    rep.weight_c = core.core.weight;
    rep.k = k_value(core.end, a, rep.i);
    rep.delta = rep.block.hub[static_cast<std::size_t>(rep.i)];
    rep.holds = rep.weight_b <= rep.weight_c + rep.k * rep.r;
    rep.chain = std::move(core.chain);
    return rep;
}

}  // namespace akb
