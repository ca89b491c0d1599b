#include "akb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "akb/abacus.hpp"
#include "akb/branching.hpp"
#include "akb/error.hpp"
#include "akb/scopes.hpp"

namespace akb {

namespace {
constexpr std::size_t kMaxSamples = 5;
}

void CheckLog::touch(const std::string& name) {
    if (index_.emplace(name, results_.size()).second) results_.push_back({name, 0, 0, {}});
}

void CheckLog::record(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    touch(name);
    CheckResult& r = results_[index_.at(name)];
    ++r.instances;
    if (ok) return;
    ++r.violations;
    if (r.samples.size() < kMaxSamples) r.samples.push_back(detail ? detail() : std::string{});
}

const CheckResult* CheckLog::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &results_[it->second];
}

std::vector<CheckResult> CheckLog::results() const { return results_; }

bool CheckLog::ok() const {
    return std::all_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.ok(); });
}

Grid Grid::from_caps(const Caps& caps) {
    Grid g;
    g.es.clear();
    for (int e = 2; e <= caps.max_e; ++e) g.es.push_back(e);
    g.max_r = caps.max_r;
    g.max_n = caps.max_n;
    g.max_delta = caps.max_delta;
    return g;
}

std::vector<Multicharge> grid_charges(int e, std::size_t max_r) {
    std::vector<Multicharge> out;
    for (std::size_t r = 1; r <= max_r; ++r) {
        std::vector<int> a(r, 0);
        for (;;) {
            out.emplace_back(e, a);
            std::size_t j = r;
            while (j > 1 && a[j - 1] == e - 1) a[--j] = 0;
            if (j <= 1) break;
            ++a[j - 1];
        }
    }
    return out;
}

namespace {

std::string str(const Multipartition& m) { return m.to_string(); }

std::string str(const Multicharge& a) {
    std::ostringstream os;
    os << "e=" << a.e << " a=(";
    for (std::size_t j = 0; j < a.charge.size(); ++j) os << (j ? "," : "") << a.charge[j];
    os << ')';
    return os.str();
}

std::string at(const Multipartition& m, const Multicharge& a) { return str(m) + " " + str(a); }

int limit(const Grid& g, int n) { return std::min(n, g.max_n); }

template <class F>
void for_each_charge(const Grid& g, F f) {
    for (int e : g.es)
        for (const auto& a : grid_charges(e, g.max_r)) f(a);
}

template <class F>
void for_each_r(const Grid& g, F f) {
    for (std::size_t r = 1; r <= g.max_r; ++r) f(r);
}

int hook_length(const Partition& p, int b, int c) {
    int leg = 0;
    while (p.part(b + leg + 1) >= c) ++leg;
    return p.part(b) - c + leg + 1;
}

bool e_restricted(const Partition& p, int e) {
    for (int b = 1; b <= static_cast<int>(p.length()); ++b)
        if (p.part(b) - p.part(b + 1) >= e) return false;
    return true;
}

// The bead set with the bead at `from` moved to the empty position `to`.
BetaSet moved(const BetaSet& bs, int from, int to) {
    const int cutoff = std::min(bs.cutoff(), from);
    std::vector<int> beads;
    for (int p = cutoff; p < bs.cutoff(); ++p)
        if (p != from) beads.push_back(p);
    for (int x : bs.beads_above_cutoff())
        if (x != from) beads.push_back(x);
    beads.push_back(to);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    return BetaSet(cutoff, std::move(beads));
}

Multipartition replace_component(const Multipartition& m, std::size_t j, const Partition& p) {
    std::vector<Partition> comps(m.components().begin(), m.components().end());
    comps[j] = p;
    return Multipartition(std::move(comps));
}

int d_of(const Multipartition& m, const Multicharge& a, int i) { return d_min(m, a, i); }

bool gamma_small(const LevelMatrix& lv) {
    const std::size_t r = lv.size(), e = lv[0].size();
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < e; ++i)
                for (std::size_t l = 0; l < e; ++l)
                    if (std::abs((lv[j][i] - lv[k][i]) - (lv[j][l] - lv[k][l])) > 2) return false;
    return true;
}

std::vector<Multipartition> multicores_up_to(int n_max, const Multicharge& a) {
    std::vector<Multipartition> out;
    for (int n = 0; n <= n_max; ++n)
        for (auto& m : multipartitions_of(n, a.r()))
            if (is_multicore(m, a)) out.push_back(std::move(m));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

void check_multipartition_laws(CheckLog& log, const Grid& g) {
    for_each_r(g, [&](std::size_t r) {
        for (int n = 0; n <= g.max_n; ++n)
            for (const auto& m : multipartitions_of(n, r)) {
                const auto add = addable_nodes(m).size(), rem = removable_nodes(m).size();
                log.record("addable-minus-removable-is-r", add == rem + r,
                           [&] { return str(m) + ": " + std::to_string(add) + " addable, " + std::to_string(rem) + " removable"; });
                log.record("node-count-is-size", static_cast<int>(nodes(m).size()) == m.size(), [&] { return str(m); });
            }

        for (int n = 0; n <= limit(g, g.pair_n); ++n) {
            const auto all = multipartitions_of(n, r);
            for (const auto& x : all)
                for (const auto& y : all) {
                    const auto c = lex_cmp(x, y), c2 = lex_cmp(y, x);
                    log.record("lex-total-order", (c == 0) == (x == y) && (c < 0) == (c2 > 0) && (c > 0) == (c2 < 0),
                               [&] { return str(x) + " vs " + str(y); });
                    const bool dxy = dominates(x, y), dyx = dominates(y, x);
                    log.record("dominance-antisymmetric", !(dxy && dyx) || x == y, [&] { return str(x) + " vs " + str(y); });
                    if (dxy && !(x == y))
                        log.record("dominance-refines-lex", c > 0, [&] { return str(x) + " dominates " + str(y); });
                }
            for (const auto& x : all) log.record("dominance-reflexive", dominates(x, x), [&] { return str(x); });
        }
        for (int n = 0; n <= limit(g, g.triple_n); ++n) {
            const auto all = multipartitions_of(n, r);
            for (const auto& x : all)
                for (const auto& y : all)
                    for (const auto& z : all) {
                        if (dominates(x, y) && dominates(y, z))
                            log.record("dominance-transitive", dominates(x, z), [&] { return str(x) + str(y) + str(z); });
                        if (lex_cmp(x, y) < 0 && lex_cmp(y, z) < 0)
                            log.record("lex-transitive", lex_cmp(x, z) < 0, [&] { return str(x) + str(y) + str(z); });
                    }
        }
        for (int n = 0; n <= limit(g, g.node_pair_n); ++n)
            for (const auto& m : multipartitions_of(n, r)) {
                const auto xs = nodes(m);
                for (const auto& x : xs)
                    for (const auto& y : xs)
                        log.record("node-order-antisymmetric", !(node_above(x, y) && node_above(y, x)),
                                   [&] { return str(m); });
            }
    });
    for_each_charge(g, [&](const Multicharge& a) {
        for (int n = 0; n <= limit(g, g.node_pair_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r()))
                log.record("residue-multiset-size", static_cast<int>(residue_multiset(m, a).size()) == n,
                           [&] { return at(m, a); });
    });
}

// ---------------------------------------------------------------------------

void check_abacus_laws(CheckLog& log, const Grid& g) {
    for (int n = 0; n <= limit(g, g.beta_n); ++n)
        for (const auto& p : partitions_of(n))
            for (int c = -6; c <= 6; ++c) {
                const auto [q, charge] = partition_of(beta_set(p, c));
                log.record("beta-round-trip", q == p && charge == c,
                           [&] { return p.to_string() + " charge " + std::to_string(c); });
            }

    for (int e : g.es)
        for (int n = 0; n <= g.max_n; ++n)
            for (const auto& p : partitions_of(n)) {
                bool divisible_hook = false;
                for (int b = 1; b <= static_cast<int>(p.length()); ++b)
                    for (int c = 1; c <= p.part(b); ++c)
                        if (hook_length(p, b, c) % e == 0) divisible_hook = true;
                log.record("e-core-iff-no-e-hook", is_e_core(beta_set(p, 0), e) == !divisible_hook,
                           [&] { return p.to_string() + " e=" + std::to_string(e); });
            }

    for_each_charge(g, [&](const Multicharge& a) {
        for (int n = 0; n <= limit(g, g.node_pair_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                const auto display = AbacusDisplay::of(m, a);
                log.record("abacus-round-trip", display.multipartition() == m, [&] { return at(m, a); });
                log.record("render-round-trip", parse_rendered(render(display)) == display, [&] { return at(m, a); });

                // Moving a bead one step right adds a node of the new position's residue.
                for (std::size_t j = 0; j < a.r(); ++j) {
                    const BetaSet& bs = display.components[j];
                    std::vector<int> candidates(bs.beads_above_cutoff().begin(), bs.beads_above_cutoff().end());
                    candidates.push_back(bs.cutoff() - 1);
                    for (int b : candidates) {
                        if (!bs.contains(b) || bs.contains(b + 1)) continue;
                        const auto [q, charge] = partition_of(moved(bs, b, b + 1));
                        const Multipartition bigger = replace_component(m, j, q);
                        bool ok = bigger.size() == m.size() + 1 && charge == a.charge[j];
                        if (ok) {
                            ok = false;
                            for (const Node& x : addable_nodes(m))
                                if (x.comp == j && m.with_node(x) == bigger) ok = residue(x, a) == mod_e(b + 1, a.e);
                        }
                        log.record("bead-step-adds-residue-node", ok, [&] { return at(m, a) + " bead " + std::to_string(b); });
                    }
                }

                for (int i = 0; i < a.e; ++i) {
                    const Multipartition image = phi(m, a, i);
                    // Oracle: remove every removable i-node and add every addable i-node.
                    std::vector<Partition> comps;
                    for (std::size_t j = 0; j < a.r(); ++j) {
                        const Partition& p = m[j];
                        std::vector<int> parts;
                        for (int b = 1; b <= static_cast<int>(p.length()) + 1; ++b) {
                            int v = p.part(b);
                            const Node rem{b, v, j}, add{b, v + 1, j};
                            const bool removable = v > 0 && v > p.part(b + 1);
                            const bool addable = b == 1 || p.part(b - 1) > v;
                            if (removable && residue(rem, a) == i) --v;
                            else if (addable && residue(add, a) == i) ++v;
                            parts.push_back(v);
                        }
                        comps.emplace_back(parts);
                    }
                    log.record("phi-swaps-i-nodes", image == Multipartition(comps),
                               [&] { return at(m, a) + " i=" + std::to_string(i); });

                    bool same = true;
                    for (std::size_t j = 0; j < a.r(); ++j) {
                        const BetaSet& src = display.components[j];
                        const BetaSet dst = phi(src, a.e, i);
                        const int lo = std::min(src.cutoff(), dst.cutoff()) - 2 * a.e;
                        const int hi = std::max(src.cutoff(), dst.cutoff()) + 2 * a.e +
                                       (src.beads_above_cutoff().empty() ? 0 : src.beads_above_cutoff()[0]) -
                                       src.cutoff();
                        for (int p = lo; p <= hi; ++p)
                            if (dst.contains(phi_position(p, a.e, i)) != src.contains(p)) same = false;
                    }
                    log.record("phi-maps-beta-numbers", same, [&] { return at(m, a) + " i=" + std::to_string(i); });
                }
            }
    });
}

// ---------------------------------------------------------------------------

void check_weight_laws(CheckLog& log, const Grid& g) {
    for_each_charge(g, [&](const Multicharge& a) {
        const int r = static_cast<int>(a.r());
        for (int n = 0; n <= limit(g, g.weight_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                const int w = weight(m, a);
                log.record("weight-nonnegative", w >= 0, [&] { return at(m, a); });
                const auto red = to_multicore(m, a);
                log.record("multicore-reduction-weight",
                           is_multicore(red.core, a) && w == weight(red.core, a) + r * red.hooks_removed &&
                               m.size() == red.core.size() + a.e * red.hooks_removed,
                           [&] { return at(m, a); });
                // Every single rim-hook removal: slide one bead up one level.
                const auto display = AbacusDisplay::of(m, a);
                for (std::size_t j = 0; j < a.r(); ++j) {
                    const BetaSet& bs = display.components[j];
                    for (int b : bs.beads_above_cutoff()) {
                        if (bs.contains(b - a.e)) continue;
                        const Multipartition smaller =
                            replace_component(m, j, partition_of(moved(bs, b, b - a.e)).first);
                        log.record("rim-hook-removal-weight",
                                   smaller.size() == n - a.e && weight(smaller, a) == w - r,
                                   [&] { return at(m, a) + " bead " + std::to_string(b); });
                    }
                }
                if (r == 1) {
                    int divisible = 0;
                    const Partition& p = m[0];
                    for (int b = 1; b <= static_cast<int>(p.length()); ++b)
                        for (int c = 1; c <= p.part(b); ++c)
                            if (hook_length(p, b, c) % a.e == 0) ++divisible;
                    log.record("classical-e-weight", w == divisible, [&] { return at(m, a); });
                }
            }

        // Same hub: e w - r n is constant; hub and n determine the block.
        std::map<Hub, std::pair<long long, std::string>> invariant;
        std::map<std::pair<int, Hub>, std::set<std::vector<int>>> counts_by_hub;
        std::map<std::pair<int, std::vector<int>>, std::set<Hub>> hubs_by_counts;
        for (int n = 0; n <= limit(g, g.hub_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                const Hub h = hub(m, a);
                const auto c = residue_counts(m, a);
                log.record("hub-sums-to-minus-r", std::accumulate(h.begin(), h.end(), 0) == -r, [&] { return at(m, a); });
                const long long inv = static_cast<long long>(a.e) * weight(m, a) - static_cast<long long>(r) * n;
                auto [it, fresh] = invariant.emplace(h, std::pair{inv, str(m)});
                log.record("same-hub-weight-difference", fresh || it->second.first == inv,
                           [&] { return at(m, a) + " vs " + it->second.second; });
                counts_by_hub[{n, h}].insert(c);
                hubs_by_counts[{n, c}].insert(h);
                {
                    const auto dm = delta_matrix(m, a);
                    bool ok = true;
                    for (std::size_t j = 0; j < a.r(); ++j)
                        for (int i = 0; i < a.e; ++i)
                            if (delta_ij(m, a, i, j) != dm[j][static_cast<std::size_t>(i)]) ok = false;
                    log.record("delta-matrix-consistent", ok, [&] { return at(m, a); });
                }
                if (is_multicore(m, a)) {
                    const auto lv = lowest_levels(m, a);
                    const auto dm = delta_matrix(m, a);
                    bool ok = true;
                    for (std::size_t j = 0; j < a.r(); ++j)
                        for (int i = 0; i < a.e; ++i) {
                            const auto ui = static_cast<std::size_t>(i);
                            const auto prev = static_cast<std::size_t>(mod_e(i - 1, a.e));
                            const int expected = lv[j][ui] - lv[j][prev] - (i == 0 ? 1 : 0);
                            if (dm[j][ui] != expected) ok = false;
                        }
                    log.record("level-hub-bridge", ok, [&] { return at(m, a); });
                }
            }
        for (const auto& [key, cs] : counts_by_hub)
            log.record("hub-determines-block", cs.size() == 1, [&] { return str(a) + " n=" + std::to_string(key.first); });
        for (const auto& [key, hs] : hubs_by_counts)
            log.record("block-determines-hub", hs.size() == 1, [&] { return str(a) + " n=" + std::to_string(key.first); });

        // Shifting every charge by one rotates the residue counts.
        std::vector<int> shifted_charge = a.charge;
        for (int& c : shifted_charge) ++c;
        const Multicharge b(a.e, shifted_charge);
        for (int n = 0; n <= limit(g, g.node_pair_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                const auto c = residue_counts(m, a), d = residue_counts(m, b);
                bool ok = true;
                for (int i = 0; i < a.e; ++i)
                    if (d[static_cast<std::size_t>(mod_e(i + 1, a.e))] != c[static_cast<std::size_t>(i)]) ok = false;
                log.record("charge-shift-rotates-counts", ok, [&] { return at(m, a); });
            }
    });
}

// ---------------------------------------------------------------------------

void check_s_move_laws(CheckLog& log, const Grid& g) {
    for_each_charge(g, [&](const Multicharge& a) {
        const int r = static_cast<int>(a.r());
        for (const auto& m : multicores_up_to(limit(g, g.smove_n), a)) {
            const int w = weight(m, a);
            const Hub h = hub(m, a);
            const auto lv = lowest_levels(m, a);
            const bool small = gamma_small(lv);
            std::vector<int> d(static_cast<std::size_t>(a.e));
            for (int i = 0; i < a.e; ++i) d[static_cast<std::size_t>(i)] = d_of(m, a, i);

            if (small)
                for (int ib = 0; ib < a.e; ++ib) {
                    const int base = d[static_cast<std::size_t>(ib)] + 1;
                    bool ok = true;
                    for (std::size_t j = 0; j < a.r(); ++j) {
                        const int x = delta_ij(m, a, ib, j);
                        if (x < base - 1 || x > base + 1) ok = false;
                    }
                    log.record("delta-interval", ok, [&] { return at(m, a) + " i=" + std::to_string(ib); });
                }

            // gamma shift invariance under a_j -> a_j + e.
            for (std::size_t j = 0; j < a.r(); ++j) {
                std::vector<int> c = a.charge;
                c[j] += a.e;
                const Multicharge b(a.e, c);
                bool ok = true;
                for (int i = 0; i < a.e; ++i)
                    for (int l = 0; l < a.e; ++l)
                        for (std::size_t k = 0; k < a.r(); ++k)
                            for (std::size_t jj = 0; jj < a.r(); ++jj)
                                if (gamma_diff(m, a, i, l, jj, k) != gamma_diff(m, b, i, l, jj, k)) ok = false;
                log.record("gamma-shift-invariant", ok, [&] { return at(m, a); });
            }

            for (std::size_t j = 0; j < a.r(); ++j)
                for (std::size_t k = 0; k < a.r(); ++k) {
                    for (int i = 0; i < a.e; ++i) log.record("gamma-diagonal-zero", j != k || gamma(m, a, i, j, k) == 0, [&] { return at(m, a); });
                    if (j == k) continue;
                    for (int i = 0; i < a.e; ++i)
                        for (int l = 0; l < a.e; ++l) {
                            if (i == l) continue;
                            const int gd = gamma_diff(m, a, i, l, j, k);
                            log.record("gamma-antisymmetric",
                                       gd == -gamma_diff(m, a, l, i, j, k) && gd == -gamma_diff(m, a, i, l, k, j),
                                       [&] { return at(m, a); });
                            const Multipartition s = s_move(m, a, i, l, j, k);
                            const auto where = [&] {
                                return at(m, a) + " s(" + std::to_string(i) + "," + std::to_string(l) + "," +
                                       std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
                            };
                            log.record("s-move-gives-multicore", is_multicore(s, a), where);
                            log.record("s-move-hub", hub(s, a) == h, where);
                            log.record("s-move-weight", weight(s, a) == w - r * (gd - 2), where);
                            log.record("s-move-symmetric", s == s_move(m, a, l, i, k, j), where);
                            log.record("s-move-inverse", s_move(s, a, l, i, j, k) == m, where);
                            for (int ib = 0; ib < a.e; ++ib) {
                                const int before = d[static_cast<std::size_t>(ib)], after = d_of(s, a, ib);
                                log.record("d-after-s-move", after >= before - 2, where);
                                if (gd == 1) log.record("d-after-s-move-gamma-one", after >= before - 1, where);
                            }
                        }
                }
        }
    });
}

// ---------------------------------------------------------------------------

void check_core_block_laws(CheckLog& log, const Grid& g) {
    for_each_charge(g, [&](const Multicharge& a) {
        const int r = static_cast<int>(a.r());
        BlockCatalog catalog(a);
        // Hubs present at each size, for the minimal-weight characterisation.
        std::map<int, std::set<Hub>> hubs_at;
        const int top = std::max(limit(g, g.equivalence_n), g.max_n);
        for (int n = 0; n <= top; ++n)
            for (const auto& b : catalog.blocks(n)) hubs_at[n].insert(hub(b.members.front(), a));

        for (int n = 0; n <= g.max_n; ++n)
            for (const auto& block : catalog.blocks(n)) {
                const Multipartition& first = block.members.front();
                const auto where = [&] { return "block of " + at(first, a); };
                const Hub h = hub(first, a);
                const CoreBlockResult core = core_block_of(first, a);
                const int wB = weight(first, a);
                const int wC = core.core.weight;

                // The chain itself.
                bool chain_ok = core.path.size() == core.chain.size() + 1 && core.path.front() == core.start &&
                                core.path.back() == core.end && core.start == to_multicore(first, a).core;
                for (std::size_t t = 0; t < core.chain.size() && chain_ok; ++t) {
                    const SMove& s = core.chain[t];
                    const Multipartition& cur = core.path[t];
                    const Multipartition& nxt = core.path[t + 1];
                    chain_ok = s_move(cur, a, s.i, s.l, s.j, s.k) == nxt && hub(nxt, a) == h &&
                               s.gamma == gamma_diff(cur, a, s.i, s.l, s.j, s.k) &&
                               s.weight_after == weight(nxt, a) && s.weight_before == weight(cur, a) &&
                               s.weight_after <= s.weight_before &&
                               (t >= core.strict_prefix || s.weight_after < s.weight_before) &&
                               s.weight_after == s.weight_before - r * (s.gamma - 2);
                }
                chain_ok = chain_ok && hub(core.start, a) == h && is_core_block(core.end, a).is_core &&
                           core.core.hub == h && weight(core.end, a) == wC;
                log.record("core-block-chain", chain_ok, where);
                if (core.strict_prefix <= core.chain.size()) {
                    const auto lv = lowest_levels(core.path[core.strict_prefix], a);
                    log.record("chain-reaches-small-gamma", gamma_small(lv), where);
                }
                log.record("block-weight-above-core", wB >= wC && (wB - wC) % r == 0, where);

                bool def3 = true;
                for (const auto& m : block.members)
                    if (!is_multicore(m, a)) def3 = false;
                if (n <= limit(g, g.equivalence_n)) {
                    const bool def1 = is_multicore(first, a) && is_core_block(first, a).is_core;
                    bool def2 = true;
                    for (int t = 1; n - t * a.e >= 0; ++t)
                        if (hubs_at[n - t * a.e].count(h)) def2 = false;
                    log.record("core-block-characterisations-agree", def1 == def2 && def2 == def3,
                               [&] {
                                   return where() + ": base tuple " + std::to_string(def1) + ", minimal weight " +
                                          std::to_string(def2) + ", all multicores " + std::to_string(def3);
                               });
                    log.record("core-weight-minimal", wC <= wB && ((wC == wB) == def2), where);
                }

                // Multicores of the block: chain and d bounds.
                for (const auto& m : block.members) {
                    if (!is_multicore(m, a)) continue;
                    const CoreBlockResult mc = core_block_of(m, a);
                    log.record("core-block-unique", mc.core.residue_counts == core.core.residue_counts, where);
                    const int wm = weight(m, a);
                    const bool small = gamma_small(lowest_levels(m, a));
                    const Block* cblock = catalog.find(mc.core.n, mc.core.residue_counts);
                    for (int ib = 0; ib < a.e; ++ib) {
                        const int dm = d_of(m, a, ib);
                        const auto wi = [&] { return at(m, a) + " i=" + std::to_string(ib); };
                        // Strictly decreasing prefix.
                        for (std::size_t v = 1; v <= mc.strict_prefix; ++v) {
                            const int wv = weight(mc.path[v], a);
                            if ((wm - wv) % r != 0) continue;
                            const int hh = (wm - wv) / r;
                            if (hh > 0) log.record("d-chain-bound", dm >= d_of(mc.path[v], a, ib) - hh, wi);
                        }
                        const int K = k_value(mc.end, a, ib);
                        const int hh = (wm - mc.core.weight) / r;
                        if (0 <= hh && hh <= K) log.record("d-master-bound", dm >= K - hh, wi);
                        if (small && cblock != nullptr)
                            for (const auto& mu : cblock->members)
                                log.record("core-d-at-most-one-above", d_of(mu, a, ib) <= dm + 1, wi);
                    }
                }
                log.touch("d-chain-bound");
                log.touch("d-master-bound");
                log.touch("core-d-at-most-one-above");

                if (!def3) continue;
                // Core block: base tuples, K and delta spread.
                const auto tuples = base_tuples(first, a);
                const auto witnesses = core_witnesses(lowest_levels(first, a));
                for (int ib = 0; ib < a.e; ++ib) {
                    const int K = k_value(first, a, ib);
                    for (const auto& mu : block.members) {
                        log.record("k-at-most-d", K <= d_of(mu, a, ib), [&] { return at(mu, a) + " i=" + std::to_string(ib); });
                        const auto dm = delta_matrix(mu, a);
                        bool spread = true, member = true;
                        for (std::size_t j = 0; j < a.r(); ++j) {
                            for (std::size_t k = 0; k < a.r(); ++k)
                                if (std::abs(dm[j][static_cast<std::size_t>(ib)] - dm[k][static_cast<std::size_t>(ib)]) > 2) spread = false;
                            for (const auto& bt : tuples) {
                                const auto ui = static_cast<std::size_t>(ib);
                                const auto up = static_cast<std::size_t>(mod_e(ib - 1, a.e));
                                const int base = bt[ui] - bt[up] - (ib == 0 ? 2 : 1);
                                const int x = dm[j][ui];
                                if (x < base || x > base + 2) member = false;
                            }
                        }
                        log.record("core-delta-spread", spread, [&] { return at(mu, a); });
                        log.record("base-tuple-delta-range", member, [&] { return at(mu, a); });
                    }
                    // Shifting one charge by e leaves K unchanged.
                    for (std::size_t j = 0; j < a.r(); ++j) {
                        std::vector<int> c = a.charge;
                        c[j] += a.e;
                        log.record("k-shift-invariant", k_value(first, Multicharge(a.e, c), ib) == K, where);
                    }
                }
                bool levels_ok = !witnesses.empty();
                const auto lv = lowest_levels(first, a);
                for (const auto& bt : tuples)
                    for (std::size_t j = 0; j < a.r(); ++j)
                        for (int i = 0; i < a.e; ++i) {
                            const int x = lv[j][static_cast<std::size_t>(i)] + witnesses.front()[j];
                            if (x != bt[static_cast<std::size_t>(i)] && x != bt[static_cast<std::size_t>(i)] + 1) levels_ok = false;
                        }
                log.record("base-tuple-levels", levels_ok && !tuples.empty(), where);
            }
    });
}

// ---------------------------------------------------------------------------

void check_scopes_laws(CheckLog& log, const Grid& g) {
    for (const char* name : {"no-forbidden-configuration", "no-addable-i-nodes", "phi-bijection", "phi-weight",
                             "lex-order-preserved", "kleshchev-preserved", "kleshchev-count-preserved",
                             "branching-degree-spectrum", "removal-orders-agree", "certificate"})
        log.touch(name);
    for_each_charge(g, [&](const Multicharge& a) {
        BlockCatalog catalog(a);
        for (int n = 0; n <= g.max_n; ++n)
            for (const auto& block : catalog.blocks(n)) {
                const Multipartition& first = block.members.front();
                for (int i = 0; i < a.e; ++i) {
                    const auto where = [&] { return "block of " + at(first, a) + " i=" + std::to_string(i); };
                    const auto pairs = scopes_pairing(block, a, i);
                    const int delta = hub(first, a)[static_cast<std::size_t>(i)];

                    if (n <= limit(g, g.bijection_n)) {
                        std::vector<Multipartition> images;
                        for (const auto& p : pairs) images.push_back(p.second);
                        std::sort(images.begin(), images.end(),
                                  [](const auto& x, const auto& y) { return lex_cmp(x, y) > 0; });
                        const Block* target = catalog.find(n - delta, residue_counts(pairs.front().second, a));
                        log.record("phi-bijection-all-blocks", target != nullptr && target->members == images, where);
                        bool weights = true;
                        for (const auto& [x, y] : pairs)
                            if (weight(x, a) != weight(y, a)) weights = false;
                        log.record("phi-weight-all-blocks", weights, where);
                    }

                    const ScopesReport rep = scopes_condition(first, a, i);
                    if (!rep.holds || rep.delta < 0) continue;
                    if (rep.delta > g.max_delta) continue;

                    for (const auto& [x, y] : pairs) {
                        log.record("no-forbidden-configuration", !has_forbidden_config(x, a, i),
                                   [&] { return at(x, a) + " i=" + std::to_string(i); });
                        log.record("no-addable-i-nodes", addable_i_nodes(x, a, i).empty(),
                                   [&] { return at(x, a) + " i=" + std::to_string(i); });
                    }
                    {
                        std::vector<Multipartition> images;
                        for (const auto& p : pairs) images.push_back(p.second);
                        std::sort(images.begin(), images.end(),
                                  [](const auto& x, const auto& y) { return lex_cmp(x, y) > 0; });
                        const Block* target = catalog.find(n - delta, residue_counts(pairs.front().second, a));
                        log.record("phi-bijection", target != nullptr && target->members == images, where);
                        log.record("phi-weight", target != nullptr && weight(target->members.front(), a) == rep.weight_b,
                                   where);
                    }
                    const auto bad = lex_violations(block, a, i);
                    log.record("lex-order-preserved", bad.empty(), [&] {
                        return where() + ": " + str(bad.front().first) + " > " + str(bad.front().second);
                    });

                    int klesh_src = 0, klesh_img = 0;
                    for (const auto& [x, y] : pairs) {
                        const bool kx = is_kleshchev(x, a), ky = is_kleshchev(y, a);
                        klesh_src += kx;
                        klesh_img += ky;
                        if (addable_i_nodes(x, a, i).empty())
                            log.record("kleshchev-preserved", kx == ky, [&] { return at(x, a) + " i=" + std::to_string(i); });
                    }
                    log.record("kleshchev-count-preserved", klesh_src == klesh_img, where);

                    const LaurentPolynomial expected = expected_spectrum(rep.delta);
                    for (const auto& [x, y] : pairs) {
                        const auto wx = [&] { return at(x, a) + " i=" + std::to_string(i); };
                        try {
                            const auto br = branching_polynomial(x, a, i, g.max_delta);
                            log.record("branching-degree-spectrum", br.polynomial == expected && br.target == y, wx);
                            log.record("removal-orders-agree", true);
                        } catch (const VerificationError& ex) {
                            log.record(ex.check(), false, [&] { return std::string(ex.what()); });
                        } catch (const HypothesisError& ex) {
                            log.record("branching-degree-spectrum", false, [&] { return std::string(ex.what()); });
                        }
                    }

                    try {
                        (void)certificate(block, a, i, catalog, g.max_delta);
                        log.record("certificate", true);
                    } catch (const VerificationError& ex) {
                        log.record("certificate", false, [&] { return std::string(ex.what()); });
                    } catch (const InputError& ex) {
                        log.record("certificate", false, [&] { return std::string(ex.what()); });
                    }
                }
            }
    });
}

// ---------------------------------------------------------------------------

void check_kleshchev_laws(CheckLog& log, const Grid& g) {
    for (int e : g.es) {
        const Multicharge a(e, {0});
        for (int n = 0; n <= limit(g, g.kleshchev_n); ++n)
            for (const auto& p : partitions_of(n)) {
                const Multipartition m{p};
                log.record("kleshchev-single-component-restricted", is_kleshchev(m, a) == e_restricted(p, e),
                           [&] { return at(m, a); });
            }
    }
    for_each_charge(g, [&](const Multicharge& a) {
        for (int n = 0; n <= limit(g, g.hub_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                if (!is_kleshchev(m, a)) continue;
                bool restricted = true;
                for (const auto& p : m.components())
                    if (!e_restricted(p, a.e)) restricted = false;
                log.record("kleshchev-components-restricted", restricted, [&] { return at(m, a); });
            }
    });
}

// ---------------------------------------------------------------------------

void check_branching_laws(CheckLog& log, const Grid& g) {
    for (int d = 0; d <= g.mahonian_n; ++d) {
        // Product of (1 + q + ... + q^(m-1)) for m = 1..d.
        std::vector<long long> prod{1};
        for (int m = 1; m <= d; ++m) {
            std::vector<long long> next(prod.size() + static_cast<std::size_t>(m - 1), 0);
            for (std::size_t k = 0; k < prod.size(); ++k)
                for (int s = 0; s < m; ++s) next[k + static_cast<std::size_t>(s)] += prod[k];
            prod = std::move(next);
        }
        log.record("mahonian-product-formula", mahonian(d) == prod, [&] { return "delta=" + std::to_string(d); });
    }
    for (int d = 0; d <= g.max_delta; ++d) {
        const auto p = expected_spectrum(d);
        long long fact = 1;
        for (int m = 2; m <= d; ++m) fact *= m;
        log.record("spectrum-palindromic", p.is_palindromic(), [&] { return "delta=" + std::to_string(d); });
        log.record("spectrum-at-one-is-factorial", p.at_one() == fact, [&] { return "delta=" + std::to_string(d); });
    }
    log.touch("restriction-spectrum-without-addable");
    log.touch("induction-spectrum-without-removable");
    for_each_charge(g, [&](const Multicharge& a) {
        for (int n = 0; n <= limit(g, g.hub_n); ++n)
            for (const auto& m : multipartitions_of(n, a.r())) {
                const auto rf = restriction_factors(m, a);
                const auto inf = induction_factors(m, a);
                log.record("restriction-factor-count", rf.size() == removable_nodes(m).size(), [&] { return at(m, a); });
                log.record("induction-factor-count", inf.size() == rf.size() + a.r(), [&] { return at(m, a); });
                for (int i = 0; i < a.e; ++i) {
                    const auto wi = [&] { return at(m, a) + " i=" + std::to_string(i); };
                    const auto rem = removable_i_nodes(m, a, i);
                    const auto add = addable_i_nodes(m, a, i);
                    if (add.empty() && static_cast<int>(rem.size()) <= g.max_delta) {
                        try {
                            const auto br = branching_polynomial(m, a, i, g.max_delta);
                            log.record("restriction-spectrum-without-addable",
                                       br.polynomial == expected_spectrum(br.delta), wi);
                        } catch (const VerificationError& ex) {
                            log.record("restriction-spectrum-without-addable", false, [&] { return std::string(ex.what()); });
                        }
                    }
                    if (rem.empty() && static_cast<int>(add.size()) <= g.max_delta) {
                        try {
                            const auto br = induction_polynomial(m, a, i, g.max_delta);
                            log.record("induction-spectrum-without-removable",
                                       br.polynomial == expected_spectrum(br.delta), wi);
                        } catch (const VerificationError& ex) {
                            log.record("induction-spectrum-without-removable", false, [&] { return std::string(ex.what()); });
                        }
                    }
                }
            }
    });
}

// ---------------------------------------------------------------------------

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.ok(); });
}

VerifyReport verify_all(const Caps& caps, const std::function<void(const std::string&)>& progress) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.grid = Grid::from_caps(caps);
    CheckLog log;
    const std::vector<std::pair<const char*, void (*)(CheckLog&, const Grid&)>> suites{
        {"multipartition", check_multipartition_laws}, {"abacus", check_abacus_laws},
        {"weight", check_weight_laws},                 {"s-moves", check_s_move_laws},
        {"core-blocks", check_core_block_laws},        {"kleshchev", check_kleshchev_laws},
        {"branching", check_branching_laws},           {"scopes", check_scopes_laws},
    };
    for (const auto& [name, suite] : suites) {
        if (progress) progress(name);
        suite(log, report.grid);
    }
    report.checks = log.results();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace akb
