#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "akb/partition.hpp"

namespace akb {

/// A set of beta-numbers: every integer below `cutoff` is a bead, and the
/// beads at or above the cutoff are listed explicitly. The charge is the
/// number of explicit beads plus the cutoff.
class BetaSet {
public:
    BetaSet() = default;
    /// InputError if a bead lies below the cutoff or repeats.
    BetaSet(int cutoff, std::vector<int> beads);

    int cutoff() const noexcept { return cutoff_; }
    int charge() const noexcept { return static_cast<int>(beads_.size()) + cutoff_; }
    /// Explicit beads, descending.
    std::span<const int> beads_above_cutoff() const noexcept { return beads_; }

    bool contains(int position) const;
    /// Largest bead congruent to `runner` modulo e.
    int largest_on_runner(int runner, int e) const;
    /// Smallest position that is not a bead.
    int smallest_gap() const;
    /// Same set with the cutoff moved to `new_cutoff` (must not exceed smallest_gap()).
    BetaSet with_cutoff(int new_cutoff) const;
    /// Canonical form: cutoff equal to the smallest gap.
    BetaSet normalized() const;

    bool operator==(const BetaSet& other) const;

private:
    int cutoff_ = 0;
    std::vector<int> beads_;
};

/// {lambda_b + a - b : b >= 1} in canonical form.
BetaSet beta_set(const Partition& lambda, int charge);

/// Inverse of beta_set: the partition and its charge.
std::pair<Partition, int> partition_of(const BetaSet& beads);

/// r bead sets on e runners; position p sits on runner p mod e at level floor(p / e).
struct AbacusDisplay {
    int e = 2;
    std::vector<BetaSet> components;

    static AbacusDisplay of(const Multipartition& lambda, const Multicharge& a);

    Multipartition multipartition() const;
    Multicharge multicharge() const;
    std::size_t r() const noexcept { return components.size(); }

    bool operator==(const AbacusDisplay&) const = default;
};

/// Level of the lowest bead on runner i of component j.
int lowest_level(const AbacusDisplay& display, int runner, std::size_t component);

/// levels[j][i] = lowest_level(display, i, j).
using LevelMatrix = std::vector<std::vector<int>>;
LevelMatrix lowest_levels(const Multipartition& lambda, const Multicharge& a);

/// Every bead has a bead immediately above it.
bool is_e_core(const BetaSet& beads, int e);
bool is_multicore(const Multipartition& lambda, const Multicharge& a);

/// gamma_i^{jk} = l_{ij} - l_{ik}. InputError unless lambda is a multicore.
int gamma(const Multipartition& lambda, const Multicharge& a, int runner, std::size_t j, std::size_t k);
/// gamma_{il}^{jk} = gamma_i^{jk} - gamma_l^{jk}.
int gamma_diff(const Multipartition& lambda, const Multicharge& a, int i, int l, std::size_t j, std::size_t k);

struct MulticoreReduction {
    Multipartition core;
    int hooks_removed = 0;
};

/// Slides every bead up as far as it goes; each single-step slide removes one e-rim hook.
MulticoreReduction to_multicore(const Multipartition& lambda, const Multicharge& a);

/// The multicore whose runner levels are `levels` (levels[j][i]); InputError if
/// the bead count of some component disagrees with its charge.
Multipartition multicore_from_levels(const LevelMatrix& levels, const Multicharge& a);

/// s_{il}^{jk}: on component j the lowest bead of runner i moves to runner l,
/// and on component k the lowest bead of runner l moves to runner i.
Multipartition s_move(const Multipartition& m, const Multicharge& a, int i, int l, std::size_t j, std::size_t k);

/// The integer map phi_i: x = i-1 -> x+1, x = i -> x-1 (mod e), identity otherwise.
int phi_position(int x, int e, int i) noexcept;
BetaSet phi(const BetaSet& beads, int e, int i);
/// Phi_i applied to every component.
Multipartition phi(const Multipartition& lambda, const Multicharge& a, int i);

/// Bead on runner i-1 with a gap immediately to its right on runner i. For
/// i = 0 the gap at b+1 must be accompanied by a gap at b+e+1.
bool has_forbidden_config(const Multipartition& lambda, const Multicharge& a, int i);

/// Inclusive range of levels drawn by `render`.
struct LevelWindow {
    int top = 0;
    int bottom = 0;
};

/// Smallest window that shows one full row above and one empty row below the
/// irregular part of every component.
LevelWindow default_window(const AbacusDisplay& display);

/// Bead/gap picture, one block per component. InputError if `window` hides a
/// gap above its top row or a bead below its bottom row.
std::string render(const AbacusDisplay& display, std::optional<LevelWindow> window = std::nullopt);

/// Inverse of render.
AbacusDisplay parse_rendered(std::string_view text);

}  // namespace akb
