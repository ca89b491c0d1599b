#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace akb {

/// Integer partition stored as its positive parts in non-increasing order.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; anything else out of order is an InputError.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    /// Part b (1-based); zero beyond the last row.
    int part(int b) const noexcept {
        return b >= 1 && static_cast<std::size_t>(b) <= parts_.size() ? parts_[b - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A node (b, c, j): row and column are 1-based, component is 0-based.
struct Node {
    int row = 1;
    int col = 1;
    std::size_t comp = 0;

    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Node& x);

/// Ordered r-tuple of partitions, r >= 1.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);
    Multipartition(std::initializer_list<Partition> components)
        : Multipartition(std::vector<Partition>(components)) {}

    /// The empty multipartition with r components.
    static Multipartition empty(std::size_t r);

    std::size_t r() const noexcept { return components_.size(); }
    int size() const noexcept { return size_; }
    const Partition& operator[](std::size_t j) const { return components_.at(j); }
    std::span<const Partition> components() const noexcept { return components_; }

    /// Copy with `x` added (must be addable) or removed (must be removable).
    Multipartition with_node(const Node& x) const;
    Multipartition without_node(const Node& x) const;

    bool operator==(const Multipartition&) const = default;

    std::string to_string() const;

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Multipartition& m);

/// Multicharge (a_1, ..., a_r) together with the quantum characteristic e.
struct Multicharge {
    int e = 2;
    std::vector<int> charge;

    Multicharge() = default;
    Multicharge(int e_, std::vector<int> charge_);

    std::size_t r() const noexcept { return charge.size(); }
    bool operator==(const Multicharge&) const = default;
};

/// Residue class of x modulo e in {0, ..., e-1}.
constexpr int mod_e(long long x, int e) noexcept {
    long long m = x % e;
    return static_cast<int>(m < 0 ? m + e : m);
}

/// Floor division, for levels of negative positions.
constexpr int floor_div(int x, int e) noexcept {
    return x >= 0 ? x / e : -((-x + e - 1) / e);
}

std::vector<Node> nodes(const Multipartition& lambda);
std::vector<Node> removable_nodes(const Multipartition& lambda);
std::vector<Node> addable_nodes(const Multipartition& lambda);

int residue(const Node& x, const Multicharge& a);

/// Residue multiset as a sorted vector.
std::vector<int> residue_multiset(const Multipartition& lambda, const Multicharge& a);

/// Dominance order; InputError unless |lambda| = |mu| and the r agree.
bool dominates(const Multipartition& lambda, const Multipartition& mu);

/// The lexicographic total order: first differing component, then first differing part.
std::strong_ordering lex_cmp(const Multipartition& lambda, const Multipartition& mu);

/// (b,c,j) is above (b',c',j') iff j < j' or (j = j' and b < b').
bool node_above(const Node& x, const Node& y) noexcept;

/// All partitions of n, in decreasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);

/// All r-multipartitions of n (component sizes descending, then each component
/// in decreasing lexicographic order).
std::vector<Multipartition> multipartitions_of(int n, std::size_t r);

/// Parses "(4,3,1)", "(4^2,2,1)", "()" or "-" for the empty partition, and
/// tuples of those such as "((1^2),(2),-)". InputError on malformed text.
Partition parse_partition(std::string_view text);
Multipartition parse_multipartition(std::string_view text);

}  // namespace akb
