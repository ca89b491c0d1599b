#pragma once
// Independent reference computations used by the unit tests. None of these
// call into the library beyond its plain data types.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "akb/partition.hpp"

namespace oracle {

/// Number of partitions of n via Euler's pentagonal recurrence.
inline long long partition_count(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long long sign = (k % 2) ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    return p[static_cast<std::size_t>(n)];
}

/// Coefficient of q^n in prod (1 - q^k)^(-r).
inline long long multipartition_count(int n, int r) {
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int t = 0; t < r; ++t) {
        std::vector<long long> next(c.size(), 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[static_cast<std::size_t>(a + b)] += c[static_cast<std::size_t>(a)] * partition_count(b);
        c = next;
    }
    return c[static_cast<std::size_t>(n)];
}

/// Residue of every cell, computed from the diagram directly.
inline std::vector<int> residues(const std::vector<std::vector<int>>& comps, const std::vector<int>& charge, int e) {
    std::vector<int> out;
    for (std::size_t j = 0; j < comps.size(); ++j)
        for (std::size_t b = 0; b < comps[j].size(); ++b)
            for (int c = 0; c < comps[j][b]; ++c) out.push_back((((charge[j] + c - static_cast<int>(b)) % e) + e) % e);
    std::sort(out.begin(), out.end());
    return out;
}

inline int hook(const std::vector<int>& parts, int b, int c) {  // 0-based row/col
    int leg = 0;
    while (static_cast<std::size_t>(b + leg + 1) < parts.size() && parts[static_cast<std::size_t>(b + leg + 1)] > c) ++leg;
    return parts[static_cast<std::size_t>(b)] - c - 1 + leg + 1;
}

/// Classical e-weight of a partition: the number of hooks of length divisible by e.
inline int e_weight(const std::vector<int>& parts, int e) {
    int w = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
        for (int c = 0; c < parts[b]; ++c)
            if (hook(parts, static_cast<int>(b), c) % e == 0) ++w;
    return w;
}

inline bool e_core(const std::vector<int>& parts, int e) { return e_weight(parts, e) == 0; }

inline bool e_restricted(const std::vector<int>& parts, int e) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const int next = b + 1 < parts.size() ? parts[b + 1] : 0;
        if (parts[b] - next >= e) return false;
    }
    return true;
}

/// Inversion-number distribution by the product (1)(1+q)(1+q+q^2)...
inline std::vector<long long> mahonian(int n) {
    std::vector<long long> prod{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<long long> next(prod.size() + static_cast<std::size_t>(m - 1), 0);
        for (std::size_t k = 0; k < prod.size(); ++k)
            for (int s = 0; s < m; ++s) next[k + static_cast<std::size_t>(s)] += prod[k];
        prod = next;
    }
    return prod;
}

/// Finite window of a beta set: {lambda_b + a - b : b = 1..len + extra}.
inline std::set<int> beta_window(const std::vector<int>& parts, int a, int extra) {
    std::set<int> out;
    const int len = static_cast<int>(parts.size()) + extra;
    for (int b = 1; b <= len; ++b) {
        const int part = static_cast<std::size_t>(b) <= parts.size() ? parts[static_cast<std::size_t>(b - 1)] : 0;
        out.insert(part + a - b);
    }
    return out;
}

}  // namespace oracle
