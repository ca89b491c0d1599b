#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "akb/partition.hpp"

namespace akb {

/// Finite sum of c_d v^d with non-negative integer c_d; zero terms are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(int degree, long long coefficient = 1);

    void add(int degree, long long coefficient);
    long long coefficient(int degree) const;
    const std::map<int, long long>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    long long at_one() const;
    /// Symmetric under v <-> 1/v.
    bool is_palindromic() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    bool operator==(const LaurentPolynomial&) const = default;

    /// e.g. "v^3 + 2v + 2v^-1 + v^-3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<int, long long> terms_;
};

/// #addable i-nodes below A minus #removable i-nodes below A. HypothesisError
/// unless A is a removable node of residue i.
int n_below(const Multipartition& lambda, const Multicharge& a, const Node& A, int i);
/// #addable i-nodes above B minus #removable i-nodes above B. HypothesisError
/// unless B is an addable node of residue i.
int n_above(const Multipartition& lambda, const Multicharge& a, const Node& B, int i);

struct BranchFactor {
    Node node;
    Multipartition shape;
    int degree = 0;
};

/// One factor per removable node, lowest node first, shifted by n_below at its residue.
std::vector<BranchFactor> restriction_factors(const Multipartition& lambda, const Multicharge& a);
/// One factor per addable node, highest node first, shifted by n_above at its residue.
std::vector<BranchFactor> induction_factors(const Multipartition& lambda, const Multicharge& a);

/// Removable (or addable) i-nodes ordered from the lowest to the highest.
std::vector<Node> removable_i_nodes(const Multipartition& lambda, const Multicharge& a, int i);
std::vector<Node> addable_i_nodes(const Multipartition& lambda, const Multicharge& a, int i);

/// Number of permutations of n letters with k inversions, k = 0..n(n-1)/2.
/// InputError above max_n.
std::vector<long long> mahonian(int n, int max_n = 10);

/// |{(p, q) : p < q, sigma(p) > sigma(q)}|.
int inversions(const std::vector<int>& sigma);

/// Total degree when the removable i-nodes A_1 < ... < A_d (lowest first) are
/// removed in the order A_{sigma(0)}, A_{sigma(1)}, ...; sigma is 0-based.
/// Each step contributes n_below on the current multipartition.
int order_degree(const Multipartition& lambda, const Multicharge& a, int i, const std::vector<int>& sigma);

struct BranchingResult {
    int delta = 0;
    int top_degree = 0;          // delta (delta - 1) / 2
    Multipartition target;       // common end point of every order
    LaurentPolynomial polynomial;
};

/// Removes all removable i-nodes in every order and sums v^degree. Requires no
/// addable i-nodes (HypothesisError otherwise) and delta <= max_delta
/// (InputError). Throws VerificationError if the orders disagree on their end
/// point, if it differs from phi, or if some degree is not l - 2 inv(sigma).
BranchingResult branching_polynomial(const Multipartition& lambda, const Multicharge& a, int i, int max_delta = 6);

/// The mirror statement: add all addable i-nodes in every order, degrees from
/// n_above. Requires no removable i-nodes.
BranchingResult induction_polynomial(const Multipartition& lambda, const Multicharge& a, int i, int max_delta = 6);

/// sum_k |S_delta^k| v^(l - 2k).
LaurentPolynomial expected_spectrum(int delta);

}  // namespace akb
