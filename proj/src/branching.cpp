#include "akb/branching.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "akb/abacus.hpp"
#include "akb/error.hpp"

namespace akb {

LaurentPolynomial LaurentPolynomial::monomial(int degree, long long coefficient) {
    LaurentPolynomial p;
    p.add(degree, coefficient);
    return p;
}

void LaurentPolynomial::add(int degree, long long coefficient) {
    if (coefficient == 0) return;
    const long long c = (terms_[degree] += coefficient);
    if (c < 0) throw InputError("negative coefficient in a graded multiplicity");
    if (c == 0) terms_.erase(degree);
}

long long LaurentPolynomial::coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentPolynomial::at_one() const {
    long long s = 0;
    for (const auto& [d, c] : terms_) s += c;
    return s;
}

bool LaurentPolynomial::is_palindromic() const {
    for (const auto& [d, c] : terms_)
        if (coefficient(-d) != c) return false;
    return true;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [d, c] : other.terms_) add(d, c);
    return *this;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [d, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'v';
        if (d != 1) os << '^' << d;
    }
    return os.str();
}

namespace {

// Lowest first: larger component, then larger row.
void sort_lowest_first(std::vector<Node>& xs) {
    std::sort(xs.begin(), xs.end(), [](const Node& x, const Node& y) { return node_above(y, x); });
}

std::vector<Node> with_residue(std::vector<Node> xs, const Multicharge& a, int i) {
    const int res = mod_e(i, a.e);
    std::erase_if(xs, [&](const Node& x) { return residue(x, a) != res; });
    sort_lowest_first(xs);
    return xs;
}

int count_if_of(const std::vector<Node>& xs, auto pred) {
    return static_cast<int>(std::count_if(xs.begin(), xs.end(), pred));
}

void check_r(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
}

}  // namespace

std::vector<Node> removable_i_nodes(const Multipartition& lambda, const Multicharge& a, int i) {
    check_r(lambda, a);
    return with_residue(removable_nodes(lambda), a, i);
}

std::vector<Node> addable_i_nodes(const Multipartition& lambda, const Multicharge& a, int i) {
    check_r(lambda, a);
    return with_residue(addable_nodes(lambda), a, i);
}

int n_below(const Multipartition& lambda, const Multicharge& a, const Node& A, int i) {
    const auto rem = removable_i_nodes(lambda, a, i);
    if (std::find(rem.begin(), rem.end(), A) == rem.end())
        throw HypothesisError("node is not a removable node of residue " + std::to_string(mod_e(i, a.e)));
    const auto add = addable_i_nodes(lambda, a, i);
    auto below = [&](const Node& x) { return node_above(A, x); };
    return count_if_of(add, below) - count_if_of(rem, below);
}

int n_above(const Multipartition& lambda, const Multicharge& a, const Node& B, int i) {
    const auto add = addable_i_nodes(lambda, a, i);
    if (std::find(add.begin(), add.end(), B) == add.end())
        throw HypothesisError("node is not an addable node of residue " + std::to_string(mod_e(i, a.e)));
    const auto rem = removable_i_nodes(lambda, a, i);
    auto above = [&](const Node& x) { return node_above(x, B); };
    return count_if_of(add, above) - count_if_of(rem, above);
}

std::vector<BranchFactor> restriction_factors(const Multipartition& lambda, const Multicharge& a) {
    check_r(lambda, a);
    auto rem = removable_nodes(lambda);
    sort_lowest_first(rem);
    std::vector<BranchFactor> out;
    for (const Node& x : rem) out.push_back({x, lambda.without_node(x), n_below(lambda, a, x, residue(x, a))});
    return out;
}

std::vector<BranchFactor> induction_factors(const Multipartition& lambda, const Multicharge& a) {
    check_r(lambda, a);
    auto add = addable_nodes(lambda);
    sort_lowest_first(add);
    std::reverse(add.begin(), add.end());
    std::vector<BranchFactor> out;
    for (const Node& x : add) out.push_back({x, lambda.with_node(x), n_above(lambda, a, x, residue(x, a))});
    return out;
}

std::vector<long long> mahonian(int n, int max_n) {
    if (n < 0) throw InputError("mahonian needs n >= 0");
    if (n > max_n) throw InputError("mahonian: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
    std::vector<long long> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        ++counts[static_cast<std::size_t>(inversions(sigma))];
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return counts;
}

int inversions(const std::vector<int>& sigma) {
    int inv = 0;
    for (std::size_t p = 0; p < sigma.size(); ++p)
        for (std::size_t q = p + 1; q < sigma.size(); ++q)
            if (sigma[p] > sigma[q]) ++inv;
    return inv;
}

namespace {

void check_permutation(const std::vector<int>& sigma, std::size_t n) {
    if (sigma.size() != n) throw InputError("order length differs from the number of nodes");
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t p = 0; p < n; ++p)
        if (sorted[p] != static_cast<int>(p)) throw InputError("order is not a permutation");
}

struct Walk {
    Multipartition end;
    int degree = 0;
};

Walk remove_in_order(const Multipartition& lambda, const Multicharge& a, int i, const std::vector<Node>& nodes,
                     const std::vector<int>& sigma) {
    Walk w{lambda, 0};
    for (int s : sigma) {
        const Node& x = nodes[static_cast<std::size_t>(s)];
        w.degree += n_below(w.end, a, x, i);
        w.end = w.end.without_node(x);
    }
    return w;
}

Walk add_in_order(const Multipartition& lambda, const Multicharge& a, int i, const std::vector<Node>& nodes,
                  const std::vector<int>& sigma) {
    Walk w{lambda, 0};
    for (int s : sigma) {
        const Node& x = nodes[static_cast<std::size_t>(s)];
        w.degree += n_above(w.end, a, x, i);
        w.end = w.end.with_node(x);
    }
    return w;
}

template <class Step>
BranchingResult all_orders(const Multipartition& lambda, const Multicharge& a, int i, const std::vector<Node>& nodes,
                           int max_delta, Step step) {
    const int delta = static_cast<int>(nodes.size());
    if (delta > max_delta)
        throw InputError("delta = " + std::to_string(delta) + " exceeds the cap " + std::to_string(max_delta));
    BranchingResult out;
    out.delta = delta;
    out.top_degree = delta * (delta - 1) / 2;
    std::vector<int> sigma(nodes.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    bool first = true;
    do {
        Walk w = step(lambda, a, i, nodes, sigma);
        if (first) {
            out.target = w.end;
            first = false;
        } else if (!(w.end == out.target)) {
            throw VerificationError("removal-orders-agree", "orders of " + lambda.to_string() + " end at " +
                                                                out.target.to_string() + " and " + w.end.to_string());
        }
        const int expected = out.top_degree - 2 * inversions(sigma);
        if (w.degree != expected)
            throw VerificationError("branching-degree-spectrum",
                                    lambda.to_string() + ": an order with " + std::to_string(inversions(sigma)) +
                                        " inversions has degree " + std::to_string(w.degree) + ", expected " +
                                        std::to_string(expected));
        out.polynomial.add(w.degree, 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (!(out.target == phi(lambda, a, i)))
        throw VerificationError("phi-target", "removing every i-node of " + lambda.to_string() + " gives " +
                                                  out.target.to_string() + ", not its phi image");
    return out;
}

}  // namespace

int order_degree(const Multipartition& lambda, const Multicharge& a, int i, const std::vector<int>& sigma) {
    const auto nodes = removable_i_nodes(lambda, a, i);
    check_permutation(sigma, nodes.size());
    return remove_in_order(lambda, a, i, nodes, sigma).degree;
}

BranchingResult branching_polynomial(const Multipartition& lambda, const Multicharge& a, int i, int max_delta) {
    if (!addable_i_nodes(lambda, a, i).empty())
        throw HypothesisError(lambda.to_string() + " has addable nodes of residue " + std::to_string(mod_e(i, a.e)));
    return all_orders(lambda, a, i, removable_i_nodes(lambda, a, i), max_delta, remove_in_order);
}

BranchingResult induction_polynomial(const Multipartition& lambda, const Multicharge& a, int i, int max_delta) {
    if (!removable_i_nodes(lambda, a, i).empty())
        throw HypothesisError(lambda.to_string() + " has removable nodes of residue " + std::to_string(mod_e(i, a.e)));
    return all_orders(lambda, a, i, addable_i_nodes(lambda, a, i), max_delta, add_in_order);
}

LaurentPolynomial expected_spectrum(int delta) {
    const auto counts = mahonian(delta);
    const int top = delta * (delta - 1) / 2;
    LaurentPolynomial p;
    for (std::size_t k = 0; k < counts.size(); ++k) p.add(top - 2 * static_cast<int>(k), counts[k]);
    return p;
}

}  // namespace akb
