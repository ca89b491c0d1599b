#include "akb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "akb/error.hpp"

namespace akb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t b = 0; b < parts_.size(); ++b) {
        if (parts_[b] <= 0) throw InputError("partition parts must be positive");
        if (b > 0 && parts_[b] > parts_[b - 1]) throw InputError("partition parts must be non-increasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t b = 0; b < p.parts().size(); ++b) {
        if (b) os << ',';
        os << p.parts()[b];
    }
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Node& x) {
    return os << '(' << x.row << ',' << x.col << ',' << x.comp + 1 << ')';
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("a multipartition needs at least one component");
    for (const auto& p : components_) size_ += p.size();
}

Multipartition Multipartition::empty(std::size_t r) {
    return Multipartition(std::vector<Partition>(r));
}

Multipartition Multipartition::with_node(const Node& x) const {
    if (x.comp >= r()) throw InputError("node component out of range");
    const Partition& p = components_[x.comp];
    if (x.row < 1 || x.col != p.part(x.row) + 1 || (x.row > 1 && p.part(x.row - 1) < x.col) ||
        static_cast<std::size_t>(x.row) > p.length() + 1)
        throw InputError("node is not addable");
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    if (static_cast<std::size_t>(x.row) > parts.size()) parts.push_back(1);
    else ++parts[x.row - 1];
    auto comps = components_;
    comps[x.comp] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::without_node(const Node& x) const {
    if (x.comp >= r()) throw InputError("node component out of range");
    const Partition& p = components_[x.comp];
    if (x.row < 1 || x.col != p.part(x.row) || x.col == 0 || p.part(x.row + 1) >= x.col)
        throw InputError("node is not removable");
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    --parts[x.row - 1];
    auto comps = components_;
    comps[x.comp] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

std::string Multipartition::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multipartition& m) {
    os << '(';
    for (std::size_t j = 0; j < m.r(); ++j) {
        if (j) os << ',';
        os << m[j];
    }
    return os << ')';
}

Multicharge::Multicharge(int e_, std::vector<int> charge_) : e(e_), charge(std::move(charge_)) {
    if (e < 2) throw InputError("e must be at least 2");
    if (charge.empty()) throw InputError("multicharge needs at least one entry");
}

std::vector<Node> nodes(const Multipartition& lambda) {
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const auto parts = lambda[j].parts();
        for (std::size_t b = 0; b < parts.size(); ++b)
            for (int c = 1; c <= parts[b]; ++c) out.push_back({static_cast<int>(b) + 1, c, j});
    }
    return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
    std::vector<Node> out;
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const Partition& p = lambda[j];
        for (int b = 1; b <= static_cast<int>(p.length()); ++b)
            if (p.part(b) > p.part(b + 1)) out.push_back({b, p.part(b), j});
    }
    return out;
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
    std::vector<Node> out;
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const Partition& p = lambda[j];
        for (int b = 1; b <= static_cast<int>(p.length()) + 1; ++b)
            if (b == 1 || p.part(b - 1) > p.part(b)) out.push_back({b, p.part(b) + 1, j});
    }
    return out;
}

int residue(const Node& x, const Multicharge& a) {
    return mod_e(static_cast<long long>(a.charge.at(x.comp)) + x.col - x.row, a.e);
}

std::vector<int> residue_multiset(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    std::vector<int> out;
    for (const Node& x : nodes(lambda)) out.push_back(residue(x, a));
    std::sort(out.begin(), out.end());
    return out;
}

bool dominates(const Multipartition& lambda, const Multipartition& mu) {
    if (lambda.r() != mu.r()) throw InputError("dominance needs equal r");
    if (lambda.size() != mu.size()) throw InputError("dominance is only defined for equal sizes");
    int before_l = 0, before_m = 0;
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const int rows = static_cast<int>(std::max(lambda[j].length(), mu[j].length()));
        int sum_l = before_l, sum_m = before_m;
        for (int b = 1; b <= rows; ++b) {
            sum_l += lambda[j].part(b);
            sum_m += mu[j].part(b);
            if (sum_l < sum_m) return false;
        }
        if (sum_l < sum_m) return false;
        before_l += lambda[j].size();
        before_m += mu[j].size();
    }
    return true;
}

std::strong_ordering lex_cmp(const Multipartition& lambda, const Multipartition& mu) {
    if (lambda.r() != mu.r()) throw InputError("lexicographic comparison needs equal r");
    for (std::size_t j = 0; j < lambda.r(); ++j)
        if (auto c = lambda[j] <=> mu[j]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool node_above(const Node& x, const Node& y) noexcept {
    return x.comp < y.comp || (x.comp == y.comp && x.row < y.row);
}

namespace {

void build_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        build_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    if (n < 0) throw InputError("partitions of a negative integer");
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> prefix;
        build_partitions(n, n, prefix, out);
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

namespace {

void build_multipartitions(int remaining, std::size_t j, std::vector<Partition>& prefix,
                           std::vector<Multipartition>& out) {
    const std::size_t r = prefix.size();
    if (j + 1 == r) {
        for (const auto& p : partitions_of(remaining)) {
            prefix[j] = p;
            out.emplace_back(prefix);
        }
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        for (const auto& p : partitions_of(k)) {
            prefix[j] = p;
            build_multipartitions(remaining - k, j + 1, prefix, out);
        }
    }
}

}  // namespace

std::vector<Multipartition> multipartitions_of(int n, std::size_t r) {
    if (r == 0) throw InputError("r must be positive");
    if (n < 0) return {};
    std::vector<Multipartition> out;
    std::vector<Partition> prefix(r);
    build_multipartitions(n, 0, prefix, out);
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc()) fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse '" + std::string(text_) + "': " + what);
    }

    Partition partition() {
        if (accept('-')) return Partition{};
        expect('(');
        std::vector<int> parts;
        if (!accept(')')) {
            do {
                const int value = integer();
                int times = 1;
                if (accept('^')) times = integer();
                if (times < 0) fail("negative multiplicity");
                parts.insert(parts.end(), static_cast<std::size_t>(times), value);
            } while (accept(','));
            expect(')');
        }
        return Partition(std::move(parts));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
    Cursor in(text);
    if (in.peek() != '(' && in.peek() != '-') {
        // bare "4,3,1"
        std::string wrapped = "(" + std::string(text) + ")";
        return parse_partition(wrapped);
    }
    Partition p = in.partition();
    if (!in.done()) in.fail("trailing characters");
    return p;
}

Multipartition parse_multipartition(std::string_view text) {
    Cursor in(text);
    in.expect('(');
    std::vector<Partition> comps;
    do {
        comps.push_back(in.partition());
    } while (in.accept(','));
    in.expect(')');
    if (!in.done()) in.fail("trailing characters");
    return Multipartition(std::move(comps));
}

}  // namespace akb
