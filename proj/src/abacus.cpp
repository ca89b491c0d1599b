#include "akb/abacus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "akb/error.hpp"

namespace akb {

BetaSet::BetaSet(int cutoff, std::vector<int> beads) : cutoff_(cutoff), beads_(std::move(beads)) {
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
    if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
        throw InputError("beta-set lists a bead twice");
    if (!beads_.empty() && beads_.back() < cutoff_) throw InputError("beta-set bead lies below the cutoff");
}

bool BetaSet::contains(int position) const {
    return position < cutoff_ || std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

int BetaSet::largest_on_runner(int runner, int e) const {
    for (int b : beads_)
        if (mod_e(b, e) == runner) return b;
    const int top = cutoff_ - 1;
    return top - mod_e(static_cast<long long>(top) - runner, e);
}

int BetaSet::smallest_gap() const {
    int p = cutoff_;
    // beads_ is descending, so walk it from the back.
    for (auto it = beads_.rbegin(); it != beads_.rend() && *it == p; ++it) ++p;
    return p;
}

BetaSet BetaSet::with_cutoff(int new_cutoff) const {
    if (new_cutoff > smallest_gap()) throw InputError("cutoff above the smallest gap");
    std::vector<int> beads;
    for (int b : beads_)
        if (b >= new_cutoff) beads.push_back(b);
    for (int p = new_cutoff; p < cutoff_; ++p) beads.push_back(p);
    return BetaSet(new_cutoff, std::move(beads));
}

BetaSet BetaSet::normalized() const {
    return with_cutoff(smallest_gap());
}

bool BetaSet::operator==(const BetaSet& other) const {
    const BetaSet a = normalized(), b = other.normalized();
    return a.cutoff_ == b.cutoff_ && a.beads_ == b.beads_;
}

BetaSet beta_set(const Partition& lambda, int charge) {
    const int len = static_cast<int>(lambda.length());
    std::vector<int> beads;
    beads.reserve(lambda.length());
    for (int b = 1; b <= len; ++b) beads.push_back(lambda.part(b) + charge - b);
    return BetaSet(charge - len, std::move(beads));
}

std::pair<Partition, int> partition_of(const BetaSet& set) {
    const BetaSet canon = set.normalized();
    const int charge = canon.charge();
    const auto beads = canon.beads_above_cutoff();
    std::vector<int> parts;
    parts.reserve(beads.size());
    for (std::size_t b = 0; b < beads.size(); ++b) parts.push_back(beads[b] - charge + static_cast<int>(b) + 1);
    return {Partition(std::move(parts)), charge};
}

AbacusDisplay AbacusDisplay::of(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    AbacusDisplay d;
    d.e = a.e;
    for (std::size_t j = 0; j < lambda.r(); ++j) d.components.push_back(beta_set(lambda[j], a.charge[j]));
    return d;
}

Multipartition AbacusDisplay::multipartition() const {
    std::vector<Partition> comps;
    for (const auto& c : components) comps.push_back(partition_of(c).first);
    return Multipartition(std::move(comps));
}

Multicharge AbacusDisplay::multicharge() const {
    std::vector<int> charge;
    for (const auto& c : components) charge.push_back(c.charge());
    return Multicharge(e, std::move(charge));
}

int lowest_level(const AbacusDisplay& display, int runner, std::size_t component) {
    return floor_div(display.components.at(component).largest_on_runner(runner, display.e), display.e);
}

LevelMatrix lowest_levels(const Multipartition& lambda, const Multicharge& a) {
    const AbacusDisplay d = AbacusDisplay::of(lambda, a);
    LevelMatrix levels(lambda.r(), std::vector<int>(static_cast<std::size_t>(a.e)));
    for (std::size_t j = 0; j < lambda.r(); ++j)
        for (int i = 0; i < a.e; ++i) levels[j][static_cast<std::size_t>(i)] = lowest_level(d, i, j);
    return levels;
}

bool is_e_core(const BetaSet& beads, int e) {
    for (int b : beads.beads_above_cutoff())
        if (!beads.contains(b - e)) return false;
    return true;
}

bool is_multicore(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    for (std::size_t j = 0; j < lambda.r(); ++j)
        if (!is_e_core(beta_set(lambda[j], a.charge[j]), a.e)) return false;
    return true;
}

namespace {

LevelMatrix multicore_levels(const Multipartition& m, const Multicharge& a) {
    if (!is_multicore(m, a)) throw InputError("expected a multicore, got " + m.to_string());
    return lowest_levels(m, a);
}

}  // namespace

int gamma(const Multipartition& lambda, const Multicharge& a, int runner, std::size_t j, std::size_t k) {
    const LevelMatrix lv = multicore_levels(lambda, a);
    const auto i = static_cast<std::size_t>(mod_e(runner, a.e));
    return lv.at(j)[i] - lv.at(k)[i];
}

int gamma_diff(const Multipartition& lambda, const Multicharge& a, int i, int l, std::size_t j, std::size_t k) {
    const LevelMatrix lv = multicore_levels(lambda, a);
    const auto ii = static_cast<std::size_t>(mod_e(i, a.e));
    const auto ll = static_cast<std::size_t>(mod_e(l, a.e));
    return (lv.at(j)[ii] - lv.at(k)[ii]) - (lv.at(j)[ll] - lv.at(k)[ll]);
}

MulticoreReduction to_multicore(const Multipartition& lambda, const Multicharge& a) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    const int e = a.e;
    MulticoreReduction out;
    std::vector<Partition> comps;
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const BetaSet set = beta_set(lambda[j], a.charge[j]);
        const int base_level = floor_div(set.cutoff(), e);
        const BetaSet aligned = set.with_cutoff(base_level * e);
        std::vector<int> count(static_cast<std::size_t>(e), 0);
        for (int b : aligned.beads_above_cutoff()) {
            const auto runner = static_cast<std::size_t>(mod_e(b, e));
            out.hooks_removed += floor_div(b, e) - (base_level + count[runner]);
            ++count[runner];
        }
        // Beads on a runner are visited from the lowest up, so the k-th visited
        // bead lands at level base + (n - 1 - k); the sum of slides is unaffected.
        std::vector<int> beads;
        for (int i = 0; i < e; ++i)
            for (int t = 0; t < count[static_cast<std::size_t>(i)]; ++t) beads.push_back((base_level + t) * e + i);
        comps.push_back(partition_of(BetaSet(base_level * e, std::move(beads))).first);
    }
    out.core = Multipartition(std::move(comps));
    return out;
}

Multipartition multicore_from_levels(const LevelMatrix& levels, const Multicharge& a) {
    if (levels.size() != a.r()) throw InputError("level matrix has the wrong number of components");
    const int e = a.e;
    std::vector<Partition> comps;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const auto& row = levels[j];
        if (row.size() != static_cast<std::size_t>(e)) throw InputError("level matrix row must have e entries");
        const int floor_level = *std::min_element(row.begin(), row.end());
        std::vector<int> beads;
        for (int i = 0; i < e; ++i)
            for (int x = floor_level; x <= row[static_cast<std::size_t>(i)]; ++x) beads.push_back(x * e + i);
        BetaSet set(floor_level * e, std::move(beads));
        if (set.charge() != a.charge[j]) throw InputError("runner levels do not match the charge");
        comps.push_back(partition_of(set).first);
    }
    return Multipartition(std::move(comps));
}

Multipartition s_move(const Multipartition& m, const Multicharge& a, int i, int l, std::size_t j, std::size_t k) {
    LevelMatrix lv = multicore_levels(m, a);
    if (j >= m.r() || k >= m.r()) throw InputError("component index out of range");
    const auto ii = static_cast<std::size_t>(mod_e(i, a.e));
    const auto ll = static_cast<std::size_t>(mod_e(l, a.e));
    --lv[j][ii];
    ++lv[j][ll];
    --lv[k][ll];
    ++lv[k][ii];
    return multicore_from_levels(lv, a);
}

int phi_position(int x, int e, int i) noexcept {
    const int runner = mod_e(x, e);
    if (runner == mod_e(i - 1, e)) return x + 1;
    if (runner == mod_e(i, e)) return x - 1;
    return x;
}

BetaSet phi(const BetaSet& beads, int e, int i) {
    // The region below the cutoff must not split a pair (i-1, i).
    const int cutoff = mod_e(beads.cutoff(), e) == mod_e(i, e) ? beads.cutoff() - 1 : beads.cutoff();
    const BetaSet aligned = beads.with_cutoff(cutoff);
    std::vector<int> mapped;
    for (int b : aligned.beads_above_cutoff()) mapped.push_back(phi_position(b, e, i));
    return BetaSet(cutoff, std::move(mapped)).normalized();
}

Multipartition phi(const Multipartition& lambda, const Multicharge& a, int i) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    std::vector<Partition> comps;
    for (std::size_t j = 0; j < lambda.r(); ++j)
        comps.push_back(partition_of(phi(beta_set(lambda[j], a.charge[j]), a.e, i)).first);
    return Multipartition(std::move(comps));
}

bool has_forbidden_config(const Multipartition& lambda, const Multicharge& a, int i) {
    if (lambda.r() != a.r()) throw InputError("multicharge length differs from r");
    const int e = a.e;
    const int left = mod_e(i - 1, e);
    const bool wrap = mod_e(i, e) == 0;
    for (std::size_t j = 0; j < lambda.r(); ++j) {
        const BetaSet set = beta_set(lambda[j], a.charge[j]);
        std::vector<int> candidates(set.beads_above_cutoff().begin(), set.beads_above_cutoff().end());
        candidates.push_back(set.cutoff() - 1);
        for (int b : candidates) {
            if (mod_e(b, e) != left || set.contains(b + 1)) continue;
            if (wrap && set.contains(b + e + 1)) continue;
            return true;
        }
    }
    return false;
}

LevelWindow default_window(const AbacusDisplay& display) {
    LevelWindow w{0, 0};
    bool first = true;
    for (const auto& c : display.components) {
        const int top = floor_div(c.smallest_gap(), display.e) - 1;
        const auto beads = c.beads_above_cutoff();
        const int last_bead = beads.empty() ? c.cutoff() - 1 : beads.front();
        const int bottom = floor_div(last_bead, display.e) + 1;
        w.top = first ? top : std::min(w.top, top);
        w.bottom = first ? bottom : std::max(w.bottom, bottom);
        first = false;
    }
    return w;
}

std::string render(const AbacusDisplay& display, std::optional<LevelWindow> window) {
    const int e = display.e;
    const LevelWindow w = window.value_or(default_window(display));
    if (w.top > w.bottom) throw InputError("empty level window");
    std::ostringstream os;
    os << "e=" << e << '\n';
    for (std::size_t j = 0; j < display.r(); ++j) {
        const BetaSet& c = display.components[j];
        if (floor_div(c.smallest_gap(), e) < w.top)
            throw InputError("level window starts below a gap of component " + std::to_string(j + 1));
        const auto beads = c.beads_above_cutoff();
        const int last_bead = beads.empty() ? c.cutoff() - 1 : beads.front();
        if (floor_div(last_bead, e) > w.bottom)
            throw InputError("level window ends above a bead of component " + std::to_string(j + 1));
        os << "component " << j + 1 << " charge " << c.charge() << '\n';
        os << "level";
        for (int i = 0; i < e; ++i) os << ' ' << i;
        os << '\n';
        for (int x = w.top; x <= w.bottom; ++x) {
            std::string label = std::to_string(x);
            os << std::string(label.size() < 5 ? 5 - label.size() : 0, ' ') << label;
            for (int i = 0; i < e; ++i) {
                os << ' ' << (c.contains(x * e + i) ? 'o' : '.');
                // Runner labels wider than one glyph keep the columns aligned.
                const std::size_t pad = std::to_string(i).size() - 1;
                os << std::string(pad, ' ');
            }
            os << '\n';
        }
    }
    return os.str();
}

AbacusDisplay parse_rendered(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [](const std::string& what) -> AbacusDisplay { throw InputError("bad abacus picture: " + what); };
    if (!std::getline(in, line) || line.rfind("e=", 0) != 0) return fail("missing e= line");
    AbacusDisplay d;
    d.e = std::stoi(line.substr(2));
    if (d.e < 2) return fail("e must be at least 2");
    std::getline(in, line);
    while (!line.empty()) {
        std::istringstream header(line);
        std::string word;
        std::size_t index = 0;
        int charge = 0;
        header >> word >> index >> word >> charge;
        if (!header || index != d.components.size() + 1) return fail("bad component header '" + line + "'");
        if (!std::getline(in, line) || line.rfind("level", 0) != 0) return fail("missing runner header");
        int top = 0;
        bool have_top = false;
        std::vector<int> beads;
        while (std::getline(in, line) && !line.empty() && line.rfind("component", 0) != 0) {
            std::istringstream row(line);
            int level = 0;
            row >> level;
            if (!row) return fail("bad row '" + line + "'");
            if (!have_top) top = level;
            have_top = true;
            for (int i = 0; i < d.e; ++i) {
                char glyph = 0;
                row >> glyph;
                if (glyph == 'o') beads.push_back(level * d.e + i);
                else if (glyph != '.') return fail("bad glyph in row '" + line + "'");
            }
        }
        if (!have_top) return fail("component without rows");
        BetaSet set(top * d.e, std::move(beads));
        if (set.charge() != charge) return fail("charge does not match the drawn beads");
        d.components.push_back(set.normalized());
        if (in.eof()) break;
    }
    if (d.components.empty()) return fail("no components");
    return d;
}

}  // namespace akb
