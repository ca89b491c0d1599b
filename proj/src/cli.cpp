#include "akb/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "akb/abacus.hpp"
#include "akb/branching.hpp"
#include "akb/error.hpp"
#include "akb/json_io.hpp"
#include "akb/scopes.hpp"
#include "akb/verify.hpp"

namespace akb {

Caps parse_caps(std::string_view text, Caps caps) {
    std::string s(text);
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("cap '" + item + "' is not of the form key=value");
        std::string key = item.substr(0, eq);
        std::erase_if(key, [](char c) { return c == ' ' || c == '\t'; });
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (item.substr(eq + 1 + used).find_first_not_of(" \t") != std::string::npos) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("cap '" + item + "' has a non-integer value");
        }
        if (value < 0 || (value == 0 && key != "n" && key != "max_n" && key != "delta" && key != "max_delta"))
            throw InputError("cap '" + item + "' is out of range");
        if (key == "n" || key == "max_n") caps.max_n = value;
        else if (key == "r" || key == "max_r") caps.max_r = static_cast<std::size_t>(value);
        else if (key == "e" || key == "max_e") {
            if (value < 2) throw InputError("cap e must be at least 2");
            caps.max_e = value;
        } else if (key == "delta" || key == "max_delta" || key == "orders" || key == "max_orders")
            caps.max_delta = value;
        else
            throw InputError("unknown cap '" + key + "'");
    }
    return caps;
}

namespace {

struct Options {
    std::optional<int> n;
    std::optional<int> r;
    std::optional<int> e;
    std::optional<int> i;
    std::string charge;
    std::string lambda;
    std::string format = "text";
    std::string out;
    std::string caps;
};

enum Flag : unsigned {
    kN = 1,
    kR = 2,
    kE = 4,
    kCharge = 8,
    kI = 16,
    kLambda = 32,
    kCaps = 64,
};

void add_flags(CLI::App* sub, Options& o, unsigned flags) {
    if (flags & kLambda)
        sub->add_option("--lambda", o.lambda,
                        "multipartition: JSON {\"components\":[[4,3,1],[2]]}, [[4,3,1],[2]], ((4,3,1),(2)) or @file");
    if (flags & kE) sub->add_option("--e", o.e, "quantum characteristic e >= 2");
    if (flags & kCharge) sub->add_option("--charge", o.charge, "multicharge a_1,...,a_r (default all zero)");
    if (flags & kR) sub->add_option("--r", o.r, "number of components");
    if (flags & kN) sub->add_option("--n", o.n, "size");
    if (flags & kI) sub->add_option("--i", o.i, "residue i");
    if (flags & kCaps) sub->add_option("--caps", o.caps, "cap overrides, e.g. n=8,r=3,e=5,delta=6");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write the document to this file instead of stdout");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.substr(used).find_first_not_of(" \t") != std::string::npos) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("'" + text + "' is not a comma-separated list of integers");
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

class Context {
public:
    explicit Context(const Options& o) : o_(o) {
        if (const char* env = std::getenv(kCapsEnv)) caps_ = parse_caps(env, caps_);
        if (!o.caps.empty()) caps_ = parse_caps(o.caps, caps_);
    }

    const Caps& caps() const { return caps_; }
    bool json() const { return o_.format == "json"; }

    Multipartition lambda() const {
        if (o_.lambda.empty()) throw InputError("--lambda is required");
        const std::string text = o_.lambda.front() == '@' ? read_file(o_.lambda.substr(1)) : o_.lambda;
        Multipartition m = parse_multipartition_arg(text);
        if (o_.r && static_cast<std::size_t>(*o_.r) != m.r())
            throw InputError("--r " + std::to_string(*o_.r) + " disagrees with the " + std::to_string(m.r()) +
                             " components of --lambda");
        return m;
    }

    Multicharge multicharge(std::optional<std::size_t> r) const {
        if (!o_.e) throw InputError("--e is required");
        if (!r && o_.r) r = static_cast<std::size_t>(*o_.r);
        std::vector<int> charge = o_.charge.empty() ? std::vector<int>(r.value_or(1), 0) : parse_int_list(o_.charge);
        if (r && charge.size() != *r)
            throw InputError("--charge has " + std::to_string(charge.size()) + " entries but r = " + std::to_string(*r));
        if (o_.r && static_cast<std::size_t>(*o_.r) != charge.size())
            throw InputError("--r disagrees with the length of --charge");
        return Multicharge(*o_.e, std::move(charge));
    }

    bool has_i() const { return o_.i.has_value(); }

    int i(const Multicharge& a) const {
        if (!o_.i) throw InputError("--i is required");
        return mod_e(*o_.i, a.e);
    }

    int n() const {
        if (!o_.n) throw InputError("--n is required");
        if (*o_.n < 0) throw InputError("--n must be non-negative");
        return *o_.n;
    }

    void enforce_caps(int n, const Multicharge& a) const {
        if (n > caps_.max_n) throw InputError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(caps_.max_n));
        if (a.r() > caps_.max_r)
            throw InputError("r = " + std::to_string(a.r()) + " exceeds the cap " + std::to_string(caps_.max_r));
        if (a.e > caps_.max_e) throw InputError("e = " + std::to_string(a.e) + " exceeds the cap " + std::to_string(caps_.max_e));
    }

private:
    const Options& o_;
    Caps caps_;
};

template <class T>
std::string tuple(const std::vector<T>& xs, char open = '(', char close = ')') {
    std::ostringstream os;
    os << open;
    for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? "," : "") << xs[k];
    os << close;
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string describe(const BlockDescriptor& d) {
    std::ostringstream os;
    os << "n=" << d.n << " counts " << tuple(d.residue_counts) << " hub " << tuple(d.hub) << " weight " << d.weight
       << " core weight " << d.core_weight;
    return os.str();
}

std::string describe(const SMove& s) {
    std::ostringstream os;
    os << "s(i=" << s.i << ", l=" << s.l << ", j=" << s.j + 1 << ", k=" << s.k + 1 << ") gamma " << s.gamma
       << " weight " << s.weight_before << " -> " << s.weight_after;
    return os.str();
}

// --- commands -------------------------------------------------------------

std::string cmd_residues(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto res = residue_multiset(m, a);
    if (c.json())
        return dump(Json{{"lambda", to_json(m)}, {"multicharge", to_json(a)}, {"residues", res},
                         {"residue_counts", residue_counts(m, a)}});
    return tuple(res, '{', '}') + "\n";
}

std::string cmd_abacus(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto d = AbacusDisplay::of(m, a);
    if (c.json()) {
        Json j = to_json(d);
        j["levels"] = lowest_levels(m, a);
        return dump(j);
    }
    return render(d);
}

std::string cmd_weight(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const int w = weight(m, a);
    if (c.json()) return dump(Json{{"weight", w}, {"residue_counts", residue_counts(m, a)}});
    return std::to_string(w) + "\n";
}

std::string cmd_hub(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto h = hub(m, a);
    if (c.json()) return dump(Json{{"hub", h}, {"delta", delta_matrix(m, a)}});
    return tuple(h) + "\n";
}

std::string cmd_blocks(const Context& c) {
    const int n = c.n();
    const auto a = c.multicharge(std::nullopt);
    c.enforce_caps(n, a);
    const auto blocks = enumerate_blocks(n, a, c.caps());
    if (c.json()) {
        Json arr = Json::array();
        for (const auto& b : blocks) {
            Json members = Json::array();
            for (const auto& m : b.members) members.push_back(to_json(m)["components"]);
            arr.push_back(Json{{"descriptor", to_json(block_of(b.members.front(), a))}, {"members", members}});
        }
        return dump(Json{{"n", n}, {"multicharge", to_json(a)}, {"blocks", arr}});
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        os << "block " << k + 1 << ": " << describe(block_of(blocks[k].members.front(), a)) << ", "
           << blocks[k].members.size() << " members\n";
        for (const auto& m : blocks[k].members) os << "  " << m << "\n";
    }
    return os.str();
}

std::string cmd_core_block(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto res = core_block_of(m, a);
    if (c.json()) {
        Json chain = Json::array();
        for (const auto& s : res.chain) chain.push_back(to_json(s));
        return dump(Json{{"block", to_json(block_of(m, a))},
                         {"core", to_json(res.core)},
                         {"start", to_json(res.start)},
                         {"end", to_json(res.end)},
                         {"strict_prefix", res.strict_prefix},
                         {"chain", chain}});
    }
    std::ostringstream os;
    os << "block: " << describe(block_of(m, a)) << "\ncore block: " << describe(res.core) << "\nstart: " << res.start
       << "\n";
    for (const auto& s : res.chain) os << "  " << describe(s) << "\n";
    os << "end: " << res.end << "\n";
    return os.str();
}

std::string cmd_k_values(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const Multipartition mu = is_multicore(m, a) && is_core_block(m, a).is_core ? m : core_block_of(m, a).end;
    std::vector<int> residues;
    if (c.has_i()) residues.push_back(c.i(a));
    else
        for (int i = 0; i < a.e; ++i) residues.push_back(i);
    Json ks = Json::object();
    std::ostringstream os;
    for (int i : residues) {
        const int k = k_value(mu, a, i);
        ks[std::to_string(i)] = k;
        os << "K_" << i << " = " << k << "\n";
    }
    const auto tuples = base_tuples(mu, a);
    const auto offsets = is_core_block(mu, a).offsets;
    if (c.json())
        return dump(Json{{"multicore", to_json(mu)}, {"K", ks}, {"base_tuples", tuples}, {"offsets", offsets}});
    os << "base tuples:";
    for (const auto& t : tuples) os << " " << tuple(t);
    os << "\n";
    return os.str();
}

std::string cmd_scopes_check(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto rep = scopes_condition(m, a, c.i(a));
    if (c.json()) return dump(to_json(rep));
    std::ostringstream os;
    os << "condition " << (rep.holds ? "holds" : "fails") << ": w(B) = " << rep.weight_b << ", w(C) + K_" << rep.i
       << " r = " << rep.weight_c << " + " << rep.k << "*" << rep.r << " = " << rep.weight_c + rep.k * rep.r
       << "\ndelta_" << rep.i << "(B) = " << rep.delta << "\n";
    return os.str();
}

std::string cmd_scopes_map(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    c.enforce_caps(m.size(), a);
    const int i = c.i(a);
    BlockCatalog catalog(a);
    const Block& block = catalog.block_containing(m);
    const auto pairs = scopes_pairing(block, a, i);
    const auto image = phi_block(block, a, i);
    if (c.json()) {
        Json arr = Json::array();
        for (const auto& [x, y] : pairs)
            arr.push_back(Json{{"source", to_json(x)["components"]}, {"image", to_json(y)["components"]}});
        return dump(Json{{"i", i},
                         {"block", to_json(block_of(m, a))},
                         {"image", to_json(image)},
                         {"pairs", arr}});
    }
    std::ostringstream os;
    os << "B: " << describe(block_of(m, a)) << "\nPhi_" << i << "(B): " << describe(image) << "\n";
    for (const auto& [x, y] : pairs) os << "  " << x << " -> " << y << "\n";
    return os.str();
}

std::string cmd_branch(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    const auto br = branching_polynomial(m, a, c.i(a), c.caps().max_delta);
    if (c.json()) return dump(to_json(br));
    std::ostringstream os;
    os << "target: " << br.target << "\npolynomial: " << br.polynomial.to_string() << "\n";
    return os.str();
}

std::string cmd_certify(const Context& c) {
    const auto m = c.lambda();
    const auto a = c.multicharge(m.r());
    c.enforce_caps(m.size(), a);
    BlockCatalog catalog(a);
    const auto cert = certificate(catalog.block_containing(m), a, c.i(a), catalog, c.caps().max_delta);
    if (c.json()) return dump(to_json(cert));
    std::ostringstream os;
    os << "B: " << describe(cert.block) << "\nPhi_" << cert.i << "(B): " << describe(cert.image) << "\ndelta = "
       << cert.delta << ", K = " << cert.k << ", w(B) = " << cert.weight_b << ", w(C) = " << cert.weight_c
       << "\npolynomial: " << cert.polynomial.to_string() << "\n";
    for (const auto& p : cert.pairs)
        os << "  " << p.source << " -> " << p.image << (p.source_kleshchev ? "  [Kleshchev]" : "") << "\n";
    os << "passed:";
    for (const auto& name : cert.checks) os << " " << name;
    os << "\n";
    return os.str();
}

std::string cmd_verify_all(const Context& c, const Options& o, std::ostream& err, bool& ok) {
    Caps caps = c.caps();
    if (o.n) caps.max_n = *o.n;
    if (o.r) caps.max_r = static_cast<std::size_t>(*o.r);
    if (o.e) caps.max_e = *o.e;
    if (caps.max_n < 0 || caps.max_r < 1 || caps.max_e < 2) throw InputError("empty verification grid");
    const auto report = verify_all(caps, [&](const std::string& suite) { err << "running " << suite << "\n"; });
    err << "finished in " << std::fixed << std::setprecision(1) << report.seconds << " s\n";
    ok = report.ok();
    if (c.json()) {
        Json checks = Json::array();
        for (const auto& r : report.checks)
            checks.push_back(Json{{"check", r.name},
                                  {"instances", r.instances},
                                  {"violations", r.violations},
                                  {"samples", r.samples}});
        return dump(Json{{"schema", 1},
                         {"grid",
                          {{"max_n", caps.max_n},
                           {"max_r", caps.max_r},
                           {"max_e", caps.max_e},
                           {"max_delta", caps.max_delta}}},
                         {"ok", ok},
                         {"checks", checks}});
    }
    std::ostringstream os;
    os << "grid: n <= " << caps.max_n << ", r <= " << caps.max_r << ", e = 2.." << caps.max_e << ", delta <= "
       << caps.max_delta << "\n";
    std::size_t width = 5;
    for (const auto& r : report.checks) width = std::max(width, r.name.size());
    os << std::left << std::setw(static_cast<int>(width)) << "check" << std::right << std::setw(12) << "instances"
       << std::setw(12) << "violations" << "  status\n";
    for (const auto& r : report.checks) {
        os << std::left << std::setw(static_cast<int>(width)) << r.name << std::right << std::setw(12) << r.instances
           << std::setw(12) << r.violations << "  " << (r.ok() ? "ok" : "FAILED") << "\n";
        for (const auto& s : r.samples) os << "    counterexample: " << s << "\n";
    }
    os << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return os.str();
}

}  // namespace

int report_failure(std::exception_ptr failure, std::ostream& err) {
    try {
        std::rethrow_exception(failure);
    } catch (const VerificationError& ex) {
        err << "verification failed: " << ex.what() << "\n";
        return kExitVerificationFailed;
    } catch (const HypothesisError& ex) {
        err << "hypothesis not met: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const InputError& ex) {
        err << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception& ex) {
        err << "input error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block combinatorics of Ariki-Koike algebras: abacus, weights, core blocks and Scopes maps"};
    app.require_subcommand(1);
    Options o;
    struct Command {
        const char* name;
        const char* help;
        unsigned flags;
    };
    const std::vector<Command> commands{
        {"residues", "residue multiset of a multipartition", kLambda | kE | kCharge | kR},
        {"abacus", "abacus display", kLambda | kE | kCharge | kR},
        {"weight", "weight of a multipartition", kLambda | kE | kCharge | kR},
        {"hub", "hub (delta_0, ..., delta_{e-1})", kLambda | kE | kCharge | kR},
        {"blocks", "all blocks of r-multipartitions of n", kN | kR | kE | kCharge | kCaps},
        {"core-block", "core block and an s-move chain into it", kLambda | kE | kCharge | kR},
        {"k-values", "K_i and base tuples of the core block", kLambda | kE | kCharge | kR | kI},
        {"scopes-check", "test w(B) <= w(C) + K_i r", kLambda | kE | kCharge | kR | kI},
        {"scopes-map", "pairing of B with Phi_i(B)", kLambda | kE | kCharge | kR | kI | kCaps},
        {"branch", "graded restriction polynomial over all removal orders", kLambda | kE | kCharge | kR | kI | kCaps},
        {"certify", "run every check on B and emit a certificate", kLambda | kE | kCharge | kR | kI | kCaps},
        {"verify-all", "exhaustive verification over the cap grid", kN | kR | kE | kCaps},
    };
    for (const auto& cmd : commands) add_flags(app.add_subcommand(cmd.name, cmd.help), o, cmd.flags);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, out, err);
        return kExitInputError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const Context c(o);
        std::string doc;
        bool ok = true;
        if (name == "residues") doc = cmd_residues(c);
        else if (name == "abacus") doc = cmd_abacus(c);
        else if (name == "weight") doc = cmd_weight(c);
        else if (name == "hub") doc = cmd_hub(c);
        else if (name == "blocks") doc = cmd_blocks(c);
        else if (name == "core-block") doc = cmd_core_block(c);
        else if (name == "k-values") doc = cmd_k_values(c);
        else if (name == "scopes-check") doc = cmd_scopes_check(c);
        else if (name == "scopes-map") doc = cmd_scopes_map(c);
        else if (name == "branch") doc = cmd_branch(c);
        else if (name == "certify") doc = cmd_certify(c);
        else if (name == "verify-all") doc = cmd_verify_all(c, o, err, ok);

        if (o.out.empty()) {
            out << doc;
        } else {
            std::ofstream file(o.out);
            if (!file) throw InputError("cannot write '" + o.out + "'");
            file << doc;
        }
        return ok ? kExitOk : kExitVerificationFailed;
    } catch (...) {
        return report_failure(std::current_exception(), err);
    }
}

}  // namespace akb
