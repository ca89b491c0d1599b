#include "akb/json_io.hpp"

#include <string>

#include "akb/error.hpp"

namespace akb {

namespace {

template <class F>
auto guarded(const char* what, F f) {
    try {
        return f();
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed ") + what + " JSON: " + ex.what());
    }
}

std::vector<int> int_array(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of integers");
    return j.get<std::vector<int>>();
}

}  // namespace

Json to_json(const Partition& p) {
    return Json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Json to_json(const Multipartition& lambda) {
    Json comps = Json::array();
    for (const auto& p : lambda.components()) comps.push_back(to_json(p));
    return Json{{"components", comps}};
}

Json to_json(const Multicharge& a) {
    return Json{{"e", a.e}, {"charge", a.charge}};
}

Json to_json(const Node& x) {
    return Json::array({x.row, x.col, x.comp + 1});
}

Json to_json(const AbacusDisplay& d) {
    Json comps = Json::array();
    for (const auto& b : d.components) {
        const auto beads = b.beads_above_cutoff();
        comps.push_back(Json{{"charge", b.charge()},
                             {"beads_above_cutoff", std::vector<int>(beads.begin(), beads.end())},
                             {"cutoff", b.cutoff()}});
    }
    return Json{{"e", d.e}, {"components", comps}};
}

Json to_json(const BlockDescriptor& d) {
    return Json{{"n", d.n},
                {"r", d.r},
                {"e", d.e},
                {"charge_residues", d.charge_residues},
                {"residue_counts", d.residue_counts},
                {"hub", d.hub},
                {"weight", d.weight},
                {"core_weight", d.core_weight}};
}

Json to_json(const SMove& s) {
    return Json{{"i", s.i},
                {"l", s.l},
                {"j", s.j + 1},
                {"k", s.k + 1},
                {"gamma", s.gamma},
                {"weight_before", s.weight_before},
                {"weight_after", s.weight_after}};
}

Json to_json(const ScopesReport& rep) {
    Json chain = Json::array();
    for (const auto& s : rep.chain) chain.push_back(to_json(s));
    return Json{{"holds", rep.holds}, {"i", rep.i},      {"r", rep.r},
                {"wB", rep.weight_b}, {"wC", rep.weight_c}, {"K", rep.k},
                {"delta", rep.delta}, {"chain", chain}};
}

Json to_json(const LaurentPolynomial& p) {
    Json out = Json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out[std::to_string(it->first)] = it->second;
    return out;
}

Json to_json(const BranchingResult& br) {
    return Json{{"delta", br.delta}, {"target", to_json(br.target)}, {"polynomial", to_json(br.polynomial)}};
}

Json to_json(const ScopesCertificate& cert) {
    Json pairs = Json::array();
    for (const auto& p : cert.pairs)
        pairs.push_back(Json{{"source", to_json(p.source)["components"]},
                             {"image", to_json(p.image)["components"]},
                             {"source_kleshchev", p.source_kleshchev},
                             {"image_kleshchev", p.image_kleshchev}});
    return Json{{"schema", ScopesCertificate::schema},
                {"multicharge", to_json(cert.multicharge)},
                {"i", cert.i},
                {"block", to_json(cert.block)},
                {"image", to_json(cert.image)},
                {"delta", cert.delta},
                {"K", cert.k},
                {"wB", cert.weight_b},
                {"wC", cert.weight_c},
                {"polynomial", to_json(cert.polynomial)},
                {"pairs", pairs},
                {"checks", cert.checks}};
}

Multipartition multipartition_from_json(const Json& j) {
    return guarded("multipartition", [&] {
        const Json& comps = j.is_object() ? j.at("components") : j;
        if (!comps.is_array() || comps.empty()) throw InputError("a multipartition needs a non-empty component list");
        std::vector<Partition> parts;
        for (const auto& c : comps) parts.emplace_back(int_array(c));
        return Multipartition(std::move(parts));
    });
}

Multicharge multicharge_from_json(const Json& j) {
    return guarded("multicharge", [&] { return Multicharge(j.at("e").get<int>(), int_array(j.at("charge"))); });
}

AbacusDisplay abacus_from_json(const Json& j) {
    return guarded("abacus", [&] {
        AbacusDisplay d;
        d.e = j.at("e").get<int>();
        if (d.e < 2) throw InputError("e must be at least 2");
        for (const auto& c : j.at("components")) {
            BetaSet b(c.at("cutoff").get<int>(), int_array(c.at("beads_above_cutoff")));
            if (c.contains("charge") && c.at("charge").get<int>() != b.charge())
                throw InputError("abacus component charge disagrees with its beads");
            d.components.push_back(std::move(b));
        }
        if (d.components.empty()) throw InputError("abacus needs at least one component");
        return d;
    });
}

BlockDescriptor block_descriptor_from_json(const Json& j) {
    return guarded("block", [&] {
        BlockDescriptor d;
        d.n = j.at("n").get<int>();
        d.r = j.at("r").get<std::size_t>();
        d.e = j.at("e").get<int>();
        d.charge_residues = int_array(j.at("charge_residues"));
        d.residue_counts = int_array(j.at("residue_counts"));
        d.hub = int_array(j.at("hub"));
        d.weight = j.at("weight").get<int>();
        d.core_weight = j.at("core_weight").get<int>();
        return d;
    });
}

LaurentPolynomial polynomial_from_json(const Json& j) {
    return guarded("polynomial", [&] {
        if (!j.is_object()) throw InputError("a polynomial is an object of degree keys");
        LaurentPolynomial p;
        for (const auto& [key, value] : j.items()) {
            std::size_t used = 0;
            const int degree = std::stoi(key, &used);
            if (used != key.size()) throw InputError("bad degree key '" + key + "'");
            p.add(degree, value.get<long long>());
        }
        return p;
    });
}

ScopesCertificate certificate_from_json(const Json& j) {
    return guarded("certificate", [&] {
        if (j.at("schema").get<int>() != ScopesCertificate::schema) throw InputError("unsupported certificate schema");
        ScopesCertificate cert;
        cert.multicharge = multicharge_from_json(j.at("multicharge"));
        cert.i = j.at("i").get<int>();
        cert.block = block_descriptor_from_json(j.at("block"));
        cert.image = block_descriptor_from_json(j.at("image"));
        cert.delta = j.at("delta").get<int>();
        cert.k = j.at("K").get<int>();
        cert.weight_b = j.at("wB").get<int>();
        cert.weight_c = j.at("wC").get<int>();
        cert.polynomial = polynomial_from_json(j.at("polynomial"));
        for (const auto& p : j.at("pairs"))
            cert.pairs.push_back({multipartition_from_json(p.at("source")), multipartition_from_json(p.at("image")),
                                  p.at("source_kleshchev").get<bool>(), p.at("image_kleshchev").get<bool>()});
        cert.checks = j.at("checks").get<std::vector<std::string>>();
        return cert;
    });
}

Multipartition parse_multipartition_arg(std::string_view text) {
    const std::size_t start = text.find_first_not_of(" \t\n");
    if (start == std::string_view::npos || (text[start] != '{' && text[start] != '['))
        return parse_multipartition(text);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed multipartition JSON: ") + ex.what());
    }
    return multipartition_from_json(j);
}

}  // namespace akb
