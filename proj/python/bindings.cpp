// Python bindings. Multipartitions cross the boundary as lists of lists of ints
// or as text such as "((2,1),-)"; structured results are returned as JSON text
// and decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/branching.hpp"
#include "akb/cli.hpp"
#include "akb/error.hpp"
#include "akb/json_io.hpp"
#include "akb/scopes.hpp"

namespace py = pybind11;
using namespace akb;

namespace {

Multipartition to_multipartition(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_multipartition_arg(obj.cast<std::string>());
    std::vector<Partition> comps;
    for (const auto& c : obj) comps.emplace_back(c.cast<std::vector<int>>());
    return Multipartition(comps);
}

std::vector<std::vector<int>> to_lists(const Multipartition& m) {
    std::vector<std::vector<int>> out;
    for (const auto& p : m.components()) out.emplace_back(p.parts().begin(), p.parts().end());
    return out;
}

Multicharge charge_of(int e, const std::vector<int>& charge) { return Multicharge(e, charge); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block combinatorics of Ariki-Koike algebras";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<HypothesisError> hypothesis_error(m, "HypothesisError", input_error.ptr());
    static py::exception<VerificationError> verification_error(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HypothesisError& e) {
            py::set_error(hypothesis_error, e.what());
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        } catch (const VerificationError& e) {
            py::set_error(verification_error, e.what());
        }
    });

    m.def("residues", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return residue_multiset(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"), "Sorted residue multiset.");

    m.def("residue_counts", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return residue_counts(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("weight", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return weight(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("hub", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return hub(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("same_block", [](const py::object& lam, const py::object& mu, int e, const std::vector<int>& charge) {
        return same_block(to_multipartition(lam), to_multipartition(mu), charge_of(e, charge));
    }, py::arg("lam"), py::arg("mu"), py::arg("e"), py::arg("charge"));

    m.def("beta_window", [](const std::vector<int>& parts, int charge, int lo, int hi) {
        const BetaSet b = beta_set(Partition(parts), charge);
        std::vector<int> out;
        for (int p = hi; p >= lo; --p)
            if (b.contains(p)) out.push_back(p);
        return out;
    }, py::arg("parts"), py::arg("charge"), py::arg("lo"), py::arg("hi"),
          "Beta-numbers in [lo, hi], descending.");

    m.def("abacus", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return render(AbacusDisplay::of(to_multipartition(lam), charge_of(e, charge)));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("lowest_levels", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return lowest_levels(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("phi", [](const py::object& lam, int e, const std::vector<int>& charge, int i) {
        return to_lists(phi(to_multipartition(lam), charge_of(e, charge), i));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"), py::arg("i"));

    m.def("is_kleshchev", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return is_kleshchev(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("k_value", [](const py::object& lam, int e, const std::vector<int>& charge, int i) {
        return k_value(to_multipartition(lam), charge_of(e, charge), i);
    }, py::arg("lam"), py::arg("e"), py::arg("charge"), py::arg("i"),
          "K_i of the core block containing the multicore lam.");

    m.def("base_tuples", [](const py::object& lam, int e, const std::vector<int>& charge) {
        return base_tuples(to_multipartition(lam), charge_of(e, charge));
    }, py::arg("lam"), py::arg("e"), py::arg("charge"));

    m.def("_scopes_condition", [](const py::object& lam, int e, const std::vector<int>& charge, int i) {
        return to_json(scopes_condition(to_multipartition(lam), charge_of(e, charge), i)).dump();
    });

    m.def("_branching_polynomial", [](const py::object& lam, int e, const std::vector<int>& charge, int i,
                                      int max_delta) {
        return to_json(branching_polynomial(to_multipartition(lam), charge_of(e, charge), i, max_delta)).dump();
    });

    m.def("mahonian", [](int n) { return mahonian(n); }, py::arg("n"));

    m.def("_certify", [](const py::object& lam, int e, const std::vector<int>& charge, int i, int max_n,
                         int max_delta) {
        const Multipartition lambda = to_multipartition(lam);
        if (lambda.size() > max_n)
            throw InputError("n = " + std::to_string(lambda.size()) + " exceeds the cap " + std::to_string(max_n));
        const Multicharge a = charge_of(e, charge);
        BlockCatalog catalog(a, max_n);
        const Block& block = catalog.block_containing(lambda);
        return to_json(certificate(block, a, i, catalog, max_delta)).dump();
    });

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "akb");
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line tool in-process; returns (status, stdout, stderr).");
}
