#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sho/serialization.hpp"
#include "sho/suites.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// thin JSON-string facade over the C++ workbench
class PyWorkbench {
public:
    PyWorkbench(int p, int m, std::vector<int> t)
        : wb_(sho::make_parameters(p, m, std::move(t))) {}

    std::map<int, int> dims(const std::string& algebra) {
        return wb_.algebra(sho::tag_from_string(algebra)).dims();
    }

    int dim(const std::string& algebra) { return wb_.algebra(sho::tag_from_string(algebra)).dim(); }

    std::string export_structure(const std::string& algebra) {
        const auto& g = wb_.algebra(sho::tag_from_string(algebra));
        return sho::export_structure_constants(g, algebra).dump(2);
    }

    py::list verify(const std::string& suite, unsigned long long seed, int samples) {
        py::list out;
        for (const auto& report : sho::run_suites(wb_, suite, seed, samples)) {
            py::list items;
            for (const auto& item : report.items) {
                py::dict d;
                d["name"] = item.name;
                d["passed"] = item.passed;
                d["detail"] = item.detail;
                items.append(d);
            }
            py::dict r;
            r["suite"] = report.suite;
            r["passed"] = report.all_passed();
            r["items"] = items;
            out.append(r);
        }
        return out;
    }

    py::dict restricted(const std::string& algebra) {
        sho::RestrictedReport r = sho::is_restricted(wb_, sho::tag_from_string(algebra));
        py::dict out;
        out["algebra"] = algebra;
        out["restricted"] = r.restricted;
        out["note"] = r.note;
        if (r.witness) out["witness"] = sho::derivation_to_json(*r.witness).dump();
        return out;
    }

    std::string sample_automorphism(const std::string& algebra, unsigned long long seed,
                                    int depth) {
        const auto& g = wb_.algebra(sho::tag_from_string(algebra));
        return sho::automorphism_to_json(sho::sample_automorphism(g, seed, depth)).dump(2);
    }

    py::dict aut_check(const std::string& algebra, const std::string& sigma_json) {
        const auto& g = wb_.algebra(sho::tag_from_string(algebra));
        sho::OAutomorphism sigma = sho::automorphism_from_json(json::parse(sigma_json));
        sho::ensure_same(sigma.params(), wb_.params());
        sho::BasisIndex idx(wb_.params());
        py::dict out;
        out["admissible"] = sho::is_admissible(sigma, g);
        auto depth = sho::depth_O(sigma, idx);
        out["depth"] = depth ? py::cast(*depth) : py::none();
        out["homogeneous"] = sho::is_homogeneous_O(sigma);
        return out;
    }

    bool phi_roundtrip(const std::string& algebra, unsigned long long seed, int depth) {
        const auto& g = wb_.algebra(sho::tag_from_string(algebra));
        sho::OAutomorphism sigma = sho::sample_automorphism(g, seed, depth);
        return sho::reconstruct_sigma(sho::phi(sigma, g)) == sigma;
    }

private:
    sho::Workbench wb_;
};

int import_check(const std::string& text) {
    return sho::import_structure_constants(json::parse(text)).dim;
}

}  // namespace

PYBIND11_MODULE(_shoalg, mod) {
    mod.doc() = "exact workbench for the Cartan-type Lie superalgebra series W > HO > SHO";

    py::register_exception<sho::config_error>(mod, "ConfigError");
    py::register_exception<sho::parity_error>(mod, "ParityError");
    py::register_exception<sho::sampling_error>(mod, "SamplingError");
    py::register_exception<sho::reconstruction_error>(mod, "ReconstructionError");

    py::class_<PyWorkbench>(mod, "Workbench")
        .def(py::init<int, int, std::vector<int>>(), py::arg("p"), py::arg("m"), py::arg("t"))
        .def("dims", &PyWorkbench::dims, py::arg("algebra"))
        .def("dim", &PyWorkbench::dim, py::arg("algebra"))
        .def("export_structure", &PyWorkbench::export_structure, py::arg("algebra"))
        .def("verify", &PyWorkbench::verify, py::arg("suite") = "all", py::arg("seed") = 0,
             py::arg("samples") = 10)
        .def("restricted", &PyWorkbench::restricted, py::arg("algebra"))
        .def("sample_automorphism", &PyWorkbench::sample_automorphism, py::arg("algebra"),
             py::arg("seed") = 0, py::arg("depth") = 0)
        .def("aut_check", &PyWorkbench::aut_check, py::arg("algebra"), py::arg("sigma_json"))
        .def("phi_roundtrip", &PyWorkbench::phi_roundtrip, py::arg("algebra"),
             py::arg("seed") = 0, py::arg("depth") = 0);

    mod.def("import_check", &import_check, py::arg("text"),
            "validate a structure-constant JSON string, returning the dimension");
}
