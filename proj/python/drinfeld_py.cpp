/*
   Copyright 2026 The drinfeld-heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drinfeld/commands.hpp"
#include "drinfeld/text.hpp"

namespace py = pybind11;
using namespace drinfeld;

namespace {

struct PyModule {
    std::shared_ptr<const DrinfeldModule> M;

    PyModule(std::uint32_t q, const std::vector<std::string>& phi_t, const std::string& modulus)
        : M(std::make_shared<const DrinfeldModule>(DrinfeldModule::from_strings(make_field(q, modulus), phi_t))) {}

    const FieldPtr& F() const { return M->field(); }
    RatK point(const std::string& s) const { return parse_ratk(F(), s); }
};

HeightOptions options(int iter_cap, int annulus_cap) {
    HeightOptions o;
    o.iter_cap = iter_cap;
    o.annulus_cap = annulus_cap;
    return o;
}

py::dict local_dict(const LocalHeightResult& r) {
    py::dict d;
    d["exact"] = r.exact();
    d["value"] = format_rational(r.value);
    d["iterations"] = r.iterations_used;
    d["escape_step"] = r.escape_step;
    return d;
}

std::vector<std::string> twisted_strings(const TwistedPoly& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coeffs()) out.push_back(format_ratk(c));
    return out;
}

PlaceSet place_set(const FieldPtr& F, const std::vector<std::string>& names) {
    std::vector<Place> v;
    for (const auto& n : names) v.push_back(parse_place(F, n));
    return PlaceSet(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic and heights for Drinfeld modules over F_q(t)";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

    py::class_<PyModule>(m, "Module")
        .def(py::init<std::uint32_t, const std::vector<std::string>&, const std::string&>(), py::arg("q"),
             py::arg("phi_t"), py::arg("modulus") = "")
        .def_property_readonly("q", [](const PyModule& s) { return s.M->q(); })
        .def_property_readonly("rank", [](const PyModule& s) { return s.M->rank(); })
        .def_property_readonly("phi_t", [](const PyModule& s) { return s.M->to_strings(); })
        .def_property_readonly("bad_places",
                               [](const PyModule& s) {
                                   std::vector<std::string> out;
                                   for (const auto& v : s.M->bad_places()) out.push_back(format_place(v));
                                   return out;
                               })
        .def("phi_of", [](const PyModule& s, const std::string& Q) {
            return twisted_strings(s.M->phi_of(parse_poly(s.F(), Q)));
        })
        .def("apply", [](const PyModule& s, const std::string& Q, const std::string& x) {
            return format_ratk(s.M->apply(parse_poly(s.F(), Q), s.point(x)));
        })
        .def("reduction_type", [](const PyModule& s, const std::string& v) {
            return reduction_type(*s.M, parse_place(s.F(), v)) == Reduction::Good ? "good" : "bad";
        })
        .def("integralize", [](const PyModule& s) {
            auto [psi, gamma] = integralize(*s.M);
            return std::make_pair(psi.to_strings(), format_ratk(gamma));
        })
        .def("torsion_order",
             [](const PyModule& s, const std::string& x, int cap) -> std::optional<std::string> {
                 auto o = torsion_annihilator(*s.M, s.point(x), cap);
                 if (!o) return std::nullopt;
                 return format_poly(*o);
             },
             py::arg("x"), py::arg("cap") = 4)
        .def("thresholds",
             [](const PyModule& s, const std::string& v) {
                 Thresholds t = thresholds(*s.M, parse_place(s.F(), v));
                 py::dict d;
                 d["escape_log"] = format_rational(t.escape_log);
                 d["contraction_log"] =
                     t.contraction_log ? py::cast(format_rational(*t.contraction_log)) : py::none();
                 return d;
             })
        .def("local_height",
             [](const PyModule& s, const std::string& x, const std::string& v, int iter_cap, int annulus_cap) {
                 return local_dict(local_canonical_height(*s.M, s.point(x), parse_place(s.F(), v),
                                                          options(iter_cap, annulus_cap)));
             },
             py::arg("x"), py::arg("place"), py::arg("iter_cap") = 12, py::arg("annulus_cap") = 3)
        .def("canonical_height",
             [](const PyModule& s, const std::string& x, int iter_cap, int annulus_cap) {
                 CanonicalHeight h;
                 {
                     py::gil_scoped_release release;
                     h = canonical_height(*s.M, s.point(x), options(iter_cap, annulus_cap));
                 }
                 py::dict d;
                 d["exact"] = h.certainty == Certainty::Exact;
                 d["value"] = format_rational(h.value);
                 d["upper"] = format_rational(h.upper);
                 py::dict locals;
                 for (const auto& [v, r] : h.locals) locals[py::str(format_place(v))] = local_dict(r);
                 d["locals"] = locals;
                 return d;
             },
             py::arg("x"), py::arg("iter_cap") = 12, py::arg("annulus_cap") = 3)
        .def("naive_height", [](const PyModule& s, const std::string& x, int n) {
            return format_rational(naive_height_estimate(*s.M, s.point(x), n));
        })
        .def("log_distance_ratio",
             [](const PyModule& s, const std::string& beta, const std::string& alpha, const std::string& Q,
                const std::string& v) {
                 return format_rational(
                     log_distance_ratio(*s.M, s.point(beta), s.point(alpha), parse_poly(s.F(), Q),
                                        parse_place(s.F(), v)));
             });

    m.def("weil_height", [](std::uint32_t q, const std::string& x, const std::string& modulus) {
        return format_rational(weil_height(parse_ratk(make_field(q, modulus), x)));
    }, py::arg("q"), py::arg("x"), py::arg("modulus") = "");
    m.def("valuation", [](std::uint32_t q, const std::string& x, const std::string& v, const std::string& modulus)
              -> std::optional<std::int64_t> {
        const FieldPtr F = make_field(q, modulus);
        const auto val = valuation(parse_ratk(F, x), parse_place(F, v));
        if (val == kValuationOfZero) return std::nullopt;
        return val;
    }, py::arg("q"), py::arg("x"), py::arg("place"), py::arg("modulus") = "");
    m.def("support", [](std::uint32_t q, const std::string& x, const std::string& modulus) {
        std::vector<std::pair<std::string, std::int64_t>> out;
        for (auto& [v, val] : support(parse_ratk(make_field(q, modulus), x))) out.emplace_back(format_place(v), val);
        return out;
    }, py::arg("q"), py::arg("x"), py::arg("modulus") = "");
    m.def("product_formula_check", [](std::uint32_t q, const std::string& x, const std::string& modulus) {
        return product_formula_check(parse_ratk(make_field(q, modulus), x));
    }, py::arg("q"), py::arg("x"), py::arg("modulus") = "");
    m.def("is_irreducible", [](std::uint32_t q, const std::string& f, const std::string& modulus) {
        return parse_poly(make_field(q, modulus), f).is_irreducible();
    }, py::arg("q"), py::arg("f"), py::arg("modulus") = "");
    m.def("factor", [](std::uint32_t q, const std::string& f, const std::string& modulus) {
        std::vector<std::pair<std::string, int>> out;
        for (auto& [P, e] : factor(parse_poly(make_field(q, modulus), f))) out.emplace_back(format_poly(P), e);
        return out;
    }, py::arg("q"), py::arg("f"), py::arg("modulus") = "");
    m.def("s_integral", [](std::uint32_t q, const std::string& beta, const std::string& alpha,
                           const std::vector<std::string>& S, const std::string& modulus) {
        const FieldPtr F = make_field(q, modulus);
        return s_integral(parse_ratk(F, beta), parse_ratk(F, alpha), place_set(F, S));
    }, py::arg("q"), py::arg("beta"), py::arg("alpha"), py::arg("S"), py::arg("modulus") = "");
    m.def("run", [](const std::string& command, const std::string& config_json) {
        const Config c = parse_config(config_json);
        CommandOutput out;
        {
            py::gil_scoped_release release;
            out = run_command(command, c);
        }
        py::dict files;
        for (const auto& [name, contents] : out.files) files[py::str(name)] = contents;
        return std::make_pair(out.summary, files);
    }, py::arg("command"), py::arg("config_json"),
          "Run a CLI command on a JSON config; returns (summary, {file name: contents}).");
}
