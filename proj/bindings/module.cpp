#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssg/builtins.hpp"
#include "ssg/germs.hpp"
#include "ssg/io.hpp"
#include "ssg/verify.hpp"
#include "ssg/witnesses.hpp"

namespace py = pybind11;
using namespace ssg;

PYBIND11_MODULE(_ssg, m) {
    m.doc() = "Self-similar groups, cone-partition bijections and their germs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BoundsError>(m, "BoundsError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "FormatError", PyExc_ValueError);

    py::class_<AutomatonGroup, std::shared_ptr<AutomatonGroup>>(m, "Group")
        .def_property_readonly("name", &AutomatonGroup::name)
        .def_property_readonly("d", &AutomatonGroup::d)
        .def_property_readonly("states",
                               [](const AutomatonGroup& g) {
                                   std::vector<std::string> names;
                                   for (int i = 0; i < g.state_count(); ++i) {
                                       names.push_back(g.state_name(i));
                                   }
                                   return names;
                               })
        .def("__repr__", [](const AutomatonGroup& g) {
            return "<Group " + g.name() + " on " + std::to_string(g.d()) + " letters>";
        });

    py::class_<GroupWord>(m, "Word")
        .def("__str__", &GroupWord::str)
        .def("__repr__", [](const GroupWord& w) { return "<Word " + w.str() + ">"; })
        .def("__mul__", &GroupWord::operator*)
        .def("inverse", &GroupWord::inverse)
        .def("is_identity_word", &GroupWord::is_identity_word)
        .def("apply", [](const GroupWord& w, const std::string& path) { return ssg::act(w, path); })
        .def("restriction",
             [](const GroupWord& w, const std::string& path) { return restriction(w, path); })
        .def("is_trivial", [](const GroupWord& w) { return is_trivial(w); })
        .def("equal", [](const GroupWord& a, const GroupWord& b) { return equal(a, b); });

    py::class_<RationalPoint>(m, "Point")
        .def_property_readonly("preperiod", &RationalPoint::preperiod)
        .def_property_readonly("period", &RationalPoint::period)
        .def("expand", &RationalPoint::expand)
        .def("__eq__", [](const RationalPoint& a, const RationalPoint& b) { return a == b; })
        .def("__str__", [](const RationalPoint& p) { return format_point(p); })
        .def("__repr__",
             [](const RationalPoint& p) { return "<Point " + format_point(p) + ">"; });

    py::class_<RNRow>(m, "Row")
        .def_property_readonly("domain", [](const RNRow& r) { return r.domain; })
        .def_property_readonly("range", [](const RNRow& r) { return r.range; })
        .def_property_readonly("action", [](const RNRow& r) { return r.action; })
        .def("__repr__", [](const RNRow& r) {
            return "<Row " + format_address(r.domain) + " -> " + format_address(r.range) +
                   " act " + r.action.str() + ">";
        });

    py::class_<RNElement>(m, "Element")
        .def_property_readonly("group", &RNElement::group)
        .def_property_readonly("rows", &RNElement::rows)
        .def("__len__", &RNElement::size)
        .def("__mul__", [](const RNElement& a, const RNElement& b) { return compose(a, b); })
        .def("inverse", [](const RNElement& h) { return invert(h); })
        .def("equal", [](const RNElement& a, const RNElement& b) { return equal_rn(a, b); })
        .def("evaluate", [](const RNElement& h, const RationalPoint& p) { return evaluate(h, p); })
        .def("fixes", [](const RNElement& h, const RationalPoint& p) { return fixes(h, p); })
        .def("__str__",
             [](const RNElement& h) { return print_rn(NamedElement{"element", h}); })
        .def("__repr__", [](const RNElement& h) {
            return "<Element over " + h.group()->name() + ", " + std::to_string(h.size()) +
                   " rows>";
        });

    py::class_<Nucleus>(m, "Nucleus")
        .def_property_readonly("elements", [](const Nucleus& n) { return n.elements; })
        .def_property_readonly("depth_certificate",
                               [](const Nucleus& n) { return n.depth_certificate; })
        .def("contains", &Nucleus::contains);

    py::class_<PeriodicNucleusData>(m, "PeriodicNucleus")
        .def_property_readonly("beta", [](const PeriodicNucleusData& d) { return d.beta; })
        .def_property_readonly("elements",
                               [](const PeriodicNucleusData& d) { return d.n_beta; })
        .def_property_readonly("M", [](const PeriodicNucleusData& d) { return d.M; });

    py::class_<GermSignature>(m, "GermSignature")
        .def_property_readonly("nucleus_component",
                               [](const GermSignature& s) { return s.nucleus_component; })
        .def_property_readonly("delta", [](const GermSignature& s) { return s.delta; })
        .def_property_readonly("depth", [](const GermSignature& s) { return s.stabilized_at; })
        .def("__str__", &GermSignature::render)
        .def("__repr__", &GermSignature::render);

    py::class_<SeparatedSystem>(m, "SeparatedSystem")
        .def_property_readonly("points", [](const SeparatedSystem& s) { return s.points; })
        .def_property_readonly("cones", [](const SeparatedSystem& s) { return s.cones; });

    py::class_<EPrimeData>(m, "EPrimeFrame")
        .def_property_readonly("gamma", [](const EPrimeData& d) { return d.gamma; })
        .def_property_readonly("delta", [](const EPrimeData& d) { return d.delta; })
        .def_property_readonly("eprime", [](const EPrimeData& d) { return d.e_prime; });

    m.def("builtin_names", &builtin_names);
    m.def("builtin_group", &builtin_group, py::arg("name"));
    m.def("parse_group", [](const std::string& text) { return parse_group(text); },
          py::arg("text"));
    m.def("print_group",
          [](const GroupPtr& g) { return print_group(*g); }, py::arg("group"));
    m.def("parse_point",
          [](const GroupPtr& g, const std::string& text) { return parse_point(g->d(), text); },
          py::arg("group"), py::arg("text"));
    m.def("parse_word", &parse_word, py::arg("group"), py::arg("text"));
    m.def("parse_element",
          [](const GroupPtr& g, const std::string& text) { return parse_rn(text, g).element; },
          py::arg("group"), py::arg("text"));
    m.def("print_element",
          [](const RNElement& h, const std::string& name) {
              return print_rn(NamedElement{name, h});
          },
          py::arg("element"), py::arg("name") = "element");

    m.def("identity_word", &GroupWord::identity, py::arg("group"));
    m.def(
        "nucleus",
        [](const GroupPtr& g, std::size_t max_size, int max_depth) {
            NucleusOutcome outcome = compute_nucleus(g, max_size, max_depth);
            if (!outcome.ok()) throw BoundsError("NotContractingWithinBounds: " + outcome.failure);
            return *outcome.nucleus;
        },
        py::arg("group"), py::arg("max_size") = 256, py::arg("max_depth") = 64);
    m.def("contraction_depth", &contraction_depth, py::arg("word"), py::arg("nucleus"),
          py::arg("cap") = 64);

    m.def("identity_element", &RNElement::identity, py::arg("group"));
    m.def(
        "make_element",
        [](const GroupPtr& g, const std::vector<std::tuple<Address, Address, GroupWord>>& pairs) {
            std::vector<RNRow> rows;
            for (const auto& [dom, ran, act] : pairs) rows.push_back(RNRow{dom, ran, act});
            return make_element(g, std::move(rows));
        },
        py::arg("group"), py::arg("pairs"));
    m.def("expand",
          [](const RNElement& h, const std::vector<Address>& finer) { return expand(h, finer); },
          py::arg("element"), py::arg("finer"));
    m.def("regular_cone",
          [](const RNElement& h, const RationalPoint& p) {
              RegularCone rc = regular_cone(h, p);
              return py::make_tuple(rc.cone, rc.action);
          },
          py::arg("element"), py::arg("point"));

    m.def("periodic_nucleus", &periodic_nucleus, py::arg("nucleus"), py::arg("group"),
          py::arg("beta"));
    m.def(
        "germ_signature",
        [](const RNElement& h, const RationalPoint& p, const PeriodicNucleusData& data,
           int cap) { return require_signature(h, p, data, cap); },
        py::arg("element"), py::arg("point"), py::arg("data"), py::arg("cap") = 32);
    m.def("germ_equal", &germ_equal, py::arg("h1"), py::arg("h2"), py::arg("point"),
          py::arg("data"), py::arg("cap") = 32);
    m.def(
        "coset_witness",
        [](const RNElement& h1, const RNElement& h2, const RationalPoint& p,
           const RNElement& f, const PeriodicNucleusData& data, int cap) -> py::object {
            CosetOutcome outcome = coset_witness(h1, h2, p, f, data, cap);
            if (!outcome.has_witness) return py::none();
            return py::int_(outcome.k);
        },
        py::arg("h1"), py::arg("h2"), py::arg("point"), py::arg("f"), py::arg("data"),
        py::arg("cap") = 32);

    m.def("separate_points",
          [](const GroupPtr& g, const std::vector<RationalPoint>& points) {
              return separate_points(g->d(), points);
          },
          py::arg("group"), py::arg("points"));
    m.def("build_f", &build_f, py::arg("group"), py::arg("system"));
    m.def("build_e_prime", &build_e_prime, py::arg("system"));
    m.def("phi", &phi, py::arg("element"), py::arg("frame"));
    m.def("tuple_transporter",
          [](const GroupPtr& g,
             const std::vector<std::pair<RationalPoint, RationalPoint>>& pairs,
             const std::vector<RNElement>& movers) {
              return tuple_transporter(g, pairs, movers);
          },
          py::arg("group"), py::arg("pairs"), py::arg("movers"));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int cases) {
            return render_report_json(run_suite(name, seed, cases));
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("cases") = 0,
        "Run a verification suite; returns the JSON report as a string.");
    m.def("suite_names", &suite_names);
}
