#include <holdring/analysis.hpp>
#include <holdring/carry.hpp>
#include <holdring/catalog.hpp>
#include <holdring/error.hpp>
#include <holdring/quotient.hpp>
#include <holdring/render.hpp>
#include <holdring/ring.hpp>
#include <holdring/serialize.hpp>
#include <holdring/text.hpp>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace holdring;

namespace {

    py::int_ to_py(const Integer& x) { return py::int_(py::str(format_integer(x))); }

    Integer from_py(const py::handle& x) { return parse_integer(py::str(x).cast<std::string>()); }

    py::tuple to_py(const QuadraticInt& z) { return py::make_tuple(to_py(z.a), to_py(z.b)); }

    py::object to_py(const Rational& q) {
        return py::module_::import("fractions").attr("Fraction")(to_py(numerator(q)), to_py(denominator(q)));
    }

    // Accepts an int, an (a, b) pair or element text such as "1+2*w".
    QuadraticInt element_from_py(const py::handle& x, const QuadraticOrder& order) {
        if (py::isinstance<py::str>(x)) {
            return parse_element(x.cast<std::string>(), order);
        }
        if (py::isinstance<py::tuple>(x) || py::isinstance<py::list>(x)) {
            const auto seq = x.cast<py::sequence>();
            if (seq.size() != 2) {
                throw std::invalid_argument("element pair must have two coefficients");
            }
            return {from_py(seq[0]), from_py(seq[1])};
        }
        return {from_py(x), Integer(0)};
    }

    DigitString digits_from_exponents(const std::vector<std::optional<std::int64_t>>& exps, int order) {
        std::vector<Digit> out;
        out.reserve(exps.size());
        for (const auto& e : exps) {
            out.push_back(e ? Digit::root(*e, order) : Digit::zero());
        }
        return DigitString(std::move(out));
    }

    std::vector<std::optional<int>> exponents(const DigitString& s) {
        std::vector<std::optional<int>> out;
        for (const Digit d : s.digits()) {
            out.push_back(d.is_zero() ? std::nullopt : std::optional<int>(d.exponent()));
        }
        return out;
    }

    SystemBinding binding_named(const std::string& name) {
        if (auto b = find_binding(name)) {
            return *b;
        }
        throw std::invalid_argument("no realized system named '" + name + "'");
    }

    NumberSystem system_named(const std::string& name) {
        if (auto s = find_system(name)) {
            return *s;
        }
        throw std::invalid_argument("no system named '" + name + "'");
    }

    py::list elements(const std::vector<QuadraticInt>& zs) {
        py::list out;
        for (const auto& z : zs) {
            out.append(to_py(z));
        }
        return out;
    }

    py::dict report_dict(const ValidationReport& r) {
        py::dict d;
        d["system"] = r.system;
        d["consistency"] = r.consistency;
        d["verdict"] = std::string(to_string(r.verdict));
        d["requested_bound"] = r.requested_bound;
        d["effective_bound"] = r.effective_bound;
        d["witnesses"] = r.witnesses;
        d["failure_count"] = r.failure_count;
        d["witness_failures"] = elements(r.witness_failures);
        py::list cycles;
        for (const auto& c : r.attractor_cycles) {
            cycles.append(elements(c));
        }
        d["attractor_cycles"] = cycles;
        d["absorbing_radius"] = r.absorbing_radius ? py::cast(*r.absorbing_radius) : py::none();
        return d;
    }

    std::string render_ppm(const SystemBinding& b, std::size_t degree, std::size_t width, std::size_t height,
                           bool cells, bool rescale) {
        const auto cloud = tile_points(b, degree);
        if (cells || rescale) {
            const auto set = tile_cells(cloud, b, rescale);
            return encode_ppm(rasterize(set, fit_viewport(set, width, height), width, height));
        }
        return encode_ppm(rasterize(cloud, fit_viewport(cloud.points, width, height), width, height));
    }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Digit-string arithmetic driven by a hold table";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<NonTerminating>(m, "NonTerminating", error.ptr());
    py::register_exception<NoResidueDigit>(m, "NoResidueDigit", error.ptr());
    py::register_exception<NotDivisible>(m, "NotDivisible", error.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", error.ptr());
    py::register_exception<InvalidSystem>(m, "InvalidSystem", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<IoError>(m, "IoError", error.ptr());

    py::class_<DigitString>(m, "DigitString")
        .def(py::init([](const std::vector<std::optional<std::int64_t>>& exps, int order) {
                 return digits_from_exponents(exps, order);
             }),
             py::arg("exponents"), py::arg("order"), "Little-endian exponents; None is the Zero digit.")
        .def("exponents", &exponents)
        .def_property_readonly("degree", [](const DigitString& s) { return s.degree(); })
        .def("__len__", &DigitString::size)
        .def("__eq__", [](const DigitString& a, const DigitString& b) { return a == b; })
        .def("__hash__", [](const DigitString& s) { return py::hash(py::tuple(py::cast(exponents(s)))); })
        .def("__repr__", [](const DigitString& s) {
            std::ostringstream os;
            os << "DigitString(" << py::str(py::cast(exponents(s))).cast<std::string>() << ")";
            return os.str();
        });

    py::class_<NumberSystem>(m, "System")
        .def_property_readonly("name", &NumberSystem::name)
        .def_property_readonly("order", &NumberSystem::order)
        .def_property_readonly("residue_field_size", &NumberSystem::residue_field_size)
        .def_property_readonly("holds",
                               [](const NumberSystem& s) {
                                   return std::vector<DigitString>(s.holds().begin(), s.holds().end());
                               })
        .def("parse", [](const NumberSystem& s, const std::string& text) { return parse_digits(text, s.order()); })
        .def("format", [](const NumberSystem& s, const DigitString& d) { return format_digits(d, s.order()); })
        .def("to_json", [](const NumberSystem& s) { return to_json(s).dump(); })
        .def("__eq__", [](const NumberSystem& a, const NumberSystem& b) { return a == b; })
        .def("__repr__", [](const NumberSystem& s) { return "System('" + s.name() + "')"; });

    py::class_<SystemBinding>(m, "Binding")
        .def_property_readonly("name", &SystemBinding::name)
        .def_property_readonly("system", &SystemBinding::system)
        .def_property_readonly("generator", [](const SystemBinding& b) { return to_py(b.ring().generator()); })
        .def("encode",
             [](const SystemBinding& b, const py::object& z, std::optional<std::size_t> cap) {
                 return encode(element_from_py(z, b.ring().order()), b.ring(), cap);
             },
             py::arg("z"), py::arg("cap") = py::none())
        .def("eval", [](const SystemBinding& b, const DigitString& s) { return to_py(eval_sigma(s, b.ring())); })
        .def("format_element",
             [](const SystemBinding& b, const py::object& z) {
                 const auto& order = b.ring().order();
                 return format_element(element_from_py(z, order), order);
             })
        .def("to_json", [](const SystemBinding& b) { return to_json(b).dump(); })
        .def("__repr__", [](const SystemBinding& b) { return "Binding('" + b.name() + "')"; });

    m.def("catalog", [] { return catalog(); });
    m.def("systems", &catalog_systems);
    m.def("binding", &binding_named, py::arg("name"));
    m.def("system", &system_named, py::arg("name"));

    m.def(
        "add", [](const DigitString& a, const DigitString& b, const NumberSystem& s,
                  std::optional<std::size_t> cap) { return add(a, b, s, cap); },
        py::arg("a"), py::arg("b"), py::arg("system"), py::arg("cap") = py::none());
    m.def(
        "mul", [](const DigitString& a, const DigitString& b, const NumberSystem& s,
                  std::optional<std::size_t> cap) { return mul(a, b, s, cap); },
        py::arg("a"), py::arg("b"), py::arg("system"), py::arg("cap") = py::none());
    m.def(
        "add_mod",
        [](const DigitString& a, const DigitString& b, std::size_t mod, const NumberSystem& s, bool faithful) {
            return faithful ? add_mod_faithful(a, b, mod, s) : add_mod(a, b, mod, s);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("system"), py::arg("faithful") = false);
    m.def("mul_mod", &mul_mod, py::arg("a"), py::arg("b"), py::arg("m"), py::arg("system"));

    m.def(
        "structure_probe",
        [](const NumberSystem& s, std::size_t mod) {
            const auto sig = structure_probe(s, mod);
            py::dict d;
            d["cardinality"] = sig.cardinality;
            d["characteristic"] = sig.characteristic;
            d["order_histogram"] = sig.order_histogram;
            return d;
        },
        py::arg("system"), py::arg("m"));

    m.def(
        "attractor_test",
        [](const SystemBinding& b, std::int64_t bound) { return report_dict(attractor_test(b, bound)); },
        py::arg("binding"), py::arg("bound") = 60);

    m.def(
        "search_quadratic",
        [](int n, std::int64_t bound) {
            const auto result = search_quadratic(n, bound);
            py::list generators;
            for (const auto& g : result.generators) {
                py::dict d;
                d["label"] = g.label;
                d["trace"] = g.trace;
                d["norm"] = g.norm;
                d["rational"] = g.rational;
                d["field"] = g.field;
                generators.append(d);
            }
            py::list rejected;
            for (const auto& r : result.rejected) {
                py::dict d;
                d["label"] = r.label;
                d["trace"] = r.trace;
                d["norm"] = r.norm;
                d["rational"] = r.rational;
                d["verdict"] = std::string(to_string(r.verdict));
                rejected.append(d);
            }
            py::dict d;
            d["generators"] = generators;
            d["rejected"] = rejected;
            d["fields"] = result.fields();
            return d;
        },
        py::arg("n"), py::arg("bound") = 60);

    m.def(
        "degree_table",
        [](std::size_t d_max) {
            py::list rows;
            for (const auto& r : degree_table(d_max)) {
                rows.append(py::make_tuple(r.degree, r.min, r.max));
            }
            return rows;
        },
        py::arg("d_max"));
    m.def("negabinary_bound", [](unsigned n) { return to_py(negabinary_bound(n)); }, py::arg("n"));

    m.def(
        "check_bounds",
        [](std::int64_t z_max, std::size_t d_max) {
            const auto r = check_bounds(z_max, d_max);
            py::list cumulative;
            for (const auto& row : r.cumulative) {
                py::dict d;
                d["degree"] = row.degree;
                d["min"] = row.min;
                d["max"] = row.max;
                d["distinct"] = row.distinct;
                d["expected_low"] = to_py(row.expected_low);
                d["expected_high"] = to_py(row.expected_high);
                d["contiguous"] = row.contiguous;
                d["matches"] = row.matches();
                cumulative.append(d);
            }
            py::dict d;
            d["z_max"] = r.z_max;
            d["checked"] = r.checked;
            d["violations"] = r.violations;
            d["min_slack"] = r.min_slack;
            d["cumulative"] = cumulative;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("z_max"), py::arg("d_max") = 12);

    m.def(
        "plus_one_growth",
        [](const NumberSystem& s, std::size_t trials, std::size_t max_degree, std::uint64_t seed,
           std::optional<std::size_t> allowed, bool side_condition) {
            const auto r = plus_one_growth(s, trials, max_degree, seed, allowed, side_condition);
            py::dict d;
            d["trials"] = r.trials;
            d["max_growth"] = r.max_growth;
            d["allowed_growth"] = r.allowed_growth;
            d["growth_violations"] = r.growth_violations;
            d["side_condition_violations"] = r.side_condition_violations;
            d["counterexamples"] = r.counterexamples;
            return d;
        },
        py::arg("system"), py::arg("trials") = 10000, py::arg("max_degree") = 10, py::arg("seed") = 1,
        py::arg("allowed_growth") = py::none(), py::arg("side_condition") = false);

    m.def(
        "tile_points",
        [](const SystemBinding& b, std::size_t degree) {
            const auto cloud = tile_points(b, degree);
            py::dict d;
            d["points"] = cloud.points;
            d["string_degree"] = std::vector<int>(cloud.string_degree.begin(), cloud.string_degree.end());
            d["collisions"] = cloud.collisions;
            return d;
        },
        py::arg("binding"), py::arg("degree"));

    m.def(
        "render_ppm",
        [](const SystemBinding& b, std::size_t degree, std::size_t width, std::size_t height, bool cells,
           bool rescale) { return py::bytes(render_ppm(b, degree, width, height, cells, rescale)); },
        py::arg("binding"), py::arg("degree"), py::arg("width") = 800, py::arg("height") = 800,
        py::arg("cells") = false, py::arg("rescale") = false);

    m.def("figure_presets", [] {
        py::list out;
        for (const auto& p : figure_presets()) {
            py::dict d;
            d["id"] = p.id;
            d["system"] = p.system;
            d["degree"] = p.degree;
            d["cells"] = p.cells;
            d["caption"] = p.caption;
            out.append(d);
        }
        return out;
    });
}
