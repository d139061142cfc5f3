#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistcolor/coloring.hpp"
#include "twistcolor/io.hpp"
#include "twistcolor/laurent.hpp"
#include "twistcolor/moves.hpp"

namespace py = pybind11;
using namespace twistcolor;

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::malformed: return "malformed";
    case ErrorKind::axiom_violation: return "axiom_violation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::resource: return "resource";
  }
  return "unknown";
}

py::object to_py_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

Structure structure_of(const py::handle& h) {
  if (py::isinstance<FiniteQuandle>(h)) return h.cast<FiniteQuandle>();
  if (py::isinstance<VTStructure>(h)) return h.cast<VTStructure>();
  if (py::isinstance<Biquandle>(h)) return h.cast<Biquandle>();
  throw Error(ErrorKind::invalid_argument, "expected a Quandle, Biquandle or VTStructure");
}

py::object structure_to_py(Structure s) {
  return std::visit([](auto&& v) { return py::cast(std::move(v)); }, std::move(s));
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<MoveFamily> families_from(const std::vector<std::string>& names) {
  std::vector<MoveFamily> out;
  for (const std::string& n : names) {
    auto f = parse_family(n);
    if (!f) throw Error(ErrorKind::invalid_argument, "unknown move family " + n);
    out.push_back(*f);
  }
  if (out.empty()) out.assign(kAllMoveFamilies.begin(), kAllMoveFamilies.end());
  return out;
}

py::dict report_dict(const MoveReport& r) {
  py::dict out;
  out["pass"] = r.all_pass();
  py::list fams;
  for (const FamilyReport& f : r.families) {
    py::dict d;
    d["family"] = std::string(family_name(f.family));
    d["pass"] = f.pass();
    py::list failing;
    for (const VariantResult& v : f.variants)
      if (!v.pass) failing.append(v.id);
    d["variants"] = f.variants.size();
    d["failing_variants"] = failing;
    fams.append(d);
  }
  out["families"] = fams;
  return out;
}

}  // namespace

PYBIND11_MODULE(_twistcolor, m) {
  m.doc() = "Finite biquandles with v- and t-structures and colorings of twisted diagrams";

  static py::exception<Error> error(m, "TwistcolorError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteQuandle>(m, "Quandle")
      .def(py::init(&FiniteQuandle::from_rows), py::arg("rows"))
      .def_property_readonly("size", &FiniteQuandle::size)
      .def("op", &FiniteQuandle::op)
      .def("dual_op", &FiniteQuandle::dual_op)
      .def("rows", &FiniteQuandle::rows)
      .def("is_quandle", [](const FiniteQuandle& q) { return check_quandle(q).all_pass(); })
      .def("is_involutory", [](const FiniteQuandle& q) { return is_involutory(q); })
      .def("__len__", &FiniteQuandle::size)
      .def("__eq__", [](const FiniteQuandle& a, const FiniteQuandle& b) { return a == b; })
      .def("__repr__", [](const FiniteQuandle& q) { return "<Quandle of order " + std::to_string(q.size()) + ">"; });

  py::class_<Biquandle>(m, "Biquandle")
      .def_property_readonly("size", &Biquandle::size)
      .def("__call__", [](const Biquandle& x, Elem a, Elem b) {
        Pair p = x(a, b);
        return std::make_pair(p.first, p.second);
      })
      .def("is_biquandle", &Biquandle::is_biquandle)
      .def("__repr__", [](const Biquandle& x) { return "<Biquandle of order " + std::to_string(x.size()) + ">"; });

  py::class_<VTStructure>(m, "VTStructure")
      .def_property_readonly("size", &VTStructure::size)
      .def_property_readonly("pair_base", &VTStructure::pair_base)
      .def_property_readonly("base", &VTStructure::base)
      .def("R", [](const VTStructure& s, Elem a, Elem b) {
        Pair p = s.R()(a, b);
        return std::make_pair(p.first, p.second);
      })
      .def("V", [](const VTStructure& s, Elem a, Elem b) {
        Pair p = s.V()(a, b);
        return std::make_pair(p.first, p.second);
      })
      .def("T", [](const VTStructure& s, Elem a) { return s.T().at(a); })
      .def("verified", &VTStructure::verified)
      .def("certificate", &VTStructure::certificate)
      .def("reports", [](const VTStructure& s) {
        py::dict d;
        d["biquandle"] = to_py(to_json(s.biquandle_report()));
        d["v"] = to_py(to_json(s.v_report()));
        d["t"] = to_py(to_json(s.t_report()));
        return d;
      })
      .def("__repr__", [](const VTStructure& s) { return "<VTStructure of order " + std::to_string(s.size()) + ">"; });

  py::class_<TwistedDiagram>(m, "Diagram")
      .def_static("parse", [](const std::string& text) { return parse_diagram(text); }, py::arg("text"))
      .def("__str__", [](const TwistedDiagram& d) { return serialize_diagram(d); })
      .def_property_readonly("node_count", [](const TwistedDiagram& d) { return d.nodes().size(); })
      .def_property_readonly("edge_count", &TwistedDiagram::edge_count)
      .def_property_readonly("free_loops", &TwistedDiagram::free_loops)
      .def_property_readonly("edge_names", &TwistedDiagram::edge_names)
      .def("has_bars", &TwistedDiagram::has_bars)
      .def("without_bars", [](const TwistedDiagram& d) { return remove_bars(d); })
      .def("isomorphic", [](const TwistedDiagram& a, const TwistedDiagram& b) { return isomorphic(a, b); })
      .def("__repr__", [](const TwistedDiagram& d) {
        return "<Diagram with " + std::to_string(d.nodes().size()) + " nodes>";
      });

  m.def("dihedral", &make_dihedral_quandle, py::arg("n"));
  m.def("alexander", &make_alexander_quandle, py::arg("n"), py::arg("t"));
  m.def("derived", &derived_biquandle, py::arg("quandle"));
  m.def("standard_twisted_product", &standard_twisted_product, py::arg("quandle"));
  m.def("twisted_product", &twisted_product, py::arg("biquandle"), py::arg("f"), py::arg("g"));
  m.def("remark_structure", &remark_structure, py::arg("quandle"));

  m.def("load_structure", [](const std::string& text, bool verify) { return structure_to_py(parse_structure(text, verify)); },
        py::arg("text"), py::arg("verify") = true);
  m.def("dump_structure", [](const py::object& s) { return serialize_structure(structure_of(s)); }, py::arg("structure"));

  m.def("fm", &make_fm, py::arg("m"));
  m.def("random_diagram",
        [](std::uint64_t seed, std::size_t nodes, bool classical, bool virtual_crossings, bool bars) {
          RandomDiagramOptions o;
          o.nodes = nodes;
          o.classical = classical;
          o.virtual_crossings = virtual_crossings;
          o.bars = bars;
          return random_diagram(seed, o);
        },
        py::arg("seed"), py::arg("nodes") = 4, py::arg("classical") = true, py::arg("virtual_crossings") = true,
        py::arg("bars") = true);

  m.def("count_colorings",
        [](const TwistedDiagram& d, const py::object& obj, bool force, std::uint64_t node_budget) {
          const Structure s = structure_of(obj);
          ColoringOptions o;
          o.force = force;
          o.node_budget = node_budget;
          if (!force && !structure_verified(s)) throw Error(ErrorKind::axiom_violation, "structure fails its axioms");
          return to_py_int(count_colorings(d, coloring_rules(s), o).count);
        },
        py::arg("diagram"), py::arg("structure"), py::arg("force") = false,
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("brute_force_colorings",
        [](const TwistedDiagram& d, const py::object& s, std::uint64_t cap) {
          return to_py_int(brute_force_colorings(d, coloring_rules(structure_of(s)), cap));
        },
        py::arg("diagram"), py::arg("structure"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("delta_set",
        [](const FiniteQuandle& q, std::size_t mm) {
          std::vector<std::pair<Elem, Elem>> out;
          for (Pair p : delta_set(q, mm).members) out.emplace_back(p.first, p.second);
          return out;
        },
        py::arg("quandle"), py::arg("m"));
  m.def("detect_nonvirtual",
        [](const TwistedDiagram& d, const FiniteQuandle& q) {
          NonvirtualVerdict v = detect_nonvirtual(d, q);
          py::dict out;
          out["count"] = to_py_int(v.count);
          out["threshold"] = to_py_int(v.threshold);
          out["nonvirtual"] = v.nonvirtual;
          return out;
        },
        py::arg("diagram"), py::arg("quandle"));
  m.def("product_formula",
        [](const TwistedDiagram& d, const FiniteQuandle& q) {
          ProductFormulaCheck c = check_product_formula(d, q);
          py::dict out;
          out["lhs"] = to_py_int(c.lhs);
          out["upper"] = to_py_int(c.upper);
          out["lower"] = to_py_int(c.lower);
          out["equal"] = c.equal;
          return out;
        },
        py::arg("diagram"), py::arg("quandle"));
  m.def("check_moves",
        [](const py::object& s, const std::vector<std::string>& families) {
          return report_dict(check_move_invariance(coloring_rules(structure_of(s)), families_from(families)));
        },
        py::arg("structure"), py::arg("families") = std::vector<std::string>{});
  m.def("fm_jones",
        [](std::size_t mm) {
          LaurentPolynomial p = fm_twisted_jones_closed_form(mm);
          py::dict terms;
          for (const auto& [e, c] : p.coefficients()) terms[py::int_(e)] = to_py_int(c);
          return std::make_pair(p.to_string(), terms);
        },
        py::arg("m"));
}
