#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sigmapi/annotate.hpp"
#include "sigmapi/cli.hpp"
#include "sigmapi/compose.hpp"
#include "sigmapi/decide.hpp"
#include "sigmapi/factor.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/syntax.hpp"

namespace py = pybind11;
using namespace sigmapi;

namespace {

// Types may be passed as ObjectType or as text.
ObjectType as_type(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_type(h.cast<std::string>());
  return h.cast<ObjectType>();
}

py::dict verdict_dict(const Verdict& v, const DecideStats* st) {
  py::dict d;
  d["outcome"] = outcome_name(v.outcome);
  d["equal"] = v.equal();
  if (v.witness) {
    d["witness"] = witness_name(v.witness->kind);
    d["witness_term"] = v.witness->term ? py::cast(*v.witness->term) : py::none();
  }
  if (v.outcome == Outcome::NotEqual) {
    d["reason"] = reason_name(v.reason);
    d["components"] = v.components;
  }
  if (st) d["steps"] = st->steps();
  return d;
}

py::object opt_term(const std::optional<Term>& t) { return t ? py::cast(*t) : py::none(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equality of terms in free categories with finite sums and products";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  auto type_error = py::register_exception<TypingException>(m, "TypingError", PyExc_TypeError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  (void)parse_error;
  (void)type_error;

  py::class_<ObjectType>(m, "Type")
      .def(py::init([](const std::string& s) { return parse_type(s); }))
      .def_property_readonly("size", &ObjectType::size)
      .def_property_readonly("height", &ObjectType::height)
      .def_property_readonly("pointed", &ObjectType::pointed)
      .def_property_readonly("copointed", &ObjectType::copointed)
      .def("__str__", &ObjectType::to_string)
      .def("__repr__", [](const ObjectType& t) { return "Type('" + t.to_string() + "')"; })
      .def("__eq__", [](const ObjectType& a, const ObjectType& b) { return a == b; })
      .def("__hash__", [](const ObjectType& t) { return t.hash(); });

  py::class_<Term>(m, "Term")
      .def_property_readonly("dom", &Term::dom)
      .def_property_readonly("cod", &Term::cod)
      .def_property_readonly("size", &Term::size)
      .def_property_readonly("height", &Term::height)
      .def_property_readonly("kind", [](const Term& t) { return kind_name(t.kind()); })
      .def("__str__", &Term::to_string)
      .def("__repr__", [](const Term& t) {
        return "Term('" + t.to_string() + "' : " + t.dom().to_string() + " -> " + t.cod().to_string() + ")";
      })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return t.hash(); });

  py::class_<GeneratorGraph>(m, "Graph")
      .def(py::init<>())
      .def("add_node", &GeneratorGraph::add_node)
      .def("add_edge", &GeneratorGraph::add_edge, py::arg("name"), py::arg("source"), py::arg("target"));

  m.def("parse_type", [](const std::string& s) { return parse_type(s); });
  m.def(
      "term",
      [](const std::string& text, const py::handle& dom, const py::handle& cod, const GeneratorGraph& g) {
        return check_term(parse_term(text), as_type(dom), as_type(cod), g);
      },
      py::arg("text"), py::arg("dom"), py::arg("cod"), py::arg("graph") = GeneratorGraph{},
      "Parses, type-checks and cut-eliminates a term.");
  m.def(
      "load_module",
      [](const std::string& path) {
        Module mod = load_module(path);
        py::dict terms;
        for (const auto& d : mod.terms) terms[py::str(d.name)] = check_term(d.body, d.dom, d.cod, mod.graph);
        return py::make_tuple(mod.graph, terms);
      },
      "Returns (graph, {name: term}) for a .spt file.");
  m.def("compose", &compose, "f ; g (f first).");
  m.def("identity", [](const py::handle& t) { return identity(as_type(t)); });

  m.def("annotate", [](const Term& t) {
    std::size_t visits = 0;
    AnnotatedTerm a = annotate(t, &visits);
    py::dict d;
    d["pointed"] = a.pointed();
    d["copointed"] = a.copointed();
    d["point_witness"] = opt_term(a.annotation().point_witness);
    d["copoint_witness"] = opt_term(a.annotation().copoint_witness);
    d["visits"] = visits;
    return d;
  });
  m.def("factor_inj", [](const Term& t, int j) {
    auto h = factor_inj(annotate(t), j);
    return h ? py::cast(h->term()) : py::none();
  });
  m.def("factor_proj", [](const Term& t, int i) {
    auto h = factor_proj(annotate(t), i);
    return h ? py::cast(h->term()) : py::none();
  });
  m.def("decide", [](const Term& f, const Term& g) {
    DecideResult r = decide_with_stats(f, g);
    return verdict_dict(r.verdict, &r.stats);
  });
  m.def("equivalent", [](const Term& f, const Term& g) {
    DecideStats st;
    Verdict v = equivalent(annotate(f), annotate(g), &st);
    return verdict_dict(v, &st);
  });
  m.def("injection_monic", [](const py::handle& sum, int j) { return injection_monic(as_type(sum), j); });
  m.def("projection_epic", [](const py::handle& prod, int i) { return projection_epic(as_type(prod), i); });

  py::class_<Universe>(m, "Oracle")
      .def(py::init([](const GeneratorGraph& g, std::uint64_t guard, std::size_t max_path) {
             return Universe(g, OracleOptions{guard, max_path});
           }),
           py::arg("graph") = GeneratorGraph{}, py::arg("guard") = 1'000'000, py::arg("max_path") = 4)
      .def("enumerate", [](Universe& u, const py::handle& X, const py::handle& A) { return u.enumerate(as_type(X), as_type(A)); })
      .def("class_count", [](Universe& u, const py::handle& X, const py::handle& A) { return u.class_count(as_type(X), as_type(A)); })
      .def("summary",
           [](Universe& u, const py::handle& X, const py::handle& A) {
             HomsetSummary s = u.summary(as_type(X), as_type(A));
             py::dict d;
             d["count"] = s.count;
             d["max_size"] = s.max_size;
             d["max_height"] = s.max_height;
             return d;
           })
      .def("same_class", &Universe::same_class)
      .def("class_of",
           [](Universe& u, const Term& t) {
             EqClass c = u.class_of(t);
             return py::make_tuple(c.canonical, c.members);
           },
           "Returns (canonical member, all members).")
      .def("find_bouncers", &Universe::find_bouncers, py::arg("f_side"), py::arg("g_side"), py::arg("i"), py::arg("j"))
      .def("path_length", [](Universe& u, const Term& f, const Term& g) -> py::object {
        auto p = u.cardinal_path(f, g);
        return p ? py::cast(p->steps()) : py::none();
      });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
