#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgtool/bruck_reilly.hpp"
#include "sgtool/construct.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/enumerate.hpp"
#include "sgtool/green.hpp"
#include "sgtool/io.hpp"
#include "sgtool/symbolic.hpp"

namespace py = pybind11;
using namespace sgtool;

namespace {

  using code_t = std::vector<std::int64_t>;

  // Structured results cross as JSON text; the package decodes them.
  std::string dump(json const& j) {
    return j.dump();
  }

  finite_semigroup from_rows(std::vector<std::vector<element_type>> const& rows) {
    std::vector<element_type> flat;
    for (auto const& r : rows) {
      if (r.size() != rows.size()) {
        throw sgtool_error(error_kind::not_square, "rows must all have length n");
      }
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return make_semigroup(rows.size(), std::move(flat));
  }

  std::vector<std::vector<element_type>> rows_of(finite_semigroup const& S) {
    std::vector<std::vector<element_type>> out(S.size());
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        out[a].push_back(S.product(a, b));
      }
    }
    return out;
  }

  std::vector<code_t> codes(std::vector<sym_element> const& v) {
    std::vector<code_t> out;
    for (auto const& a : v) {
      out.push_back(a.code);
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_sgtool, m) {
  m.doc() = "Finite semigroups, symbolic families and weak right noetherianity";

  static py::exception<sgtool_error> error(m, "SgtoolError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (sgtool_error const& e) {
      py::object err = py::reinterpret_borrow<py::object>(error)(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), err.ptr());
    }
  });

  py::class_<finite_semigroup>(m, "Semigroup")
      .def(py::init(&from_rows), py::arg("table"))
      .def_property_readonly("order", &finite_semigroup::size)
      .def_property_readonly("table", &rows_of)
      .def_property_readonly("labels", &finite_semigroup::labels)
      .def_property_readonly("identity", &finite_semigroup::identity)
      .def_property_readonly("zero", &finite_semigroup::zero)
      .def("product", &finite_semigroup::product)
      .def("_flags", [](finite_semigroup const& S) { return dump(to_json(S.flags())); })
      .def("_green", [](finite_semigroup const& S) { return dump(green_summary(S, green(S))); })
      .def("right_ideals",
           [](finite_semigroup const& S) { return all_right_ideals(S, green(S)); })
      .def("idempotents", [](finite_semigroup const& S) { return idempotents(S); })
      .def("to_json", [](finite_semigroup const& S) { return dump(cayley_to_json(S)); })
      .def("__len__", &finite_semigroup::size)
      .def("__eq__", [](finite_semigroup const& a, finite_semigroup const& b) { return a == b; })
      .def("__repr__",
           [](finite_semigroup const& S) {
             return "<Semigroup of order " + std::to_string(S.size()) + ">";
           });

  m.def("builtin", &builtin_semigroup, py::arg("id"));
  m.def("direct_product", &direct_product);
  m.def("brandt", &brandt, py::arg("group"), py::arg("I"));
  m.def(
      "rees_matrix",
      [](finite_semigroup const& S, std::size_t I, std::size_t J,
         std::vector<std::vector<std::optional<std::int64_t>>> const& P, bool with_zero) {
        sandwich_matrix M{J, I, {}};
        for (auto const& row : P) {
          for (auto const& x : row) {
            M.entries.push_back(x ? *x : sandwich_zero);
          }
        }
        return rees_matrix(S, I, J, M, with_zero);
      },
      py::arg("S"), py::arg("I"), py::arg("J"), py::arg("P"), py::arg("with_zero") = false);
  m.def("is_isomorphic",
        [](finite_semigroup const& a, finite_semigroup const& b) { return is_isomorphic(a, b); });
  m.def(
      "enumerate",
      [](std::size_t order, std::size_t jobs, bool allow_order_five) {
        return enumerate_semigroups(order, jobs, allow_order_five).semigroups;
      },
      py::arg("order"), py::arg("jobs") = 1, py::arg("allow_order_five") = false);
  m.def(
      "_br_decide",
      [](finite_semigroup const& M, std::vector<element_type> const& theta) {
        return dump(to_json(br_wrn_decide(M, theta)));
      });

  py::class_<symbolic_family>(m, "Family")
      .def_static("free_semigroup", &symbolic_family::free_semigroup)
      .def_static("free_commutative", &symbolic_family::free_commutative)
      .def_static("bicyclic", &symbolic_family::bicyclic)
      .def_static("polycyclic", &symbolic_family::polycyclic)
      .def_static("bruck_reilly", &symbolic_family::bruck_reilly)
      .def_static("null", &symbolic_family::null, py::arg("size") = py::none())
      .def_static("trivial_free_product", &symbolic_family::trivial_free_product)
      .def_static("z2_free_product_sl2", &symbolic_family::z2_free_product_sl2)
      .def_static("collapsing_left_zero_chain", &symbolic_family::collapsing_left_zero_chain)
      .def_static("growing_left_zero_chain", &symbolic_family::growing_left_zero_chain)
      .def_static("disjoint_monogenic_chain", &symbolic_family::disjoint_monogenic_chain)
      .def_property_readonly("variant",
                             [](symbolic_family const& F) { return to_string(F.kind); })
      .def("multiply",
           [](symbolic_family const& F, code_t a, code_t b) {
             return sym_multiply(F, {std::move(a)}, {std::move(b)}).code;
           })
      .def("r_leq",
           [](symbolic_family const& F, code_t a, code_t b) {
             return sym_r_leq(F, {std::move(a)}, {std::move(b)});
           })
      .def("format",
           [](symbolic_family const& F, code_t a) { return to_string(F, {std::move(a)}); })
      .def("elements",
           [](symbolic_family const& F, std::size_t bound) {
             return codes(sym_enumerate(F, bound));
           })
      .def("witness",
           [](symbolic_family const& F, std::size_t k) { return codes(antichain_witness(F, k)); })
      .def("_verdict", [](symbolic_family const& F) { return dump(to_json(sym_wrn_verdict(F))); })
      .def("to_json", [](symbolic_family const& F) { return dump(family_to_json(F)); });

  m.def("load", [](std::string const& path) -> py::object {
    auto v = load_document(path);
    if (auto S = std::get_if<finite_semigroup>(&v)) {
      return py::cast(*S);
    }
    return py::cast(std::get<symbolic_family>(v));
  });
}
