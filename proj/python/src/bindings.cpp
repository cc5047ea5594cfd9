// Python bindings. Matrices cross the boundary in the same shape as the JSON
// files: nested lists of coordinate strings, e.g. [[["1","0"], ["0","-1/2"]]].

#include "hmorita/errors.hpp"
#include "hmorita/harness.hpp"
#include "hmorita/io.hpp"
#include "hmorita/morita.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hmorita;

namespace {

nlohmann::json to_json(const py::object& obj) {
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return nlohmann::json::parse(text);
}

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Matrix matrix_arg(const py::object& obj, const AlgebraHandle& alg) { return io::decode_matrix(to_json(obj), alg); }

AlgebraHandle algebra_arg(const py::object& obj) { return io::decode_algebra(to_json(obj)); }

py::object epsilon_out(const Epsilon& eps) {
  if (!eps) return py::none();
  return py::int_(to_int(*eps));
}

Epsilon epsilon_arg(const std::optional<int>& eps) {
  if (!eps) return std::nullopt;
  if (*eps == 1) return Sign::Plus;
  if (*eps == -1) return Sign::Minus;
  throw py::value_error("epsilon must be 1, -1 or None");
}

// pybind11 cannot hold shared_ptr<const T>, so the handle is boxed.
struct PyInvolution {
  InvolutionHandle handle;
};

ProbeMode mode(bool strict) { return strict ? ProbeMode::Strict : ProbeMode::Default; }

py::dict report_dict(const EquivalenceReport& r) {
  py::dict d;
  d["input_side"] = to_string(r.input_side);
  d["output_side"] = to_string(r.output_side);
  d["input_epsilon"] = epsilon_out(r.input_epsilon);
  d["output_epsilon"] = epsilon_out(r.output_epsilon);
  d["witness"] = r.witness ? from_json(io::encode_matrix(*r.witness)) : py::none();
  d["exact_roundtrip"] = r.exact_roundtrip;
  d["depends_on_s_choice"] = r.depends_on_s_choice;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hmorita, m) {
  m.doc() = "Exact hermitian Morita theory over Q, quadratic fields and rational quaternion algebras";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<MathError>(m, "MathError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<PyInvolution>(m, "Involution")
      .def(py::init([](const py::object& algebra, const py::object& s) {
             return PyInvolution{make_involution(matrix_arg(s, algebra_arg(algebra)))};
           }),
           py::arg("algebra"), py::arg("S"))
      .def_property_readonly("n", [](const PyInvolution& inv) { return inv.handle->n(); })
      .def_property_readonly("epsilon0", [](const PyInvolution& inv) { return to_int(inv.handle->epsilon0()); })
      .def_property_readonly("S",
                             [](const PyInvolution& inv) { return from_json(io::encode_matrix(inv.handle->S())); })
      .def("apply", [](const PyInvolution& inv, const py::object& x) {
        return from_json(io::encode_matrix(inv.handle->apply(matrix_arg(x, inv.handle->algebra()))));
      });

  py::class_<FormRecord>(m, "Form")
      .def_static("from_json", [](const std::string& text) { return io::read_form(text); })
      .def("to_json", [](const FormRecord& f) { return io::write_form(f); })
      .def_property_readonly("side", [](const FormRecord& f) { return to_string(f.side()); })
      .def_property_readonly("k", &FormRecord::k)
      .def_property_readonly("n", &FormRecord::n)
      .def_property_readonly("epsilon", [](const FormRecord& f) { return epsilon_out(f.epsilon()); })
      .def_property_readonly("algebra", [](const FormRecord& f) { return from_json(io::encode_algebra(*f.algebra())); })
      .def_property_readonly("gram", [](const FormRecord& f) { return from_json(io::encode_matrix(f.gram())); })
      .def("symmetry", [](const FormRecord& f) { return to_string(check_symmetry(f)); })
      .def("is_nonsingular", &is_nonsingular)
      .def("evaluate",
           [](const FormRecord& f, const py::object& x, const py::object& y) {
             return from_json(io::encode_matrix(evaluate(f, matrix_arg(x, f.algebra()), matrix_arg(y, f.algebra()))));
           })
      .def("__eq__", [](const FormRecord& a, const FormRecord& b) { return a == b; })
      .def("__repr__", [](const FormRecord& f) {
        return "<Form side=" + to_string(f.side()) + " k=" + std::to_string(f.k()) + " n=" + std::to_string(f.n()) +
               " epsilon=" + epsilon_to_string(f.epsilon()) + ">";
      });

  m.def("scale", &scale_form, py::arg("form"), "Star side to bar-transpose side: h -> S^-1 h");
  m.def(
      "unscale", [](const FormRecord& f, const PyInvolution& inv) { return unscale_form(f, inv.handle); },
      py::arg("form"), py::arg("involution"));
  m.def(
      "reduce",
      [](const FormRecord& f, bool strict) {
        Reduction r = morita_reduce(f, mode(strict));
        return py::make_tuple(r.form, report_dict(r.report));
      },
      py::arg("form"), py::arg("strict") = false, "Form over (M_n(D), *) to a form over (D, -), with a report");
  m.def(
      "lift", [](const FormRecord& f, const PyInvolution& inv) { return morita_lift(f, inv.handle); },
      py::arg("form"), py::arg("involution"));
  m.def("lift_to_bar_t", &lift_form, py::arg("form"), py::arg("n"));
  m.def("extract", [](const FormRecord& f, bool strict) { return extract_form(f, mode(strict)); }, py::arg("form"),
        py::arg("strict") = false);
  m.def(
      "extract_gram",
      [](const py::function& h, std::size_t k, std::size_t n, const py::object& algebra, bool strict) {
        const AlgebraHandle alg = algebra_arg(algebra);
        const FormEvaluator evaluator = [&](const Matrix& x, const Matrix& y) {
          py::object value = h(from_json(io::encode_matrix(x)), from_json(io::encode_matrix(y)));
          return matrix_arg(value, alg);
        };
        return from_json(io::encode_matrix(extract_gram(evaluator, k, n, alg, mode(strict))));
      },
      py::arg("h"), py::arg("k"), py::arg("n"), py::arg("algebra"), py::arg("strict") = false,
      "Gram matrix of a -^t-sesquilinear evaluator h(x, y) on k x n matrices");
  m.def("orthogonal_sum", &orthogonal_sum);
  m.def(
      "rescale_involution",
      [](const FormRecord& f, const std::string& lambda) { return rescale_involution(f, ExactRational::parse(lambda)); },
      py::arg("form"), py::arg("lambda_"));
  m.def(
      "form_over_d",
      [](const py::object& algebra, const py::object& gram, std::optional<int> eps) {
        return FormRecord::over_d(matrix_arg(gram, algebra_arg(algebra)), epsilon_arg(eps));
      },
      py::arg("algebra"), py::arg("gram"), py::arg("epsilon") = py::none());
  m.def(
      "form_over_star",
      [](const py::object& gram, const PyInvolution& inv, std::optional<int> eps) {
        return FormRecord::over_star(matrix_arg(gram, inv.handle->algebra()), inv.handle, epsilon_arg(eps));
      },
      py::arg("gram"), py::arg("involution"), py::arg("epsilon") = py::none());
  m.def(
      "run_fuzz",
      [](std::uint64_t seed, std::size_t trials, bool strict) {
        FuzzReport r = run_fuzz(seed, trials, mode(strict));
        return py::make_tuple(r.ok(), serialize_fuzz_report(r));
      },
      py::arg("seed") = 42, py::arg("trials") = 20, py::arg("strict") = false);
}
