#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"
#include "spnkit/selftest.hpp"
#include "spnkit/serialize.hpp"
#include "spnkit/signgraph.hpp"
#include "spnkit/stqp.hpp"
#include "spnkit/text_io.hpp"

namespace py = pybind11;
using namespace spnkit;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

SymMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw Error(ErrorKind::InvalidArgument, "expected a square two-dimensional array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return SymMatrix(n, std::vector<double>(a.data(), a.data() + n * n));
}

Array to_array(const SymMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.n());
  Array out({n, n});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

// Reports go through the JSON layer so Python sees the same fields as the CLI.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict outcome_dict(const SpnOutcome& out) {
  py::dict d;
  if (const auto* c = std::get_if<SpnCertificate>(&out)) {
    d["outcome"] = "certificate";
    d["psd_part"] = to_array(c->psd_part);
    d["nonneg_part"] = to_array(c->nonneg_part);
    d["residual"] = c->residual;
    py::list trace;
    for (const TraceStep& s : c->trace) trace.append(s.to_string());
    d["trace"] = trace;
  } else {
    const auto& w = std::get<DnnWitness>(out);
    d["outcome"] = "witness";
    d["x"] = to_array(w.x);
    d["objective"] = w.objective;
  }
  return d;
}

py::dict bisection_dict(const BisectionResult& b) {
  py::dict d;
  d["value"] = b.value;
  d["lo"] = b.lo;
  d["hi"] = b.hi;
  d["undecided"] = b.undecided;
  d["probes"] = b.probes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spnkit, m) {
  m.doc() = "Copositive, SPN and DNN certificates for symmetric matrices";

  // Owned by the module; the extra reference is never released.
  static py::handle error_type = py::exception<Error>(m, "SpnkitError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("eps_ord", &Tolerances::eps_ord)
      .def_readwrite("eps_psd", &Tolerances::eps_psd)
      .def_readwrite("eps_feas", &Tolerances::eps_feas)
      .def_readwrite("eps_opt", &Tolerances::eps_opt)
      .def_readwrite("max_iter", &Tolerances::max_iter);

  const auto tol = py::arg("tol") = Tolerances{};

  m.def("read_matrix", [](const std::string& path) { return to_array(read_matrix(path)); });
  m.def("parse_matrix", [](const std::string& text) { return to_array(parse_matrix(text)); });

  m.def("is_Mn", [](const Array& a, const Tolerances& t) { return is_Mn(to_matrix(a), t); },
        py::arg("a"), tol);
  m.def("is_Rn", [](const Array& a, const Tolerances& t) { return is_Rn(to_matrix(a), t); },
        py::arg("a"), tol);
  m.def(
      "classify",
      [](const Array& a, const Tolerances& t) {
        std::vector<std::string> out;
        for (const ClassLabel& l : classify(to_matrix(a), t)) out.push_back(l.to_string());
        return out;
      },
      py::arg("a"), tol);
  m.def("schur_complement",
        [](const Array& a, std::size_t i, const Tolerances& t) {
          return to_array(schur_complement(to_matrix(a), i, t));
        },
        py::arg("a"), py::arg("i"), tol);

  m.def(
      "copositive_oracle",
      [](const Array& a, const Tolerances& t) {
        const CopositivityReport r = copositive_oracle(to_matrix(a), t);
        py::dict d;
        d["copositive"] = r.copositive;
        d["min_value"] = r.min_value;
        d["minimizer"] = r.minimizer;
        return d;
      },
      py::arg("a"), tol);
  m.def("spn_oracle", [](const Array& a, const Tolerances& t) { return outcome_dict(spn_oracle(to_matrix(a), t)); },
        py::arg("a"), tol);
  m.def("spn_decompose_recursive",
        [](const Array& a, const Tolerances& t) { return outcome_dict(spn_decompose_recursive(to_matrix(a), t)); },
        py::arg("a"), tol);

  m.def("z_star", [](const Array& q, const Tolerances& t) {
          return z_star_oracle(StqpInstance::raw(to_matrix(q)), t).value;
        },
        py::arg("q"), tol);
  m.def("z_spn_bisection",
        [](const Array& q, const Tolerances& t) { return bisection_dict(z_spn_bisection(to_matrix(q), t)); },
        py::arg("q"), tol);
  m.def("z_dnn_primal", [](const Array& q, const Tolerances& t) { return z_dnn_primal(to_matrix(q), t).value; },
        py::arg("q"), tol);
  m.def("certify_tightness",
        [](const Array& q, const Tolerances& t) {
          return to_python(to_json(certify_tightness(StqpInstance::raw(to_matrix(q)), t)));
        },
        py::arg("q"), tol);
  m.def("certify_separable",
        [](const std::vector<double>& alpha, const std::vector<double>& beta, const Tolerances& t) {
          return to_python(to_json(certify_tightness(build_separable(alpha, beta), t)));
        },
        py::arg("alpha"), py::arg("beta"), tol);

  m.def("permute_into_Mn",
        [](const Array& a, const Tolerances& t) { return to_python(to_json(permute_into_Mn(to_matrix(a), t))); },
        py::arg("a"), tol);
  m.def("rescale_into_Mn",
        [](const Array& a, const Tolerances& t) { return to_python(to_json(rescale_into_Mn(to_matrix(a), t))); },
        py::arg("a"), tol);
  m.def("joint_orbit_search",
        [](const Array& a, const Tolerances& t) { return to_python(to_json(joint_orbit_search(to_matrix(a), t))); },
        py::arg("a"), tol);

  m.def("sign_graphs",
        [](const Array& a, const Tolerances& t) { return to_python(to_json(extract_sign_graphs(to_matrix(a), t))); },
        py::arg("a"), tol);
  m.def("orbit_necessary_filter",
        [](const Array& a, const Tolerances& t) { return orbit_necessary_filter(to_matrix(a), t); },
        py::arg("a"), tol);

  m.def(
      "selftest",
      [](std::uint64_t seed, std::size_t cases) {
        py::dict out;
        for (const SuiteResult& s : run_selftest(seed, cases)) out[py::str(s.name)] = s.failures;
        return out;
      },
      py::arg("seed") = 0, py::arg("cases") = 100);
}
