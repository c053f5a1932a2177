#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detscheme/corpus.hpp"
#include "detscheme/errors.hpp"
#include "detscheme/graded_oracle.hpp"
#include "detscheme/report_json.hpp"
#include "detscheme/sheaf_numerics.hpp"

namespace py = pybind11;
using namespace detscheme;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list to_py(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::dict report_dict(const DimensionReport& r) {
  py::dict d;
  d["lambda_c"] = to_py(r.lambda_c);
  d["k_terms"] = to_py(r.k_terms);
  d["dim_y"] = to_py(r.dim_y);
  d["corollary_value"] = r.corollary_value ? py::object(to_py(*r.corollary_value)) : py::none();
  d["canonical_h"] = r.canonical_h;
  d["canonical_p"] = r.canonical_p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_detscheme, m) {
  m.doc() = "Dimension formula and finite-field oracles for determinantal subschemes of P^n";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<ResamplingExhausted>(m, "ResamplingExhausted", PyExc_RuntimeError);
  py::register_exception<StabilizationError>(m, "StabilizationError", PyExc_RuntimeError);

  py::class_<DegreeData>(m, "DegreeData")
      .def(py::init<int, std::vector<int>, std::vector<int>>(), py::arg("n"), py::arg("alphas"),
           py::arg("betas"))
      .def_static("parse", [](const std::string& s) { return parse_degree_data(s); })
      .def_property_readonly("n", &DegreeData::n)
      .def_property_readonly("a", &DegreeData::a)
      .def_property_readonly("b", &DegreeData::b)
      .def_property_readonly("c", &DegreeData::c)
      .def_property_readonly("dim_x", &DegreeData::dim_x)
      .def_property_readonly("alphas",
                             [](const DegreeData& d) { return std::vector<int>(d.alphas().begin(), d.alphas().end()); })
      .def_property_readonly("betas",
                             [](const DegreeData& d) { return std::vector<int>(d.betas().begin(), d.betas().end()); })
      .def("homogeneous", &DegreeData::homogeneous)
      .def("__str__", &DegreeData::to_string)
      .def("__repr__", [](const DegreeData& d) { return "DegreeData('" + d.to_string() + "')"; })
      .def("__eq__", [](const DegreeData& a, const DegreeData& b) { return a == b; })
      .def("__hash__", [](const DegreeData& d) { return py::hash(py::str(d.to_string())); });

  m.def("validate_standard", &validate_standard);
  m.def("validate_main", &validate_main);
  m.def("derive", [](const DegreeData& d) {
    auto inv = derive(d);
    py::dict out;
    out["c"] = inv.c;
    out["dim_x"] = inv.dim_x;
    out["ell"] = inv.ell;
    return out;
  });

  m.def("binomial_dim", [](long long top, long long n) { return to_py(binomial_dim(top, n)); });
  m.def("lambda_c", [](const DegreeData& d) { return to_py(lambda_c(d)); });
  m.def("k_terms", [](const DegreeData& d) { return to_py(k_terms(d)); });
  m.def("dim_y", [](const DegreeData& d) { return report_dict(dim_y(d)); });
  m.def("corollary_homogeneous",
        [](int n, int a, int b, int d) { return to_py(corollary_homogeneous(n, a, b, d)); });

  m.def("cokernel_f", [](const DegreeData& d, long long t) { return to_py(cokernel_f(d, t)); });
  m.def("h0_F", [](const DegreeData& d) { return to_py(h0_F(d)); });

  m.def(
      "verify_json",
      [](const DegreeData& d, std::uint32_t prime, std::uint64_t seed, std::optional<int> bound,
         std::optional<int> window) {
        std::optional<VerificationRecord> r;
        {
          py::gil_scoped_release release;
          r = verify(d, VerifyConfig{.prime = prime, .seed = seed, .bound = bound, .window = window});
        }
        return to_json(*r).dump();
      },
      py::arg("d"), py::arg("prime") = 32003, py::arg("seed") = 1, py::arg("bound") = py::none(),
      py::arg("window") = py::none());

  m.def(
      "export_ideal",
      [](const DegreeData& d, std::uint32_t prime, std::uint64_t seed) {
        auto ideal = maximal_minors(random_phi(d, PrimeField(prime), seed));
        return py::make_tuple(ideal_presentation(ideal), to_json(ideal).dump());
      },
      py::arg("d"), py::arg("prime") = 32003, py::arg("seed") = 1);
}
