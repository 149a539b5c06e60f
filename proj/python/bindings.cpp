#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omegabound/bounds.hpp"
#include "omegabound/catalog.hpp"
#include "omegabound/errors.hpp"
#include "omegabound/report_io.hpp"
#include "omegabound/series.hpp"
#include "omegabound/sieve.hpp"
#include "omegabound/valuations.hpp"
#include "omegabound/verifier.hpp"

namespace py = pybind11;
namespace ob = omegabound;

namespace {

py::tuple as_tuple(const ob::Interval& i) { return py::make_tuple(i.lower, i.upper); }
py::tuple as_tuple(const ob::Band& b) { return py::make_tuple(b.lower(), b.upper()); }

// Reports cross the boundary as plain dicts, parsed from the same JSON the CLI writes.
py::object report_to_python(const ob::VerificationReport& report) {
  return py::module_::import("json").attr("loads")(ob::to_json(report).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prime-factor counting, factorial valuations and explicit-bound verification";

  py::register_exception<ob::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ob::ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ob::CatalogError>(m, "CatalogError", PyExc_KeyError);
  py::register_exception<ob::ModeError>(m, "ModeError", PyExc_ValueError);
  py::register_exception<ob::CheckpointError>(m, "CheckpointError", PyExc_RuntimeError);

  py::class_<ob::FactorSieve>(m, "FactorSieve")
      .def_property_readonly("limit", &ob::FactorSieve::limit)
      .def("spf", &ob::FactorSieve::spf, py::arg("k"))
      .def("is_prime", &ob::FactorSieve::is_prime, py::arg("k"))
      .def("primes_up_to", &ob::FactorSieve::primes_up_to, py::arg("n"));

  py::class_<ob::PrimeSums>(m, "PrimeSums")
      .def_readonly("n", &ob::PrimeSums::n)
      .def_readonly("pi", &ob::PrimeSums::pi)
      .def_readonly("theta", &ob::PrimeSums::theta)
      .def_readonly("sum_inv_pm1", &ob::PrimeSums::sum_inv_pm1)
      .def_readonly("sum_inv_logp", &ob::PrimeSums::sum_inv_logp)
      .def("__repr__", [](const ob::PrimeSums& s) {
        return "PrimeSums(n=" + std::to_string(s.n) + ", pi=" + std::to_string(s.pi) +
               ", theta=" + ob::format_real(s.theta) + ", sum_inv_pm1=" + ob::format_real(s.sum_inv_pm1) +
               ", sum_inv_logp=" + ob::format_real(s.sum_inv_logp) + ")";
      });

  // sieve
  m.def("build_spf", &ob::build_spf, py::arg("limit"), py::arg("budget_entries") = ob::kDefaultSieveBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("big_omega", &ob::big_omega, py::arg("k"), py::arg("sieve"));
  m.def("omega_prefix_sum", &ob::omega_prefix_sum, py::arg("n"), py::arg("segment_size") = ob::kDefaultSegmentSize,
        py::call_guard<py::gil_scoped_release>());
  m.def("prime_sums", &ob::prime_sums, py::arg("n"), py::arg("segment_size") = ob::kDefaultSegmentSize,
        py::call_guard<py::gil_scoped_release>());

  // valuations
  m.def("legendre_valuation", &ob::legendre_valuation, py::arg("n"), py::arg("p"));
  m.def("upsilon", &ob::upsilon, py::arg("n"), py::arg("sieve"));
  m.def("generalized_valuation", &ob::generalized_valuation, py::arg("m"), py::arg("n"), py::arg("sieve"));
  m.def("f_ratio", &ob::f_ratio, py::arg("n"), py::arg("sieve"), py::arg("cap") = ob::kDefaultFRatioCap);

  // bounds
  m.def("vp_bounds", [](std::uint64_t n, std::uint64_t p) { return as_tuple(ob::vp_bounds(n, p)); },
        py::arg("n"), py::arg("p"));
  m.def("pi_upper_bound", &ob::pi_upper_bound, py::arg("x"));
  m.def("theta_error_envelopes", [](double x) {
    const auto e = ob::theta_error_envelopes(x);
    return py::make_tuple(e.first, e.second);
  }, py::arg("x"));
  m.def("reciprocal_sum_band", [](std::uint64_t n) { return as_tuple(ob::reciprocal_sum_band(n)); }, py::arg("n"));
  m.def("reciprocal_sum_refined_lower", &ob::reciprocal_sum_refined_lower, py::arg("n"));
  m.def("reciprocal_sum_refined_upper", &ob::reciprocal_sum_refined_upper, py::arg("n"));
  m.def("inverse_log_sum_estimate", [](std::uint64_t n) {
    const auto e = ob::inverse_log_sum_estimate(n);
    return py::make_tuple(e.main, e.envelope);
  }, py::arg("n"));
  m.def("inverse_log_sum_refined_lower", &ob::inverse_log_sum_refined_lower, py::arg("n"));
  m.def("inverse_log_sum_refined_upper", &ob::inverse_log_sum_refined_upper, py::arg("n"));
  m.def("r_envelope", &ob::r_envelope, py::arg("n"));
  m.def("main_theorem_band", [](std::uint64_t n) { return as_tuple(ob::main_theorem_band(n)); }, py::arg("n"));
  m.def("hardy_ramanujan_main", &ob::hardy_ramanujan_main, py::arg("n"), py::arg("allow_small") = false);
  m.def("log_gamma", &ob::log_gamma, py::arg("x"));
  m.def("inverse_gamma", &ob::inverse_gamma, py::arg("y"));
  m.def("omega_gamma_band", [](double y) { return as_tuple(ob::omega_gamma_band(y)); }, py::arg("y"));

  // verifier
  m.def("bound_ids", [] {
    std::vector<std::string> ids;
    for (const auto& spec : ob::bound_catalog()) ids.emplace_back(spec.id);
    return ids;
  });
  m.def(
      "scan",
      [](const std::string& spec_id, std::uint64_t from, std::uint64_t to, bool primes_only, double eps_rel,
         std::uint64_t segment_size) {
        ob::ScanConfig cfg{spec_id, from, to, primes_only ? ob::ScanMode::primes_only : ob::ScanMode::all,
                           eps_rel, segment_size, ob::kDefaultCounterexampleCap};
        ob::VerificationReport report;
        {
          py::gil_scoped_release release;
          report = ob::scan(cfg);
        }
        return report_to_python(report);
      },
      py::arg("spec_id"), py::arg("from_"), py::arg("to"), py::arg("primes_only") = false,
      py::arg("eps_rel") = ob::kDefaultEpsRel, py::arg("segment_size") = ob::kDefaultSegmentSize);
  m.def(
      "threshold_check",
      [](const std::string& spec_id, std::optional<std::uint64_t> threshold, unsigned samples, double eps_rel) {
        return report_to_python(ob::threshold_check(spec_id, threshold, samples, eps_rel));
      },
      py::arg("spec_id"), py::arg("threshold") = py::none(), py::arg("samples") = ob::kDefaultThresholdSamples,
      py::arg("eps_rel") = ob::kDefaultEpsRel);
  m.def(
      "evaluate_series",
      [](const std::string& name, const std::vector<std::uint64_t>& points, std::uint64_t segment_size) {
        const auto table = ob::evaluate_series(name, points, segment_size);
        py::list rows;
        for (std::size_t i = 0; i < table.n.size(); ++i) {
          py::dict row;
          row["n"] = table.n[i];
          for (std::size_t c = 0; c < table.columns.size(); ++c) row[py::str(table.columns[c])] = table.rows[i][c];
          rows.append(row);
        }
        return rows;
      },
      py::arg("name"), py::arg("points"), py::arg("segment_size") = ob::kDefaultSegmentSize);
}
