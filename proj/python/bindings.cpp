#include "polsim/config.hpp"
#include "polsim/dephasing.hpp"
#include "polsim/discrete.hpp"
#include "polsim/entanglement.hpp"
#include "polsim/erasure.hpp"
#include "polsim/errors.hpp"
#include "polsim/oracle.hpp"
#include "polsim/sweep.hpp"
#include "polsim/units.hpp"
#include "polsim/validate.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace polsim;

namespace {

PolPair pair_arg(const std::string& s) { return parse_pol_pair(s); }

PolarizationMatrix state_arg(const Matrix4c& m) { return PolarizationMatrix(m); }

// Config from a {key: value} mapping; values go through str() so numbers,
// bools and lists of numbers all work.
KeyValueConfig config_from(const py::dict& d) {
  KeyValueConfig cfg;
  for (const auto& [k, v] : d) {
    std::string text;
    if (py::isinstance<py::bool_>(v)) {
      text = v.cast<bool>() ? "true" : "false";
    } else if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
      for (const auto& item : v) text += (text.empty() ? "" : ",") + py::str(item).cast<std::string>();
    } else {
      text = py::str(v).cast<std::string>();
    }
    cfg.set(py::str(k).cast<std::string>(), text);
  }
  return cfg;
}

py::dict sweep_columns(const std::vector<SweepPoint>& pts) {
  std::vector<double> x, tau, c, p;
  std::vector<Matrix4c> rho;
  for (const auto& pt : pts) {
    x.push_back(pt.x);
    tau.push_back(pt.tau_fs);
    c.push_back(pt.concurrence);
    p.push_back(pt.purity);
    rho.push_back(pt.rho.matrix());
  }
  py::dict out;
  out["x"] = x;
  out["tau_fs"] = tau;
  out["concurrence"] = c;
  out["purity"] = p;
  out["rho"] = rho;
  return out;
}

QuadratureSpec quad_spec(int order, double span, const std::string& scheme) {
  QuadratureSpec q;
  q.order = order;
  q.span = span;
  if (scheme == "gauss_hermite") q.scheme = QuadratureScheme::GaussHermite;
  else if (scheme != "trapezoid") throw DomainError("scheme must be trapezoid or gauss_hermite");
  return q;
}

AmplitudeForm form_arg(const std::string& form) {
  if (form == "separated") return AmplitudeForm::Separated;
  if (form == "exact") return AmplitudeForm::Exact;
  throw DomainError("form must be separated or exact");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polarization entanglement from birefringent dephasing and frequency erasure";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedVariant>(m, "UnsupportedVariant", PyExc_TypeError);
  py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_RuntimeError);
  py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.attr("SPEED_OF_LIGHT_NM_PER_FS") = kSpeedOfLight;

  m.def("wavelength_to_angular_frequency", &wavelength_to_angular_frequency, py::arg("lambda_nm"));
  m.def("fwhm_nm_to_sigma", &fwhm_nm_to_sigma, py::arg("fwhm_nm"), py::arg("lambda_center_nm"));
  m.def("wavelength_span_to_omega", &wavelength_span_to_omega, py::arg("span_nm"), py::arg("lambda_center_nm"));

  py::class_<Medium>(m, "Medium")
      .def(py::init([](double n_h, double n_v) { return Medium{n_h, n_v}; }), py::arg("n_h"), py::arg("n_v"))
      .def_readwrite("n_h", &Medium::n_h)
      .def_readwrite("n_v", &Medium::n_v)
      .def_property_readonly("delta_n", &Medium::delta_n);

  m.def(
      "path_difference_to_time",
      [](double x, const Medium& medium, double lambda_pump_nm) {
        return path_difference_to_time(x, medium, UnitContext(lambda_pump_nm));
      },
      py::arg("x"), py::arg("medium"), py::arg("lambda_pump_nm") = 780.0);
  m.def(
      "time_to_path_difference",
      [](double tau, const Medium& medium, double lambda_pump_nm) {
        return time_to_path_difference(tau, medium, UnitContext(lambda_pump_nm));
      },
      py::arg("tau_fs"), py::arg("medium"), py::arg("lambda_pump_nm") = 780.0);

  py::class_<SinglePeak>(m, "SinglePeak")
      .def(py::init([](double omega0, double delta, double k) { return SinglePeak{omega0, delta, k}; }),
           py::arg("omega0"), py::arg("delta"), py::arg("k"))
      .def_readwrite("omega0", &SinglePeak::omega0)
      .def_readwrite("delta", &SinglePeak::delta)
      .def_readwrite("k", &SinglePeak::k);
  py::class_<DoublePeak>(m, "DoublePeak")
      .def(py::init([](double w1, double w2, double delta, double k) { return DoublePeak{w1, w2, delta, k}; }),
           py::arg("omega1"), py::arg("omega2"), py::arg("delta"), py::arg("k"))
      .def_readwrite("omega1", &DoublePeak::omega1)
      .def_readwrite("omega2", &DoublePeak::omega2)
      .def_readwrite("delta", &DoublePeak::delta)
      .def_readwrite("k", &DoublePeak::k);
  py::class_<DiscretePair>(m, "DiscretePair")
      .def(py::init([](double w1, double w2) { return DiscretePair{w1, w2}; }), py::arg("omega1"),
           py::arg("omega2"))
      .def_readwrite("omega1", &DiscretePair::omega1)
      .def_readwrite("omega2", &DiscretePair::omega2);

  m.def(
      "amplitude",
      [](const JointSpectrum& s, double wa, double wb, const std::string& form) {
        return amplitude(s, wa, wb, form_arg(form));
      },
      py::arg("spectrum"), py::arg("omega_a"), py::arg("omega_b"), py::arg("form") = "exact");

  m.def(
      "closed_form_element",
      [](const std::string& row, const std::string& col, double tau, const JointSpectrum& s, const Medium& md) {
        return closed_form_element(pair_arg(row), pair_arg(col), tau, s, md);
      },
      py::arg("row"), py::arg("col"), py::arg("tau_fs"), py::arg("spectrum"), py::arg("medium"));
  m.def(
      "density_matrix",
      [](double tau, const JointSpectrum& s, const Medium& md) { return density_matrix(tau, s, md).matrix(); },
      py::arg("tau_fs"), py::arg("spectrum"), py::arg("medium"),
      "Normalized 4x4 state in basis (HH, HV, VH, VV).");

  m.def("concurrence", [](const Matrix4c& rho) { return concurrence(state_arg(rho)); }, py::arg("rho"));
  m.def("purity", [](const Matrix4c& rho) { return purity(state_arg(rho)); }, py::arg("rho"));

  m.def(
      "critical_times",
      [](double w1, double w2, const Medium& md, int mm) {
        const auto t = critical_times(w1, w2, md, mm);
        return py::make_tuple(t.tau_c, t.tau_d);
      },
      py::arg("omega1"), py::arg("omega2"), py::arg("medium"), py::arg("m") = 0, "Returns (tau_c, tau_d).");
  m.def(
      "discrete_state",
      [](double tau, double w1, double w2, const Medium& md) {
        return ideal_upconvert(evolve_discrete(tau, w1, w2, md)).matrix();
      },
      py::arg("tau_fs"), py::arg("omega1"), py::arg("omega2"), py::arg("medium"),
      "Polarization state after dephasing and ideal upconversion of the two-colour pair.");

  m.def("wide_pump_ratio", [](double d, double sigma) { return wide_pump_ratio(d, Pump{sigma, 0.0}); },
        py::arg("max_detuning"), py::arg("sigma"));

  m.def(
      "quadrature_matrix",
      [](double tau, const JointSpectrum& s, const Medium& md, std::optional<double> pump_sigma, int order,
         double span, const std::string& scheme, const std::string& form) {
        std::optional<Pump> pump;
        if (pump_sigma) pump = Pump{*pump_sigma, 0.0};
        const auto q = full_matrix_quadrature(tau, s, md, pump, quad_spec(order, span, scheme), form_arg(form));
        return py::make_tuple(q.rho.matrix(), q.unnormalized);
      },
      py::arg("tau_fs"), py::arg("spectrum"), py::arg("medium"), py::arg("pump_sigma") = py::none(),
      py::arg("order") = 64, py::arg("span") = 8.0, py::arg("scheme") = "trapezoid",
      py::arg("form") = "separated",
      "Quadrature oracle. Returns (rho, elements rescaled to 2 at tau = 0).");

  m.def(
      "sweep",
      [](const py::dict& config, unsigned threads) {
        const auto spec = sweep_spec_from_config(config_from(config));
        std::vector<SweepPoint> pts;
        {
          py::gil_scoped_release release;
          pts = sweep_points(spec, threads);
        }
        return sweep_columns(pts);
      },
      py::arg("config"), py::arg("threads") = 0,
      "Sweep over path difference. `config` uses the same keys as the config files.");
  m.def(
      "sweep_csv",
      [](const py::dict& config) {
        std::ostringstream out;
        run_sweep(sweep_spec_from_config(config_from(config)), out);
        return out.str();
      },
      py::arg("config"));
  m.def("preset_names", &preset_names);
  m.def(
      "preset",
      [](const std::string& name) {
        py::dict out;
        for (const auto& p : figure_preset(name)) out[py::str(p.label)] = sweep_columns(sweep_points(p.spec));
        return out;
      },
      py::arg("name"), "Every curve of a figure preset, keyed by label.");

  m.def(
      "validate",
      [](std::optional<int> order, double tol, std::optional<double> k, const std::string& scheme) {
        ValidateOptions opts;
        opts.order = order;
        opts.tol = tol;
        opts.k = k;
        opts.scheme = quad_spec(64, 8.0, scheme).scheme;
        py::list out;
        for (const auto& r : run_validate(opts)) {
          py::dict d;
          d["check"] = r.name;
          d["passed"] = r.passed;
          d["value"] = r.value;
          d["tolerance"] = r.tolerance;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("order") = py::none(), py::arg("tol") = 1e-6, py::arg("k") = py::none(),
      py::arg("scheme") = "trapezoid");
}
