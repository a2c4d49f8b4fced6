#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "entmono/cftanalytic.hpp"
#include "entmono/erasure.hpp"
#include "entmono/error.hpp"
#include "entmono/fermichain.hpp"
#include "entmono/monotones.hpp"
#include "entmono/orderlab.hpp"
#include "entmono/relative.hpp"
#include "entmono/spectra.hpp"

namespace py = pybind11;
using namespace entmono;

namespace {

Spectrum spec(const std::vector<double>& p) { return Spectrum::normalize(p); }

CommutingPair pair(const std::vector<double>& r, const std::vector<double>& s) {
  return CommutingPair(spec(r), spec(s));
}

py::dict slack_dict(const InequalitySlack& s) {
  py::dict d;
  d["slack"] = s.slack;
  d["vertex"] = s.vertex;
  d["boundary"] = s.boundary;
  return d;
}

CftParams cft_params(const std::string& model, double gamma, double ell) {
  CftParams p = parse_chain_model(model) == ChainModel::XX ? CftParams::xx() : CftParams::ising();
  if (!std::isnan(gamma)) p.gamma = gamma;
  p.ell = ell;
  return p;
}

}  // namespace

PYBIND11_MODULE(_entmono, m) {
  m.doc() = "Majorization monotones, entanglement statistics and free-fermion chains";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&]() { return py::exception<Error>(m, "EntmonoError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("normalize", [](const std::vector<double>& p, bool force) { return Spectrum::normalize(p, force).vec(); },
        py::arg("probs"), py::arg("force") = false);
  m.def("majorizes", [](const std::vector<double>& a, const std::vector<double>& b) {
    return majorizes(spec(a), spec(b));
  });
  m.def("entropy", [](const std::vector<double>& p) { return entropy(spec(p)); });
  m.def("capacity", [](const std::vector<double>& p) { return capacity(spec(p)); });
  m.def("renyi", [](const std::vector<double>& p, double alpha) { return renyi(spec(p), alpha); });
  m.def(
      "modular_stats",
      [](const std::vector<double>& p, int kmax) {
        const ModularStats s = modular_stats(spec(p), kmax);
        return py::make_tuple(s.moments, s.cumulants);
      },
      py::arg("probs"), py::arg("kmax") = 4, "Returns (moments, cumulants) of the modular Hamiltonian.");
  m.def(
      "shifted_moment",
      [](const std::vector<double>& p, int n, double b) { return shifted_moment(spec(p), ShiftParams{n, b}); },
      py::arg("probs"), py::arg("n"), py::arg("b"));
  m.def("delta_m", [](const std::vector<double>& r, const std::vector<double>& s, int nmax) {
    return delta_m(spec(r), spec(s), nmax);
  });
  m.def("inequality3_slack", [](const std::vector<double>& r, const std::vector<double>& s) {
    return slack_dict(inequality3_slack(spec(r), spec(s)));
  });
  m.def("inequality4_slack", [](const std::vector<double>& r, const std::vector<double>& s) {
    return slack_dict(inequality4_slack(spec(r), spec(s)));
  });
  m.def("extremal_coefficients", [](int n, const std::vector<double>& roots) {
    return extremal_poly(n, roots).fcoeffs;
  });
  m.def("extremal_identity_residual", &extremal_identity_residual);
  m.def(
      "extremal_value",
      [](const std::vector<double>& p, int n, const std::vector<double>& roots) {
        return normalized_extremal_value(spec(p), extremal_poly(n, roots));
      },
      py::arg("probs"), py::arg("n"), py::arg("roots"));

  m.def(
      "relative_stats",
      [](const std::vector<double>& r, const std::vector<double>& s, int kmax) {
        const RelativeStats st = relative_stats(pair(r, s), kmax);
        return py::make_tuple(st.moments, st.cumulants);
      },
      py::arg("rho"), py::arg("sigma"), py::arg("kmax") = 4);
  m.def("petz_renyi", [](const std::vector<double>& r, const std::vector<double>& s, double alpha) {
    return petz_renyi(pair(r, s), alpha);
  });
  m.def("clausius", [](const std::vector<double>& energies, double beta, const std::vector<double>& rho) {
    const ClausiusReport c = clausius_slack(ThermalSpec(energies, beta), spec(rho));
    py::dict d;
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    d["slack"] = c.slack;
    d["sharp_slack"] = c.sharp_slack;
    d["thermomajorizes"] = c.thermomajorizes;
    return d;
  });

  m.def(
      "landauer_ladder",
      [](const std::vector<double>& p, int max_order) {
        const ErasureReport r = landauer_ladder(spec(p), max_order);
        py::dict d;
        d["per_order"] = r.per_order_min_qubits;
        d["tight_third"] = r.tight_third_min_qubits;
        d["weak_third"] = r.weak_third_min_qubits;
        d["work_cost"] = r.work_cost;
        return d;
      },
      py::arg("probs"), py::arg("max_order") = 4);

  m.def("preset_state", [](const std::string& model, int n, const std::string& state) {
    return preset_state(parse_chain_model(model), n, parse_preset_state(state));
  });
  m.def(
      "block_occupations",
      [](const std::string& model, int n, const std::vector<int>& occ, int ell) {
        return block_occupations(ChainSpec{parse_chain_model(model), n, occ, ell}).nus;
      },
      py::arg("model"), py::arg("N"), py::arg("occupation"), py::arg("ell"));
  m.def(
      "chain_stats",
      [](const std::string& model, int n, const std::string& state, int ell, int nmax) {
        const ChainModel cm = parse_chain_model(model);
        const FreeFermionStats st =
            ff_stats(block_occupations(ChainSpec{cm, n, preset_state(cm, n, parse_preset_state(state)), ell}), nmax);
        py::dict d;
        d["moments"] = st.stats.moments;
        d["cumulants"] = st.stats.cumulants;
        d["shifted"] = st.shifted;
        return d;
      },
      py::arg("model"), py::arg("N"), py::arg("state"), py::arg("ell"), py::arg("nmax") = 4);

  m.def("upsilon_derivatives", [](double cutoff, double tol) {
    const UpsilonDerivatives u = upsilon_derivatives(cutoff, tol);
    return py::make_tuple(u.first, u.second);
  }, py::arg("cutoff") = 20.0, py::arg("tol") = 1e-9);
  m.def(
      "cft_quantity",
      [](const std::string& q, double x, const std::string& model, double gamma, double ell) {
        return cft_quantity(parse_cft_quantity(q), x, cft_params(model, gamma, ell));
      },
      py::arg("quantity"), py::arg("x"), py::arg("model") = "xx", py::arg("gamma") = std::nan(""),
      py::arg("ell") = 100.0);
  m.def(
      "find_crossing",
      [](const std::string& q, const std::string& model, double gamma, double ell) {
        return find_crossing(parse_cft_quantity(q), cft_params(model, gamma, ell));
      },
      py::arg("quantity"), py::arg("model") = "ising", py::arg("gamma") = std::nan(""), py::arg("ell") = 100.0);

  m.def(
      "cone_verdict",
      [](const std::vector<double>& r, const std::vector<double>& s, int nmax, const std::string& family) {
        const OrderVerdict v = cone_verdict(spec(r), spec(s), nmax, parse_cone_family(family));
        py::dict d;
        d["majorization"] = to_string(v.majorization);
        std::vector<std::string> cone;
        for (Order o : v.cone) cone.push_back(to_string(o));
        d["cone"] = cone;
        d["gaps"] = v.gaps;
        return d;
      },
      py::arg("rho"), py::arg("sigma"), py::arg("nmax") = 2, py::arg("family") = "extremal");
}
