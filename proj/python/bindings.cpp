// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/acceptance.hpp"
#include "entangle/bell.hpp"
#include "entangle/cli.hpp"
#include "entangle/error.hpp"
#include "entangle/fluct.hpp"
#include "entangle/invariants.hpp"
#include "entangle/majorana.hpp"
#include "entangle/orbit.hpp"
#include "entangle/random.hpp"
#include "entangle/repn.hpp"
#include "entangle/states.hpp"
#include "entangle/system.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace entangle;

namespace {

FlowParams flow_from(const py::dict& kw) {
  FlowParams p;
  if (kw.contains("step")) p.step = kw["step"].cast<double>();
  if (kw.contains("max_iters")) p.max_iters = kw["max_iters"].cast<int>();
  if (kw.contains("grad_tol")) p.grad_tol = kw["grad_tol"].cast<double>();
  if (kw.contains("null_tol")) p.null_tol = kw["null_tol"].cast<double>();
  if (kw.contains("backtracking")) p.backtracking = kw["backtracking"].cast<double>();
  p.validate();
  return p;
}

Pentagram pentagram_from(const Eigen::Matrix<double, 5, 3>& rows) {
  Pentagram p;
  for (int i = 0; i < 5; ++i) p.vectors[i] = rows.row(i).transpose();
  p.validate();
  return p;
}

Eigen::Matrix<double, 5, 3> pentagram_rows(const Pentagram& p) {
  Eigen::Matrix<double, 5, 3> rows;
  for (int i = 0; i < 5; ++i) rows.row(i) = p.vectors[i].transpose();
  return rows;
}

}  // namespace

PYBIND11_MODULE(_entangle, m) {
  m.doc() = "Entanglement relative to a dynamical symmetry group.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<OperatorBasis>(m, "OperatorBasis")
      .def_readonly("dim", &OperatorBasis::dim)
      .def_readonly("label", &OperatorBasis::label)
      .def_readonly("factor_dims", &OperatorBasis::factor_dims)
      .def_readonly("form_scale", &OperatorBasis::form_scale)
      .def_readonly("two_s", &OperatorBasis::two_s)
      .def_property_readonly("generators", [](const OperatorBasis& b) { return b.generators; })
      .def("__len__", &OperatorBasis::size)
      .def("__repr__", [](const OperatorBasis& b) {
        return "<OperatorBasis " + b.label + " dim=" + std::to_string(b.dim) + ">";
      });

  py::class_<PureState>(m, "PureState")
      .def(py::init<std::vector<int>, CVector>(), py::arg("dims"), py::arg("amplitudes"))
      .def_property_readonly("dims", &PureState::dims)
      .def_property_readonly("amplitudes", &PureState::amplitudes)
      .def("norm", &PureState::norm)
      .def("__len__", &PureState::dim);

  m.def("system", [](const std::string& text) { return build_system(parse_system(text)); },
        py::arg("text"), "Build a system from spin:<two_s>, local:<d1>x<d2>..., sym:<d>^<n> or wedge:<d>^<n>.");
  m.def("spin_system", [](int two_s) { return spin_generators(SpinLabel(two_s)); }, py::arg("two_s"));
  m.def("local_system", [](const std::vector<int>& dims) { return local_algebra(dims); },
        py::arg("dims"));
  m.def("casimir", &casimir);

  m.def("random_state", [](std::vector<int> dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(std::move(dims), rng);
  }, py::arg("dims"), py::arg("seed") = kDefaultSeed);
  m.def("bell_state", &bell_state);
  m.def("singlet_state", &singlet_state);
  m.def("ghz_state", &ghz_state, py::arg("qubits") = 3);
  m.def("w_state", &w_state, py::arg("qubits") = 3);

  m.def("total_variance", [](const PureState& s, const OperatorBasis& b) {
    const VarianceReport r = total_variance(s, b);
    py::dict d;
    d["total_variance"] = r.total_variance;
    d["casimir_scalar"] = r.casimir_scalar;
    d["expectation_vector"] = r.expectation_vector;
    d["entanglement_residual"] = r.residual_entanglement;
    return d;
  });
  m.def("entanglement_residual", &entanglement_residual);
  m.def("coherence_residual", &coherence_residual);

  m.def("classify", [](const PureState& s, const OperatorBasis& b, const py::kwargs& kw) {
    const OrbitResult r = analyze_orbit(s, b, flow_from(kw));
    py::dict d;
    d["stability"] = std::string(to_string(r.stability));
    d["concurrence"] = r.concurrence;
    d["iterations"] = r.iterations;
    d["converged"] = r.converged;
    d["final_gradient_norm"] = r.final_gradient_norm;
    d["norm_history"] = r.norm_history;
    d["minimal_vector"] = r.minimal_vector.amplitudes();
    return d;
  });
  m.def("concurrence", [](const PureState& s, const OperatorBasis& b, const py::kwargs& kw) {
    return concurrence(s, b, flow_from(kw));
  });

  m.def("schmidt", [](const PureState& s) {
    const SchmidtData sd = schmidt(s);
    return py::make_tuple(sd.coefficients, entropy(s));
  }, "Schmidt coefficients and entropy in bits.");
  m.def("marginal", [](const PureState& s, int k) { return marginal(s, k).matrix; });

  m.def("det_concurrence", [](const PureState& s) { return det_concurrence(s).derived_concurrence; });
  m.def("hyperdeterminant", [](const PureState& s) { return cayley_hyperdet(s).value; });
  m.def("three_tangle", &three_tangle);

  m.def("roots", [](const PureState& s, int two_s) {
    const RootConfiguration r = to_roots(s, two_s);
    return py::make_tuple(r.finite_roots, r.infinity_multiplicity);
  }, "Finite roots and the multiplicity of the root at infinity.");
  m.def("star_points", [](const PureState& s, int two_s) {
    return star_points(to_roots(s, two_s)).points;
  });
  m.def("balance_residual", &balance_residual);
  m.def("hm_classify", [](std::vector<cplx> finite, int infinity, int two_s) {
    RootConfiguration r;
    r.finite_roots = std::move(finite);
    r.infinity_multiplicity = infinity;
    r.two_s = two_s;
    return std::string(to_string(hm_classify(r)));
  }, py::arg("finite_roots"), py::arg("infinity_multiplicity"), py::arg("two_s"));
  m.def("from_roots", [](std::vector<cplx> finite, int infinity, int two_s) {
    RootConfiguration r;
    r.finite_roots = std::move(finite);
    r.infinity_multiplicity = infinity;
    r.two_s = two_s;
    return from_roots(r);
  }, py::arg("finite_roots"), py::arg("infinity_multiplicity"), py::arg("two_s"));

  m.def("to_cartesian", [](const PureState& s) { return CVector(to_cartesian(s)); });
  m.def("spin1_invariants", [](const PureState& s) {
    const Spin1Invariants inv = spin1_invariants(s);
    return py::make_tuple(inv.bilinear_square, inv.cross_norm, inv.phi);
  }, "(psi, psi), |psi x conj(psi)| and phi.");

  m.def("regular_pentagram", [] { return pentagram_rows(regular_pentagram()); });
  m.def("pentagram", [](const std::array<double, 5>& params) {
    return pentagram_rows(make_pentagram(params));
  }, py::arg("params"));
  m.def("pentagram_spectrum", [](const Eigen::Matrix<double, 5, 3>& rows) {
    return pentagram_operator(pentagram_from(rows)).spectrum;
  });
  m.def("bell_value", [](const PureState& s, const Eigen::Matrix<double, 5, 3>& rows) {
    return bell_value(to_cartesian(s), pentagram_from(rows));
  }, py::arg("state"), py::arg("pentagram"));
  m.def("search_violation", [](const PureState& s, int max_evaluations, std::uint64_t seed) {
    SearchBudget budget;
    budget.max_evaluations = max_evaluations;
    budget.seed = seed;
    const ViolationSearch v = search_violation(to_cartesian(s), budget);
    py::dict d;
    d["found"] = v.pentagram.has_value();
    d["best_value"] = v.best_value;
    d["pentagram"] = pentagram_rows(v.best_pentagram);
    d["evaluations"] = v.evaluations;
    d["budget_exhausted"] = v.budget_exhausted;
    return d;
  }, py::arg("state"), py::arg("max_evaluations") = 20000, py::arg("seed") = kDefaultSeed);
  m.def("chsh_value", [](const PureState& s, const Vec3& a1, const Vec3& a2, const Vec3& b1,
                         const Vec3& b2) { return chsh_value(s, a1, a2, b1, b2); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
  m.def("selftest", [] {
    py::list rows;
    for (const CriterionResult& r : run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      rows.append(d);
    }
    return rows;
  });
}
