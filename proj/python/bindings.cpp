// Copyright 2026 The qgd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgd/compiler.hpp"
#include "qgd/entangler.hpp"
#include "qgd/equivalence.hpp"
#include "qgd/hamiltonian.hpp"
#include "qgd/json_io.hpp"
#include "qgd/pulses.hpp"
#include "qgd/random.hpp"

namespace py = pybind11;
using namespace qgd;

namespace {

py::object to_python(const io::Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

io::Json from_python(const py::object &obj) {
  return io::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

CouplingTensor tensor_from(const Eigen::Matrix3d &m) {
  CouplingTensor ct;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) ct.entries[a][b] = m(a, b);
  return ct;
}

py::tuple coords_tuple(const EntanglerCoords &c) { return py::make_tuple(c.x, c.y, c.z); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit gate design: invariants, KAK decomposition, CNOT pulse synthesis";

  static py::exception<Error> error(m, "QgdError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::object exc = py::module_::import("qgd._core").attr("QgdError");
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  m.def("expm_hermitian", &expm_hermitian, py::arg("h"), py::arg("t"),
        "exp(-i h t) for a Hermitian 4x4 h.");
  m.def("distance", &distance, py::arg("u"), py::arg("v"),
        py::arg("up_to_global_phase") = false);
  m.def("named_gate", &named_gate, py::arg("name"));
  m.def("controlled_phase", &controlled_phase, py::arg("theta"));
  m.def("haar_unitary", [](std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(rng);
  }, py::arg("seed"));

  m.def("makhlin_invariants", [](const Mat4 &u) {
    const auto inv = makhlin_invariants(u);
    return py::make_tuple(inv.g1, inv.g2);
  }, py::arg("u"), "Return (G1, G2).");
  m.def("locally_equivalent", &locally_equivalent, py::arg("u"), py::arg("v"),
        py::arg("tol") = 1e-9);
  m.def("canonical_entangler", [](double x, double y, double z) {
    return canonical_entangler({x, y, z});
  }, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("weyl_canonicalize", [](double x, double y, double z) {
    return coords_tuple(weyl_canonicalize({x, y, z}));
  }, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("kak_decompose", [](const Mat4 &u, std::optional<std::uint64_t> seed) {
    KakOptions opts;
    if (seed) opts.seed = *seed;
    const auto kak = kak_decompose(u, opts);
    py::dict d;
    d["phase"] = kak.phase;
    d["coords"] = coords_tuple(kak.coords);
    d["pre"] = py::make_tuple(kak.pre.first, kak.pre.second);
    d["post"] = py::make_tuple(kak.post.first, kak.post.second);
    d["reconstructed"] = kak.reconstruct();
    return d;
  }, py::arg("u"), py::arg("seed") = py::none(),
     "U = e^{i phase} (post1 x post2) A(coords) (pre1 x pre2).");

  m.def("reduce_coupling", [](const Eigen::Matrix3d &tensor) {
    const auto p = reduce_coupling(tensor_from(tensor));
    return py::make_tuple(p.J, p.Jzz, p.Jprime);
  }, py::arg("tensor"), "Return (J, Jzz, Jprime) from a 3x3 coupling tensor.");
  m.def("rot_frame_matrix", [](double J, double Jzz, double Jprime) {
    return rot_frame_matrix({J, Jzz, Jprime});
  }, py::arg("J"), py::arg("Jzz"), py::arg("Jprime") = 0.0);
  m.def("rwa_infidelity", [](const Eigen::Matrix3d &tensor, double eps, double T) {
    py::gil_scoped_release release;
    return rwa_infidelity(tensor_from(tensor), eps, T);
  }, py::arg("tensor"), py::arg("eps"), py::arg("T"));

  m.def("compile_cnot", [](double J, double Jzz, double Jprime, const std::string &prefer,
                           int refocus_qubit, bool force_general, double tol) {
    CompileOptions opts;
    opts.prefer = prefer_from_string(prefer);
    opts.refocus_qubit = refocus_qubit;
    opts.force_general = force_general;
    opts.tol = tol;
    return to_python(io::to_json(compile_cnot({J, Jzz, Jprime}, opts)));
  }, py::arg("J"), py::arg("Jzz"), py::arg("Jprime") = 0.0, py::arg("prefer") = "auto",
     py::arg("refocus_qubit") = 1, py::arg("force_general") = false, py::arg("tol") = 1e-9,
     "Compile a CNOT (or SWAP*CNOT) schedule; returns the JSON document as a dict.");
  m.def("simulate", [](const py::object &schedule, double J, double Jzz, double Jprime) {
    return simulate_schedule(io::schedule_from_json(from_python(schedule)), {J, Jzz, Jprime});
  }, py::arg("schedule"), py::arg("J"), py::arg("Jzz"), py::arg("Jprime") = 0.0,
     "Unitary of a schedule given as a list of op dicts.");
  m.def("trajectory", [](const py::object &schedule, double J, double Jzz, std::size_t samples) {
    const auto traj = trajectory({J, Jzz, 0.0}, io::schedule_from_json(from_python(schedule)),
                                 samples);
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(traj.size()), 7);
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const auto &s = traj[k];
      rows.row(static_cast<Eigen::Index>(k)) << s.t, s.raw.x, s.raw.y, s.raw.z, s.wrapped.x,
          s.wrapped.y, s.wrapped.z;
    }
    return rows;
  }, py::arg("schedule"), py::arg("J"), py::arg("Jzz"), py::arg("samples") = 0,
     "Rows of (t, x, y, z, x_wrapped, y_wrapped, z_wrapped).");
}
