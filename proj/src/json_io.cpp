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

#include "qgd/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qgd/error.hpp"

namespace qgd::io {

namespace {

constexpr const char *kTensorKeys[3][3] = {
    {"Jxx", "Jxy", "Jxz"}, {"Jyx", "Jyy", "Jyz"}, {"Jzx", "Jzy", "Jzz"}};

[[noreturn]] void fail(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

double number(const Json &j, const char *what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_from_json(const Json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail("complex entries must be [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

template <typename Mat>
Json matrix_json(const Mat &m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const Mat2 &m) { return matrix_json(m); }
Json to_json(const Mat4 &m) { return matrix_json(m); }

Json to_json(const CouplingTensor &ct, const std::string &unit) {
  Json j = Json::object();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) j[kTensorKeys[a][b]] = ct.entries[a][b];
  if (!unit.empty()) j["unit"] = unit;
  return j;
}

Json to_json(const RotFrameParams &p) {
  return {{"J", p.J}, {"Jzz", p.Jzz}, {"Jprime", p.Jprime},
          {"gamma", {p.gamma().real(), p.gamma().imag()}}, {"phi", p.phi()}};
}

Json to_json(const PulseOp &op) {
  if (const auto *r = std::get_if<Rotate>(&op)) {
    Json j = {{"op", "rotate"},
              {"axis", std::string(1, axis_name(r->axis))},
              {"angle", r->angle},
              {"qubit", r->qubit}};
    if (r->simultaneous) j["simultaneous"] = true;
    return j;
  }
  if (const auto *e = std::get_if<Entangle>(&op))
    return {{"op", "entangle"}, {"duration", e->duration}};
  return {{"op", "phase"}, {"angle", std::get<GlobalPhase>(op).angle}};
}

Json to_json(const PulseSchedule &s) {
  Json arr = Json::array();
  for (const auto &op : s.ops()) arr.push_back(to_json(op));
  return arr;
}

Json to_json(const MakhlinInvariants &inv) {
  return {{"G1", {inv.g1.real(), inv.g1.imag()}}, {"G2", inv.g2}};
}

Json to_json(const KakFactors &kak) {
  return {{"phase", kak.phase},
          {"coords", {kak.coords.x, kak.coords.y, kak.coords.z}},
          {"u_pre", {to_json(kak.pre.first), to_json(kak.pre.second)}},
          {"u_post", {to_json(kak.post.first), to_json(kak.post.second)}}};
}

Json to_json(const VerificationReport &r) {
  return {{"target", r.target},
          {"mode", std::string(to_string(r.mode))},
          {"tolerance", r.tolerance},
          {"distance", r.distance},
          {"distance_up_to_phase", r.distance_up_to_phase},
          {"invariant_distance", r.invariant_distance},
          {"pass_exact", r.pass_exact},
          {"pass_up_to_phase", r.pass_up_to_phase},
          {"pass_class", r.pass_class},
          {"passed", r.passed()},
          {"entangling_time", r.entangling_time}};
}

Json to_json(const CompileResult &r) {
  return {{"branch", std::string(to_string(r.branch))},
          {"target", r.target},
          {"delta_t", r.delta_t},
          {"total_entangling_time", r.schedule.total_entangling_time()},
          {"params", to_json(r.params)},
          {"schedule", to_json(r.schedule)},
          {"verification", to_json(r.verification)}};
}

Mat4 mat4_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 4) fail("matrix must be an array of 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const Json &row = j[i];
    if (!row.is_array() || row.size() != 4) fail("matrix rows must have 4 entries");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from_json(row[k]);
  }
  return m;
}

CouplingTensor coupling_from_json(const Json &j) {
  if (!j.is_object()) fail("coupling tensor must be a JSON object");
  CouplingTensor ct;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const char *key = kTensorKeys[a][b];
      if (!j.contains(key)) fail(std::string("coupling tensor is missing \"") + key + "\"");
      ct.entries[a][b] = number(j.at(key), key);
    }
  if (j.contains("unit") && !j.at("unit").is_string()) fail("\"unit\" must be a string");
  return ct;
}

RotFrameParams params_from_json(const Json &j) {
  if (!j.is_object()) fail("couplings must be a JSON object");
  if (j.contains("params")) return params_from_json(j.at("params"));
  if (j.contains("Jxx")) return reduce_coupling(coupling_from_json(j));
  if (!j.contains("J") && !j.contains("Jzz") && !j.contains("Jprime"))
    fail("expected a coupling tensor or any of \"J\", \"Jzz\", \"Jprime\"");
  RotFrameParams p;
  if (j.contains("J")) p.J = number(j.at("J"), "J");
  if (j.contains("Jzz")) p.Jzz = number(j.at("Jzz"), "Jzz");
  if (j.contains("Jprime")) p.Jprime = number(j.at("Jprime"), "Jprime");
  return p;
}

PulseOp op_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("op") || !j.at("op").is_string())
    fail("schedule entries must be objects with an \"op\" string");
  const std::string kind = j.at("op").get<std::string>();
  auto field = [&](const char *key) {
    if (!j.contains(key)) fail(kind + " op is missing \"" + key + "\"");
    return number(j.at(key), key);
  };
  PulseOp op;
  if (kind == "rotate") {
    if (!j.contains("axis") || !j.at("axis").is_string() ||
        j.at("axis").get<std::string>().size() != 1)
      fail("rotate op needs a one-letter \"axis\"");
    const double qubit = field("qubit");
    if (qubit != 1.0 && qubit != 2.0) fail("rotate op \"qubit\" must be 1 or 2");
    Rotate r;
    try {
      r.axis = axis_from_char(j.at("axis").get<std::string>()[0]);
    } catch (const Error &e) {
      fail(e.what());
    }
    r.angle = field("angle");
    r.qubit = static_cast<int>(qubit);
    r.simultaneous = j.value("simultaneous", false);
    op = r;
  } else if (kind == "entangle") {
    op = Entangle{field("duration")};
  } else if (kind == "phase") {
    op = GlobalPhase{field("angle")};
  } else {
    fail("unknown op \"" + kind + "\"");
  }
  try {
    validate(op);
  } catch (const Error &e) {
    fail(e.what());
  }
  return op;
}

PulseSchedule schedule_from_json(const Json &j) {
  if (j.is_object() && j.contains("schedule")) return schedule_from_json(j.at("schedule"));
  if (!j.is_array()) fail("schedule must be a JSON array of ops");
  std::vector<PulseOp> ops;
  for (const auto &entry : j) ops.push_back(op_from_json(entry));
  return PulseSchedule(std::move(ops));
}

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception &e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace qgd::io
