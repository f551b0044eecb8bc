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

#pragma once

// JSON interchange formats. Complex numbers are [re, im] pairs; matrices
// are row-major arrays of rows.

#include <json.hpp>

#include "qgd/compiler.hpp"
#include "qgd/equivalence.hpp"
#include "qgd/hamiltonian.hpp"
#include "qgd/pulses.hpp"
#include "qgd/schedule.hpp"

namespace qgd::io {

using Json = nlohmann::json;

Json to_json(const Mat2 &m);
Json to_json(const Mat4 &m);
Json to_json(const CouplingTensor &ct, const std::string &unit = "");
Json to_json(const RotFrameParams &p);
Json to_json(const PulseOp &op);
Json to_json(const PulseSchedule &s);
Json to_json(const MakhlinInvariants &inv);
Json to_json(const KakFactors &kak);
Json to_json(const VerificationReport &r);
Json to_json(const CompileResult &r);

// Parsers throw Error{ParseError} on malformed input.

Mat4 mat4_from_json(const Json &j);
/// {"Jxx": .., "Jxy": .., ..., "Jzz": ..}; all nine keys required, an
/// optional "unit" string is ignored.
CouplingTensor coupling_from_json(const Json &j);
/// Accepts a coupling tensor (reduced on the fly), an object with any of
/// "J", "Jzz", "Jprime" (missing keys are zero), or a compile result
/// carrying "params".
RotFrameParams params_from_json(const Json &j);
PulseOp op_from_json(const Json &j);
/// Accepts a bare op array or an object carrying "schedule".
PulseSchedule schedule_from_json(const Json &j);

Json parse(const std::string &text);
Json read_file(const std::string &path);

}  // namespace qgd::io
