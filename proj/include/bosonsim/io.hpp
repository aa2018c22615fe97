// Copyright 2026 The bosonsim authors
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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bosonsim/random_matrices.hpp"
#include "bosonsim/sampler.hpp"
#include "bosonsim/validation.hpp"

namespace bosonsim {

// Matrix wire format: {"rows": R, "cols": C, "data": [[re, im], ...]} with
// entries in row-major order. Doubles are emitted with shortest round-trip
// precision, so unitaries survive a save/load cycle bit-exactly.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

void save_unitary(const std::string &path, const UnitaryMatrix &u);
UnitaryMatrix load_unitary(const std::string &path);

/// CSV with header "outcome,value"; outcomes are space-separated sorted mode
/// indices or the literal "c".
void write_distribution_csv(std::ostream &out, const Distribution &dist);
nlohmann::json distribution_to_json(const Distribution &dist);

/// CSV rows "sample_id,outcome".
void write_samples_csv(std::ostream &out, const std::vector<SampleRecord> &records);
/// One JSON object per line with the per-step weight audit of each sample.
void write_audit_jsonl(std::ostream &out, const std::vector<SampleRecord> &records);

/// Standard report envelope: {experiment, parameters, metrics, pass}.
nlohmann::json make_report(
    const std::string &experiment, nlohmann::json parameters, nlohmann::json metrics, bool pass);

void write_json_file(const std::string &path, const nlohmann::json &j);
nlohmann::json read_json_file(const std::string &path);

}  // namespace bosonsim
