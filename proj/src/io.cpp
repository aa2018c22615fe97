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

#include "bosonsim/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace bosonsim {

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto &e : m.entries()) {
        data.push_back({e.real(), e.imag()});
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const auto &data = j.at("data");
    if (data.size() != rows * cols) {
        throw std::invalid_argument("matrix_from_json: data length does not match rows*cols");
    }
    std::vector<cdouble> entries;
    entries.reserve(rows * cols);
    for (const auto &pair : data) {
        entries.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

void save_unitary(const std::string &path, const UnitaryMatrix &u) {
    write_json_file(path, matrix_to_json(u.matrix));
}

UnitaryMatrix load_unitary(const std::string &path) {
    return UnitaryMatrix(matrix_from_json(read_json_file(path)));
}

void write_distribution_csv(std::ostream &out, const Distribution &dist) {
    out << "outcome,value\n";
    for (const auto &[key, value] : dist) {
        out << key.str() << ',' << nlohmann::json(value).dump() << '\n';
    }
}

nlohmann::json distribution_to_json(const Distribution &dist) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &[key, value] : dist) {
        entries.push_back({{"outcome", key.str()}, {"value", value}});
    }
    return nlohmann::json{{"entries", std::move(entries)}};
}

namespace {

std::string record_outcome_string(const SampleRecord &record) {
    if (record.collision) {
        return "c";
    }
    return outcome_to_string(to_ordered(record.outcome));
}

}  // namespace

void write_samples_csv(std::ostream &out, const std::vector<SampleRecord> &records) {
    out << "sample_id,outcome\n";
    for (size_t i = 0; i < records.size(); i++) {
        out << i << ',' << record_outcome_string(records[i]) << '\n';
    }
}

void write_audit_jsonl(std::ostream &out, const std::vector<SampleRecord> &records) {
    for (size_t i = 0; i < records.size(); i++) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto &step : records[i].steps) {
            steps.push_back({
                {"weights", step.weights},
                {"fallback_uniform", step.fallback_uniform},
                {"chosen", step.chosen},
            });
        }
        nlohmann::json line{
            {"sample_id", i},
            {"outcome", record_outcome_string(records[i])},
            {"oracle_calls", records[i].oracle_calls},
            {"steps", std::move(steps)},
        };
        out << line.dump() << '\n';
    }
}

nlohmann::json make_report(
    const std::string &experiment, nlohmann::json parameters, nlohmann::json metrics, bool pass) {
    return nlohmann::json{
        {"experiment", experiment},
        {"parameters", std::move(parameters)},
        {"metrics", std::move(metrics)},
        {"pass", pass},
    };
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    return nlohmann::json::parse(in);
}

}  // namespace bosonsim
