// Copyright 2021 Google LLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSSB_HARNESS_HPP
#define DSSB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dssb/defects.hpp"
#include "dssb/generators.hpp"

namespace dssb {

/// One experiment. Serialized as a JSON document with nested sections.
struct ExperimentConfig {
    std::string kind;  // db-check | metastability-scan | kt-scan | goldstone-scan | lr-cone | survival | mc-survival
    GeneratorSpec model;
    std::vector<int> sizes;  // lattice side lengths
    std::string probes = "default";  // default | pauli | random
    int probe_count = 200;
    int max_power = 2;
    std::string observable_a = "x0";
    std::string observable_b = "z1";
    double tolerance = 1e-10;
    double threshold = 0.0;  // kind-specific acceptance threshold; 0 selects the default
    double time = 1.0;
    std::vector<double> v_tilde{1, 2, 4, 8};
    double delta = 0.2;
    double t_max = 1000.0;
    double delta_m = 0.5;
    int trials = 50;
    long cap = 0;  // 0 = auto (ten times the calibrated bound)
    uint64_t seed = 0;
    int threads = 1;
    std::string out = "results";

    bool operator==(const ExperimentConfig&) const;
};

const std::vector<std::string>& experiment_kinds();
/// Parses a JSON config document; throws ConfigError naming the offending field.
ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& config);
/// Defaults for a kind (used when the CLI gets no --config).
ExperimentConfig default_config(const std::string& kind);
/// Field-level validation, including the exact-diagonalization size guard.
void validate_config(const ExperimentConfig& config);
/// FNV-1a hash of the serialized config, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Product of Paulis written as letter/site pairs, e.g. "x0", "z0z1".
GlobalOperator parse_observable(const Lattice& lattice, const std::string& text);

struct RunRecord {
    ExperimentConfig config;
    std::string timestamp;
    std::string version;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::vector<DefectSeries> series;
    std::vector<std::pair<std::string, FitResult>> fits;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;
    bool passed = false;
    /// One-line human summary, e.g. "defect 3e-12, PASS(<=1e-10)".
    std::string summary;
};

RunRecord run(const ExperimentConfig& config);
/// Writes <kind>.csv and <kind>_summary.json into config.out.
void write_record(const RunRecord& record);
std::string summary_document(const RunRecord& record);
RunRecord parse_summary_document(const std::string& text);

struct ScalingReport {
    std::string text;  // plain-text table
    std::string data;  // two columns: log N, log value
    std::vector<DefectSeries> merged;
    std::vector<std::pair<std::string, FitResult>> fits;
};
/// Merges the defect series of records of the same kind and model and refits.
ScalingReport report(const std::vector<RunRecord>& records);

}  // namespace dssb

#endif
