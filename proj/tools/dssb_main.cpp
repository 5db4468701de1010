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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dssb/errors.hpp"
#include "dssb/harness.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dssb::ConfigError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Overrides {
    std::string config;
    std::string out;
    int threads = 0;
    uint64_t seed = 0;
    bool has_seed = false;
};

int run_kind(const std::string& kind, const Overrides& o) {
    dssb::ExperimentConfig c = o.config.empty() ? dssb::default_config(kind) : dssb::parse_config(slurp(o.config));
    if (c.kind != kind) throw dssb::ConfigError("config field 'kind' is '" + c.kind + "', expected '" + kind + "'");
    if (!o.out.empty()) c.out = o.out;
    if (o.threads > 0) c.threads = o.threads;
    if (o.has_seed) c.seed = o.seed;
    dssb::validate_config(c);
    dssb::RunRecord r = dssb::run(c);
    dssb::write_record(r);
    std::cout << kind << ": " << r.summary << "\n";
    for (const auto& [name, ok] : r.checks) std::cout << "  " << (ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    return r.passed ? 0 : 1;
}

int run_report(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<dssb::RunRecord> records;
    for (const auto& p : inputs) records.push_back(dssb::parse_summary_document(slurp(p)));
    dssb::ScalingReport rep = dssb::report(records);
    std::cout << rep.text;
    if (!out.empty()) {
        std::ofstream(out + ".txt") << rep.text;
        std::ofstream(out + ".dat") << rep.data;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metastability and symmetry-breaking defect experiments for local Lindbladians"};
    app.require_subcommand(1);
    Overrides o;
    std::string selected;
    for (const auto& kind : dssb::experiment_kinds()) {
        auto* sub = app.add_subcommand(kind, "Run the " + kind + " experiment");
        sub->add_option("--config", o.config, "JSON experiment config (defaults used when absent)");
        sub->add_option("--out", o.out, "Output directory");
        sub->add_option("--threads", o.threads, "Worker threads");
        sub->add_option("--seed", o.seed, "Seed override")->each([&](const std::string&) { o.has_seed = true; });
        sub->callback([&selected, kind] { selected = kind; });
    }
    std::vector<std::string> inputs;
    std::string report_out;
    auto* rep = app.add_subcommand("report", "Merge summary documents into a scaling report");
    rep->add_option("summaries", inputs, "Summary JSON files")->required();
    rep->add_option("--out", report_out, "Write <out>.txt and <out>.dat");
    rep->callback([&selected] { selected = "report"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (selected == "report") return run_report(inputs, report_out);
        return run_kind(selected, o);
    } catch (const dssb::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
