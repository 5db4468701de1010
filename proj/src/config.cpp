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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dssb/errors.hpp"
#include "dssb/harness.hpp"
#include "json.hpp"

namespace dssb {

using nlohmann::json;

namespace {

json number_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

double read_double(const json& j, const std::string& field) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        throw ConfigError("config field '" + field + "': expected a number or \"inf\", got \"" + s + "\"");
    }
    if (!j.is_number()) throw ConfigError("config field '" + field + "': expected a number");
    return j.get<double>();
}

const json* find(const json& j, const std::string& key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

template <typename T>
T read(const json& j, const std::string& field) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config field '" + field + "': wrong type");
    }
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
    static const std::vector<std::string> kinds{"db-check", "metastability-scan", "kt-scan", "goldstone-scan",
                                                "lr-cone",  "survival",           "mc-survival"};
    return kinds;
}

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
    auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
    return kind == o.kind && model.model == o.model.model && model.d == o.model.d && same(model.beta, o.model.beta) &&
           same(model.j, o.model.j) && model.rate == o.model.rate && model.couplings == o.model.couplings &&
           same(model.kappa, o.model.kappa) && sizes == o.sizes && probes == o.probes &&
           probe_count == o.probe_count && max_power == o.max_power && observable_a == o.observable_a &&
           observable_b == o.observable_b && same(tolerance, o.tolerance) && same(threshold, o.threshold) &&
           same(time, o.time) && v_tilde == o.v_tilde && same(delta, o.delta) && same(t_max, o.t_max) &&
           same(delta_m, o.delta_m) && trials == o.trials && cap == o.cap && seed == o.seed &&
           threads == o.threads && out == o.out;
}

std::string serialize_config(const ExperimentConfig& c) {
    json j;
    j["kind"] = c.kind;
    j["model"] = {{"name", c.model.model}, {"d", c.model.d},         {"beta", number_or_inf(c.model.beta)},
                  {"J", c.model.j},        {"rate", c.model.rate}, {"couplings", c.model.couplings},
                  {"kappa", c.model.kappa}};
    j["sizes"] = c.sizes;
    j["probes"] = {{"family", c.probes}, {"count", c.probe_count}};
    j["observables"] = {{"a", c.observable_a}, {"b", c.observable_b}};
    j["kt"] = {{"max_power", c.max_power}};
    j["tolerance"] = c.tolerance;
    j["threshold"] = c.threshold;
    j["lr"] = {{"t", c.time}, {"v_tilde", c.v_tilde}};
    j["survival"] = {{"delta", c.delta}, {"t_max", c.t_max}};
    j["mc"] = {{"delta_m", c.delta_m}, {"trials", c.trials}, {"cap", c.cap}};
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["out"] = c.out;
    return j.dump(2);
}

ExperimentConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    ExperimentConfig c;
    const json* kind = find(j, "kind");
    if (!kind) throw ConfigError("config field 'kind' is missing");
    c.kind = read<std::string>(*kind, "kind");
    const json* model = find(j, "model");
    if (!model || !model->is_object()) throw ConfigError("config field 'model' is missing");
    if (auto v = find(*model, "name")) c.model.model = read<std::string>(*v, "model.name");
    if (auto v = find(*model, "d")) c.model.d = read<int>(*v, "model.d");
    const json* beta = find(*model, "beta");
    if (!beta) throw ConfigError("config field 'model.beta' is missing");
    c.model.beta = read_double(*beta, "model.beta");
    if (auto v = find(*model, "J")) c.model.j = read_double(*v, "model.J");
    if (auto v = find(*model, "rate")) c.model.rate = read<std::string>(*v, "model.rate");
    if (auto v = find(*model, "couplings")) c.model.couplings = read<std::string>(*v, "model.couplings");
    if (auto v = find(*model, "kappa")) c.model.kappa = read_double(*v, "model.kappa");
    const json* sizes = find(j, "sizes");
    if (!sizes) throw ConfigError("config field 'sizes' is missing");
    c.sizes = read<std::vector<int>>(*sizes, "sizes");
    if (auto p = find(j, "probes")) {
        if (auto v = find(*p, "family")) c.probes = read<std::string>(*v, "probes.family");
        if (auto v = find(*p, "count")) c.probe_count = read<int>(*v, "probes.count");
    }
    if (auto o = find(j, "observables")) {
        if (auto v = find(*o, "a")) c.observable_a = read<std::string>(*v, "observables.a");
        if (auto v = find(*o, "b")) c.observable_b = read<std::string>(*v, "observables.b");
    }
    if (auto k = find(j, "kt")) {
        if (auto v = find(*k, "max_power")) c.max_power = read<int>(*v, "kt.max_power");
    }
    if (auto v = find(j, "tolerance")) c.tolerance = read_double(*v, "tolerance");
    if (auto v = find(j, "threshold")) c.threshold = read_double(*v, "threshold");
    if (auto l = find(j, "lr")) {
        if (auto v = find(*l, "t")) c.time = read_double(*v, "lr.t");
        if (auto v = find(*l, "v_tilde")) c.v_tilde = read<std::vector<double>>(*v, "lr.v_tilde");
    }
    if (auto s = find(j, "survival")) {
        if (auto v = find(*s, "delta")) c.delta = read_double(*v, "survival.delta");
        if (auto v = find(*s, "t_max")) c.t_max = read_double(*v, "survival.t_max");
    }
    if (auto m = find(j, "mc")) {
        if (auto v = find(*m, "delta_m")) c.delta_m = read_double(*v, "mc.delta_m");
        if (auto v = find(*m, "trials")) c.trials = read<int>(*v, "mc.trials");
        if (auto v = find(*m, "cap")) c.cap = read<long>(*v, "mc.cap");
    }
    if (auto v = find(j, "seed")) c.seed = read<uint64_t>(*v, "seed");
    if (auto v = find(j, "threads")) c.threads = read<int>(*v, "threads");
    if (auto v = find(j, "out")) c.out = read<std::string>(*v, "out");
    validate_config(c);
    return c;
}

void validate_config(const ExperimentConfig& c) {
    const auto& kinds = experiment_kinds();
    if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end()) {
        throw ConfigError("config field 'kind': unknown experiment kind '" + c.kind + "'");
    }
    if (c.sizes.empty()) throw ConfigError("config field 'sizes' must be nonempty");
    if (c.model.d < 1) throw ConfigError("config field 'model.d' must be >= 1");
    if (!(c.model.beta >= 0)) throw ConfigError("config field 'model.beta' must be >= 0");
    if (!(c.tolerance > 0)) throw ConfigError("config field 'tolerance' must be > 0");
    if (c.threads < 1) throw ConfigError("config field 'threads' must be >= 1");
    for (int L : c.sizes) {
        if (L < 2) throw ConfigError("config field 'sizes': side lengths must be >= 2");
        if (c.kind == "mc-survival") continue;
        double n = 1;
        for (int i = 0; i < c.model.d; ++i) n *= L;
        if (n > 12) {
            throw ConfigError("config field 'sizes': L=" + std::to_string(L) + " in d=" + std::to_string(c.model.d) +
                              " gives N > 12, beyond the exact-diagonalization limit");
        }
    }
    if (c.kind == "kt-scan" || c.kind == "goldstone-scan") {
        if (c.max_power < 0) throw ConfigError("config field 'kt.max_power' must be >= 0");
    }
    if (c.kind == "lr-cone") {
        if (c.v_tilde.empty()) throw ConfigError("config field 'lr.v_tilde' must be nonempty");
        if (!(c.time >= 0)) throw ConfigError("config field 'lr.t' must be >= 0");
    }
    if (c.kind == "survival" && !(c.delta > 0)) throw ConfigError("config field 'survival.delta' must be > 0");
    if (c.kind == "mc-survival") {
        if (c.trials < 20) throw ConfigError("config field 'mc.trials' must be >= 20");
        if (!(c.delta_m > 0)) throw ConfigError("config field 'mc.delta_m' must be > 0");
        if (c.cap < 0) throw ConfigError("config field 'mc.cap' must be >= 0");
    }
}

ExperimentConfig default_config(const std::string& kind) {
    ExperimentConfig c;
    c.kind = kind;
    if (kind == "db-check") {
        c.sizes = {4};
        c.threshold = 1e-10;
    } else if (kind == "metastability-scan") {
        c.model.beta = std::numeric_limits<double>::infinity();
        c.sizes = {4, 6, 8, 10, 12};
        c.threshold = -0.9;
    } else if (kind == "kt-scan") {
        c.model.model = "davies_heisenberg";
        c.model.beta = std::numeric_limits<double>::infinity();
        c.sizes = {4, 6, 8};
        c.observable_a = "z0z1";
        c.observable_b = "x0x1";
    } else if (kind == "goldstone-scan") {
        c.model.model = "singlet_triplet_pump";
        c.model.beta = std::numeric_limits<double>::infinity();
        c.sizes = {4, 6, 8};
        c.max_power = 1;
        c.observable_a = "x0";
        c.threshold = -0.8;
    } else if (kind == "lr-cone") {
        c.sizes = {12};
        c.observable_a = "z0";
        c.tolerance = 1e-11;
    } else if (kind == "survival") {
        c.model.beta = 2.0;
        c.sizes = {4, 6, 8};
        c.observable_a = "z0";
        c.tolerance = 1e-8;
    } else if (kind == "mc-survival") {
        c.model.d = 2;
        c.model.beta = 0.5;
        c.sizes = {8, 16, 32, 64};
        c.threads = 1;
    } else {
        throw ConfigError("unknown experiment kind '" + kind + "'");
    }
    return c;
}

std::string config_hash(const ExperimentConfig& config) {
    // the output directory and thread count do not change results
    ExperimentConfig c = config;
    c.out.clear();
    c.threads = 1;
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_config(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

GlobalOperator parse_observable(const Lattice& lattice, const std::string& text) {
    std::vector<std::pair<int, char>> factors;
    size_t i = 0;
    while (i < text.size()) {
        const char c = static_cast<char>(std::tolower(text[i]));
        if (c != 'x' && c != 'y' && c != 'z') throw ConfigError("observable '" + text + "': expected x, y or z");
        size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) throw ConfigError("observable '" + text + "': missing site index");
        const int site = std::stoi(text.substr(i + 1, j - i - 1));
        if (site >= lattice.num_sites()) throw ConfigError("observable '" + text + "': site outside lattice");
        factors.emplace_back(site, c);
        i = j;
    }
    if (factors.empty()) throw ConfigError("observable: empty");
    GlobalOperator out = GlobalOperator::identity(lattice.num_sites());
    for (const auto& [site, c] : factors) out = out * site_operator(lattice, site, pauli::by_name(std::toupper(c)));
    return out;
}

}  // namespace dssb
