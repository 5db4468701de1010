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

#include "dssb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "dssb/certify.hpp"
#include "dssb/dynamics.hpp"
#include "dssb/errors.hpp"
#include "dssb/glauber_mc.hpp"
#include "dssb/states.hpp"
#include "json.hpp"

namespace dssb {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "dssb 1.0.0";
constexpr int kSchemaVersion = 1;

std::string fmt(double v, const char* f = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

GeneratorSpec spec_for(const ExperimentConfig& c, int L) {
    GeneratorSpec s = c.model;
    s.L = L;
    s.seed = c.seed;
    return s;
}

GlobalOperator model_hamiltonian(const ExperimentConfig& c, const Lattice& lat) {
    if (c.model.model == "davies_heisenberg" || c.model.model == "singlet_triplet_pump") {
        return heisenberg_hamiltonian(lat, c.model.model == "davies_heisenberg" ? c.model.j : 1.0);
    }
    return ising_hamiltonian(lat, c.model.j);
}

ProbeSet probes_for(const ExperimentConfig& c, const Lattice& lat) {
    if (c.probes == "pauli") return pauli_probes(lat);
    if (c.probes == "random") return random_local_probes(lat, c.probe_count, c.seed);
    if (c.probes == "default") return default_probes(lat, c.seed);
    throw ConfigError("config field 'probes.family': unknown family '" + c.probes + "'");
}

struct Ctx {
    const ExperimentConfig& c;
    RunRecord& rec;
    std::string hash;
    std::string seed;

    void defect_row(int L, int n, const std::string& probe, const std::string& kind, double value,
                    const std::string& hyp = "na") {
        rec.csv_rows.push_back({c.model.model, std::to_string(c.model.d), std::to_string(L), std::to_string(n), probe,
                                kind, fmt(value, "%.17g"), hyp, seed, hash});
    }
    void check(const std::string& name, bool ok) { rec.checks.emplace_back(name, ok); }
};

const std::vector<std::string> kDefectHeader{"model", "d",     "L",             "N",    "probe_id",
                                             "defect_kind", "value", "hypothesis_ok", "seed", "config_hash"};

bool try_fit(Ctx& ctx, const DefectSeries& s, bool in_side, FitResult& out) {
    try {
        out = in_side ? fit_exponent_in_side(s) : fit_exponent(s);
        if (!out.notice.empty()) ctx.rec.notes.push_back(s.kind + ": " + out.notice);
        ctx.rec.fits.emplace_back(s.kind, out);
        return true;
    } catch (const std::invalid_argument& e) {
        ctx.rec.notes.push_back(s.kind + ": fit aborted: " + e.what());
        return false;
    }
}

void run_db_check(Ctx& ctx) {
    const auto& c = ctx.c;
    const double thr = c.threshold > 0 ? c.threshold : 1e-10;
    double worst = 0.0;
    for (int L : c.sizes) {
        Lattice lat(c.model.d, L);
        Liouvillian l = build_generator(spec_for(c, L));
        StateFunctional w = gibbs(model_hamiltonian(c, lat), c.model.beta);
        ProbeSet p = probes_for(c, lat);
        const double d = detailed_balance_defect(l, w, p);
        worst = std::max(worst, d);
        ctx.defect_row(L, lat.num_sites(), p.description, "detailed_balance", d);
    }
    ctx.check("detailed balance defect <= " + fmt(thr, "%.0e"), worst <= thr);
    ctx.rec.summary = "defect " + fmt(worst, "%.0e") + ", " + (worst <= thr ? "PASS" : "FAIL") + "(<=" +
                      fmt(thr, "%.0e") + ")";
}

void run_metastability(Ctx& ctx) {
    const auto& c = ctx.c;
    const double thr = c.threshold != 0 ? c.threshold : -0.9;
    DefectSeries meta{c.model.model, "metastability", {}};
    DefectSeries rev{c.model.model, "reversibility", {}};
    for (int L : c.sizes) {
        Lattice lat(c.model.d, L);
        Liouvillian l = build_generator(spec_for(c, L));
        StateFunctional w = gibbs(ising_hamiltonian(lat, c.model.j), c.model.beta);
        GlobalOperator sz = extensive_observable(lat, single_site_template(0.5 * pauli::Z()), lat.all());
        StateFunctional wp = tilted_pair(w, sz).first;
        GlobalOperator a = parse_observable(lat, c.observable_a);
        GlobalOperator b = parse_observable(lat, c.observable_b);
        const double m = metastability_defect(wp, l, a);
        const double r = reversibility_defect(wp, l, a, b);
        meta.add(L, lat.num_sites(), m);
        rev.add(L, lat.num_sites(), r);
        ctx.defect_row(L, lat.num_sites(), c.observable_a, "metastability", m);
        ctx.defect_row(L, lat.num_sites(), c.observable_a + "," + c.observable_b, "reversibility", r);
    }
    ctx.rec.series = {meta, rev};
    std::string text;
    for (const auto* s : {&meta, &rev}) {
        FitResult f;
        const bool ok = try_fit(ctx, *s, false, f) && f.slope <= thr && f.residual <= 0.1;
        ctx.check(s->kind + " slope <= " + fmt(thr) + " with residual <= 0.1", ok);
        text += s->kind + " exponent " + (f.used ? fmt(f.slope, "%.3f") : std::string("n/a")) + "; ";
    }
    const bool pass = ctx.rec.checks[0].second && ctx.rec.checks[1].second;
    ctx.rec.summary = text + (pass ? "PASS" : "FAIL") + "(<=" + fmt(thr) + ")";
}

void run_kt(Ctx& ctx) {
    const auto& c = ctx.c;
    if (c.max_power < 1) throw ConfigError("config field 'kt.max_power' must be >= 1 for kt-scan");
    DefectSeries delta{c.model.model, "kt_reversibility(1,1)", {}};
    bool norm_ok = true, o2_ok = true, o1_ok = true, lemma_ok = true;
    for (int L : c.sizes) {
        Lattice lat(c.model.d, L);
        const int n = lat.num_sites();
        Liouvillian l = build_generator(spec_for(c, L));
        StateFunctional w = gibbs(heisenberg_hamiltonian(lat), std::numeric_limits<double>::infinity());
        OrderParameterPair pair = spin_pair(lat);
        KTFamily fam = kt_family(w, raising_operator(pair), c.max_power);
        double prev = -std::numeric_limits<double>::infinity();
        for (int m = 0; m <= c.max_power; ++m) {
            StateFunctional s = kt_state(fam, m);
            const double one = std::abs(s.evaluate(GlobalOperator::identity(n)) - 1.0);
            const double o2 = std::abs(s.evaluate(pair.o2));
            const double o1 = s.evaluate(pair.o1).real() / n;
            norm_ok = norm_ok && one <= 1e-10;
            o2_ok = o2_ok && o2 <= 1e-10;
            o1_ok = o1_ok && o1 >= prev - 1e-12 && (m == 0 || o1 > 0);
            prev = o1;
            ctx.defect_row(L, n, "M=" + std::to_string(m), "kt_norm_error", one);
            ctx.defect_row(L, n, "M=" + std::to_string(m), "kt_o2", o2);
            ctx.defect_row(L, n, "M=" + std::to_string(m), "kt_o1_per_site", o1);
        }
        GlobalOperator a = parse_observable(lat, c.observable_a);
        GlobalOperator b = parse_observable(lat, c.observable_b);
        const double d = kt_reversibility_defect(fam, l, 1, 1, a, b);
        delta.add(L, n, d);
        ctx.defect_row(L, n, c.observable_a + "," + c.observable_b, "kt_reversibility(1,1)", d);
        const double mu = fluctuation_ratio(w, pair.o1, pair.o);
        for (int m = 1; m <= c.max_power; ++m) {
            KomaReport rep = koma_lemma_check(w, lat, pair, Region(n, {0}), m, mu, site_operator(lat, 0, pauli::Z()));
            if (rep.hypotheses()) lemma_ok = lemma_ok && rep.all_hold();
            ctx.rec.notes.push_back("N=" + std::to_string(n) + " M=" + std::to_string(m) + ": " + rep.status());
            ctx.defect_row(L, n, "M=" + std::to_string(m), "koma_r", rep.r, rep.hypotheses() ? "yes" : "no");
        }
    }
    ctx.rec.series = {delta};
    bool decreasing = true;
    for (size_t i = 1; i < delta.entries.size(); ++i) decreasing = decreasing && delta.entries[i].value < delta.entries[i - 1].value;
    ctx.check("kt_state normalization", norm_ok);
    ctx.check("kt_state O2 = 0", o2_ok);
    ctx.check("kt_state O1/N positive and non-decreasing in M", o1_ok);
    ctx.check("Delta(1,1) decreasing in N", decreasing);
    ctx.check("lemma inequalities hold where hypotheses hold", lemma_ok);
    FitResult f;
    try_fit(ctx, delta, false, f);
    bool pass = true;
    for (const auto& [_, ok] : ctx.rec.checks) pass = pass && ok;
    ctx.rec.summary = "Delta(1,1) " + std::string(decreasing ? "decreasing" : "not decreasing") + ", " +
                      (pass ? "PASS" : "FAIL");
}

void run_goldstone(Ctx& ctx) {
    const auto& c = ctx.c;
    const double thr = c.threshold != 0 ? c.threshold : -0.8;
    DefectSeries gap{c.model.model, "goldstone_gap", {}};
    bool images_ok = true;
    for (int L : c.sizes) {
        Lattice lat(c.model.d, L);
        const int n = lat.num_sites();
        Liouvillian l = build_generator(spec_for(c, L));
        StateFunctional w = gibbs(heisenberg_hamiltonian(lat), std::numeric_limits<double>::infinity());
        OrderParameterPair pair = spin_pair(lat);
        StateFunctional om = kt_state(w, raising_operator(pair), c.max_power);
        StateFunctional sg = twisted_state(om, goldstone_twist(lat, pair.tc));
        GlobalOperator la = l.apply(parse_observable(lat, c.observable_a));
        const double g = std::abs(sg.evaluate(la) - om.evaluate(la));
        gap.add(L, n, g);
        ctx.defect_row(L, n, c.observable_a, "goldstone_gap", g);
        auto wind = winding_number(order_parameter_image(sg, lat, pair));
        const double spread = image_spread(order_parameter_image(om, lat, pair));
        const bool ok = wind && std::abs(*wind) == 1 && spread <= 1e-8;
        images_ok = images_ok && ok;
        ctx.defect_row(L, n, "image", "winding", wind ? *wind : 0, ok ? "yes" : "no");
    }
    ctx.rec.series = {gap};
    FitResult f;
    const bool fit_ok = try_fit(ctx, gap, true, f) && f.slope <= thr;
    ctx.check("gap slope in L <= " + fmt(thr), fit_ok);
    ctx.check("twisted image winds once, untwisted image constant", images_ok);
    ctx.rec.summary = "gap exponent " + (f.used ? fmt(f.slope, "%.3f") : std::string("n/a")) + ", " +
                      (fit_ok && images_ok ? "PASS" : "FAIL") + "(<=" + fmt(thr) + ")";
}

void run_lr(Ctx& ctx) {
    const auto& c = ctx.c;
    const int L = c.sizes.front();
    Lattice lat(c.model.d, L);
    Liouvillian l = build_generator(spec_for(c, L));
    GlobalOperator a = parse_observable(lat, c.observable_a);
    std::vector<double> vals;
    for (double v : c.v_tilde) {
        LiebRobinsonResult r = lieb_robinson_defect(l, a, c.time, v, c.tolerance);
        vals.push_back(r.defect);
        ctx.defect_row(L, lat.num_sites(), "v_tilde=" + fmt(v), "lieb_robinson", r.defect,
                       r.covers_lattice ? "cone covers lattice" : "no");
        if (r.covers_lattice) ctx.rec.notes.push_back("v_tilde=" + fmt(v) + ": cone covers the lattice");
    }
    bool dec = true;
    for (size_t i = 1; i < vals.size(); ++i) dec = dec && vals[i] < vals[i - 1];
    ctx.check("defect strictly decreasing in v_tilde", dec);
    ctx.rec.summary = std::string("Lieb-Robinson defect ") + (dec ? "strictly decreasing, PASS" : "not decreasing, FAIL");
}

void run_survival(Ctx& ctx) {
    const auto& c = ctx.c;
    ctx.rec.csv_header = {"model", "d", "L", "delta_A", "t_eq_or_exceeded", "seed", "config_hash"};
    const double expo = static_cast<double>(c.model.d) / (c.model.d + 1);
    double cfit = 0.0;
    bool ok = true;
    DefectSeries s{c.model.model, "survival_time", {}};
    for (int L : c.sizes) {
        Lattice lat(c.model.d, L);
        Liouvillian l = build_generator(spec_for(c, L));
        StateFunctional w0 = gibbs(ising_hamiltonian(lat, c.model.j), std::numeric_limits<double>::infinity());
        GlobalOperator sz = extensive_observable(lat, single_site_template(0.5 * pauli::Z()), lat.all());
        StateFunctional wp = tilted_pair(w0, sz).first;
        GlobalOperator a = parse_observable(lat, c.observable_a);
        const double delta = c.delta * op_norm(a);
        SurvivalResult r = survival_time(l, wp, a, delta, c.t_max, c.tolerance);
        s.add(L, lat.num_sites(), r.time, r.exceeded ? "exceeded" : "");
        ctx.rec.csv_rows.push_back({c.model.model, std::to_string(c.model.d), std::to_string(L), fmt(delta),
                                    r.exceeded ? "exceeded" : fmt(r.time, "%.10g"), ctx.seed, ctx.hash});
        if (cfit == 0.0) cfit = r.time / std::pow(L, expo);
        ok = ok && r.time >= cfit * std::pow(L, expo) * (1 - 1e-12);
    }
    ctx.rec.series = {s};
    ctx.rec.notes.push_back("c fitted at L=" + std::to_string(c.sizes.front()) + ": " + fmt(cfit));
    ctx.check("t_eq >= c L^{d/(d+1)} at all sizes", ok);
    ctx.rec.summary = std::string("survival lower bound ") + (ok ? "PASS" : "FAIL") + " (c=" + fmt(cfit) + ")";
}

void run_mc(Ctx& ctx) {
    const auto& c = ctx.c;
    ctx.rec.csv_header = {"d", "L", "beta", "delta_m", "trial", "sweeps_or_censored", "seed", "config_hash"};
    const double expo = static_cast<double>(c.model.d) / (c.model.d + 1);
    double cfit = 0.0;
    bool bound_ok = true;
    std::vector<double> medians;
    DefectSeries s{"glauber_mc", "mc_median_survival", {}};
    for (int L : c.sizes) {
        long cap = c.cap > 0 ? c.cap : 1000000;
        if (c.cap == 0 && cfit > 0) cap = std::min<long>(cap, static_cast<long>(std::ceil(10 * cfit * std::pow(L, expo))));
        SurvivalStats st = mc_survival_time(c.model.d, L, c.model.beta, c.delta_m, c.trials, c.seed, cap, c.threads,
                                            c.model.j);
        for (int i = 0; i < c.trials; ++i) {
            ctx.rec.csv_rows.push_back({std::to_string(c.model.d), std::to_string(L), fmt(c.model.beta),
                                        fmt(c.delta_m), std::to_string(i),
                                        st.censored[i] ? "censored>=" + std::to_string(st.sweeps[i])
                                                       : std::to_string(st.sweeps[i]),
                                        ctx.seed, ctx.hash});
        }
        if (cfit == 0.0) cfit = st.median / std::pow(L, expo);
        const double bound = cfit * std::pow(L, expo);
        bound_ok = bound_ok && st.median >= bound * (1 - 1e-12);
        medians.push_back(st.median);
        s.add(L, static_cast<int>(std::lround(std::pow(L, c.model.d))), st.median,
              st.median_censored ? "censored median (lower bound)" : "");
        ctx.rec.notes.push_back("L=" + std::to_string(L) + ": median " + fmt(st.median) + " [" + fmt(st.q1) + ", " +
                                fmt(st.q3) + "], censored " + std::to_string(st.num_censored) + "/" +
                                std::to_string(c.trials) + " at cap " + std::to_string(cap) + ", bound " + fmt(bound));
    }
    ctx.rec.series = {s};
    const bool grows = medians.back() > medians.front();
    ctx.check("median >= c L^{d/(d+1)} at all L", bound_ok);
    ctx.check("median(largest L) > median(smallest L)", grows);
    ctx.rec.summary = std::string("MC survival ") + (bound_ok && grows ? "PASS" : "FAIL") + " (c=" + fmt(cfit) + ")";
}

json series_json(const DefectSeries& s) {
    json e = json::array();
    for (const auto& x : s.entries) e.push_back({{"L", x.L}, {"N", x.n}, {"value", x.value}, {"meta", x.meta}});
    return {{"model", s.model}, {"kind", s.kind}, {"entries", e}};
}

json fit_json(const FitResult& f) {
    return {{"slope", f.slope},   {"intercept", f.intercept}, {"stderr", f.stderr_slope},
            {"residual", f.residual}, {"used", f.used},       {"excluded", f.excluded}, {"notice", f.notice}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

RunRecord run(const ExperimentConfig& config) {
    validate_config(config);
    RunRecord rec;
    rec.config = config;
    rec.timestamp = now_utc();
    rec.version = kVersion;
    rec.csv_header = kDefectHeader;
    Ctx ctx{config, rec, config_hash(config), std::to_string(config.seed)};
    const std::string& k = config.kind;
    if (k == "db-check") {
        run_db_check(ctx);
    } else if (k == "metastability-scan") {
        run_metastability(ctx);
    } else if (k == "kt-scan") {
        run_kt(ctx);
    } else if (k == "goldstone-scan") {
        run_goldstone(ctx);
    } else if (k == "lr-cone") {
        run_lr(ctx);
    } else if (k == "survival") {
        run_survival(ctx);
    } else if (k == "mc-survival") {
        run_mc(ctx);
    }
    rec.passed = !rec.checks.empty();
    for (const auto& [_, ok] : rec.checks) rec.passed = rec.passed && ok;
    return rec;
}

std::string summary_document(const RunRecord& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = r.version;
    j["timestamp"] = r.timestamp;
    j["config"] = json::parse(serialize_config(r.config));
    j["config_hash"] = config_hash(r.config);
    j["series"] = json::array();
    for (const auto& s : r.series) j["series"].push_back(series_json(s));
    j["fits"] = json::array();
    for (const auto& [name, f] : r.fits) {
        json fj = fit_json(f);
        fj["series"] = name;
        j["fits"].push_back(fj);
    }
    j["checks"] = json::array();
    for (const auto& [name, ok] : r.checks) j["checks"].push_back({{"name", name}, {"pass", ok}});
    j["notes"] = r.notes;
    j["passed"] = r.passed;
    j["summary"] = r.summary;
    return j.dump(2);
}

RunRecord parse_summary_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("summary document is not valid JSON: ") + e.what());
    }
    if (j.value("schema_version", 0) != kSchemaVersion) throw ConfigError("summary document: unsupported schema");
    RunRecord r;
    r.config = parse_config(j.at("config").dump());
    r.version = j.value("version", "");
    r.timestamp = j.value("timestamp", "");
    for (const auto& s : j.at("series")) {
        DefectSeries ds{s.at("model"), s.at("kind"), {}};
        for (const auto& e : s.at("entries")) ds.add(e.at("L"), e.at("N"), e.at("value"), e.value("meta", ""));
        r.series.push_back(ds);
    }
    for (const auto& f : j.at("fits")) {
        FitResult fr;
        fr.slope = f.at("slope");
        fr.intercept = f.at("intercept");
        fr.stderr_slope = f.at("stderr");
        fr.residual = f.at("residual");
        fr.used = f.at("used");
        fr.excluded = f.at("excluded");
        fr.notice = f.value("notice", "");
        r.fits.emplace_back(f.at("series"), fr);
    }
    for (const auto& c : j.at("checks")) r.checks.emplace_back(c.at("name"), c.at("pass"));
    r.notes = j.value("notes", std::vector<std::string>{});
    r.passed = j.value("passed", false);
    r.summary = j.value("summary", "");
    return r;
}

void write_record(const RunRecord& record) {
    namespace fs = std::filesystem;
    fs::create_directories(record.config.out);
    const fs::path base = fs::path(record.config.out) / record.config.kind;
    std::ofstream csv(base.string() + ".csv");
    for (size_t i = 0; i < record.csv_header.size(); ++i) csv << (i ? "," : "") << record.csv_header[i];
    csv << "\n";
    for (const auto& row : record.csv_rows) {
        for (size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << csv_escape(row[i]);
        csv << "\n";
    }
    std::ofstream sum(base.string() + "_summary.json");
    sum << summary_document(record) << "\n";
    if (!csv || !sum) throw std::runtime_error("write_record: cannot write to " + record.config.out);
}

ScalingReport report(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("report: no records");
    const std::string kind = records.front().config.kind;
    const std::string model = records.front().config.model.model;
    for (const auto& r : records) {
        if (r.config.kind != kind || r.config.model.model != model || r.config.model.d != records.front().config.model.d) {
            throw std::invalid_argument("report: incompatible records (" + r.config.kind + "/" + r.config.model.model +
                                        " vs " + kind + "/" + model + ")");
        }
    }
    ScalingReport out;
    std::map<std::string, DefectSeries> merged;
    std::vector<std::string> order;
    for (const auto& r : records) {
        for (const auto& s : r.series) {
            auto it = merged.find(s.kind);
            if (it == merged.end()) {
                merged.emplace(s.kind, DefectSeries{s.model, s.kind, {}});
                order.push_back(s.kind);
                it = merged.find(s.kind);
            }
            for (const auto& e : s.entries) {
                bool dup = false;
                for (const auto& x : it->second.entries) dup = dup || x.n == e.n;
                if (!dup) it->second.entries.push_back(e);
            }
        }
    }
    std::ostringstream text, data;
    data.precision(12);
    text << "kind: " << kind << "\nmodel: " << model << "\n";
    for (const auto& name : order) {
        DefectSeries& s = merged.at(name);
        std::sort(s.entries.begin(), s.entries.end(), [](const DefectEntry& a, const DefectEntry& b) { return a.n < b.n; });
        text << "\nseries " << s.kind << "\n" << "  N      L      value\n";
        data << "# " << s.kind << ": log N, log value\n";
        for (const auto& e : s.entries) {
            char line[128];
            std::snprintf(line, sizeof line, "  %-6d %-6d %.6e\n", e.n, e.L, e.value);
            text << line;
            if (e.value > 0) data << std::log(static_cast<double>(e.n)) << " " << std::log(e.value) << "\n";
        }
        try {
            FitResult f = fit_exponent(s);
            out.fits.emplace_back(s.kind, f);
            text << "  fit: slope " << fmt(f.slope, "%.4f") << " +- " << fmt(f.stderr_slope, "%.4f") << ", residual "
                 << fmt(f.residual, "%.4f") << "\n";
        } catch (const std::invalid_argument& e) {
            text << "  fit: " << e.what() << "\n";
        }
        out.merged.push_back(s);
    }
    out.text = text.str();
    out.data = data.str();
    return out;
}

}  // namespace dssb
