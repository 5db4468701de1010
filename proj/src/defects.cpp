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

#include "dssb/defects.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dssb {

GlobalOperator leibniz_defect(const Liouvillian& l, const GlobalOperator& x, const GlobalOperator& y) {
    return l.apply(x * y) - l.apply(x) * y - x * l.apply(y);
}

double metastability_defect(const StateFunctional& omega, const Liouvillian& l, const GlobalOperator& a) {
    const double na = op_norm(a);
    if (na == 0) return 0.0;
    return std::abs(omega.evaluate(l.apply(a))) / na;
}

double reversibility_defect(const StateFunctional& omega, const Liouvillian& l, const GlobalOperator& a,
                            const GlobalOperator& b) {
    const double norm = op_norm(a) * op_norm(b);
    if (norm == 0) return 0.0;
    return std::abs(omega.evaluate_product(l.apply(a), b) - omega.evaluate_product(a, l.apply(b))) / norm;
}

double kt_reversibility_defect(const KTFamily& family, const Liouvillian& l, int m, int mp, const GlobalOperator& a,
                               const GlobalOperator& b) {
    const double norm = op_norm(a) * op_norm(b);
    if (norm == 0) return 0.0;
    const StateFunctional chi = kt_functional(family, m, mp);
    return std::abs(chi.evaluate_product(b, l.apply(a)) - chi.evaluate_product(l.apply(b), a)) / norm;
}

std::string KomaReport::status() const {
    std::ostringstream os;
    auto word = [](bool b) { return b ? "holds" : "violated"; };
    os << (hypotheses() ? "hypotheses satisfied" : "hypotheses violated") << " (N >= 16|A|^2/mu^2: "
       << (hyp_volume ? "yes" : "no") << ", M/N <= mu^2/(16|A|): " << (hyp_power ? "yes" : "no") << "); "
       << "a-ratio " << word(ratios_hold) << ", r_A " << word(ratio_holds) << ", a_1 " << word(a1_holds)
       << ", local " << word(local_holds);
    return os.str();
}

KomaReport koma_lemma_check(const StateFunctional& omega, const Lattice& lattice, const OrderParameterPair& pair,
                            const Region& region, int max_power, double mu, const GlobalOperator& probe) {
    const int n = lattice.num_sites();
    if (max_power < 1) throw std::invalid_argument("koma_lemma_check: M must be >= 1");
    if (!(mu > 0)) throw std::invalid_argument("koma_lemma_check: mu must be > 0");
    if (region.empty()) throw std::invalid_argument("koma_lemma_check: empty region");
    KomaReport rep;
    rep.n = n;
    rep.region_size = region.size();
    rep.max_power = max_power;
    rep.mu = mu;
    rep.o = pair.o;
    const double as = region.size();
    const double o = pair.o;
    rep.hyp_volume = n >= 16.0 * as * as / (mu * mu);
    rep.hyp_power = static_cast<double>(max_power) / n <= mu * mu / (16.0 * as);

    const GlobalOperator o_plus = raising_operator(pair, +1);
    GlobalOperator r_a = GlobalOperator::zero(n);
    for (int x : region.sites()) r_a += embed(pair.t1(x), lattice) + cplx(0, 1) * embed(pair.t2(x), lattice);
    const GlobalOperator q = o_plus - r_a;

    std::vector<GlobalOperator> qp{GlobalOperator::identity(n)};
    std::vector<GlobalOperator> op{GlobalOperator::identity(n)};
    for (int m = 1; m <= max_power; ++m) {
        qp.push_back(qp.back() * q);
        op.push_back(op.back() * o_plus);
    }
    for (int m = 0; m <= max_power; ++m) {
        const double am = omega.evaluate_product(qp[m].adjoint(), qp[m]).real();
        if (am <= 0) throw NormalizationError("koma_lemma_check: a_" + std::to_string(m) + " <= 0");
        rep.a.push_back(am);
    }
    const double mon = mu * o * n;
    rep.ratio_excess = 0.0;
    for (int m = 1; m <= max_power; ++m) {
        for (int k = 1; k <= m; ++k) {
            rep.ratio_excess = std::max(rep.ratio_excess, rep.a[m - k] / rep.a[m] * std::pow(mon, 2.0 * k));
        }
    }
    rep.ratios_hold = rep.ratio_excess <= 1.0 + 1e-12;

    const int mm = max_power;
    rep.r = std::abs(omega.evaluate_product(op[mm].adjoint(), op[mm])) / rep.a[mm];
    rep.r_sharp_bound = 2.0 - std::exp(2.0 * as * mm / (mu * n));
    rep.r_bound = 2.0 - std::exp(mu / 8.0);
    rep.ratio_holds = rep.r >= rep.r_bound - 1e-12;

    rep.a1_bound = 2.0 * o * o * mu * mu * n * n * (1.0 - (1.0 + as) / (mu * mu * n));
    rep.a1_holds = rep.a[1] >= rep.a1_bound - 1e-12 * std::abs(rep.a1_bound);

    const double nb = op_norm(probe);
    for (int m = 1; m <= mm; ++m) {
        for (int mp = 0; mp <= mm; ++mp) {
            const cplx v = omega.evaluate(op[mp].adjoint() * commutator(probe, op[m]));
            rep.local_lhs = std::max(rep.local_lhs, std::abs(v) / std::sqrt(rep.a[m] * rep.a[mp]));
            rep.local_sharp_bound =
                std::max(rep.local_sharp_bound, 2.0 * nb * std::exp(as * mp / (mu * n)) *
                                                    (std::exp(as * m / (mu * n)) - 1.0));
        }
    }
    const double e16 = std::exp(mu / 16.0);
    rep.local_bound = 2.0 * nb * (16.0 * as / (mu * mu)) * e16 * (e16 - 1.0) * mm / n;
    rep.local_holds = rep.local_lhs <= rep.local_bound + 1e-12;
    return rep;
}

namespace {

FitResult fit_against(const DefectSeries& series, bool use_side) {
    FitResult fr;
    std::vector<double> xs, ys;
    std::ostringstream notice;
    for (const auto& e : series.entries) {
        const double x = use_side ? e.L : e.n;
        if (!(e.value > 0) || !std::isfinite(e.value) || !(x > 0)) {
            ++fr.excluded;
            notice << "excluded N=" << e.n << " (value " << e.value << "); ";
            continue;
        }
        xs.push_back(std::log(x));
        ys.push_back(std::log(e.value));
    }
    fr.notice = notice.str();
    fr.used = static_cast<int>(xs.size());
    if (fr.used < 3) {
        throw std::invalid_argument("fit_exponent: fewer than 3 positive entries (" + std::to_string(fr.used) +
                                    " usable, " + std::to_string(fr.excluded) + " excluded)");
    }
    const double k = fr.used;
    double mx = 0, my = 0;
    for (int i = 0; i < fr.used; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < fr.used; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit_exponent: all sizes equal");
    fr.slope = sxy / sxx;
    fr.intercept = my - fr.slope * mx;
    double ssr = 0;
    for (int i = 0; i < fr.used; ++i) {
        const double r = ys[i] - (fr.intercept + fr.slope * xs[i]);
        ssr += r * r;
    }
    fr.residual = std::sqrt(ssr / k);
    fr.stderr_slope = fr.used > 2 ? std::sqrt(ssr / (k - 2) / sxx) : 0.0;
    return fr;
}

}  // namespace

FitResult fit_exponent(const DefectSeries& series) { return fit_against(series, false); }
FitResult fit_exponent_in_side(const DefectSeries& series) { return fit_against(series, true); }

}  // namespace dssb
