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

#ifndef DSSB_DEFECTS_HPP
#define DSSB_DEFECTS_HPP

#include <string>
#include <vector>

#include "dssb/liouvillian.hpp"
#include "dssb/states.hpp"

namespace dssb {

/// Gamma_L(X, Y) = L[XY] - L[X] Y - X L[Y].
GlobalOperator leibniz_defect(const Liouvillian& l, const GlobalOperator& x, const GlobalOperator& y);

/// |w(L[A])| / ||A||.
double metastability_defect(const StateFunctional& omega, const Liouvillian& l, const GlobalOperator& a);
/// |w(L[A] B) - w(A L[B])| / (||A|| ||B||).
double reversibility_defect(const StateFunctional& omega, const Liouvillian& l, const GlobalOperator& a,
                            const GlobalOperator& b);
/// |chi^(m,m')(B L[A]) - chi^(m,m')(L[B] A)| / (||A|| ||B||).
double kt_reversibility_defect(const KTFamily& family, const Liouvillian& l, int m, int mp, const GlobalOperator& a,
                               const GlobalOperator& b);

/// Numerical check of the Koma-Tasaki lemma for O+ = Q_A + R_A, with
/// a_m = tr(Q_A^m rho Q_A^{dag m}).
struct KomaReport {
    int n = 0;
    int region_size = 0;
    int max_power = 0;
    double mu = 0.0;
    double o = 0.0;
    bool hyp_volume = false;  // N >= 16 |A|^2 / mu^2
    bool hyp_power = false;   // M / N <= mu^2 / (16 |A|)
    bool hypotheses() const { return hyp_volume && hyp_power; }

    std::vector<double> a;         // a_0 .. a_M
    double ratio_excess = 0.0;     // max over 0 <= k <= m <= M of (a_{m-k}/a_m) (mu o N)^{2k}
    bool ratios_hold = false;      // ratio_excess <= 1
    double r = 0.0;                // |tr((O+)^M rho (O-)^M)| / a_M
    double r_sharp_bound = 0.0;    // 2 - exp(2|A|M/(mu N))
    double r_bound = 0.0;          // 2 - exp(mu/8)
    bool ratio_holds = false;      // r >= r_bound
    double a1_bound = 0.0;         // 2 o^2 mu^2 N^2 (1 - (1+|A|)/(mu^2 N))
    bool a1_holds = false;
    double local_lhs = 0.0;        // max |tr(rho (O-)^{m'} [B,(O+)^m])| / sqrt(a_m a_m')
    double local_sharp_bound = 0.0;
    double local_bound = 0.0;      // 2||B|| (16|A|/mu^2) e^{mu/16}(e^{mu/16}-1) M/N
    bool local_holds = false;

    bool all_hold() const { return ratios_hold && ratio_holds && a1_holds && local_holds; }
    std::string status() const;
};

/// `probe` is a local observable supported in `region` (used for the
/// local-observable bound).
KomaReport koma_lemma_check(const StateFunctional& omega, const Lattice& lattice, const OrderParameterPair& pair,
                            const Region& region, int max_power, double mu, const GlobalOperator& probe);

struct DefectEntry {
    int L = 0;
    int n = 0;
    double value = 0.0;
    std::string meta;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double residual = 0.0;  // RMS of log residuals
    int used = 0;
    int excluded = 0;
    std::string notice;
};

struct DefectSeries {
    std::string model;
    std::string kind;
    std::vector<DefectEntry> entries;
    void add(int L, int n, double value, std::string meta = {}) { entries.push_back({L, n, value, std::move(meta)}); }
};

/// Least squares of log(value) against log(N). Non-positive values are
/// excluded with a notice; fewer than 3 usable entries throws.
FitResult fit_exponent(const DefectSeries& series);
/// Same, against log(L).
FitResult fit_exponent_in_side(const DefectSeries& series);

}  // namespace dssb

#endif
