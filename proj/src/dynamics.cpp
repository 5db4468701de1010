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

#include "dssb/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "dssb/errors.hpp"

namespace dssb {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;

template <typename S>
double max_abs(const S& s) {
    if (s.size() == 0) return 0.0;
    if (!s.allFinite()) return std::numeric_limits<double>::infinity();
    return s.cwiseAbs().maxCoeff();
}

/// Called after each accepted step with (t0, y0, f0, t1, y1, f1); returning
/// true stops the integration.
template <typename S>
using StepHook = std::function<bool(double, const S&, const S&, double, const S&, const S&)>;

template <typename S>
S integrate(const std::function<S(const S&)>& f, S y, double t_end, double tol, IntegratorStats* stats,
            const StepHook<S>& hook = {}, double* t_reached = nullptr) {
    if (!(t_end >= 0)) throw std::invalid_argument("evolve: t must be >= 0");
    if (!(tol > 0)) throw std::invalid_argument("evolve: tol must be > 0");
    IntegratorStats local;
    local.tol = tol;
    double t = 0.0;
    if (t_reached) *t_reached = 0.0;
    if (t_end == 0.0) {
        if (stats) *stats = local;
        return y;
    }
    S k1 = f(y);
    const double scale = std::max(max_abs(y), 1e-300);
    const double d1 = max_abs(k1);
    double h = d1 > 0 ? std::min(t_end, 0.01 * scale / d1 + 1e-3 * std::pow(tol, 0.2)) : t_end;
    h = std::max(h, 1e-12 * t_end);
    while (t < t_end) {
        if (t + h > t_end) h = t_end - t;
        S k2 = f(y + h * a21 * k1);
        S k3 = f(y + h * (a31 * k1 + a32 * k2));
        S k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        S k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        S k6 = f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        S y1 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        S k7 = f(y1);
        const double err = h * max_abs(S(e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        if (err <= tol) {
            const double t1 = t + h;
            const bool stop = hook && hook(t, y, k1, t1, y1, k7);
            t = t1;
            y = std::move(y1);
            k1 = std::move(k7);
            ++local.steps;
            if (t_reached) *t_reached = t;
            if (stop) break;
            const double fac = err > 0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
        } else {
            ++local.rejected;
            const double fac = std::isfinite(err) ? 0.9 * std::pow(tol / err, 0.2) : 0.1;
            h *= std::clamp(fac, 0.1, 0.9);
            if (h < 1e-14 * std::max(1.0, t)) {
                if (stats) *stats = local;
                throw IntegrationError("evolve: step size underflow", t);
            }
        }
    }
    if (stats) *stats = local;
    return y;
}

std::vector<int> all_sites(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

GlobalOperator wrap(int n, const std::vector<int>& region, Mat m) {
    if (static_cast<int>(region.size()) == n) return GlobalOperator::full(n, std::move(m));
    return GlobalOperator::local(n, region, m);
}

GlobalOperator wrap_diag(int n, const std::vector<int>& region, Vec v) {
    return GlobalOperator::diagonal(n, region, std::move(v));
}

/// Heisenberg evolution with an optional per-step hook on the wrapped operator.
GlobalOperator evolve_heisenberg(const Liouvillian& l, const GlobalOperator& a, double t, double tol,
                                 IntegratorStats* stats, const StepHook<GlobalOperator>& hook,
                                 double* t_reached) {
    const int n = l.num_sites();
    if (a.num_sites() != n) throw std::invalid_argument("evolve_observable: dimension mismatch");
    const std::vector<int> region = l.closure(a.support());
    if (a.is_diagonal() && l.diagonal_preserving(Picture::Heisenberg)) {
        std::function<Vec(const Vec&)> f = [&](const Vec& x) { return l.apply_diag_on(region, x, Picture::Heisenberg); };
        StepHook<Vec> h;
        if (hook) {
            h = [&](double t0, const Vec& y0, const Vec& f0, double t1, const Vec& y1, const Vec& f1) {
                return hook(t0, wrap_diag(n, region, y0), wrap_diag(n, region, f0), t1, wrap_diag(n, region, y1),
                            wrap_diag(n, region, f1));
            };
        }
        Vec y = integrate<Vec>(f, a.diag_on_sites(region), t, tol, stats, h, t_reached);
        return wrap_diag(n, region, std::move(y));
    }
    std::function<Mat(const Mat&)> f = [&](const Mat& x) { return l.apply_on(region, x, Picture::Heisenberg); };
    StepHook<Mat> h;
    if (hook) {
        h = [&](double t0, const Mat& y0, const Mat& f0, double t1, const Mat& y1, const Mat& f1) {
            return hook(t0, wrap(n, region, y0), wrap(n, region, f0), t1, wrap(n, region, y1), wrap(n, region, f1));
        };
    }
    Mat y = integrate<Mat>(f, a.on_sites(region), t, tol, stats, h, t_reached);
    return wrap(n, region, std::move(y));
}

}  // namespace

GlobalOperator evolve_observable(const Liouvillian& l, const GlobalOperator& a, double t, double tol,
                                 IntegratorStats* stats) {
    return evolve_heisenberg(l, a, t, tol, stats, {}, nullptr);
}

StateFunctional evolve_state(const Liouvillian& l, const StateFunctional& rho, double t, double tol,
                             IntegratorStats* stats) {
    const int n = l.num_sites();
    const std::vector<int> all = all_sites(n);
    const GlobalOperator& d = rho.matrix();
    if (d.is_diagonal() && l.diagonal_preserving(Picture::Schrodinger)) {
        std::function<Vec(const Vec&)> f = [&](const Vec& x) { return l.apply_diag_on(all, x, Picture::Schrodinger); };
        Vec y = integrate<Vec>(f, d.diag_on_sites(all), t, tol, stats);
        return StateFunctional::from_density(GlobalOperator::full_diagonal(n, std::move(y)), false);
    }
    std::function<Mat(const Mat&)> f = [&](const Mat& x) { return l.apply_on(all, x, Picture::Schrodinger); };
    Mat y = integrate<Mat>(f, d.on_sites(all), t, tol, stats);
    if (rho.is_density()) return StateFunctional::from_density(GlobalOperator::full(n, std::move(y)), false);
    return StateFunctional::from_functional(GlobalOperator::full(n, std::move(y)), rho.kind());
}

Trajectory observe(const Liouvillian& l, const StateFunctional& omega0, const GlobalOperator& a,
                   const std::vector<double>& times, double tol) {
    Trajectory tr;
    tr.stats.tol = tol;
    GlobalOperator cur = a;
    double t = 0.0;
    for (double s : times) {
        if (s < t || (!tr.times.empty() && s <= tr.times.back())) {
            throw std::invalid_argument("observe: times must be strictly increasing and >= 0");
        }
        IntegratorStats st;
        cur = evolve_observable(l, cur, s - t, tol, &st);
        tr.stats.steps += st.steps;
        tr.stats.rejected += st.rejected;
        t = s;
        tr.times.push_back(s);
        tr.values.push_back(omega0.evaluate(cur));
    }
    return tr;
}

GlobalOperator evolve_observable_expm(const Liouvillian& l, const GlobalOperator& a, double t) {
    const int n = l.num_sites();
    Mat s = l.superoperator(Picture::Heisenberg);
    Mat e = (t * s).exp();
    Mat x = a.to_dense();
    Vec v = e * Eigen::Map<const Vec>(x.data(), x.size());
    const Eigen::Index d = x.rows();
    return GlobalOperator::full(n, Eigen::Map<const Mat>(v.data(), d, d));
}

LiebRobinsonResult lieb_robinson_defect(const Liouvillian& l, const GlobalOperator& a, double t, double v_tilde,
                                        double tol) {
    if (!(v_tilde > 0)) throw std::invalid_argument("lieb_robinson_defect: v_tilde must be > 0");
    if (!(t >= 0)) throw std::invalid_argument("lieb_robinson_defect: t must be >= 0");
    LiebRobinsonResult res;
    res.radius = static_cast<int>(std::ceil(v_tilde * t - 1e-12));
    res.cone = l.lattice().enlarge(a.support_region(), res.radius);
    res.covers_lattice = res.cone.size() == l.num_sites();
    if (t == 0.0) return res;
    GlobalOperator full = evolve_observable(l, a, t, tol);
    GlobalOperator cone = evolve_observable(l.restricted(res.cone), a, t, tol);
    res.defect = op_norm(full - cone);
    return res;
}

SurvivalResult survival_time(const Liouvillian& l, const StateFunctional& omega0, const GlobalOperator& a,
                             double delta, double t_max, double tol) {
    if (!(delta > 0)) throw std::invalid_argument("survival_time: delta must be > 0");
    SurvivalResult res;
    res.t_max = t_max;
    res.delta = delta;
    const cplx v0 = omega0.evaluate(a);
    bool found = false;
    StepHook<GlobalOperator> hook = [&](double t0, const GlobalOperator& y0, const GlobalOperator& f0, double t1,
                                        const GlobalOperator& y1, const GlobalOperator& f1) {
        const double g1 = std::abs(omega0.evaluate(y1) - v0) - delta;
        if (g1 < 0) return false;
        // cubic Hermite interpolation of w0(A(s)) on [t0, t1]
        const cplx p0 = omega0.evaluate(y0), p1 = omega0.evaluate(y1);
        const cplx m0 = omega0.evaluate(f0), m1 = omega0.evaluate(f1);
        const double h = t1 - t0;
        auto value = [&](double s) {
            const double u = (s - t0) / h;
            const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
            const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
            return h00 * p0 + h10 * h * m0 + h01 * p1 + h11 * h * m1;
        };
        double lo = t0, hi = t1;
        for (int it = 0; it < 100 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::abs(value(mid) - v0) >= delta) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        res.time = hi;
        found = true;
        return true;
    };
    double reached = 0.0;
    evolve_heisenberg(l, a, t_max, tol, &res.stats, hook, &reached);
    res.exceeded = !found;
    if (!found) res.time = t_max;
    return res;
}

}  // namespace dssb
