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

#include "dssb/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dssb {

namespace {

std::vector<int> all_sites(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

GlobalOperator to_full(const GlobalOperator& a) {
    if (a.is_full()) return a;
    return a.expanded(all_sites(a.num_sites()));
}

double max_entry(const GlobalOperator& a) {
    if (a.is_diagonal()) return a.diag().size() ? a.diag().cwiseAbs().maxCoeff() : 0.0;
    return a.matrix().size() ? a.matrix().cwiseAbs().maxCoeff() : 0.0;
}

// exp(i s C) for a self-adjoint C.
GlobalOperator exp_i(const GlobalOperator& c, double s) {
    const int n = c.num_sites();
    if (c.is_diagonal()) {
        Vec v = c.diag();
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::exp(cplx(0, s * v(i).real()));
        return GlobalOperator::diagonal(n, c.support(), std::move(v));
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(c.matrix());
    Vec ph(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ph.size(); ++i) ph(i) = std::exp(cplx(0, s * es.eigenvalues()(i)));
    Mat u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    return GlobalOperator::local(n, c.support(), u);
}

}  // namespace

StateFunctional StateFunctional::from_density(GlobalOperator rho, bool validate) {
    StateFunctional s;
    s.d_ = to_full(rho);
    s.density_ = true;
    s.kind_ = "density";
    if (!validate) return s;
    const int n = s.num_sites();
    const cplx tr = s.d_.is_diagonal() ? s.d_.diag().sum() : s.d_.matrix().trace();
    if (std::abs(tr - 1.0) > 1e-10) throw std::invalid_argument("StateFunctional: density matrix trace != 1");
    if (s.d_.is_diagonal()) {
        const Vec& v = s.d_.diag();
        if (v.imag().cwiseAbs().maxCoeff() > 1e-12 || v.real().minCoeff() < -1e-12) {
            throw std::invalid_argument("StateFunctional: density matrix not positive");
        }
        return s;
    }
    const Mat& m = s.d_.matrix();
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("StateFunctional: density matrix not self-adjoint");
    }
    if (n <= 10 && s.negativity() > 1e-12) throw std::invalid_argument("StateFunctional: density matrix not positive");
    return s;
}

StateFunctional StateFunctional::from_functional(GlobalOperator d, std::string kind) {
    StateFunctional s;
    s.d_ = to_full(d);
    s.density_ = false;
    s.kind_ = std::move(kind);
    return s;
}

Mat StateFunctional::reduced(const std::vector<int>& sites) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->dense.find(sites);
        if (it != cache_->dense.end()) return it->second;
    }
    Mat r = partial_trace(d_.matrix(), make_layout(sites, all_sites(num_sites())));
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->dense.emplace(sites, r);
    return r;
}

cplx StateFunctional::evaluate(const GlobalOperator& a) const {
    if (a.num_sites() != num_sites()) throw std::invalid_argument("StateFunctional: dimension mismatch");
    const std::vector<int>& sites = a.support();
    if (d_.is_diagonal()) {
        Vec dr;
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->diag.find(sites);
            if (it != cache_->diag.end()) dr = it->second;
        }
        if (dr.size() == 0) {
            dr = partial_trace_diag(d_.diag(), make_layout(sites, all_sites(num_sites())));
            std::lock_guard<std::mutex> lock(cache_->mu);
            cache_->diag.emplace(sites, dr);
        }
        if (a.is_diagonal()) return (dr.array() * a.diag().array()).sum();
        return (dr.array() * a.matrix().diagonal().array()).sum();
    }
    if (static_cast<int>(sites.size()) == num_sites()) {
        const Mat& m = d_.matrix();
        if (a.is_diagonal()) return (m.diagonal().array() * a.diag().array()).sum();
        return m.transpose().cwiseProduct(a.matrix()).sum();
    }
    Mat dr = reduced(sites);
    if (a.is_diagonal()) return (dr.diagonal().array() * a.diag().array()).sum();
    return dr.transpose().cwiseProduct(a.matrix()).sum();
}

cplx StateFunctional::evaluate_product(const GlobalOperator& a, const GlobalOperator& b) const {
    return evaluate(a * b);
}

double StateFunctional::negativity() const {
    if (d_.is_diagonal()) return std::max(0.0, -d_.diag().real().minCoeff());
    Mat h = 0.5 * (d_.matrix() + d_.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    return std::max(0.0, -es.eigenvalues().minCoeff());
}

StateFunctional gibbs(const GlobalOperator& h, double beta) {
    if (!(beta >= 0)) throw std::invalid_argument("gibbs: beta must be >= 0");
    const GlobalOperator hf = to_full(h);
    const int n = hf.num_sites();
    auto weights = [&](const Eigen::VectorXd& e) {
        const double emin = e.minCoeff();
        const double tol = 1e-9 * std::max(1.0, e.cwiseAbs().maxCoeff());
        Eigen::VectorXd w(e.size());
        for (Eigen::Index i = 0; i < e.size(); ++i) {
            if (std::isinf(beta)) {
                w(i) = e(i) - emin <= tol ? 1.0 : 0.0;
            } else {
                w(i) = std::exp(-beta * (e(i) - emin));
            }
        }
        return Eigen::VectorXd(w / w.sum());
    };
    if (hf.is_diagonal()) {
        if (hf.diag().imag().cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("gibbs: H not self-adjoint");
        Eigen::VectorXd w = weights(hf.diag().real());
        StateFunctional s = StateFunctional::from_density(GlobalOperator::full_diagonal(n, w.cast<cplx>()), false);
        return s;
    }
    const Mat& m = hf.matrix();
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw std::invalid_argument("gibbs: H not self-adjoint");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    Eigen::VectorXd w = weights(es.eigenvalues());
    Mat rho = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return StateFunctional::from_density(GlobalOperator::full(n, std::move(rho)), false);
}

StateFunctional maximally_mixed(int num_sites) {
    const Eigen::Index d = Eigen::Index(1) << num_sites;
    return StateFunctional::from_density(GlobalOperator::full_diagonal(num_sites, Vec::Constant(d, 1.0 / d)), false);
}

StateFunctional polarized_state(int num_sites, bool up) {
    const Eigen::Index d = Eigen::Index(1) << num_sites;
    Vec v = Vec::Zero(d);
    v(up ? 0 : d - 1) = 1.0;
    return StateFunctional::from_density(GlobalOperator::full_diagonal(num_sites, std::move(v)), false);
}

double fluctuation_ratio(const StateFunctional& omega, const GlobalOperator& o, double o_bound) {
    if (!(o_bound > 0)) throw std::invalid_argument("fluctuation_ratio: o must be > 0");
    const double w = omega.evaluate_product(o, o).real();
    if (w < -1e-10) throw std::invalid_argument("fluctuation_ratio: w(O^2) < 0, invalid state");
    return std::sqrt(std::max(w, 0.0)) / (o_bound * o.num_sites());
}

std::pair<StateFunctional, StateFunctional> tilted_pair(const StateFunctional& omega, const GlobalOperator& o) {
    const double w = omega.evaluate_product(o, o).real();
    if (w <= 1e-12) throw NormalizationError("tilted_pair: w(O^2) vanishes");
    const int n = o.num_sites();
    const double s = 1.0 / std::sqrt(2.0);
    auto make = [&](double sign) {
        GlobalOperator t = GlobalOperator::identity(n, s) + (sign * s / std::sqrt(w)) * o;
        StateFunctional out = StateFunctional::from_density(t * omega.matrix() * t.adjoint(), false);
        return out;
    };
    return {make(+1.0), make(-1.0)};
}

OrderParameterPair spin_pair(const Lattice& lattice) {
    OrderParameterPair p;
    p.t1 = single_site_template(0.5 * pauli::X());
    p.t2 = single_site_template(0.5 * pauli::Y());
    p.tc = single_site_template(0.5 * pauli::Z());
    p.o1 = extensive_observable(lattice, p.t1, lattice.all());
    p.o2 = extensive_observable(lattice, p.t2, lattice.all());
    p.c = extensive_observable(lattice, p.tc, lattice.all());
    p.o = 0.5;
    return p;
}

double commutation_violation(const OrderParameterPair& pair) {
    const cplx i(0, 1);
    return std::max(max_abs_diff(commutator(pair.c, pair.o1), i * pair.o2),
                    max_abs_diff(commutator(pair.c, pair.o2), -i * pair.o1));
}

GlobalOperator raising_operator(const OrderParameterPair& pair, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("raising_operator: sign must be +1 or -1");
    if (commutation_violation(pair) > 1e-10) {
        throw std::invalid_argument("raising_operator: order parameters violate [C,O1] = iO2, [C,O2] = -iO1");
    }
    return pair.o1 + cplx(0, sign) * pair.o2;
}

KTFamily kt_family(const StateFunctional& omega, const GlobalOperator& o_plus, int max_power) {
    const int n = omega.num_sites();
    if (max_power < 0 || max_power >= n) throw std::invalid_argument("kt_family: need 0 <= M < N");
    KTFamily fam;
    fam.base = omega;
    fam.max_power = max_power;
    fam.powers.assign(2 * max_power + 1, GlobalOperator::identity(n));
    const GlobalOperator o_minus = o_plus.adjoint();
    for (int k = 1; k <= max_power; ++k) {
        GlobalOperator up = fam.power(k - 1) * o_plus;
        GlobalOperator down = fam.power(-(k - 1)) * o_minus;
        const double su = max_entry(up);
        const double sd = max_entry(down);
        if (su == 0.0 || sd == 0.0) throw NormalizationError("kt_family: power of O+- vanishes");
        fam.powers[max_power + k] = (1.0 / su) * up;
        fam.powers[max_power - k] = (1.0 / sd) * down;
    }
    fam.z.resize(fam.powers.size());
    for (int k = -max_power; k <= max_power; ++k) {
        const GlobalOperator& r = fam.power(k);
        const double z2 = omega.evaluate_product(r.adjoint(), r).real();
        if (z2 <= 1e-13) throw NormalizationError("kt_family: vanishing normalization Z(" + std::to_string(k) + ")");
        fam.z[k + max_power] = std::sqrt(z2);
    }
    return fam;
}

StateFunctional kt_functional(const KTFamily& family, int m, int mp) {
    if (std::abs(m) > family.max_power || std::abs(mp) > family.max_power) {
        throw std::invalid_argument("kt_functional: |m|, |m'| must not exceed M");
    }
    GlobalOperator d = family.power(m) * family.base.matrix() * family.power(mp).adjoint();
    d *= 1.0 / (family.weight(m) * family.weight(mp));
    return StateFunctional::from_functional(std::move(d),
                                            "chi(" + std::to_string(m) + "," + std::to_string(mp) + ")");
}

StateFunctional kt_functional(const StateFunctional& omega, const GlobalOperator& o_plus, int m, int mp) {
    return kt_functional(kt_family(omega, o_plus, std::max(std::abs(m), std::abs(mp))), m, mp);
}

StateFunctional kt_state(const KTFamily& family, int m_max) {
    if (m_max < 0 || m_max > family.max_power) throw std::invalid_argument("kt_state: M out of range");
    const int n = family.base.num_sites();
    GlobalOperator w = GlobalOperator::zero(n);
    for (int k = -m_max; k <= m_max; ++k) w += (1.0 / family.weight(k)) * family.power(k);
    GlobalOperator d = w * family.base.matrix() * w.adjoint();
    d *= 1.0 / (2 * m_max + 1);
    return StateFunctional::from_functional(std::move(d), "kt(" + std::to_string(m_max) + ")");
}

StateFunctional kt_state(const StateFunctional& omega, const GlobalOperator& o_plus, int m_max) {
    return kt_state(kt_family(omega, o_plus, m_max), m_max);
}

GlobalOperator goldstone_twist(const Lattice& lattice, const SiteTemplate& c_site) {
    std::vector<Mat> mats;
    const double k = 2.0 * std::numbers::pi / lattice.side();
    for (int x = 0; x < lattice.num_sites(); ++x) {
        LocalOperator c = c_site(x);
        if (c.support.size() != 1 || c.support[0] != x || c.matrix.rows() != 2) {
            throw std::invalid_argument("goldstone_twist: charge template must act on its own site only");
        }
        if ((c.matrix - c.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::invalid_argument("goldstone_twist: charge template not self-adjoint");
        }
        int phase = 0;
        for (int cj : lattice.coords(x)) phase += cj;
        GlobalOperator cx = GlobalOperator::local(1, {0}, c.matrix);
        mats.push_back(exp_i(cx, k * phase).on_sites({0}));
    }
    return product_operator(mats);
}

StateFunctional twisted_state(const StateFunctional& omega, const GlobalOperator& u) {
    GlobalOperator d = u * omega.matrix() * u.adjoint();
    if (omega.is_density()) return StateFunctional::from_density(std::move(d), false);
    return StateFunctional::from_functional(std::move(d), "twisted " + omega.kind());
}

StateFunctional charge_rotated(const StateFunctional& omega, const GlobalOperator& c, double theta) {
    GlobalOperator u = exp_i(c, -theta);
    GlobalOperator d = u * omega.matrix() * u.adjoint();
    if (omega.is_density()) return StateFunctional::from_density(std::move(d), false);
    return StateFunctional::from_functional(std::move(d), "rotated " + omega.kind());
}

std::vector<std::array<double, 2>> order_parameter_image(const StateFunctional& omega, const Lattice& lattice,
                                                         const OrderParameterPair& pair) {
    std::vector<std::array<double, 2>> out;
    std::vector<int> c(lattice.dim(), 0);
    for (int t = 0; t < lattice.side(); ++t) {
        c[0] = t;
        const int x = lattice.site(c);
        out.push_back({omega.evaluate(embed(pair.t1(x), lattice)).real(),
                       omega.evaluate(embed(pair.t2(x), lattice)).real()});
    }
    return out;
}

std::optional<int> winding_number(const std::vector<std::array<double, 2>>& image, double min_radius) {
    if (image.empty()) return std::nullopt;
    double total = 0.0;
    for (size_t i = 0; i < image.size(); ++i) {
        const auto& a = image[i];
        const auto& b = image[(i + 1) % image.size()];
        if (std::hypot(a[0], a[1]) < min_radius) return std::nullopt;
        double d = std::atan2(b[1], b[0]) - std::atan2(a[1], a[0]);
        while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        while (d <= -std::numbers::pi) d += 2 * std::numbers::pi;
        total += d;
    }
    return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

double image_spread(const std::vector<std::array<double, 2>>& image) {
    if (image.empty()) return 0.0;
    double mx = 0, my = 0;
    for (const auto& v : image) {
        mx += v[0];
        my += v[1];
    }
    mx /= image.size();
    my /= image.size();
    double worst = 0.0;
    for (const auto& v : image) worst = std::max(worst, std::hypot(v[0] - mx, v[1] - my));
    return worst;
}

}  // namespace dssb
