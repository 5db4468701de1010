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
#include <cmath>
#include <stdexcept>

#include "dssb/algebra.hpp"

namespace dssb {

namespace pauli {
Mat I() { return Mat::Identity(2, 2); }
Mat X() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
Mat Y() {
    Mat m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}
Mat Z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}
Mat plus() {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}
Mat minus() { return plus().adjoint(); }
Mat by_name(char c) {
    switch (c) {
        case 'I': return I();
        case 'X': return X();
        case 'Y': return Y();
        case 'Z': return Z();
        default: throw std::invalid_argument(std::string("unknown Pauli letter ") + c);
    }
}
}  // namespace pauli

namespace {

bool is_diagonal_matrix(const Mat& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i != j && m(i, j) != cplx(0)) return false;
        }
    }
    return true;
}

void check_sites(int n, const std::vector<int>& sites) {
    for (int x : sites) {
        if (x < 0 || x >= n) throw std::invalid_argument("operator support outside lattice");
    }
}

}  // namespace

GlobalOperator GlobalOperator::identity(int num_sites, cplx scale) {
    GlobalOperator op;
    op.n_ = num_sites;
    op.diag_ = true;
    op.d_ = Vec::Constant(1, scale);
    return op;
}

GlobalOperator GlobalOperator::zero(int num_sites) { return identity(num_sites, 0.0); }

GlobalOperator GlobalOperator::local(int num_sites, std::vector<int> sites, const Mat& m) {
    check_sites(num_sites, sites);
    GlobalOperator op;
    op.n_ = num_sites;
    Mat c = canonicalize_factors(m, sites, op.support_);
    if (is_diagonal_matrix(c)) {
        op.diag_ = true;
        op.d_ = c.diagonal();
    } else {
        op.m_ = std::move(c);
    }
    return op;
}

GlobalOperator GlobalOperator::diagonal(int num_sites, std::vector<int> sites, Vec v) {
    check_sites(num_sites, sites);
    if (!std::is_sorted(sites.begin(), sites.end())) {
        throw std::invalid_argument("GlobalOperator::diagonal: sites must be sorted");
    }
    if (v.size() != (Eigen::Index(1) << sites.size())) {
        throw std::invalid_argument("GlobalOperator::diagonal: dimension mismatch");
    }
    GlobalOperator op;
    op.n_ = num_sites;
    op.support_ = std::move(sites);
    op.diag_ = true;
    op.d_ = std::move(v);
    return op;
}

GlobalOperator GlobalOperator::full(int num_sites, Mat m) {
    if (m.rows() != (Eigen::Index(1) << num_sites) || m.cols() != m.rows()) {
        throw std::invalid_argument("GlobalOperator::full: dimension mismatch");
    }
    GlobalOperator op;
    op.n_ = num_sites;
    op.support_.resize(num_sites);
    for (int x = 0; x < num_sites; ++x) op.support_[x] = x;
    op.m_ = std::move(m);
    return op;
}

GlobalOperator GlobalOperator::full_diagonal(int num_sites, Vec v) {
    std::vector<int> all(num_sites);
    for (int x = 0; x < num_sites; ++x) all[x] = x;
    return diagonal(num_sites, std::move(all), std::move(v));
}

const Mat& GlobalOperator::matrix() const {
    if (diag_) throw std::logic_error("GlobalOperator::matrix on diagonal storage");
    return m_;
}

const Vec& GlobalOperator::diag() const {
    if (!diag_) throw std::logic_error("GlobalOperator::diag on dense storage");
    return d_;
}

Mat GlobalOperator::local_dense() const {
    if (diag_) return d_.asDiagonal();
    return m_;
}

Mat GlobalOperator::to_dense() const {
    std::vector<int> all(n_);
    for (int x = 0; x < n_; ++x) all[x] = x;
    return on_sites(all);
}

Mat GlobalOperator::on_sites(const std::vector<int>& region) const {
    if (region == support_) return local_dense();
    Layout lay = make_layout(support_, region);
    if (diag_) return Mat(expand_diag(d_, lay).asDiagonal());
    return expand(m_, lay);
}

Vec GlobalOperator::diag_on_sites(const std::vector<int>& region) const {
    if (!diag_) throw std::logic_error("diag_on_sites on dense storage");
    if (region == support_) return d_;
    return expand_diag(d_, make_layout(support_, region));
}

GlobalOperator GlobalOperator::expanded(const std::vector<int>& region) const {
    GlobalOperator op;
    op.n_ = n_;
    op.support_ = region;
    op.diag_ = diag_;
    if (diag_) {
        op.d_ = diag_on_sites(region);
    } else {
        op.m_ = on_sites(region);
    }
    return op;
}

GlobalOperator GlobalOperator::densified() const {
    if (!diag_) return *this;
    GlobalOperator op;
    op.n_ = n_;
    op.support_ = support_;
    op.m_ = d_.asDiagonal();
    return op;
}

GlobalOperator GlobalOperator::trimmed(double tol) const {
    GlobalOperator cur = *this;
    for (int x : support_) {
        std::vector<int> rest;
        for (int y : cur.support_) {
            if (y != x) rest.push_back(y);
        }
        Layout lay = make_layout(rest, cur.support_);
        GlobalOperator cand;
        cand.n_ = n_;
        cand.support_ = rest;
        cand.diag_ = cur.diag_;
        double err;
        if (cur.diag_) {
            cand.d_ = partial_trace_diag(cur.d_, lay) * 0.5;
            err = (expand_diag(cand.d_, lay) - cur.d_).cwiseAbs().maxCoeff();
        } else {
            cand.m_ = partial_trace(cur.m_, lay) * 0.5;
            err = (expand(cand.m_, lay) - cur.m_).cwiseAbs().maxCoeff();
        }
        if (err <= tol) cur = std::move(cand);
    }
    return cur;
}

GlobalOperator GlobalOperator::adjoint() const {
    GlobalOperator op = *this;
    if (diag_) {
        op.d_ = d_.conjugate();
    } else {
        op.m_ = m_.adjoint();
    }
    return op;
}

cplx GlobalOperator::trace() const {
    const double mult = std::ldexp(1.0, n_ - support_size());
    return mult * (diag_ ? d_.sum() : m_.trace());
}

bool GlobalOperator::acts_trivially_outside(const Region& region, double tol) const {
    return trimmed(tol).support_region().subset_of(region);
}

void GlobalOperator::check_compatible(const GlobalOperator& other) const {
    if (n_ != other.n_) throw std::invalid_argument("operators live on different lattices");
}

GlobalOperator& GlobalOperator::accumulate(const GlobalOperator& other, cplx sign) {
    check_compatible(other);
    std::vector<int> region = merge_sites(support_, other.support_);
    if (diag_ && other.diag_) {
        Vec a = diag_on_sites(region);
        a += sign * other.diag_on_sites(region);
        d_ = std::move(a);
    } else {
        Mat a = on_sites(region);
        if (other.diag_) {
            a.diagonal() += sign * other.diag_on_sites(region);
        } else if (other.support_ == region) {
            a += sign * other.m_;
        } else {
            a += sign * other.on_sites(region);
        }
        m_ = std::move(a);
        d_.resize(0);
        diag_ = false;
    }
    support_ = std::move(region);
    return *this;
}

GlobalOperator& GlobalOperator::operator+=(const GlobalOperator& other) { return accumulate(other, 1.0); }
GlobalOperator& GlobalOperator::operator-=(const GlobalOperator& other) { return accumulate(other, -1.0); }

GlobalOperator& GlobalOperator::operator*=(cplx s) {
    if (diag_) {
        d_ *= s;
    } else {
        m_ *= s;
    }
    return *this;
}

GlobalOperator operator*(const GlobalOperator& a, const GlobalOperator& b) {
    a.check_compatible(b);
    std::vector<int> region = merge_sites(a.support_, b.support_);
    GlobalOperator out;
    out.n_ = a.n_;
    out.support_ = region;
    if (a.diag_ && b.diag_) {
        out.diag_ = true;
        out.d_ = a.diag_on_sites(region).cwiseProduct(b.diag_on_sites(region));
        return out;
    }
    if (a.diag_) {
        out.m_ = a.diag_on_sites(region).asDiagonal() * b.on_sites(region);
        return out;
    }
    if (b.diag_) {
        out.m_ = a.on_sites(region) * b.diag_on_sites(region).asDiagonal();
        return out;
    }
    const int nr = static_cast<int>(region.size());
    constexpr int kSmall = 4;
    if (nr > 8 && a.support_size() <= kSmall && a.support_size() < b.support_size()) {
        out.m_ = left_multiply(a.m_, make_layout(a.support_, region), b.on_sites(region));
    } else if (nr > 8 && b.support_size() <= kSmall) {
        out.m_ = right_multiply(a.on_sites(region), b.m_, make_layout(b.support_, region));
    } else {
        out.m_.noalias() = a.on_sites(region) * b.on_sites(region);
    }
    return out;
}

GlobalOperator embed(const LocalOperator& op, const Lattice& lattice) {
    if (op.support.empty()) throw std::invalid_argument("embed: empty support");
    return GlobalOperator::local(lattice.num_sites(), op.support, op.matrix);
}

GlobalOperator site_operator(const Lattice& lattice, int x, const Mat& m) {
    return embed(LocalOperator{{x}, m}, lattice);
}

GlobalOperator extensive_observable(const Lattice& lattice, const SiteTemplate& tmpl,
                                    const Region& region) {
    GlobalOperator sum = GlobalOperator::zero(lattice.num_sites());
    for (int x : region.sites()) sum += embed(tmpl(x), lattice);
    return sum;
}

SiteTemplate single_site_template(const Mat& m, std::function<double(int)> weight) {
    return [m, weight](int x) {
        const double w = weight ? weight(x) : 1.0;
        LocalOperator op{{x}, w * m};
        op.o = std::abs(w) * op_norm(m);
        return op;
    };
}

GlobalOperator commutator(const GlobalOperator& a, const GlobalOperator& b) { return a * b - b * a; }
GlobalOperator anticommutator(const GlobalOperator& a, const GlobalOperator& b) { return a * b + b * a; }
GlobalOperator adjoint(const GlobalOperator& a) { return a.adjoint(); }

double op_norm(const GlobalOperator& a) {
    if (a.is_diagonal()) return a.diag().size() ? a.diag().cwiseAbs().maxCoeff() : 0.0;
    return op_norm(a.matrix());
}

cplx hs_inner(const GlobalOperator& a, const GlobalOperator& b) {
    std::vector<int> region = merge_sites(a.support(), b.support());
    const double mult = std::ldexp(1.0, a.num_sites() - static_cast<int>(region.size()));
    if (a.is_diagonal() && b.is_diagonal()) {
        return mult * a.diag_on_sites(region).dot(b.diag_on_sites(region));
    }
    if (a.is_diagonal()) return mult * a.diag_on_sites(region).dot(b.on_sites(region).diagonal());
    if (b.is_diagonal()) return mult * a.on_sites(region).diagonal().dot(b.diag_on_sites(region));
    return mult * (a.on_sites(region).conjugate().cwiseProduct(b.on_sites(region))).sum();
}

double max_abs_diff(const GlobalOperator& a, const GlobalOperator& b) {
    GlobalOperator d = a - b;
    if (d.is_diagonal()) return d.diag().cwiseAbs().maxCoeff();
    return d.matrix().cwiseAbs().maxCoeff();
}

GlobalOperator conditional_expectation(const GlobalOperator& a, const Region& keep) {
    std::vector<int> kept;
    for (int x : a.support()) {
        if (keep.contains(x)) kept.push_back(x);
    }
    if (kept == a.support()) return a;
    Layout lay = make_layout(kept, a.support());
    const double norm = 1.0 / static_cast<double>(lay.rest_off.size());
    if (a.is_diagonal()) {
        return GlobalOperator::diagonal(a.num_sites(), kept, partial_trace_diag(a.diag(), lay) * norm);
    }
    return GlobalOperator::local(a.num_sites(), kept, partial_trace(a.matrix(), lay) * norm);
}

GlobalOperator product_operator(const std::vector<Mat>& site_mats) {
    const int n = static_cast<int>(site_mats.size());
    bool all_diag = true;
    for (const auto& m : site_mats) all_diag = all_diag && is_diagonal_matrix(m);
    if (all_diag) {
        Vec v = Vec::Ones(1);
        for (const auto& m : site_mats) {
            Vec next(v.size() * 2);
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                next(2 * i) = v(i) * m(0, 0);
                next(2 * i + 1) = v(i) * m(1, 1);
            }
            v = std::move(next);
        }
        return GlobalOperator::full_diagonal(n, std::move(v));
    }
    Mat acc = Mat::Ones(1, 1);
    for (const auto& m : site_mats) {
        Mat next(acc.rows() * 2, acc.cols() * 2);
        for (Eigen::Index i = 0; i < acc.rows(); ++i) {
            for (Eigen::Index j = 0; j < acc.cols(); ++j) next.block<2, 2>(2 * i, 2 * j) = acc(i, j) * m;
        }
        acc = std::move(next);
    }
    return GlobalOperator::full(n, std::move(acc));
}

std::vector<GlobalOperator> pauli_basis(int num_sites, const std::vector<int>& sites) {
    const int k = static_cast<int>(sites.size());
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<GlobalOperator> out;
    const long total = 1L << (2 * k);
    out.reserve(total);
    for (long code = 0; code < total; ++code) {
        Mat acc = Mat::Ones(1, 1);
        for (int i = 0; i < k; ++i) {
            Mat p = pauli::by_name(letters[(code >> (2 * (k - 1 - i))) & 3]);
            Mat next(acc.rows() * 2, acc.cols() * 2);
            for (Eigen::Index a = 0; a < acc.rows(); ++a) {
                for (Eigen::Index b = 0; b < acc.cols(); ++b) next.block<2, 2>(2 * a, 2 * b) = acc(a, b) * p;
            }
            acc = std::move(next);
        }
        out.push_back(GlobalOperator::local(num_sites, sites, acc).trimmed());
    }
    return out;
}

}  // namespace dssb
