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

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

#include "dssb/algebra.hpp"

namespace dssb {

namespace {

constexpr Eigen::Index kDirectLimit = 256;

// Largest eigenvalue of the positive operator a^dagger a by restarted Lanczos
// with full reorthogonalization.
double lanczos_gram_max(const Mat& a) {
    const Eigen::Index n = a.cols();
    const int m = static_cast<int>(std::min<Eigen::Index>(n, 60));
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> g;
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    v.normalize();
    double prev = -1.0;
    for (int restart = 0; restart < 30; ++restart) {
        Mat basis(n, m);
        Eigen::VectorXd alpha(m), beta(m);
        int used = 0;
        basis.col(0) = v;
        for (int j = 0; j < m; ++j) {
            Vec w = a.adjoint() * (a * basis.col(j));
            alpha(j) = basis.col(j).dot(w).real();
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i <= j; ++i) w -= basis.col(i).dot(w) * basis.col(i);
            }
            used = j + 1;
            const double b = w.norm();
            if (j + 1 == m || b < 1e-14 * std::max(1.0, std::abs(alpha(j)))) break;
            beta(j) = b;
            basis.col(j + 1) = w / b;
        }
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(used, used);
        for (int j = 0; j < used; ++j) {
            t(j, j) = alpha(j);
            if (j + 1 < used) t(j, j + 1) = t(j + 1, j) = beta(j);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const double top = es.eigenvalues()(used - 1);
        Eigen::VectorXd y = es.eigenvectors().col(used - 1);
        v = basis.leftCols(used) * y.cast<cplx>();
        v.normalize();
        if (used < m || std::abs(top - prev) <= 1e-13 * std::max(1.0, top)) return std::max(top, 0.0);
        prev = top;
    }
    return std::max(prev, 0.0);
}

}  // namespace

double op_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    if (a.rows() <= kDirectLimit) {
        if ((a - a.adjoint()).cwiseAbs().maxCoeff() == 0.0) {
            Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
            return es.eigenvalues().cwiseAbs().maxCoeff();
        }
        if (a.rows() <= 16) {
            Eigen::JacobiSVD<Mat> svd(a);
            return svd.singularValues()(0);
        }
        Mat gram = a.adjoint() * a;
        Eigen::SelfAdjointEigenSolver<Mat> es(gram, Eigen::EigenvaluesOnly);
        return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
    }
    return std::sqrt(lanczos_gram_max(a));
}

}  // namespace dssb
