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

#include "dssb/certify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dssb {

std::vector<GlobalOperator> ProbeSet::operators() const {
    if (is_basis) return basis;
    std::vector<GlobalOperator> out;
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

ProbeSet pauli_probes(const Lattice& lattice) {
    ProbeSet p;
    p.description = "pauli basis";
    p.is_basis = true;
    p.basis = pauli_basis(lattice.num_sites(), lattice.all().sites());
    return p;
}

GlobalOperator random_hermitian(int num_sites, const std::vector<int>& sites, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    const int dim = 1 << sites.size();
    Mat g(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) g(r, c) = cplx(nd(rng), nd(rng));
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        const cplx d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
    }
    Vec lambda(dim);
    for (int i = 0; i < dim; ++i) lambda(i) = ud(rng);
    Mat h = q * lambda.asDiagonal() * q.adjoint();
    h = 0.5 * (h + h.adjoint()).eval();
    return GlobalOperator::local(num_sites, sites, h);
}

ProbeSet random_local_probes(const Lattice& lattice, int count, uint64_t seed) {
    ProbeSet p;
    p.description = std::to_string(count) + " random local pairs";
    std::mt19937_64 rng(seed);
    const int n = lattice.num_sites();
    std::uniform_int_distribution<int> site(0, n - 1);
    auto place = [&](int x) {
        std::vector<int> s{x};
        if (rng() & 1) {
            auto nb = lattice.neighbors(x);
            const int y = nb[rng() % nb.size()];
            if (y != x) s.push_back(y);
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    for (int i = 0; i < count; ++i) {
        const int x = site(rng);
        int y = x;
        // half the pairs overlap or touch, the rest are placed anywhere
        if (rng() & 1) {
            auto nb = lattice.neighbors(x);
            y = (rng() & 1) ? nb[rng() % nb.size()] : x;
        } else {
            y = site(rng);
        }
        GlobalOperator a = random_hermitian(n, place(x), rng());
        GlobalOperator b = random_hermitian(n, place(y), rng());
        p.pairs.emplace_back(std::move(a), std::move(b));
    }
    return p;
}

ProbeSet default_probes(const Lattice& lattice, uint64_t seed) {
    if (lattice.num_sites() <= 5) return pauli_probes(lattice);
    return random_local_probes(lattice, 200, seed);
}

namespace {

Vec vec_of(const GlobalOperator& a, const std::vector<int>& all) {
    Mat m = a.on_sites(all);
    return Eigen::Map<const Vec>(m.data(), m.size());
}

}  // namespace

double detailed_balance_defect(const Liouvillian& l, const StateFunctional& omega, const ProbeSet& probes) {
    if (!probes.is_basis) {
        double worst = 0.0;
        for (const auto& [a, b] : probes.pairs) {
            const double na = op_norm(a);
            const double nb = op_norm(b);
            if (na == 0 || nb == 0) continue;
            const cplx lhs = omega.evaluate_product(a, l.apply(b));
            const cplx rhs = omega.evaluate_product(l.apply(a), b);
            worst = std::max(worst, std::abs(lhs - rhs) / (na * nb));
        }
        return worst;
    }
    // w(P_a X) = u_a . vec(X) with u_a = vec((D P_a)^T); w(Y P_b) = v_b . vec(Y) with v_b = vec((P_b D)^T)
    std::vector<int> all = l.lattice().all().sites();
    const Mat d = omega.matrix().on_sites(all);
    const Eigen::Index dim = d.rows();
    const Eigen::Index nb = static_cast<Eigen::Index>(probes.basis.size());
    Mat lmat(dim * dim, nb);
    Mat u(nb, dim * dim);
    Mat v(nb, dim * dim);
    Eigen::VectorXd norms(nb);
    for (Eigen::Index i = 0; i < nb; ++i) {
        const GlobalOperator& p = probes.basis[i];
        norms(i) = op_norm(p);
        lmat.col(i) = vec_of(l.apply(p), all);
        Mat pm = p.on_sites(all);
        Mat dp = (d * pm).transpose();
        Mat pd = (pm * d).transpose();
        u.row(i) = Eigen::Map<const Vec>(dp.data(), dp.size()).transpose();
        v.row(i) = Eigen::Map<const Vec>(pd.data(), pd.size()).transpose();
    }
    Mat m1 = u * lmat;
    Mat m2 = v * lmat;
    double worst = 0.0;
    for (Eigen::Index a = 0; a < nb; ++a) {
        for (Eigen::Index b = 0; b < nb; ++b) {
            if (norms(a) == 0 || norms(b) == 0) continue;
            worst = std::max(worst, std::abs(m1(a, b) - m2(b, a)) / (norms(a) * norms(b)));
        }
    }
    return worst;
}

double symmetry_defect(const Liouvillian& l, const GlobalOperator& c, const ProbeSet& probes) {
    double worst = 0.0;
    for (const auto& a : probes.operators()) {
        const double na = op_norm(a);
        if (na == 0) continue;
        GlobalOperator diff = l.apply(commutator(c, a)) - commutator(c, l.apply(a));
        worst = std::max(worst, op_norm(diff) / na);
    }
    return worst;
}

double stationarity_defect(const Liouvillian& l, const StateFunctional& omega, const ProbeSet& probes) {
    double worst = 0.0;
    for (const auto& a : probes.operators()) {
        const double na = op_norm(a);
        if (na == 0) continue;
        worst = std::max(worst, std::abs(omega.evaluate(l.apply(a))) / na);
    }
    return worst;
}

Eigen::MatrixXd classical_generator(const Liouvillian& l) {
    if (!l.diagonal_preserving()) throw std::invalid_argument("classical_generator: generator mixes off-diagonals");
    const int n = l.num_sites();
    if (n > 12) throw std::invalid_argument("classical_generator: N <= 12 only");
    const Eigen::Index dim = Eigen::Index(1) << n;
    std::vector<int> all = l.lattice().all().sites();
    Eigen::MatrixXd q(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Vec e = Vec::Zero(dim);
        e(j) = 1.0;
        q.col(j) = l.apply_diag_on(all, e, Picture::Heisenberg).real();
    }
    return q;
}

}  // namespace dssb
