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

#include "dssb/generators.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace dssb {

GlobalOperator ising_hamiltonian(const Lattice& lattice, double j) {
    const int n = lattice.num_sites();
    const Eigen::Index dim = Eigen::Index(1) << n;
    Vec v = Vec::Zero(dim);
    const auto bonds = lattice.bonds();
    for (Eigen::Index b = 0; b < dim; ++b) {
        double e = 0.0;
        for (const auto& [x, y] : bonds) {
            const int sx = ((b >> (n - 1 - x)) & 1) ? -1 : 1;
            const int sy = ((b >> (n - 1 - y)) & 1) ? -1 : 1;
            e -= j * sx * sy;
        }
        v(b) = e;
    }
    return GlobalOperator::full_diagonal(n, std::move(v));
}

GlobalOperator heisenberg_hamiltonian(const Lattice& lattice, double j) {
    const int n = lattice.num_sites();
    Mat ss = Mat::Zero(4, 4);
    for (char c : {'X', 'Y', 'Z'}) {
        Mat p = pauli::by_name(c);
        ss += 0.25 * Eigen::kroneckerProduct(p, p).eval();
    }
    GlobalOperator h = GlobalOperator::zero(n);
    for (const auto& [x, y] : lattice.bonds()) {
        if (x == y) continue;
        h += GlobalOperator::local(n, {x, y}, -j * ss);
    }
    return h;
}

double flip_energy(const Lattice& lattice, int x, const std::vector<int>& ball_sites, int config, double j) {
    const int k = static_cast<int>(ball_sites.size());
    auto spin = [&](int site) {
        for (int i = 0; i < k; ++i) {
            if (ball_sites[i] == site) return ((config >> (k - 1 - i)) & 1) ? -1 : 1;
        }
        throw std::logic_error("flip_energy: neighbour outside ball");
    };
    int field = 0;
    for (int y : lattice.neighbors(x)) field += spin(y);
    return 2.0 * j * spin(x) * field;
}

Liouvillian heat_bath_ising(const Lattice& lattice, double beta, double j, const std::string& rate) {
    if (!(beta >= 0)) throw std::invalid_argument("heat_bath_ising: beta must be >= 0");
    const RateFunction gamma = rate_by_name(rate, beta);
    Liouvillian out(lattice);
    out.model = "heat_bath_ising";
    out.rate_name = rate;
    out.beta = beta;
    out.coupling_j = j;
    for (int x = 0; x < lattice.num_sites(); ++x) {
        const std::vector<int> ball = lattice.ball(x, 1).sites();
        const int k = static_cast<int>(ball.size());
        int pos = 0;
        while (ball[pos] != x) ++pos;
        const int flip = 1 << (k - 1 - pos);
        LocalLindbladTerm t;
        t.center = x;
        t.support = ball;
        for (int c = 0; c < (1 << k); ++c) {
            const double g = gamma(-flip_energy(lattice, x, ball, c, j));
            if (g == 0.0) continue;
            Mat l = Mat::Zero(1 << k, 1 << k);
            l(c, c ^ flip) = std::sqrt(g);
            t.jumps.push_back(std::move(l));
        }
        out.add_term(std::move(t));
    }
    return out;
}

Liouvillian davies_generator(const Lattice& lattice, const GlobalOperator& h,
                             const std::vector<GlobalOperator>& couplings, double beta, const std::string& rate) {
    if (!(beta >= 0)) throw std::invalid_argument("davies_generator: beta must be >= 0");
    if (h.num_sites() != lattice.num_sites()) throw std::invalid_argument("davies_generator: H on wrong lattice");
    Liouvillian out(lattice);
    out.model = "davies";
    out.rate_name = rate;
    out.beta = beta;
    out.add_spectral(std::make_shared<SpectralTerm>(h, couplings, rate_by_name(rate, beta)));
    return out;
}

std::vector<GlobalOperator> pauli_couplings(const Lattice& lattice, const std::string& axes) {
    std::vector<GlobalOperator> out;
    for (int x = 0; x < lattice.num_sites(); ++x) {
        for (char a : axes) out.push_back(site_operator(lattice, x, pauli::by_name(std::toupper(a))));
    }
    return out;
}

Region davies_jump_support(const Liouvillian& l, int coupling, double tol) {
    const int n = l.num_sites();
    Region r(n, std::vector<int>{});
    for (const auto& s : l.spectral_terms()) {
        for (const Mat& m : s->materialize_jumps(coupling)) {
            r = r.united(GlobalOperator::full(n, m).trimmed(tol).support_region());
        }
    }
    return r;
}

Liouvillian singlet_triplet_pump(const Lattice& lattice, double kappa) {
    if (!(kappa >= 0)) throw std::invalid_argument("singlet_triplet_pump: kappa must be >= 0");
    Vec singlet = Vec::Zero(4);
    Vec triplet = Vec::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    triplet(1) = triplet(2) = 1.0 / std::sqrt(2.0);
    const Mat jump = std::sqrt(kappa) * singlet * triplet.adjoint();
    Liouvillian out(lattice);
    out.model = "singlet_triplet_pump";
    out.coupling_j = kappa;
    for (const auto& [x, y] : lattice.bonds()) {
        if (x == y) continue;
        LocalLindbladTerm t;
        t.center = x;
        t.support = {x, y};
        t.jumps = {jump};
        out.add_term(std::move(t));
    }
    return out;
}

Liouvillian random_local_lindbladian(const Lattice& lattice, uint64_t seed, int jumps_per_term,
                                     bool with_hamiltonian) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    auto gauss = [&](int dim) {
        Mat m(dim, dim);
        for (int c = 0; c < dim; ++c) {
            for (int r = 0; r < dim; ++r) m(r, c) = cplx(nd(rng), nd(rng));
        }
        return m;
    };
    Liouvillian out(lattice);
    out.model = "random_local";
    for (int x = 0; x < lattice.num_sites(); ++x) {
        const int y = lattice.neighbors(x).back();
        LocalLindbladTerm t;
        t.center = x;
        t.support = x == y ? std::vector<int>{x} : std::vector<int>{x, y};
        const int dim = 1 << t.support.size();
        if (with_hamiltonian) {
            Mat g = gauss(dim);
            t.hamiltonian = Mat(0.25 * (g + g.adjoint()));
        }
        for (int i = 0; i < jumps_per_term; ++i) t.jumps.push_back(0.5 * gauss(dim));
        out.add_term(std::move(t));
    }
    return out;
}

Liouvillian build_generator(const GeneratorSpec& spec) {
    Lattice lattice(spec.d, spec.L);
    if (spec.model == "heat_bath_ising") return heat_bath_ising(lattice, spec.beta, spec.j, spec.rate);
    if (spec.model == "davies_heisenberg") {
        return davies_generator(lattice, heisenberg_hamiltonian(lattice, spec.j),
                                pauli_couplings(lattice, spec.couplings), spec.beta, spec.rate);
    }
    if (spec.model == "davies_ising") {
        return davies_generator(lattice, ising_hamiltonian(lattice, spec.j), pauli_couplings(lattice, spec.couplings),
                                spec.beta, spec.rate);
    }
    if (spec.model == "singlet_triplet_pump") return singlet_triplet_pump(lattice, spec.kappa);
    if (spec.model == "random_local") return random_local_lindbladian(lattice, spec.seed);
    throw std::invalid_argument("unknown generator model '" + spec.model + "'");
}

}  // namespace dssb
