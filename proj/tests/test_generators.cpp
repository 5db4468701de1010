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

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

#include "dssb/certify.hpp"
#include "dssb/states.hpp"

using namespace dssb;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const cplx I1(0, 1);

std::vector<Liouvillian> zoo() {
    Lattice l4(1, 4);
    Lattice l22(2, 2);
    std::vector<Liouvillian> out;
    out.push_back(heat_bath_ising(l4, 1.0));
    out.push_back(heat_bath_ising(l4, kInf, 0.7, "metropolis"));
    out.push_back(heat_bath_ising(l22, 0.5));
    out.push_back(davies_generator(l4, heisenberg_hamiltonian(l4), pauli_couplings(l4), 2.0));
    out.push_back(davies_generator(l4, ising_hamiltonian(l4), pauli_couplings(l4, "x"), 1.0));
    out.push_back(singlet_triplet_pump(l4, 0.5));
    out.push_back(random_local_lindbladian(l4, 3));
    return out;
}

}  // namespace

TEST(generators, rate_functions) {
    RateFunction g = glauber_rate(2.0);
    ASSERT_NEAR(g(0.0), 0.5, 1e-15);
    ASSERT_NEAR(g(1.0), 1 / (1 + std::exp(-2.0)), 1e-15);
    ASSERT_NEAR(g(1.5) / g(-1.5), std::exp(3.0), 1e-12);
    RateFunction gi = glauber_rate(kInf);
    ASSERT_EQ(gi(1.0), 1.0);
    ASSERT_EQ(gi(0.0), 0.5);
    ASSERT_EQ(gi(-1.0), 0.0);
    RateFunction m = metropolis_rate(1.0);
    ASSERT_EQ(m(2.0), 1.0);
    ASSERT_NEAR(m(-2.0), std::exp(-2.0), 1e-15);
    ASSERT_LE(kms_violation(g), 1e-12);
    ASSERT_LE(kms_violation(m), 1e-12);
    ASSERT_LE(kms_violation(gi), 1e-12);
    RateFunction bad{"bad", 1.0, [](double) { return 1.0; }};
    ASSERT_GT(kms_violation(bad), 0.1);
    ASSERT_THROW(rate_by_name("arrhenius", 1.0), std::invalid_argument);
}

TEST(generators, amplitude_damping_two_by_two) {
    Lattice lat(1, 2);
    Liouvillian l(lat);
    l.add_term({0, {0}, std::nullopt, {pauli::minus()}});
    Mat sz = pauli::Z();
    Mat sm = pauli::minus();
    Mat sp = pauli::plus();
    Mat expected = sm * sz * sp - 0.5 * (sm * sp * sz + sz * sm * sp);
    GlobalOperator out = apply_heisenberg(l, site_operator(lat, 0, sz));
    ASSERT_LE(max_abs_diff(out, site_operator(lat, 0, expected)), 1e-15);
    // sigma^- Z sigma^+ and sigma^- sigma^+ are both the spin-down projector, so L[Z] = 1 - Z.
    ASSERT_LE(max_abs_diff(out, site_operator(lat, 0, Mat::Identity(2, 2) - sz)), 1e-15);
}

TEST(generators, hamiltonian_only_is_commutator) {
    Lattice lat(1, 3);
    GlobalOperator h = random_hermitian(3, {0, 1}, 4);
    Liouvillian l(lat);
    l.add_term({0, {0, 1}, h.matrix(), {}});
    for (uint64_t s = 0; s < 5; ++s) {
        GlobalOperator a = random_hermitian(3, {1, 2}, 10 + s) + I1 * random_hermitian(3, {0}, 20 + s);
        ASSERT_LE(max_abs_diff(l.apply(a), I1 * commutator(h, a)), 1e-13);
    }
}

TEST(generators, unitality_hermiticity_locality) {
    for (const auto& l : zoo()) {
        const int n = l.num_sites();
        ASSERT_LE(op_norm(l.apply(GlobalOperator::identity(n))), 1e-12) << l.model;
        for (uint64_t s = 0; s < 3; ++s) {
            GlobalOperator a = random_hermitian(n, {1}, s) + I1 * random_hermitian(n, {1}, 100 + s);
            ASSERT_LE(max_abs_diff(l.apply(a.adjoint()), l.apply(a).adjoint()), 1e-12) << l.model;
        }
    }
    Lattice lat(1, 6);
    Liouvillian hb = heat_bath_ising(lat, 0.8);
    GlobalOperator a = random_hermitian(6, {2}, 9);
    // Terms meeting site 2 are centred within range() of it and reach range() further.
    ASSERT_TRUE(hb.apply(a).acts_trivially_outside(lat.enlarge(lat.region({2}), 2 * hb.range())));
    ASSERT_FALSE(hb.apply(a).acts_trivially_outside(lat.enlarge(lat.region({2}), hb.range())));
    ASSERT_FALSE(hb.apply(a).acts_trivially_outside(lat.region({2})));
}

TEST(generators, flip_energy_and_rate) {
    // Flipping a spin against two aligned neighbours costs 4J in one dimension.
    Lattice lat(1, 4);
    const double j = 0.75;
    const double beta = 1.3;
    std::vector<int> ball = lat.ball(1, 1).sites();  // {0, 1, 2}
    ASSERT_NEAR(flip_energy(lat, 1, ball, 0b000, j), 4 * j, 1e-15);
    ASSERT_NEAR(flip_energy(lat, 1, ball, 0b010, j), -4 * j, 1e-15);
    ASSERT_NEAR(flip_energy(lat, 1, ball, 0b100, j), 0.0, 1e-15);

    Eigen::MatrixXd q = classical_generator(heat_bath_ising(lat, beta, j));
    const int all_up = 0;
    const int flipped = 1 << (4 - 1 - 1);
    ASSERT_NEAR(q(all_up, flipped), 1 / (1 + std::exp(4 * beta * j)), 1e-15);
    ASSERT_NEAR(q(flipped, all_up), 1 / (1 + std::exp(-4 * beta * j)), 1e-15);
    for (Eigen::Index r = 0; r < q.rows(); ++r) ASSERT_NEAR(q.row(r).sum(), 0.0, 1e-14);
}

TEST(generators, heat_bath_infinite_temperature) {
    Lattice lat(1, 4);
    Liouvillian l = heat_bath_ising(lat, 0.0);
    Eigen::MatrixXd q = classical_generator(l);
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        for (Eigen::Index k = 0; k < q.cols(); ++k) {
            if (i != k && q(i, k) != 0) ASSERT_NEAR(q(i, k), 0.5, 1e-15);
        }
    }
    ASSERT_LE(detailed_balance_defect(l, maximally_mixed(4), pauli_probes(lat)), 1e-10);
}

TEST(generators, heat_bath_detailed_balance_all_temperatures) {
    for (double beta : {0.0, 0.5, 1.0, 2.0, kInf}) {
        for (int n : {2, 4, 6}) {
            Lattice lat(1, n);
            Liouvillian l = heat_bath_ising(lat, beta);
            StateFunctional w = gibbs(ising_hamiltonian(lat), beta);
            ASSERT_LE(detailed_balance_defect(l, w, default_probes(lat, 1)), 1e-10) << beta << " " << n;
            ASSERT_LE(stationarity_defect(l, w, default_probes(lat, 1)), 1e-10) << beta << " " << n;
        }
    }
    Lattice sq(2, 2);
    ASSERT_LE(detailed_balance_defect(heat_bath_ising(sq, 2.0), gibbs(ising_hamiltonian(sq), 2.0), pauli_probes(sq)),
              1e-10);
}

TEST(generators, zero_temperature_mixture) {
    Lattice lat(1, 4);
    StateFunctional w = gibbs(ising_hamiltonian(lat), kInf);
    Mat rho = w.matrix().to_dense();
    ASSERT_NEAR(rho(0, 0).real(), 0.5, 1e-15);
    ASSERT_NEAR(rho(15, 15).real(), 0.5, 1e-15);
    ASSERT_LE(detailed_balance_defect(heat_bath_ising(lat, kInf), w, pauli_probes(lat)), 1e-10);
}

TEST(generators, classical_detailed_balance_of_transition_matrix) {
    Lattice lat(1, 4);
    const double beta = 0.9;
    Eigen::MatrixXd q = classical_generator(heat_bath_ising(lat, beta));
    Eigen::MatrixXd qt = q * 0.1;
    Eigen::MatrixXd p = qt.exp();
    Vec g = gibbs(ising_hamiltonian(lat), beta).matrix().to_dense().diagonal();
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        ASSERT_NEAR(p.row(i).sum(), 1.0, 1e-12);
        for (Eigen::Index k = 0; k < p.cols(); ++k) {
            ASSERT_NEAR(g(i).real() * p(i, k), g(k).real() * p(k, i), 1e-9);
        }
    }
}

TEST(generators, hamiltonian_part_breaks_detailed_balance) {
    Lattice lat(1, 4);
    Liouvillian l = heat_bath_ising(lat, 1.0);
    for (int x = 0; x < 4; ++x) l.add_term({x, {x}, Mat(0.3 * pauli::X()), {}});
    StateFunctional w = gibbs(ising_hamiltonian(lat), 1.0);
    ASSERT_GT(detailed_balance_defect(l, w, pauli_probes(lat)), 0.01);
}

TEST(generators, identity_probe_pair) {
    // w(1 L[B]) - w(L[1] B) = w(L[B]): it vanishes exactly when w is stationary.
    Lattice lat(1, 4);
    Liouvillian l = heat_bath_ising(lat, 1.0);
    GlobalOperator b = random_hermitian(4, {1, 2}, 3);
    ProbeSet p;
    p.pairs = {{GlobalOperator::identity(4), b}};
    ASSERT_LE(detailed_balance_defect(l, gibbs(ising_hamiltonian(lat), 1.0), p), 1e-14);
    StateFunctional up = polarized_state(4, true);
    const double expected = std::abs(up.evaluate(l.apply(b))) / op_norm(b);
    ASSERT_NEAR(detailed_balance_defect(l, up, p), expected, 1e-14);
}

TEST(generators, davies_ising_is_nearest_neighbour) {
    Lattice lat(1, 5);
    Liouvillian l = davies_generator(lat, ising_hamiltonian(lat), pauli_couplings(lat, "x"), 1.0);
    Liouvillian hb = heat_bath_ising(lat, 1.0);
    for (int x = 0; x < 5; ++x) {
        ASSERT_EQ(davies_jump_support(l, x), lat.ball(x, 1));
        ASSERT_EQ(Region(5, hb.terms()[x].support), lat.ball(x, 1));
    }
    // Same Bohr structure and rates: the two generators coincide on diagonal observables.
    GlobalOperator a = site_operator(lat, 2, pauli::Z()) * site_operator(lat, 3, pauli::Z());
    ASSERT_LE(max_abs_diff(l.apply(a), hb.apply(a)), 1e-10);
}

TEST(generators, davies_infinite_temperature) {
    Lattice lat(1, 4);
    Liouvillian l = davies_generator(lat, heisenberg_hamiltonian(lat), pauli_couplings(lat), 0.0);
    ASSERT_LE(detailed_balance_defect(l, maximally_mixed(4), pauli_probes(lat)), 1e-10);
}

TEST(generators, davies_heisenberg_detailed_balance) {
    Lattice lat(1, 6);
    GlobalOperator h = heisenberg_hamiltonian(lat);
    Liouvillian l = davies_generator(lat, h, pauli_couplings(lat), 5.0);
    ASSERT_LE(detailed_balance_defect(l, gibbs(h, 5.0), default_probes(lat, 3)), 1e-8);
    ASSERT_LE(stationarity_defect(l, gibbs(h, 5.0), default_probes(lat, 3)), 1e-10);
    OrderParameterPair pair = spin_pair(lat);
    ASSERT_LE(symmetry_defect(l, pair.c, random_local_probes(lat, 10, 1)), 1e-8);
}

TEST(generators, davies_requires_kms_rates) {
    Lattice lat(1, 3);
    ASSERT_THROW(davies_generator(lat, heisenberg_hamiltonian(lat), pauli_couplings(lat), 1.0, "unknown"),
                 std::invalid_argument);
    GlobalOperator nonherm = site_operator(lat, 0, pauli::plus());
    ASSERT_THROW(davies_generator(lat, nonherm, pauli_couplings(lat), 1.0), std::invalid_argument);
}

TEST(generators, heat_bath_symmetry_defect_is_reported) {
    Lattice lat(1, 4);
    OrderParameterPair pair = spin_pair(lat);
    const double d = symmetry_defect(heat_bath_ising(lat, 1.0), pair.c, random_local_probes(lat, 10, 1));
    ASSERT_TRUE(std::isfinite(d));
    // The charge S^z generates a symmetry that commutes with every classical flip channel up to phases.
    ASSERT_GE(d, 0.0);
    ASSERT_EQ(symmetry_defect(Liouvillian(lat), pair.c, random_local_probes(lat, 10, 1)), 0.0);
}

TEST(generators, pump_steady_multiplet) {
    Lattice lat(1, 4);
    Liouvillian l = singlet_triplet_pump(lat);
    StateFunctional w = gibbs(heisenberg_hamiltonian(lat), kInf);
    ASSERT_LE(detailed_balance_defect(l, w, pauli_probes(lat)), 1e-10);
    ASSERT_LE(symmetry_defect(l, spin_pair(lat).c, pauli_probes(lat)), 1e-10);
}

TEST(generators, truncation) {
    Lattice lat(1, 6);
    Liouvillian hb = heat_bath_ising(lat, 1.0);
    ASSERT_EQ(hb.truncated(1).second.remainder_strength, 0.0);
    auto [t0, rep0] = hb.truncated(0);
    ASSERT_GT(rep0.remainder_strength, 0.0);
    for (const auto& term : t0.terms()) ASSERT_EQ(term.support.size(), 1u);

    GlobalOperator h = heisenberg_hamiltonian(lat);
    Liouvillian dv = davies_generator(lat, h, pauli_couplings(lat), 5.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int r = 1; r <= 3; ++r) {
        auto [lt, rep] = truncate(dv, r);
        ASSERT_LE(rep.remainder_strength, prev);
        if (r < 3) ASSERT_GT(rep.remainder_strength, 0.0);
        ASSERT_LE(op_norm(lt.apply(GlobalOperator::identity(6))), 1e-10);
        prev = rep.remainder_strength;
    }
    ASSERT_LT(prev, truncate(dv, 1).second.remainder_strength);
}

TEST(generators, restriction) {
    Lattice lat(1, 6);
    Liouvillian l = heat_bath_ising(lat, 0.7);
    Region a = lat.region({0});
    ASSERT_EQ(restricted_region(l, a), lat.region({5, 0, 1}));
    Liouvillian la = restrict(l, a);
    ASSERT_EQ(la.num_terms(), 3u);
    GlobalOperator x = random_hermitian(6, {0}, 1);
    ASSERT_LE(max_abs_diff(la.apply(x), l.apply(x)), 1e-12);
    Liouvillian full = restrict(l, lat.all());
    GlobalOperator y = random_hermitian(6, {2, 3}, 2);
    ASSERT_EQ(full.num_terms(), l.num_terms());
    ASSERT_LE(max_abs_diff(full.apply(y), l.apply(y)), 1e-15);
}

TEST(generators, picture_duality_of_superoperator) {
    Lattice lat(1, 3);
    Liouvillian l = random_local_lindbladian(lat, 8);
    Mat heis = l.superoperator(Picture::Heisenberg);
    Mat schr = l.superoperator(Picture::Schrodinger);
    ASSERT_LE((heis.adjoint() - schr).norm(), 1e-12);
}

TEST(generators, build_generator_dispatch) {
    GeneratorSpec s;
    s.L = 4;
    for (std::string m : {"heat_bath_ising", "davies_heisenberg", "davies_ising", "singlet_triplet_pump", "random_local"}) {
        s.model = m;
        Liouvillian l = build_generator(s);
        ASSERT_EQ(l.num_sites(), 4);
        ASSERT_LE(op_norm(l.apply(GlobalOperator::identity(4))), 1e-12) << m;
    }
    s.model = "kinetic_ising";
    ASSERT_THROW(build_generator(s), std::invalid_argument);
}
