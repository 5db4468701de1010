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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dssb/certify.hpp"
#include "dssb/generators.hpp"

using namespace dssb;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const cplx I1(0, 1);

GlobalOperator sz_total(const Lattice& l) {
    return extensive_observable(l, single_site_template(0.5 * pauli::Z()), l.all());
}

StateFunctional multiplet(int n) {
    Lattice l(1, n);
    return gibbs(heisenberg_hamiltonian(l), kInf);
}

GlobalOperator flip_all(int n) {
    std::vector<Mat> xs(n, pauli::X());
    return product_operator(xs);
}

}  // namespace

TEST(states, gibbs_infinite_temperature) {
    Lattice l(1, 4);
    StateFunctional w = gibbs(ising_hamiltonian(l), 0.0);
    ASSERT_LE((w.matrix().to_dense() - Mat::Identity(16, 16) / 16.0).norm(), 1e-15);
    StateFunctional h = gibbs(heisenberg_hamiltonian(l), 0.0);
    ASSERT_LE((h.matrix().to_dense() - Mat::Identity(16, 16) / 16.0).norm(), 1e-14);
    ASSERT_LE((maximally_mixed(4).matrix().to_dense() - Mat::Identity(16, 16) / 16.0).norm(), 1e-15);
}

TEST(states, gibbs_ising_ground_mixture) {
    Lattice l(1, 6);
    Mat rho = gibbs(ising_hamiltonian(l), kInf).matrix().to_dense();
    Mat expected = Mat::Zero(64, 64);
    expected(0, 0) = expected(63, 63) = 0.5;
    ASSERT_LE((rho - expected).norm(), 1e-15);
}

TEST(states, gibbs_heisenberg_multiplet) {
    // Casimir oracle: the S = N/2 multiplet has S^2 = S(S+1) and dimension N+1.
    Lattice l(1, 4);
    OrderParameterPair p = spin_pair(l);
    Mat s2 = (p.o1 * p.o1 + p.o2 * p.o2 + p.c * p.c).to_dense();
    Mat rho = multiplet(4).matrix().to_dense();
    ASSERT_NEAR(rho.trace().real(), 1.0, 1e-14);
    ASSERT_LE((5.0 * rho * 5.0 * rho - 5.0 * rho).norm(), 1e-12);
    ASSERT_LE((s2 * rho - 6.0 * rho).norm(), 1e-12);
    ASSERT_NEAR((rho * rho).trace().real(), 1.0 / 5.0, 1e-12);
}

TEST(states, gibbs_finite_temperature_matches_expm) {
    Lattice l(1, 3);
    GlobalOperator h = heisenberg_hamiltonian(l, 0.8);
    Eigen::SelfAdjointEigenSolver<Mat> es(h.to_dense());
    Vec w = (-1.3 * es.eigenvalues()).array().exp().cast<cplx>();
    Mat expected = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
    expected /= expected.trace();
    ASSERT_LE((gibbs(h, 1.3).matrix().to_dense() - expected).norm(), 1e-13);
}

TEST(states, from_density_validation) {
    Mat bad = Mat::Identity(4, 4);
    ASSERT_THROW(StateFunctional::from_density(GlobalOperator::full(2, bad)), std::invalid_argument);
    Mat neg = Mat::Zero(4, 4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    ASSERT_THROW(StateFunctional::from_density(GlobalOperator::full(2, neg)), std::invalid_argument);
    ASSERT_TRUE(polarized_state(3, false).is_density());
    ASSERT_NEAR(polarized_state(3, false).evaluate(sz_total(Lattice(1, 3))).real(), -1.5, 1e-15);
}

TEST(states, evaluation_uses_reduced_density) {
    Lattice l(1, 5);
    StateFunctional w = gibbs(heisenberg_hamiltonian(l), 0.9);
    GlobalOperator a = random_hermitian(5, {1, 3}, 2);
    Mat rho = w.matrix().to_dense();
    ASSERT_NEAR(std::abs(w.evaluate(a) - (rho * a.to_dense()).trace()), 0.0, 1e-13);
    GlobalOperator b = random_hermitian(5, {3, 4}, 3);
    ASSERT_NEAR(std::abs(w.evaluate_product(a, b) - (rho * a.to_dense() * b.to_dense()).trace()), 0.0, 1e-13);
    ASSERT_NEAR(std::abs(w(a) - w.evaluate(a)), 0.0, 0.0);
}

TEST(states, fluctuation_ratio) {
    for (int n : {2, 4, 6}) {
        Lattice l(1, n);
        GlobalOperator sz = sz_total(l);
        ASSERT_NEAR(fluctuation_ratio(gibbs(ising_hamiltonian(l), kInf), sz, 0.5), 1.0, 1e-13);
        ASSERT_NEAR(fluctuation_ratio(maximally_mixed(n), sz, 0.5), 1.0 / std::sqrt(n), 1e-13);
    }
    Lattice l6(1, 6);
    GlobalOperator sx = spin_pair(l6).o1;
    ASSERT_NEAR(multiplet(6).evaluate(sx * sx).real(), 6.0 * 8.0 / 12.0, 1e-12);
    ASSERT_NEAR(fluctuation_ratio(multiplet(6), sx, 0.5), std::sqrt(8.0 / 18.0), 1e-12);
}

TEST(states, tilted_pair_zero_temperature) {
    Lattice l(1, 2);
    GlobalOperator sz = sz_total(l);
    auto [wp, wm] = tilted_pair(gibbs(ising_hamiltonian(l), kInf), sz);
    ASSERT_NEAR(wp.evaluate(sz).real(), 1.0, 1e-14);
    ASSERT_NEAR(wm.evaluate(sz).real(), -1.0, 1e-14);
    ASSERT_NEAR(std::abs(wp.evaluate(GlobalOperator::identity(2)) - 1.0), 0.0, 1e-15);
}

TEST(states, tilted_pair_identities) {
    for (double beta : {0.0, 0.6, 1.5}) {
        Lattice l(1, 5);
        StateFunctional w = gibbs(ising_hamiltonian(l), beta);
        GlobalOperator o = sz_total(l);
        auto [wp, wm] = tilted_pair(w, o);
        ASSERT_NEAR(std::abs(wp.evaluate(GlobalOperator::identity(5)) - 1.0), 0.0, 1e-14);
        ASSERT_NEAR(std::abs(wm.evaluate(GlobalOperator::identity(5)) - 1.0), 0.0, 1e-14);
        ASSERT_TRUE(wp.is_density());
        ASSERT_LE(wp.negativity(), 1e-14);
        ASSERT_LE(wm.negativity(), 1e-14);
        const double o2 = w.evaluate(o * o).real();
        for (uint64_t s = 0; s < 4; ++s) {
            GlobalOperator a = random_hermitian(5, {0, 2}, s);
            const cplx lhs = wp.evaluate(a) + wm.evaluate(a);
            const cplx rhs = w.evaluate(a) + w.evaluate(o * a * o) / o2;
            ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
        }
        // Flipping every spin exchanges the two tilted states.
        GlobalOperator f = flip_all(5);
        for (uint64_t s = 0; s < 4; ++s) {
            GlobalOperator a = random_hermitian(5, {1, 4}, 50 + s);
            ASSERT_NEAR(std::abs(wp.evaluate(f * a * f) - wm.evaluate(a)), 0.0, 1e-13);
        }
    }
}

TEST(states, raising_operator) {
    Lattice l(1, 3);
    OrderParameterPair p = spin_pair(l);
    ASSERT_LE(commutation_violation(p), 1e-14);
    GlobalOperator op = raising_operator(p);
    GlobalOperator expected = extensive_observable(l, single_site_template(pauli::plus()), l.all());
    ASSERT_LE(max_abs_diff(op, expected), 1e-15);
    ASSERT_LE(max_abs_diff(commutator(p.c, op), op), 1e-14);
    ASSERT_LE(max_abs_diff(raising_operator(p, -1), op.adjoint()), 1e-15);
    // The all-up state is highest weight.
    ASSERT_LE(op.to_dense().col(0).norm(), 1e-15);
    OrderParameterPair bad = p;
    bad.o2 = p.o1;
    ASSERT_THROW(raising_operator(bad), std::invalid_argument);
    ASSERT_THROW(raising_operator(p, 2), std::invalid_argument);
}

TEST(states, kt_functional_basics) {
    Lattice l(1, 4);
    StateFunctional w = multiplet(4);
    OrderParameterPair p = spin_pair(l);
    GlobalOperator op = raising_operator(p);
    GlobalOperator a = random_hermitian(4, {0, 1}, 1);
    ASSERT_NEAR(std::abs(kt_functional(w, op, 0, 0).evaluate(a) - w.evaluate(a)), 0.0, 1e-14);
    KTFamily fam = kt_family(w, op, 2);
    for (int m = -2; m <= 2; ++m) {
        for (int mp = -2; mp <= 2; ++mp) {
            const cplx one = kt_functional(fam, m, mp).evaluate(GlobalOperator::identity(4));
            ASSERT_NEAR(std::abs(one - (m == mp ? 1.0 : 0.0)), 0.0, 1e-12) << m << " " << mp;
        }
    }
    ASSERT_THROW(kt_family(w, op, 4), std::invalid_argument);
    // The all-up state carries no charge below the top: lowering is fine, raising has zero norm.
    ASSERT_THROW(kt_family(polarized_state(4, true), op, 1), NormalizationError);
}

TEST(states, kt_state_normalization_and_symmetry_breaking) {
    for (int n : {4, 6, 8}) {
        Lattice l(1, n);
        StateFunctional w = multiplet(n);
        OrderParameterPair p = spin_pair(l);
        KTFamily fam = kt_family(w, raising_operator(p), std::min(3, n - 1));
        double prev = -1.0;
        for (int m = 0; m <= fam.max_power; ++m) {
            StateFunctional s = kt_state(fam, m);
            ASSERT_NEAR(std::abs(s.evaluate(GlobalOperator::identity(n)) - 1.0), 0.0, 1e-10);
            ASSERT_LE(std::abs(s.evaluate(p.o2)), 1e-10);
            const double o1 = s.evaluate(p.o1).real() / n;
            if (m == 0) {
                ASSERT_NEAR(o1, 0.0, 1e-12);
            } else {
                ASSERT_GT(o1, prev);
            }
            prev = o1;
            ASSERT_LE(s.negativity(), 1e-12);
        }
    }
    Lattice l4(1, 4);
    StateFunctional w = multiplet(4);
    GlobalOperator a = random_hermitian(4, {2}, 9);
    ASSERT_NEAR(std::abs(kt_state(w, raising_operator(spin_pair(l4)), 0).evaluate(a) - w.evaluate(a)), 0.0, 1e-14);
}

TEST(states, kt_state_frozen_values) {
    // O^(1)/N for M = 1, 2 from an independent dense numpy construction of the averaged dressed state.
    const double expected[3][2] = {
        {0.3333333333, 0.4049390153}, {0.3142696805, 0.3885618083}, {0.3042903097, 0.3787883545}};
    int row = 0;
    for (int n : {4, 6, 8}) {
        Lattice l(1, n);
        OrderParameterPair p = spin_pair(l);
        KTFamily fam = kt_family(multiplet(n), raising_operator(p), 2);
        for (int m = 1; m <= 2; ++m) {
            ASSERT_NEAR(kt_state(fam, m).evaluate(p.o1).real() / n, expected[row][m - 1], 1e-9) << n << " " << m;
        }
        ++row;
    }
}

TEST(states, goldstone_twist) {
    Lattice l2(1, 2);
    GlobalOperator u = goldstone_twist(l2, spin_pair(l2).tc);
    Vec expected(4);
    expected << I1, -I1, I1, -I1;
    ASSERT_LE((u.to_dense().diagonal() - expected).norm(), 1e-15);
    ASSERT_LE((u.to_dense() - Mat(expected.asDiagonal())).norm(), 1e-15);

    Lattice l(1, 5);
    GlobalOperator v = goldstone_twist(l, spin_pair(l).tc);
    ASSERT_LE((v.to_dense() * v.to_dense().adjoint() - Mat::Identity(32, 32)).norm(), 1e-13);
    ASSERT_THROW(goldstone_twist(l, single_site_template(pauli::plus())), std::invalid_argument);
}

TEST(states, order_parameter_images) {
    Lattice l(1, 8);
    OrderParameterPair p = spin_pair(l);
    StateFunctional om = kt_state(multiplet(8), raising_operator(p), 1);
    StateFunctional sg = twisted_state(om, goldstone_twist(l, p.tc));
    auto flat = order_parameter_image(om, l, p);
    auto wound = order_parameter_image(sg, l, p);
    ASSERT_EQ(flat.size(), 8u);
    ASSERT_LE(image_spread(flat), 1e-12);
    ASSERT_EQ(winding_number(flat), 0);
    ASSERT_EQ(std::abs(*winding_number(wound)), 1);
    ASSERT_GT(image_spread(wound), 0.1);
    // Every site keeps the same radius: the twist only rotates.
    for (int x = 0; x < 8; ++x) {
        ASSERT_NEAR(std::hypot(wound[x][0], wound[x][1]), std::hypot(flat[x][0], flat[x][1]), 1e-12);
    }
}

TEST(states, winding_number_synthetic) {
    std::vector<std::array<double, 2>> circle;
    for (int k = 0; k < 6; ++k) circle.push_back({std::cos(2 * k * M_PI / 6), std::sin(2 * k * M_PI / 6)});
    ASSERT_EQ(winding_number(circle), 1);
    std::reverse(circle.begin(), circle.end());
    ASSERT_EQ(winding_number(circle), -1);
    circle[2] = {0.0, 0.0};
    ASSERT_FALSE(winding_number(circle).has_value());
    ASSERT_FALSE(winding_number({}).has_value());
}

TEST(states, charge_rotation_orbit) {
    Lattice l(1, 6);
    OrderParameterPair p = spin_pair(l);
    StateFunctional om = kt_state(multiplet(6), raising_operator(p), 2);
    const double base = om.evaluate(p.o1).real();
    for (double theta : {0.0, 0.3, 1.2, M_PI / 2, 2.5}) {
        StateFunctional r = charge_rotated(om, p.c, theta);
        ASSERT_NEAR(r.evaluate(p.o1).real(), std::cos(theta) * base, 1e-8);
    }
}
