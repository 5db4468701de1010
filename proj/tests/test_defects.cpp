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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dssb/certify.hpp"
#include "dssb/generators.hpp"

using namespace dssb;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

GlobalOperator sz_total(const Lattice& l) {
    return extensive_observable(l, single_site_template(0.5 * pauli::Z()), l.all());
}

Liouvillian sum_of(const Liouvillian& a, const Liouvillian& b) {
    Liouvillian out(a.lattice());
    for (const auto& t : a.terms()) out.add_term(t);
    for (const auto& t : b.terms()) out.add_term(t);
    return out;
}

}  // namespace

TEST(defects, leibniz_trivial_cases) {
    Lattice l(1, 4);
    Liouvillian hb = heat_bath_ising(l, 1.0);
    GlobalOperator x = random_hermitian(4, {0, 1, 2}, 1);
    ASSERT_LE(op_norm(leibniz_defect(hb, GlobalOperator::identity(4), x)), 1e-13);
    ASSERT_LE(op_norm(leibniz_defect(hb, x, GlobalOperator::identity(4))), 1e-13);

    Liouvillian ham(l);
    for (int s = 0; s < 4; ++s) ham.add_term({s, {s, (s + 1) % 4}, random_hermitian(4, {s, (s + 1) % 4}, s).matrix(), {}});
    GlobalOperator y = random_hermitian(4, {1, 3}, 7);
    ASSERT_LE(op_norm(leibniz_defect(ham, x, y)), 1e-12);
}

TEST(defects, leibniz_is_linear_in_generator) {
    Lattice l(1, 4);
    Liouvillian a = heat_bath_ising(l, 0.8);
    Liouvillian b = random_local_lindbladian(l, 5);
    Liouvillian ab = sum_of(a, b);
    GlobalOperator x = random_hermitian(4, {0, 1}, 2);
    GlobalOperator y = random_hermitian(4, {2, 3}, 3);
    ASSERT_LE(max_abs_diff(leibniz_defect(ab, x, y), leibniz_defect(a, x, y) + leibniz_defect(b, x, y)), 1e-12);
}

TEST(defects, leibniz_restricted_generator) {
    Lattice l(1, 6);
    Liouvillian hb = heat_bath_ising(l, 1.0);
    GlobalOperator a = site_operator(l, 0, pauli::X());
    Liouvillian la = hb.restricted(restricted_region(hb, a.support_region()));
    for (uint64_t s = 0; s < 3; ++s) {
        GlobalOperator x = random_hermitian(6, {0, 1, 2, 3, 4, 5}, s);
        ASSERT_LE(max_abs_diff(leibniz_defect(hb, x, a), leibniz_defect(la, x, a)), 1e-12);
    }
}

TEST(defects, approximate_leibniz_per_site) {
    // ||Gamma((S^z)^2, sigma^x_0)|| / N for the beta = 1 heat bath, from an independent dense numpy model.
    const double expected[] = {0.7365103425, 0.7856110320, 0.8183448250, 0.8417261057};
    for (int n = 4; n <= 7; ++n) {
        Lattice l(1, n);
        GlobalOperator sz = sz_total(l);
        GlobalOperator g = leibniz_defect(heat_bath_ising(l, 1.0), sz * sz, site_operator(l, 0, pauli::X()));
        ASSERT_NEAR(op_norm(g) / n, expected[n - 4], 1e-9);
    }
}

TEST(defects, main_text_identity) {
    Lattice l(1, 5);
    StateFunctional w = gibbs(ising_hamiltonian(l), 0.7);
    GlobalOperator sz = sz_total(l);
    for (uint64_t s = 0; s < 5; ++s) {
        GlobalOperator a = random_hermitian(5, {1, 2}, s);
        const cplx lhs = w.evaluate(sz * a * sz);
        const cplx rhs = w.evaluate(sz * commutator(a, sz)) + w.evaluate(sz * sz * a);
        ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
}

TEST(defects, steady_states_have_no_defects) {
    Lattice l(1, 5);
    Liouvillian hb = heat_bath_ising(l, 1.2);
    StateFunctional w = gibbs(ising_hamiltonian(l), 1.2);
    ProbeSet probes = random_local_probes(l, 20, 4);
    const double db = detailed_balance_defect(hb, w, probes);
    for (const auto& [a, b] : probes.pairs) {
        ASSERT_LE(metastability_defect(w, hb, a), 1e-10);
        ASSERT_LE(metastability_defect(w, hb, a), 10 * db + 1e-15);
        ASSERT_LE(reversibility_defect(w, hb, a, b), 1e-10);
    }
}

TEST(defects, polarized_state_is_not_metastable_at_infinite_temperature) {
    // At beta = 0 every flip has rate 1/2, so L[sigma^z_0] = -sigma^z_0 and the all-up defect is 1.
    for (int n : {4, 6, 8}) {
        Lattice l(1, n);
        const double d = metastability_defect(polarized_state(n, true), heat_bath_ising(l, 0.0),
                                              site_operator(l, 0, pauli::Z()));
        ASSERT_NEAR(d, 1.0, 1e-14);
        ASSERT_GT(d, 0.1);
    }
}

TEST(defects, reversibility_with_identity) {
    Lattice l(1, 4);
    Liouvillian hb = heat_bath_ising(l, 0.5);
    StateFunctional up = polarized_state(4, true);
    GlobalOperator a = random_hermitian(4, {0, 1}, 6);
    ASSERT_NEAR(reversibility_defect(up, hb, a, GlobalOperator::identity(4)), metastability_defect(up, hb, a), 1e-14);
}

TEST(defects, zero_temperature_tilted_states_are_exactly_stationary) {
    // The tilted states are the two polarized states, which the zero-temperature dynamics freezes.
    for (int n : {4, 6, 8}) {
        Lattice l(1, n);
        auto [wp, wm] = tilted_pair(gibbs(ising_hamiltonian(l), kInf), sz_total(l));
        Liouvillian hb = heat_bath_ising(l, kInf);
        GlobalOperator x0 = site_operator(l, 0, pauli::X());
        GlobalOperator z1 = site_operator(l, 1, pauli::Z());
        ASSERT_EQ(metastability_defect(wp, hb, x0), 0.0);
        ASSERT_EQ(reversibility_defect(wm, hb, x0, z1), 0.0);
    }
}

TEST(defects, kt_reversibility) {
    Lattice l(1, 4);
    GlobalOperator h = heisenberg_hamiltonian(l);
    Liouvillian dv = davies_generator(l, h, pauli_couplings(l), kInf);
    StateFunctional w = gibbs(h, kInf);
    KTFamily fam = kt_family(w, raising_operator(spin_pair(l)), 1);
    GlobalOperator a = site_operator(l, 0, pauli::X());
    GlobalOperator b = site_operator(l, 1, pauli::Y());
    ASSERT_NEAR(kt_reversibility_defect(fam, dv, 0, 0, a, b), reversibility_defect(w, dv, a, b), 1e-14);
    GlobalOperator id = GlobalOperator::identity(4);
    ASSERT_LE(kt_reversibility_defect(fam, dv, 1, 1, id, id), 1e-14);
}

TEST(defects, kt_reversibility_decreases_with_size) {
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {4, 6}) {
        Lattice l(1, n);
        GlobalOperator h = heisenberg_hamiltonian(l);
        Liouvillian dv = davies_generator(l, h, pauli_couplings(l), kInf);
        KTFamily fam = kt_family(gibbs(h, kInf), raising_operator(spin_pair(l)), 1);
        GlobalOperator a = site_operator(l, 0, pauli::Z()) * site_operator(l, 1, pauli::Z());
        GlobalOperator b = site_operator(l, 0, pauli::X()) * site_operator(l, 1, pauli::X());
        const double d = kt_reversibility_defect(fam, dv, 1, 1, a, b);
        ASSERT_GT(d, 0.0);
        ASSERT_LT(d, prev);
        prev = d;
    }
}

TEST(defects, koma_lemma_multiplet) {
    Lattice l(1, 8);
    StateFunctional w = gibbs(heisenberg_hamiltonian(l), kInf);
    OrderParameterPair p = spin_pair(l);
    const double mu = fluctuation_ratio(w, p.o1, p.o);
    ASSERT_NEAR(mu, std::sqrt(10.0 / 24.0), 1e-12);
    KomaReport rep = koma_lemma_check(w, l, p, Region(8, {0}), 1, mu, site_operator(l, 0, pauli::Z()));
    ASSERT_EQ(rep.a.size(), 2u);
    ASSERT_NEAR(rep.a[0], 1.0, 1e-12);
    // Brute-force a_1 = w(Q^dag Q) with Q the raising operator on the complement of site 0 (dense numpy).
    ASSERT_NEAR(rep.a[1], 10.5, 1e-10);
    ASSERT_TRUE(rep.ratios_hold);
    ASSERT_TRUE(rep.ratio_holds);
    ASSERT_TRUE(rep.a1_holds);
    ASSERT_TRUE(rep.local_holds);
    ASSERT_TRUE(rep.all_hold());
    ASSERT_GE(rep.a[1], rep.a1_bound);
    ASSERT_NEAR(rep.a1_bound, 2 * 0.25 * mu * mu * 64 * (1 - 2 / (mu * mu * 8)), 1e-12);
    ASSERT_FALSE(rep.hypotheses());
    ASSERT_NE(rep.status().find("hypotheses violated"), std::string::npos);
    ASSERT_THROW(koma_lemma_check(w, l, p, Region(8, {0}), 0, mu, site_operator(l, 0, pauli::Z())),
                 std::invalid_argument);
}

TEST(defects, fit_exact_power_laws) {
    DefectSeries a{"synthetic", "a", {}};
    DefectSeries b{"synthetic", "b", {}};
    for (int n : {4, 6, 8, 10, 12}) {
        a.add(n, n, 7.0 / n);
        b.add(n, n, 3.0 / (n * n));
    }
    FitResult fa = fit_exponent(a);
    ASSERT_NEAR(fa.slope, -1.0, 1e-12);
    ASSERT_LE(fa.stderr_slope, 0.01);
    ASSERT_NEAR(fa.intercept, std::log(7.0), 1e-12);
    ASSERT_EQ(fa.used, 5);
    ASSERT_NEAR(fit_exponent(b).slope, -2.0, 1e-12);
    ASSERT_LE(fit_exponent(b).residual, 1e-12);
}

TEST(defects, fit_in_side_length) {
    DefectSeries s{"synthetic", "gap", {}};
    for (int L : {4, 6, 8}) s.add(L, L * L, 2.0 / (L * L));
    ASSERT_NEAR(fit_exponent_in_side(s).slope, -2.0, 1e-12);
    ASSERT_NEAR(fit_exponent(s).slope, -1.0, 1e-12);
}

TEST(defects, fit_excludes_nonpositive_and_aborts) {
    DefectSeries s{"synthetic", "x", {}};
    s.add(4, 4, 0.25);
    s.add(6, 6, 0.0);
    s.add(8, 8, 0.125);
    s.add(10, 10, 0.1);
    FitResult f = fit_exponent(s);
    ASSERT_EQ(f.used, 3);
    ASSERT_EQ(f.excluded, 1);
    ASSERT_FALSE(f.notice.empty());
    DefectSeries zeros{"synthetic", "z", {}};
    for (int n : {4, 6, 8}) zeros.add(n, n, 0.0);
    ASSERT_THROW(fit_exponent(zeros), std::invalid_argument);
}
