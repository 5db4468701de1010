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

#include "dssb/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dssb;

namespace {

const cplx I1(0, 1);

Mat random_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
    }
    return m;
}

GlobalOperator total(const Lattice& l, const Mat& p) {
    return extensive_observable(l, single_site_template(0.5 * p), l.all());
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

}  // namespace

TEST(algebra, paulis) {
    ASSERT_EQ(pauli::X() * pauli::X(), pauli::I());
    ASSERT_LE((pauli::X() * pauli::Y() - I1 * pauli::Z()).norm(), 1e-15);
    ASSERT_EQ(pauli::plus().adjoint(), pauli::minus());
    Mat up = Mat::Zero(2, 1);
    up(0) = 1;
    ASSERT_EQ((pauli::Z() * up)(0), cplx(1));
    ASSERT_EQ((pauli::plus() * pauli::minus() * up)(0), cplx(1));
    ASSERT_EQ(pauli::by_name('Y'), pauli::Y());
}

TEST(algebra, embed_site_zero_major) {
    Lattice l(1, 2);
    GlobalOperator a = embed({{0}, 0.5 * pauli::Z()}, l);
    Vec expected(4);
    expected << 0.5, 0.5, -0.5, -0.5;
    ASSERT_LE((a.to_dense().diagonal() - expected).norm(), 1e-15);

    GlobalOperator id = embed({{1}, pauli::I()}, l);
    ASSERT_LE((id.to_dense() - Mat::Identity(4, 4)).norm(), 1e-15);
}

TEST(algebra, embed_disjoint_product) {
    Lattice l(1, 3);
    GlobalOperator xz = site_operator(l, 0, pauli::X()) * site_operator(l, 1, pauli::Z());
    GlobalOperator direct = embed({{0, 1}, kron(pauli::X(), pauli::Z())}, l);
    ASSERT_LE(max_abs_diff(xz, direct), 1e-15);
    ASSERT_LE((xz.to_dense() - kron(kron(pauli::X(), pauli::Z()), pauli::I())).norm(), 1e-15);

    // Factor order is canonicalized to ascending sites.
    GlobalOperator swapped = GlobalOperator::local(3, {1, 0}, kron(pauli::Z(), pauli::X()));
    ASSERT_LE(max_abs_diff(swapped, direct), 1e-15);
}

TEST(algebra, extensive_observable) {
    Lattice l(1, 2);
    Vec expected(4);
    expected << 1, 0, 0, -1;
    ASSERT_LE((total(l, pauli::Z()).to_dense().diagonal() - expected).norm(), 1e-15);

    GlobalOperator stag = extensive_observable(
        l, single_site_template(0.5 * pauli::Z(), [](int x) { return x % 2 ? -1.0 : 1.0; }), l.all());
    expected << 0, 1, -1, 0;
    ASSERT_LE((stag.to_dense().diagonal() - expected).norm(), 1e-15);

    for (int n = 1; n <= 6; ++n) {
        Lattice ln(1, std::max(n, 2));
        GlobalOperator sz = total(ln, pauli::Z());
        ASSERT_NEAR(sz.to_dense()(0, 0).real(), ln.num_sites() / 2.0, 1e-14);
    }
}

TEST(algebra, extensive_observable_additive) {
    Lattice l(2, 3);
    auto t = single_site_template(pauli::X(), [](int x) { return 1.0 + x; });
    Region a(9, {0, 2, 4});
    Region b = a.complement();
    GlobalOperator sum = extensive_observable(l, t, a) + extensive_observable(l, t, b);
    ASSERT_LE(max_abs_diff(sum, extensive_observable(l, t, l.all())), 1e-13);
}

TEST(algebra, su2_algebra) {
    for (int n = 2; n <= 4; ++n) {
        Lattice l(1, n);
        GlobalOperator sx = total(l, pauli::X());
        GlobalOperator sy = total(l, pauli::Y());
        GlobalOperator sz = total(l, pauli::Z());
        ASSERT_LE(max_abs_diff(commutator(sx, sy), I1 * sz), 1e-13);
        ASSERT_LE(max_abs_diff(commutator(sy, sz), I1 * sx), 1e-13);
    }
    // A single site as a one-site region of a larger chain.
    Lattice l(1, 3);
    GlobalOperator x = site_operator(l, 1, 0.5 * pauli::X());
    GlobalOperator y = site_operator(l, 1, 0.5 * pauli::Y());
    ASSERT_LE(max_abs_diff(commutator(x, y), I1 * site_operator(l, 1, 0.5 * pauli::Z())), 1e-15);
}

TEST(algebra, norms) {
    Lattice l(1, 6);
    ASSERT_NEAR(op_norm(site_operator(l, 3, pauli::Z())), 1.0, 1e-14);
    for (int n = 2; n <= 8; ++n) {
        Lattice ln(1, n);
        ASSERT_NEAR(op_norm(total(ln, pauli::Z())), n / 2.0, 1e-12);
    }
    ASSERT_NEAR(op_norm(pauli::plus()), 1.0, 1e-14);
    ASSERT_NEAR(op_norm(GlobalOperator::identity(4, 3.0)), 3.0, 1e-14);
}

TEST(algebra, norm_paths_agree_with_svd) {
    std::mt19937_64 rng(5);
    for (int dim : {4, 32, 300}) {
        Mat m = random_matrix(dim, rng);
        Eigen::BDCSVD<Mat> svd(m);
        ASSERT_NEAR(op_norm(m), svd.singularValues()(0), 1e-9 * svd.singularValues()(0));
        Mat h = m + m.adjoint();
        Eigen::SelfAdjointEigenSolver<Mat> es(h);
        ASSERT_NEAR(op_norm(h), es.eigenvalues().cwiseAbs().maxCoeff(), 1e-9 * op_norm(h));
    }
}

TEST(algebra, hs_inner_and_adjoint) {
    Lattice l(1, 3);
    GlobalOperator x0 = site_operator(l, 0, pauli::X());
    GlobalOperator z2 = site_operator(l, 2, pauli::Z());
    ASSERT_NEAR(std::abs(hs_inner(x0, x0) - 8.0), 0, 1e-14);
    ASSERT_NEAR(std::abs(hs_inner(x0, z2)), 0, 1e-14);
    GlobalOperator a = site_operator(l, 1, pauli::plus());
    ASSERT_LE(max_abs_diff(adjoint(a), site_operator(l, 1, pauli::minus())), 0);
    ASSERT_NEAR(std::abs(hs_inner(a, a) - 4.0), 0, 1e-14);
}

TEST(algebra, diagonal_and_dense_mix) {
    Lattice l(1, 3);
    GlobalOperator z = site_operator(l, 0, pauli::Z());
    ASSERT_TRUE(z.is_diagonal());
    GlobalOperator x = site_operator(l, 2, pauli::X());
    ASSERT_FALSE(x.is_diagonal());
    GlobalOperator s = z + x;
    ASSERT_LE((s.to_dense() - z.to_dense() - x.to_dense()).norm(), 1e-15);
    GlobalOperator p = z * x;
    ASSERT_LE((p.to_dense() - z.to_dense() * x.to_dense()).norm(), 1e-15);
    ASSERT_LE((z.densified().to_dense() - z.to_dense()).norm(), 0);
}

TEST(algebra, trimmed_and_support) {
    Lattice l(1, 4);
    GlobalOperator a = site_operator(l, 1, pauli::X()).expanded({0, 1, 3});
    ASSERT_EQ(a.support(), (std::vector<int>{0, 1, 3}));
    ASSERT_EQ(a.trimmed().support(), (std::vector<int>{1}));
    ASSERT_TRUE(a.acts_trivially_outside(Region(4, {1})));
    ASSERT_FALSE(a.acts_trivially_outside(Region(4, {0})));
}

TEST(algebra, conditional_expectation) {
    Lattice l(1, 3);
    GlobalOperator a = site_operator(l, 0, pauli::X()) * site_operator(l, 1, pauli::Z()) +
                       site_operator(l, 0, pauli::Y()) * 2.0;
    GlobalOperator e = conditional_expectation(a, Region(3, {0}));
    ASSERT_LE(max_abs_diff(e, site_operator(l, 0, 2.0 * pauli::Y())), 1e-15);
    ASSERT_LE(op_norm(e), op_norm(a) + 1e-12);
    GlobalOperator id = conditional_expectation(site_operator(l, 2, pauli::Z()) + GlobalOperator::identity(3), Region(3, {0}));
    ASSERT_LE(max_abs_diff(id, GlobalOperator::identity(3)), 1e-15);
}

TEST(algebra, pauli_basis_is_orthogonal) {
    auto basis = pauli_basis(3, {0, 2});
    ASSERT_EQ(basis.size(), 16u);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            ASSERT_NEAR(std::abs(hs_inner(basis[i], basis[j])), i == j ? 8.0 : 0.0, 1e-13);
        }
    }
}

TEST(algebra, product_operator) {
    GlobalOperator p = product_operator({pauli::Z(), pauli::X(), pauli::I()});
    ASSERT_LE((p.to_dense() - kron(kron(pauli::Z(), pauli::X()), pauli::I())).norm(), 1e-15);
    ASSERT_TRUE(product_operator({pauli::Z(), pauli::Z()}).is_diagonal());
}

TEST(algebra, disjoint_supports_commute) {
    std::mt19937_64 rng(17);
    Lattice l(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        GlobalOperator a = GlobalOperator::local(6, {0, 2}, random_matrix(4, rng));
        GlobalOperator b = GlobalOperator::local(6, {1, 4, 5}, random_matrix(8, rng));
        ASSERT_LE(op_norm(commutator(a, b)), 1e-12);
    }
}

TEST(algebra, submultiplicative_and_commutator_locality) {
    std::mt19937_64 rng(23);
    Lattice l(1, 6);
    GlobalOperator sz = total(l, pauli::Z());
    for (int trial = 0; trial < 20; ++trial) {
        GlobalOperator a = GlobalOperator::local(6, {1, 2}, random_matrix(4, rng));
        GlobalOperator b = GlobalOperator::local(6, {2, 3}, random_matrix(4, rng));
        ASSERT_LE(op_norm(a * b), op_norm(a) * op_norm(b) * (1 + 1e-12));
        ASSERT_LE(op_norm(commutator(a, sz)), 2 * op_norm(a) * a.support_size() * 0.5 * (1 + 1e-12));
    }
}

TEST(algebra, invalid_arguments) {
    ASSERT_THROW(GlobalOperator::local(3, {0, 3}, Mat::Identity(4, 4)), std::invalid_argument);
    ASSERT_THROW(GlobalOperator::local(3, {0, 1}, Mat::Identity(2, 2)), std::invalid_argument);
    ASSERT_THROW(GlobalOperator::identity(3) + GlobalOperator::identity(4), std::invalid_argument);
}
