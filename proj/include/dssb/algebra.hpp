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

#ifndef DSSB_ALGEBRA_HPP
#define DSSB_ALGEBRA_HPP

#include <functional>
#include <vector>

#include "dssb/kernels.hpp"
#include "dssb/lattice.hpp"

namespace dssb {

namespace pauli {
Mat I();
Mat X();
Mat Y();
Mat Z();
Mat plus();   // [[0,1],[0,0]], raises spin down to spin up
Mat minus();  // plus() adjoint
/// Single-letter Pauli by name (I, X, Y, Z).
Mat by_name(char c);
}  // namespace pauli

/// A matrix on the tensor factors listed in `support` (first entry is the most
/// significant factor). `o` is a bound on the per-site operator norm used when
/// the operator is a template of an extensive observable.
struct LocalOperator {
    std::vector<int> support;
    Mat matrix;
    double o = 0.5;
};

/// Operator on the 2^N dimensional spin space, stored as its restriction to a
/// support region (identity elsewhere). Diagonal operators keep only their
/// diagonal. The support is an over-approximation of where the operator acts
/// nontrivially.
class GlobalOperator {
   public:
    GlobalOperator() = default;

    static GlobalOperator identity(int num_sites, cplx scale = 1.0);
    static GlobalOperator zero(int num_sites);
    /// Matrix on `sites` in the given factor order; reordered to ascending sites.
    static GlobalOperator local(int num_sites, std::vector<int> sites, const Mat& m);
    static GlobalOperator diagonal(int num_sites, std::vector<int> sites, Vec v);
    static GlobalOperator full(int num_sites, Mat m);
    static GlobalOperator full_diagonal(int num_sites, Vec v);

    int num_sites() const { return n_; }
    const std::vector<int>& support() const { return support_; }
    Region support_region() const { return Region(n_, support_); }
    bool is_diagonal() const { return diag_; }
    bool is_full() const { return static_cast<int>(support_.size()) == n_; }
    int support_size() const { return static_cast<int>(support_.size()); }
    Eigen::Index local_dim() const { return Eigen::Index(1) << support_.size(); }
    Eigen::Index dim() const { return Eigen::Index(1) << n_; }

    /// Stored matrix on the support (requires !is_diagonal()).
    const Mat& matrix() const;
    /// Stored diagonal on the support (requires is_diagonal()).
    const Vec& diag() const;

    Mat local_dense() const;
    Mat to_dense() const;
    /// Matrix on a superset of the support.
    Mat on_sites(const std::vector<int>& region) const;
    Vec diag_on_sites(const std::vector<int>& region) const;
    GlobalOperator expanded(const std::vector<int>& region) const;
    /// Drops tensor factors on which the operator acts as a multiple of identity.
    GlobalOperator trimmed(double tol = 1e-13) const;
    /// Dense copy of a diagonal operator (no-op otherwise).
    GlobalOperator densified() const;

    GlobalOperator adjoint() const;
    cplx trace() const;
    bool acts_trivially_outside(const Region& region, double tol = 1e-12) const;

    GlobalOperator& operator+=(const GlobalOperator& other);
    GlobalOperator& operator-=(const GlobalOperator& other);
    GlobalOperator& operator*=(cplx s);

    friend GlobalOperator operator+(GlobalOperator a, const GlobalOperator& b) { return a += b; }
    friend GlobalOperator operator-(GlobalOperator a, const GlobalOperator& b) { return a -= b; }
    friend GlobalOperator operator*(GlobalOperator a, cplx s) { return a *= s; }
    friend GlobalOperator operator*(cplx s, GlobalOperator a) { return a *= s; }
    friend GlobalOperator operator*(const GlobalOperator& a, const GlobalOperator& b);

   private:
    int n_ = 0;
    std::vector<int> support_;
    bool diag_ = false;
    Mat m_;
    Vec d_;

    void check_compatible(const GlobalOperator& other) const;
    GlobalOperator& accumulate(const GlobalOperator& other, cplx sign);
};

GlobalOperator embed(const LocalOperator& op, const Lattice& lattice);
GlobalOperator site_operator(const Lattice& lattice, int x, const Mat& m);

using SiteTemplate = std::function<LocalOperator(int)>;
/// Sum over the region of the template placed at each site.
GlobalOperator extensive_observable(const Lattice& lattice, const SiteTemplate& tmpl,
                                    const Region& region);
/// Template placing `m` (times `weight(x)`) on the single site x.
SiteTemplate single_site_template(const Mat& m, std::function<double(int)> weight = {});

GlobalOperator commutator(const GlobalOperator& a, const GlobalOperator& b);
GlobalOperator anticommutator(const GlobalOperator& a, const GlobalOperator& b);
GlobalOperator adjoint(const GlobalOperator& a);
/// Largest singular value.
double op_norm(const GlobalOperator& a);
double op_norm(const Mat& a);
/// Hilbert-Schmidt inner product tr(a^dagger b) on the full space.
cplx hs_inner(const GlobalOperator& a, const GlobalOperator& b);
/// Max |entry| of the difference, over the union of supports.
double max_abs_diff(const GlobalOperator& a, const GlobalOperator& b);

/// Normalized partial trace onto `keep` (the conditional expectation that
/// replaces every other factor by its normalized trace).
GlobalOperator conditional_expectation(const GlobalOperator& a, const Region& keep);

/// Tensor product of single-site matrices (one per site, site 0 first).
GlobalOperator product_operator(const std::vector<Mat>& site_mats);

/// All 4^k Pauli strings on the given sites (identity included), as operators.
std::vector<GlobalOperator> pauli_basis(int num_sites, const std::vector<int>& sites);

}  // namespace dssb

#endif
