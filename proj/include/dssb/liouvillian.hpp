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

#ifndef DSSB_LIOUVILLIAN_HPP
#define DSSB_LIOUVILLIAN_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dssb/algebra.hpp"
#include "dssb/lattice.hpp"

namespace dssb {

/// Transition rate as a function of the energy released by a jump.
/// KMS condition: gamma(-w) = exp(-beta w) gamma(w).
struct RateFunction {
    std::string name;
    double beta = 0.0;
    std::function<double(double)> fn;
    double operator()(double released) const { return fn(released); }
};

/// 1 / (1 + exp(-beta w)); beta = inf gives 1, 1/2, 0 for w > 0, w = 0, w < 0.
RateFunction glauber_rate(double beta);
/// min(1, exp(beta w)).
RateFunction metropolis_rate(double beta);
RateFunction rate_by_name(const std::string& name, double beta);
/// Max violation of the KMS condition on a grid of frequencies up to |w| <= w_max.
double kms_violation(const RateFunction& gamma, double w_max = 8.0);

enum class Picture { Heisenberg, Schrodinger };

/// One local piece of the generator: i[H, A] + sum_i (L A L^dag - {L L^dag, A}/2)
/// with all matrices given on `support` (ascending sites).
struct LocalLindbladTerm {
    int center = 0;
    std::vector<int> support;
    std::optional<Mat> hamiltonian;
    std::vector<Mat> jumps;
};

/// Generator term built from the Bohr-frequency decomposition of coupling
/// operators in the eigenbasis of a Hamiltonian. Acts on the full lattice.
class SpectralTerm {
   public:
    SpectralTerm(const GlobalOperator& h, const std::vector<GlobalOperator>& couplings,
                 RateFunction gamma, double level_tol = 1e-8);

    Mat apply(const Mat& a, Picture picture) const;
    int num_levels() const { return static_cast<int>(levels_.size()); }
    /// Number of distinct (Bohr frequency, coupling) components with nonzero rate.
    int num_components() const;
    int num_sites() const { return n_; }
    const std::vector<GlobalOperator>& couplings() const { return couplings_; }
    const RateFunction& rate() const { return gamma_; }
    /// Jump operators sqrt(gamma(w)) G(w)^dag for one coupling, one per Bohr frequency.
    std::vector<Mat> materialize_jumps(int coupling) const;
    double strength_bound() const;

   private:
    struct Level {
        double energy;
        int offset;
        int size;
    };
    int level_of(double energy) const;
    void accumulate(const Mat& at, Mat& y, Picture picture) const;

    int n_;
    double tol_;
    RateFunction gamma_;
    std::vector<GlobalOperator> couplings_;
    Mat v_;
    std::vector<Level> levels_;
    std::vector<Mat> g_;              // couplings in the eigenbasis
    std::vector<std::vector<char>> nonzero_;  // per coupling, level-pair block nonzero flags
    Mat k_;                           // sum of L L^dag in the eigenbasis
};

/// Per-term bound sup ||L_x[A] - L~_x[A]|| / ||A|| <= 2||H - H~|| + sum_i 4||L_i|| ||L_i - L~_i||
/// for the conditional-expectation truncation onto ball(center, radius).
struct TruncationReport {
    int radius = 0;
    std::vector<double> term_errors;
    double remainder_strength = 0.0;
};

/// Sum of local Lindblad terms (plus optional spectral terms) in the Heisenberg
/// picture. Application never forms the superoperator; each term is applied on
/// the smallest region containing the operator and the term.
class Liouvillian {
   public:
    explicit Liouvillian(const Lattice& lattice);

    void add_term(LocalLindbladTerm term);
    void add_spectral(std::shared_ptr<const SpectralTerm> term);

    const Lattice& lattice() const { return lattice_; }
    int num_sites() const { return lattice_.num_sites(); }
    const std::vector<LocalLindbladTerm>& terms() const { return terms_; }
    const std::vector<std::shared_ptr<const SpectralTerm>>& spectral_terms() const { return spectral_; }
    size_t num_terms() const { return terms_.size() + spectral_.size(); }
    /// Largest distance from a term center to its support.
    int range() const { return range_; }
    /// Uniform bound b with ||L_x[A]|| <= b ||A||.
    double strength() const { return strength_; }
    std::vector<double> term_strengths() const;

    GlobalOperator apply(const GlobalOperator& a) const;
    /// Hilbert-Schmidt adjoint (Schrodinger picture).
    GlobalOperator apply_adjoint(const GlobalOperator& rho) const;

    /// Smallest site set containing `sites` and the support of every term that meets it.
    std::vector<int> closure(const std::vector<int>& sites) const;
    /// True when every term maps diagonal operators to diagonal operators.
    bool diagonal_preserving(Picture picture = Picture::Heisenberg) const;
    /// Application on a fixed region that is closed under the generator.
    Mat apply_on(const std::vector<int>& region, const Mat& x, Picture picture) const;
    Vec apply_diag_on(const std::vector<int>& region, const Vec& x, Picture picture) const;

    /// Terms whose support meets `region` (overlap definition).
    Liouvillian restricted(const Region& region) const;
    std::pair<Liouvillian, TruncationReport> truncated(int radius) const;
    /// Full d^2 x d^2 superoperator acting on column-stacked matrices. Only N <= 6.
    Mat superoperator(Picture picture = Picture::Heisenberg) const;

    std::string model = "custom";
    std::string rate_name;
    double beta = 0.0;
    double coupling_j = 0.0;

   private:
    struct SuperEntry {
        int s, sp, t, tp;
        cplx c;
    };
    struct Compiled {
        bool direct = false;
        std::vector<SuperEntry> heis;
        std::vector<SuperEntry> schr;
        bool diag_heis = false;
        bool diag_schr = false;
        Mat k;  // sum of L L^dag
    };
    Compiled compile(const LocalLindbladTerm& term) const;
    void apply_term(size_t i, const Layout& lay, const Mat& x, Mat& out, Picture picture) const;
    void apply_term_diag(size_t i, const Layout& lay, const Vec& x, Mat* dense_out, Vec* diag_out,
                         Picture picture) const;
    GlobalOperator apply_impl(const GlobalOperator& a, Picture picture) const;

    Lattice lattice_;
    std::vector<LocalLindbladTerm> terms_;
    std::vector<Compiled> compiled_;
    std::vector<std::shared_ptr<const SpectralTerm>> spectral_;
    int range_ = 0;
    double strength_ = 0.0;
    std::vector<double> term_strength_;
};

/// Restriction to the terms whose support intersects `region`.
Liouvillian restrict(const Liouvillian& l, const Region& region);
/// The region Ã = enlarge(A, r) reported alongside a restriction.
Region restricted_region(const Liouvillian& l, const Region& a);
GlobalOperator apply_heisenberg(const Liouvillian& l, const GlobalOperator& a);
std::pair<Liouvillian, TruncationReport> truncate(const Liouvillian& l, int radius);

}  // namespace dssb

#endif
