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

#ifndef DSSB_STATES_HPP
#define DSSB_STATES_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dssb/algebra.hpp"
#include "dssb/errors.hpp"

namespace dssb {

/// Linear functional A -> tr(D A) on the N-spin algebra. D is either a density
/// matrix or a general (dressed) operator; both are stored on the full lattice,
/// diagonal when possible.
class StateFunctional {
   public:
    StateFunctional() = default;
    /// Validates self-adjointness, unit trace and positivity (N <= 10 for dense).
    static StateFunctional from_density(GlobalOperator rho, bool validate = true);
    static StateFunctional from_functional(GlobalOperator d, std::string kind);

    cplx evaluate(const GlobalOperator& a) const;
    /// w(A B).
    cplx evaluate_product(const GlobalOperator& a, const GlobalOperator& b) const;
    cplx operator()(const GlobalOperator& a) const { return evaluate(a); }

    int num_sites() const { return d_.num_sites(); }
    bool is_density() const { return density_; }
    const std::string& kind() const { return kind_; }
    const GlobalOperator& matrix() const { return d_; }
    /// Largest negative eigenvalue magnitude of the self-adjoint part (0 if none).
    double negativity() const;

   private:
    Mat reduced(const std::vector<int>& sites) const;

    GlobalOperator d_;
    bool density_ = false;
    std::string kind_;
    struct Cache {
        std::mutex mu;
        std::map<std::vector<int>, Mat> dense;
        std::map<std::vector<int>, Vec> diag;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// exp(-beta H) / Z; beta = inf gives the normalized ground-space projector.
StateFunctional gibbs(const GlobalOperator& h, double beta);
StateFunctional maximally_mixed(int num_sites);
/// Product state with every spin up (bit 0) or down.
StateFunctional polarized_state(int num_sites, bool up);

/// mu = sqrt(w(O^2)) / (o N).
double fluctuation_ratio(const StateFunctional& omega, const GlobalOperator& o, double o_bound);

/// w+- (A) = w(O~+- A O~+-) with O~+- = (1 +- O / sqrt(w(O^2))) / sqrt(2).
std::pair<StateFunctional, StateFunctional> tilted_pair(const StateFunctional& omega, const GlobalOperator& o);

/// Order parameters O1, O2 and charge C with [C, O1] = i O2, [C, O2] = -i O1.
struct OrderParameterPair {
    GlobalOperator o1;
    GlobalOperator o2;
    GlobalOperator c;
    double o = 0.5;
    SiteTemplate t1;
    SiteTemplate t2;
    SiteTemplate tc;
};
/// (S^x, S^y, S^z) summed over the lattice.
OrderParameterPair spin_pair(const Lattice& lattice);
/// Max entry of [C,O1] - i O2 and [C,O2] + i O1.
double commutation_violation(const OrderParameterPair& pair);
/// O1 + i O2 (sign = +1) or O1 - i O2 (sign = -1), after checking the relations.
GlobalOperator raising_operator(const OrderParameterPair& pair, int sign = +1);

/// Scaled powers R(k) = (O+)^k for k >= 0, (O-)^{|k|} for k < 0, and the
/// weights Z(k) = w(R(k)^dag R(k))^{1/2} in the same scale.
struct KTFamily {
    StateFunctional base;
    int max_power = 0;
    std::vector<GlobalOperator> powers;  // index k + max_power
    std::vector<double> z;

    const GlobalOperator& power(int k) const { return powers.at(k + max_power); }
    double weight(int k) const { return z.at(k + max_power); }
};
KTFamily kt_family(const StateFunctional& omega, const GlobalOperator& o_plus, int max_power);
/// chi^(m,m')(A) = w((O-)^{m'} A (O+)^m) / (Z(m) Z(m')).
StateFunctional kt_functional(const KTFamily& family, int m, int mp);
StateFunctional kt_functional(const StateFunctional& omega, const GlobalOperator& o_plus, int m, int mp);
/// (2M+1)^{-1} sum_{k,k'} chi^(k,k').
StateFunctional kt_state(const KTFamily& family, int m_max);
StateFunctional kt_state(const StateFunctional& omega, const GlobalOperator& o_plus, int m_max);

/// U = prod_x exp(i (2 pi / L) (sum_j x_j) C_x) for a single-site charge template.
GlobalOperator goldstone_twist(const Lattice& lattice, const SiteTemplate& c_site);
/// sigma(A) = w(U^dag A U).
StateFunctional twisted_state(const StateFunctional& omega, const GlobalOperator& u);
/// w_theta(A) = w(exp(i theta C) A exp(-i theta C)).
StateFunctional charge_rotated(const StateFunctional& omega, const GlobalOperator& c, double theta);

/// Site-resolved (Re w(O1_x), Re w(O2_x)) along the first lattice axis.
std::vector<std::array<double, 2>> order_parameter_image(const StateFunctional& omega, const Lattice& lattice,
                                                         const OrderParameterPair& pair);
/// Net number of turns of the image around the origin (closed loop); nullopt
/// if some vector is too short to carry an angle.
std::optional<int> winding_number(const std::vector<std::array<double, 2>>& image, double min_radius = 1e-9);
/// Largest distance of an image vector from the image mean.
double image_spread(const std::vector<std::array<double, 2>>& image);

}  // namespace dssb

#endif
