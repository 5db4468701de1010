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

#ifndef DSSB_CERTIFY_HPP
#define DSSB_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dssb/liouvillian.hpp"
#include "dssb/states.hpp"

namespace dssb {

/// Probe observables for the certifiers. A basis probe set is used with all
/// ordered pairs; otherwise only the listed pairs are used.
struct ProbeSet {
    std::string description;
    bool is_basis = false;
    std::vector<GlobalOperator> basis;
    std::vector<std::pair<GlobalOperator, GlobalOperator>> pairs;

    /// Every operator that appears in the set.
    std::vector<GlobalOperator> operators() const;
};

ProbeSet pauli_probes(const Lattice& lattice);
/// `count` pairs of Haar-random self-adjoint operators on 1 or 2 adjacent sites.
ProbeSet random_local_probes(const Lattice& lattice, int count, uint64_t seed);
/// Full Pauli basis for N <= 5, otherwise 200 random local pairs.
ProbeSet default_probes(const Lattice& lattice, uint64_t seed = 0);

/// Haar-random self-adjoint operator with spectrum in [-1, 1] on `sites`.
GlobalOperator random_hermitian(int num_sites, const std::vector<int>& sites, uint64_t seed);

/// max |w(A L[B]) - w(L[A] B)| / (||A|| ||B||) over probe pairs.
double detailed_balance_defect(const Liouvillian& l, const StateFunctional& omega, const ProbeSet& probes);
/// max ||L[[C,A]] - [C,L[A]]|| / ||A|| over probe operators.
double symmetry_defect(const Liouvillian& l, const GlobalOperator& c, const ProbeSet& probes);
/// max |w(L[A])| / ||A|| over probe operators.
double stationarity_defect(const Liouvillian& l, const StateFunctional& omega, const ProbeSet& probes);

/// Rate matrix Q of the classical chain induced on diagonal observables:
/// L[f]_i = sum_j Q_ij f_j. Requires a diagonal-preserving generator.
Eigen::MatrixXd classical_generator(const Liouvillian& l);

}  // namespace dssb

#endif
