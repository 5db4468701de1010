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

#ifndef DSSB_GENERATORS_HPP
#define DSSB_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dssb/liouvillian.hpp"

namespace dssb {

/// Classical Ising energy -J sum_{bonds} z_x z_y as a diagonal operator.
GlobalOperator ising_hamiltonian(const Lattice& lattice, double j = 1.0);
/// -J sum_{bonds} S_x . S_y with S = sigma / 2 (ferromagnetic for J > 0).
GlobalOperator heisenberg_hamiltonian(const Lattice& lattice, double j = 1.0);

/// Energy increase of flipping site x in the ball configuration `config`
/// (bit i of the ball index belongs to ball_sites[i], most significant first;
/// bit value 0 is spin up).
double flip_energy(const Lattice& lattice, int x, const std::vector<int>& ball_sites, int config, double j);

/// Strictly local heat-bath generator of the classical Ising model: one jump per
/// site and neighbourhood configuration, rate gamma(-dE) for a flip raising the
/// energy by dE. beta may be +inf.
Liouvillian heat_bath_ising(const Lattice& lattice, double beta, double j = 1.0,
                            const std::string& rate = "glauber");

/// Davies generator: Bohr components of each (self-adjoint) coupling, weighted
/// by the KMS rate function. Stored as one full-lattice spectral term.
Liouvillian davies_generator(const Lattice& lattice, const GlobalOperator& h,
                             const std::vector<GlobalOperator>& couplings, double beta,
                             const std::string& rate = "glauber");
/// sigma^x, sigma^y, sigma^z on every site.
std::vector<GlobalOperator> pauli_couplings(const Lattice& lattice, const std::string& axes = "xyz");
/// Sites on which the materialized jumps of one coupling act nontrivially.
Region davies_jump_support(const Liouvillian& l, int coupling, double tol = 1e-10);

/// U(1)-covariant bond dissipator: per bond a jump sqrt(kappa) |S><T0|,
/// whose Schrodinger dual pumps singlets into the m = 0 triplet.
Liouvillian singlet_triplet_pump(const Lattice& lattice, double kappa = 1.0);

/// Random strictly local generator on nearest-neighbour pairs, for property tests.
Liouvillian random_local_lindbladian(const Lattice& lattice, uint64_t seed, int jumps_per_term = 2,
                                     bool with_hamiltonian = true);

/// Serializable description of a generator.
struct GeneratorSpec {
    std::string model = "heat_bath_ising";  // heat_bath_ising | davies_heisenberg | davies_ising | singlet_triplet_pump
    int d = 1;
    int L = 4;
    double beta = 1.0;
    double j = 1.0;
    std::string rate = "glauber";
    std::string couplings = "xyz";
    double kappa = 1.0;
    uint64_t seed = 0;
};

Liouvillian build_generator(const GeneratorSpec& spec);

}  // namespace dssb

#endif
