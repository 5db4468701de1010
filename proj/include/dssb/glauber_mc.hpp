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

#ifndef DSSB_GLAUBER_MC_HPP
#define DSSB_GLAUBER_MC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dssb/lattice.hpp"

namespace dssb {

/// SplitMix64 stream. Streams for parallel trials are derived from
/// (seed, index) pairs, so results do not depend on scheduling.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    static SplitMix64 derived(uint64_t seed, uint64_t index);
    uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    uint64_t below(uint64_t n);

   private:
    uint64_t state_;
};

/// Ising configuration on a periodic L^d torus with cached energy and
/// magnetization. Spin +1 is "up".
class SpinConfig {
   public:
    SpinConfig(int d, int L, int initial = +1, double j = 1.0);

    int dim() const { return d_; }
    int side() const { return L_; }
    int num_sites() const { return static_cast<int>(spins_.size()); }
    int spin(int x) const { return spins_[x]; }
    /// Sum of the 2d neighbour spins (with multiplicity).
    int local_field(int x) const;
    void flip(int x);
    void set(int x, int s);

    double energy() const { return energy_; }
    long magnetization() const { return mag_; }
    double magnetization_density() const { return static_cast<double>(mag_) / num_sites(); }
    double recompute_energy() const;
    long recompute_magnetization() const;
    /// Configuration index in the exact-diagonalization basis (site 0 most significant, up = bit 0).
    uint64_t basis_index() const;

   private:
    int d_, L_;
    double j_;
    std::vector<int8_t> spins_;
    std::vector<int> nbr_;  // 2d entries per site
    double energy_ = 0.0;
    long mag_ = 0;
};

/// Flip probabilities indexed by s_x * (neighbour sum), using the same rate
/// function as the quantum heat-bath generator.
class FlipTable {
   public:
    FlipTable(int d, double beta, double j = 1.0, const std::string& rate = "glauber");
    double probability(int s_times_field) const { return p_[s_times_field + 2 * d_]; }

   private:
    int d_;
    std::vector<double> p_;
};

/// One random-sequential site update. Returns true if the spin flipped.
bool heat_bath_step(SpinConfig& config, const FlipTable& table, SplitMix64& rng);
bool heat_bath_step(SpinConfig& config, double beta, double j, SplitMix64& rng);
/// N single-site updates.
void sweep(SpinConfig& config, const FlipTable& table, SplitMix64& rng);
/// Continuous-time dynamics for duration t (in sweeps): each site carries a
/// rate-1 clock and flips with the table probability when it rings.
void run_continuous(SpinConfig& config, const FlipTable& table, SplitMix64& rng, double t);

struct SurvivalStats {
    int d = 2;
    int L = 0;
    double beta = 0.0;
    double delta_m = 0.0;
    long cap = 0;
    uint64_t seed = 0;
    std::vector<long> sweeps;  // cap for censored trials
    std::vector<bool> censored;
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    int num_censored = 0;
    /// The median falls on a censored trial, so it is only a lower bound.
    bool median_censored = false;
};

/// Start all-up and count sweeps until the magnetization density drops below
/// 1 - delta_m; trials reaching `cap` sweeps are censored.
SurvivalStats mc_survival_time(int d, int L, double beta, double delta_m, int trials, uint64_t seed,
                               long cap = 1000000, int threads = 1, double j = 1.0);

}  // namespace dssb

#endif
