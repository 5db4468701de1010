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

#include "dssb/glauber_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dssb/liouvillian.hpp"

namespace dssb {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::derived(uint64_t seed, uint64_t index) {
    SplitMix64 a(seed);
    const uint64_t s = a.next();
    SplitMix64 b(s ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
    return SplitMix64(b.next());
}

uint64_t SplitMix64::below(uint64_t n) {
    // Lemire's multiply-shift with rejection
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < n) {
        const uint64_t t = (0 - n) % n;
        while (low < t) {
            x = next();
            m = static_cast<__uint128_t>(x) * n;
            low = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

SpinConfig::SpinConfig(int d, int L, int initial, double j) : d_(d), L_(L), j_(j) {
    if (initial != 1 && initial != -1) throw std::invalid_argument("SpinConfig: initial spin must be +-1");
    Lattice lattice(d, L);
    const int n = lattice.num_sites();
    spins_.assign(n, static_cast<int8_t>(initial));
    nbr_.reserve(static_cast<size_t>(n) * 2 * d);
    for (int x = 0; x < n; ++x) {
        for (int y : lattice.neighbors(x)) nbr_.push_back(y);
    }
    energy_ = recompute_energy();
    mag_ = recompute_magnetization();
}

int SpinConfig::local_field(int x) const {
    int h = 0;
    const int* nb = nbr_.data() + static_cast<size_t>(x) * 2 * d_;
    for (int k = 0; k < 2 * d_; ++k) h += spins_[nb[k]];
    return h;
}

void SpinConfig::flip(int x) {
    const int s = spins_[x];
    energy_ += 2.0 * j_ * s * local_field(x);
    mag_ -= 2 * s;
    spins_[x] = static_cast<int8_t>(-s);
}

void SpinConfig::set(int x, int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("SpinConfig::set: spin must be +-1");
    if (spins_[x] != s) flip(x);
}

double SpinConfig::recompute_energy() const {
    // each bond (x, x + e_j) once: the "+" neighbour of axis j sits at index 2j + 1
    double e = 0.0;
    for (int x = 0; x < num_sites(); ++x) {
        const int* nb = nbr_.data() + static_cast<size_t>(x) * 2 * d_;
        for (int k = 0; k < d_; ++k) e -= j_ * spins_[x] * spins_[nb[2 * k + 1]];
    }
    return e;
}

long SpinConfig::recompute_magnetization() const {
    long m = 0;
    for (int8_t s : spins_) m += s;
    return m;
}

uint64_t SpinConfig::basis_index() const {
    if (num_sites() > 63) throw std::invalid_argument("SpinConfig::basis_index: too many sites");
    uint64_t b = 0;
    for (int x = 0; x < num_sites(); ++x) b = (b << 1) | (spins_[x] < 0 ? 1u : 0u);
    return b;
}

FlipTable::FlipTable(int d, double beta, double j, const std::string& rate) : d_(d) {
    if (!(beta >= 0)) throw std::invalid_argument("FlipTable: beta must be >= 0");
    const RateFunction gamma = rate_by_name(rate, beta);
    p_.resize(4 * d + 1);
    for (int h = -2 * d; h <= 2 * d; ++h) p_[h + 2 * d] = gamma(-2.0 * j * h);
}

bool heat_bath_step(SpinConfig& config, const FlipTable& table, SplitMix64& rng) {
    const int x = static_cast<int>(rng.below(config.num_sites()));
    const double p = table.probability(config.spin(x) * config.local_field(x));
    if (rng.uniform() < p) {
        config.flip(x);
        return true;
    }
    return false;
}

bool heat_bath_step(SpinConfig& config, double beta, double j, SplitMix64& rng) {
    return heat_bath_step(config, FlipTable(config.dim(), beta, j), rng);
}

void sweep(SpinConfig& config, const FlipTable& table, SplitMix64& rng) {
    for (int i = 0; i < config.num_sites(); ++i) heat_bath_step(config, table, rng);
}

void run_continuous(SpinConfig& config, const FlipTable& table, SplitMix64& rng, double t) {
    const double total = config.num_sites();
    double clock = 0.0;
    while (true) {
        clock += -std::log1p(-rng.uniform()) / total;
        if (clock > t) break;
        heat_bath_step(config, table, rng);
    }
}

namespace {

double quantile(const std::vector<long>& sorted, double q) {
    const double pos = q * (sorted.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - lo) * (sorted[hi] - sorted[lo]);
}

}  // namespace

SurvivalStats mc_survival_time(int d, int L, double beta, double delta_m, int trials, uint64_t seed, long cap,
                               int threads, double j) {
    if (trials < 20) throw std::invalid_argument("mc_survival_time: need at least 20 trials");
    if (!(delta_m > 0)) throw std::invalid_argument("mc_survival_time: delta_m must be > 0");
    if (cap < 1) throw std::invalid_argument("mc_survival_time: cap must be >= 1");
    const FlipTable table(d, beta, j);
    SurvivalStats st;
    st.d = d;
    st.L = L;
    st.beta = beta;
    st.delta_m = delta_m;
    st.cap = cap;
    st.seed = seed;
    st.sweeps.assign(trials, 0);
    std::vector<char> cens(trials, 0);
    const double threshold = 1.0 - delta_m;
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= trials) break;
            SplitMix64 rng = SplitMix64::derived(seed, static_cast<uint64_t>(i));
            SpinConfig cfg(d, L, +1, j);
            long s = 0;
            while (cfg.magnetization_density() >= threshold && s < cap) {
                sweep(cfg, table, rng);
                ++s;
            }
            st.sweeps[i] = s;
            cens[i] = cfg.magnetization_density() >= threshold;
        }
    };
    const int nt = std::max(1, std::min(threads, trials));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    st.censored.assign(cens.begin(), cens.end());
    st.num_censored = static_cast<int>(std::count(cens.begin(), cens.end(), 1));
    std::vector<long> sorted = st.sweeps;
    std::sort(sorted.begin(), sorted.end());
    st.median = quantile(sorted, 0.5);
    st.q1 = quantile(sorted, 0.25);
    st.q3 = quantile(sorted, 0.75);
    // censored trials sit at the top of the sorted list with value `cap`
    st.median_censored = st.num_censored >= trials - trials / 2;
    return st;
}

}  // namespace dssb
