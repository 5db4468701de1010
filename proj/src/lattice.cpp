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

#include "dssb/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dssb {

Region::Region(int num_sites, std::vector<int> sites) : n_(num_sites), sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
    for (int x : sites_) {
        if (x < 0 || x >= n_) {
            throw std::invalid_argument("Region: site " + std::to_string(x) + " out of range");
        }
    }
}

Region::Region(int num_sites, std::initializer_list<int> sites)
    : Region(num_sites, std::vector<int>(sites)) {}

bool Region::contains(int x) const { return std::binary_search(sites_.begin(), sites_.end(), x); }

bool Region::intersects(const Region& other) const {
    auto a = sites_.begin();
    auto b = other.sites_.begin();
    while (a != sites_.end() && b != other.sites_.end()) {
        if (*a == *b) return true;
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

bool Region::subset_of(const Region& other) const {
    return std::includes(other.sites_.begin(), other.sites_.end(), sites_.begin(), sites_.end());
}

Region Region::united(const Region& other) const {
    std::vector<int> out;
    std::set_union(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(),
                   std::back_inserter(out));
    return Region(std::max(n_, other.n_), std::move(out));
}

Region Region::intersected(const Region& other) const {
    std::vector<int> out;
    std::set_intersection(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(),
                          std::back_inserter(out));
    return Region(std::max(n_, other.n_), std::move(out));
}

Region Region::complement() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return Region(n_, std::move(out));
}

std::string Region::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < sites_.size(); ++i) {
        if (i) os << ',';
        os << sites_[i];
    }
    os << '}';
    return os.str();
}

Lattice::Lattice(int d, int L) : d_(d), L_(L), n_(1) {
    if (d < 1) throw std::invalid_argument("Lattice: dimension must be >= 1");
    if (L < 2) throw std::invalid_argument("Lattice: side length must be >= 2");
    for (int j = 0; j < d; ++j) {
        if (n_ > (1 << 24) / L) throw std::invalid_argument("Lattice: too many sites");
        n_ *= L;
    }
}

void Lattice::check_site(int x) const {
    if (x < 0 || x >= n_) throw std::invalid_argument("Lattice: invalid site " + std::to_string(x));
}

std::vector<int> Lattice::coords(int x) const {
    check_site(x);
    std::vector<int> c(d_);
    for (int j = d_ - 1; j >= 0; --j) {
        c[j] = x % L_;
        x /= L_;
    }
    return c;
}

int Lattice::site(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != d_) throw std::invalid_argument("Lattice: coordinate rank");
    int x = 0;
    for (int j = 0; j < d_; ++j) x = x * L_ + ((c[j] % L_) + L_) % L_;
    return x;
}

int Lattice::distance(int x, int y) const {
    auto a = coords(x);
    auto b = coords(y);
    int dist = 0;
    for (int j = 0; j < d_; ++j) {
        int delta = std::abs(a[j] - b[j]);
        dist += std::min(delta, L_ - delta);
    }
    return dist;
}

Region Lattice::ball(int x, int r) const {
    check_site(x);
    if (r < 0) throw std::invalid_argument("Lattice::ball: negative radius");
    std::vector<int> out;
    for (int y = 0; y < n_; ++y) {
        if (distance(x, y) <= r) out.push_back(y);
    }
    return Region(n_, std::move(out));
}

Region Lattice::enlarge(const Region& region, int r) const {
    if (r < 0) throw std::invalid_argument("Lattice::enlarge: negative radius");
    std::vector<int> out;
    for (int y = 0; y < n_; ++y) {
        for (int x : region.sites()) {
            if (distance(x, y) <= r) {
                out.push_back(y);
                break;
            }
        }
    }
    return Region(n_, std::move(out));
}

Region Lattice::all() const {
    std::vector<int> out(n_);
    for (int x = 0; x < n_; ++x) out[x] = x;
    return Region(n_, std::move(out));
}

std::vector<int> Lattice::neighbors(int x) const {
    auto c = coords(x);
    std::vector<int> out;
    out.reserve(2 * d_);
    for (int j = 0; j < d_; ++j) {
        for (int s : {-1, 1}) {
            auto e = c;
            e[j] += s;
            out.push_back(site(e));
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Lattice::bonds() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x) {
        auto c = coords(x);
        for (int j = 0; j < d_; ++j) {
            auto e = c;
            e[j] += 1;
            out.emplace_back(x, site(e));
        }
    }
    return out;
}

}  // namespace dssb
