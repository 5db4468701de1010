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

#ifndef DSSB_LATTICE_HPP
#define DSSB_LATTICE_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dssb {

/// Sorted, duplicate-free set of site indices of a lattice with `num_sites` sites.
class Region {
   public:
    Region() = default;
    Region(int num_sites, std::vector<int> sites);
    Region(int num_sites, std::initializer_list<int> sites);

    int num_sites() const { return n_; }
    const std::vector<int>& sites() const { return sites_; }
    int size() const { return static_cast<int>(sites_.size()); }
    bool empty() const { return sites_.empty(); }
    bool contains(int x) const;
    bool intersects(const Region& other) const;
    bool subset_of(const Region& other) const;

    Region united(const Region& other) const;
    Region intersected(const Region& other) const;
    Region complement() const;

    bool operator==(const Region& other) const = default;
    std::string str() const;

   private:
    int n_ = 0;
    std::vector<int> sites_;
};

/// Periodic hypercubic lattice of side L in d dimensions. Sites are numbered
/// row-major: the last coordinate varies fastest.
class Lattice {
   public:
    Lattice(int d, int L);

    int dim() const { return d_; }
    int side() const { return L_; }
    int num_sites() const { return n_; }

    std::vector<int> coords(int x) const;
    int site(const std::vector<int>& c) const;  // coordinates taken mod L

    /// L1 distance with per-axis wraparound.
    int distance(int x, int y) const;
    Region ball(int x, int r) const;
    Region enlarge(const Region& region, int r) const;
    Region all() const;
    Region region(std::vector<int> sites) const { return Region(n_, std::move(sites)); }

    /// The 2d neighbours of x, one per axis direction (repeats when L = 2).
    std::vector<int> neighbors(int x) const;
    /// Bonds (x, x + e_j) for every site x and axis j.
    std::vector<std::pair<int, int>> bonds() const;

    bool operator==(const Lattice& other) const = default;

   private:
    void check_site(int x) const;
    int d_;
    int L_;
    int n_;
};

}  // namespace dssb

#endif
