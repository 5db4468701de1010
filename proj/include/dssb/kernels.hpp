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

#ifndef DSSB_KERNELS_HPP
#define DSSB_KERNELS_HPP

// Index bookkeeping for operators living on a subset of the tensor factors
// of a larger region. Within any region the first (smallest) site is the
// most significant bit of the basis index; bit value 0 is spin up.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace dssb {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Offsets of a sub-register inside a region R. A basis index of R splits as
/// sub_off[s] + rest_off[r] with s running over the sub-register and r over
/// the remaining factors.
struct Layout {
    std::vector<int> sub_off;
    std::vector<int> rest_off;
    int dim() const { return static_cast<int>(sub_off.size() * rest_off.size()); }
};

/// `sub` and `region` are sorted site lists with sub contained in region.
Layout make_layout(const std::vector<int>& sub, const std::vector<int>& region);

Mat expand(const Mat& a, const Layout& lay);
Vec expand_diag(const Vec& a, const Layout& lay);
Mat partial_trace(const Mat& x, const Layout& lay);
Vec partial_trace_diag(const Vec& x, const Layout& lay);

/// out = (a (x) 1) x for a acting on the sub-register.
Mat left_multiply(const Mat& a, const Layout& lay, const Mat& x);
/// out = x (a (x) 1).
Mat right_multiply(const Mat& x, const Mat& a, const Layout& lay);

/// Permutes the tensor factors of a matrix on k sites given in `order` into
/// ascending site order. Returns the sorted order through `sorted`.
Mat canonicalize_factors(const Mat& a, const std::vector<int>& order, std::vector<int>& sorted);

/// Sorted union of two sorted site lists.
std::vector<int> merge_sites(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace dssb

#endif
