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

#include "dssb/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace dssb {

Layout make_layout(const std::vector<int>& sub, const std::vector<int>& region) {
    const int n = static_cast<int>(region.size());
    std::vector<int> sub_pos;
    std::vector<int> rest_pos;
    size_t j = 0;
    for (int p = 0; p < n; ++p) {
        if (j < sub.size() && sub[j] == region[p]) {
            sub_pos.push_back(p);
            ++j;
        } else {
            rest_pos.push_back(p);
        }
    }
    if (j != sub.size()) throw std::invalid_argument("make_layout: sub-register not inside region");
    auto offsets = [n](const std::vector<int>& pos) {
        const int m = static_cast<int>(pos.size());
        std::vector<int> off(size_t(1) << m);
        for (size_t s = 0; s < off.size(); ++s) {
            int v = 0;
            for (int i = 0; i < m; ++i) {
                if ((s >> (m - 1 - i)) & 1) v |= 1 << (n - 1 - pos[i]);
            }
            off[s] = v;
        }
        return off;
    };
    Layout lay;
    lay.sub_off = offsets(sub_pos);
    lay.rest_off = offsets(rest_pos);
    return lay;
}

Mat expand(const Mat& a, const Layout& lay) {
    const int d = lay.dim();
    const int ks = static_cast<int>(lay.sub_off.size());
    Mat out = Mat::Zero(d, d);
    for (int j = 0; j < ks; ++j) {
        for (int i = 0; i < ks; ++i) {
            const cplx v = a(i, j);
            if (v == cplx(0)) continue;
            for (int r : lay.rest_off) out(lay.sub_off[i] + r, lay.sub_off[j] + r) = v;
        }
    }
    return out;
}

Vec expand_diag(const Vec& a, const Layout& lay) {
    Vec out(lay.dim());
    const int ks = static_cast<int>(lay.sub_off.size());
    for (int i = 0; i < ks; ++i) {
        for (int r : lay.rest_off) out(lay.sub_off[i] + r) = a(i);
    }
    return out;
}

Mat partial_trace(const Mat& x, const Layout& lay) {
    const int ks = static_cast<int>(lay.sub_off.size());
    Mat out = Mat::Zero(ks, ks);
    for (int j = 0; j < ks; ++j) {
        for (int r : lay.rest_off) {
            const cplx* col = x.col(lay.sub_off[j] + r).data() + r;
            for (int i = 0; i < ks; ++i) out(i, j) += col[lay.sub_off[i]];
        }
    }
    return out;
}

Vec partial_trace_diag(const Vec& x, const Layout& lay) {
    const int ks = static_cast<int>(lay.sub_off.size());
    Vec out = Vec::Zero(ks);
    for (int i = 0; i < ks; ++i) {
        for (int r : lay.rest_off) out(i) += x(lay.sub_off[i] + r);
    }
    return out;
}

Mat left_multiply(const Mat& a, const Layout& lay, const Mat& x) {
    const int ks = static_cast<int>(lay.sub_off.size());
    Mat out = Mat::Zero(x.rows(), x.cols());
    std::vector<std::pair<std::pair<int, int>, cplx>> nz;
    for (int t = 0; t < ks; ++t) {
        for (int s = 0; s < ks; ++s) {
            if (a(s, t) != cplx(0)) nz.push_back({{s, t}, a(s, t)});
        }
    }
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const cplx* px = x.col(c).data();
        cplx* po = out.col(c).data();
        for (const auto& [st, v] : nz) {
            const cplx* src = px + lay.sub_off[st.second];
            cplx* dst = po + lay.sub_off[st.first];
            for (int r : lay.rest_off) dst[r] += v * src[r];
        }
    }
    return out;
}

Mat right_multiply(const Mat& x, const Mat& a, const Layout& lay) {
    const int ks = static_cast<int>(lay.sub_off.size());
    Mat out = Mat::Zero(x.rows(), x.cols());
    for (int sp = 0; sp < ks; ++sp) {
        for (int t = 0; t < ks; ++t) {
            const cplx v = a(t, sp);
            if (v == cplx(0)) continue;
            for (int r : lay.rest_off) out.col(lay.sub_off[sp] + r) += v * x.col(lay.sub_off[t] + r);
        }
    }
    return out;
}

Mat canonicalize_factors(const Mat& a, const std::vector<int>& order, std::vector<int>& sorted) {
    const int k = static_cast<int>(order.size());
    sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("operator support lists a site twice");
    }
    if (a.rows() != (Eigen::Index(1) << k) || a.cols() != a.rows()) {
        throw std::invalid_argument("operator matrix dimension does not match its support");
    }
    if (sorted == order) return a;
    // position of each original factor in the sorted order
    std::vector<int> where(k);
    for (int i = 0; i < k; ++i) {
        where[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), order[i]) - sorted.begin());
    }
    const int dim = 1 << k;
    std::vector<int> perm(dim);
    for (int s = 0; s < dim; ++s) {
        int v = 0;
        for (int i = 0; i < k; ++i) {
            if ((s >> (k - 1 - i)) & 1) v |= 1 << (k - 1 - where[i]);
        }
        perm[s] = v;
    }
    Mat out(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) out(perm[i], perm[j]) = a(i, j);
    }
    return out;
}

std::vector<int> merge_sites(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace dssb
