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

#include "dssb/liouvillian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace dssb {

RateFunction glauber_rate(double beta) {
    if (beta < 0) throw std::invalid_argument("glauber_rate: negative beta");
    RateFunction r;
    r.name = "glauber";
    r.beta = beta;
    if (std::isinf(beta)) {
        r.fn = [](double w) { return w > 0 ? 1.0 : (w < 0 ? 0.0 : 0.5); };
    } else {
        r.fn = [beta](double w) { return 1.0 / (1.0 + std::exp(-beta * w)); };
    }
    return r;
}

RateFunction metropolis_rate(double beta) {
    if (beta < 0) throw std::invalid_argument("metropolis_rate: negative beta");
    RateFunction r;
    r.name = "metropolis";
    r.beta = beta;
    if (std::isinf(beta)) {
        r.fn = [](double w) { return w >= 0 ? 1.0 : 0.0; };
    } else {
        r.fn = [beta](double w) { return std::min(1.0, std::exp(beta * w)); };
    }
    return r;
}

RateFunction rate_by_name(const std::string& name, double beta) {
    if (name == "glauber") return glauber_rate(beta);
    if (name == "metropolis") return metropolis_rate(beta);
    throw std::invalid_argument("unknown rate function '" + name + "'");
}

double kms_violation(const RateFunction& gamma, double w_max) {
    double worst = 0.0;
    for (int i = 1; i <= 64; ++i) {
        const double w = w_max * i / 64.0;
        double expected;
        if (std::isinf(gamma.beta)) {
            expected = 0.0;
        } else {
            expected = std::exp(-gamma.beta * w) * gamma(w);
        }
        worst = std::max(worst, std::abs(gamma(-w) - expected));
    }
    return worst;
}

// ---------------------------------------------------------------------------

namespace {

bool hermitian(const Mat& m, double tol) { return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol; }

}  // namespace

SpectralTerm::SpectralTerm(const GlobalOperator& h, const std::vector<GlobalOperator>& couplings,
                           RateFunction gamma, double level_tol)
    : n_(h.num_sites()), gamma_(std::move(gamma)), couplings_(couplings) {
    Mat hd = h.to_dense();
    const double scale = std::max(1.0, hd.cwiseAbs().maxCoeff());
    if (!hermitian(hd, 1e-10 * scale)) throw std::invalid_argument("davies_generator: H is not self-adjoint");
    if (kms_violation(gamma_) > 1e-8) {
        throw std::invalid_argument("davies_generator: rate function '" + gamma_.name + "' violates KMS");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(hd);
    v_ = es.eigenvectors();
    const Eigen::VectorXd& e = es.eigenvalues();
    tol_ = level_tol * std::max(1.0, e.cwiseAbs().maxCoeff());
    for (int i = 0; i < e.size(); ++i) {
        if (levels_.empty() || e(i) - e(i - 1) > tol_) {
            levels_.push_back({e(i), i, 1});
        } else {
            Level& lv = levels_.back();
            lv.energy = (lv.energy * lv.size + e(i)) / (lv.size + 1);
            ++lv.size;
        }
    }
    const int nl = num_levels();
    const int d = static_cast<int>(hd.rows());
    k_ = Mat::Zero(d, d);
    for (const auto& g : couplings_) {
        if (g.num_sites() != n_) throw std::invalid_argument("davies_generator: coupling on wrong lattice");
        Mat gd = g.to_dense();
        if (!hermitian(gd, 1e-12)) throw std::invalid_argument("davies_generator: couplings must be self-adjoint");
        Mat gt = v_.adjoint() * gd * v_;
        const double gscale = std::max(1e-300, gt.cwiseAbs().maxCoeff());
        std::vector<char> nz(static_cast<size_t>(nl) * nl, 0);
        for (int c = 0; c < nl; ++c) {
            for (int a = 0; a < nl; ++a) {
                const auto blk = gt.block(levels_[c].offset, levels_[a].offset, levels_[c].size, levels_[a].size);
                nz[static_cast<size_t>(c) * nl + a] = blk.cwiseAbs().maxCoeff() > 1e-13 * gscale;
            }
        }
        for (int a = 0; a < nl; ++a) {
            for (int c = 0; c < nl; ++c) {
                if (!nz[static_cast<size_t>(c) * nl + a]) continue;
                const double rate = gamma_(levels_[a].energy - levels_[c].energy);
                if (rate == 0.0) continue;
                const auto blk = gt.block(levels_[c].offset, levels_[a].offset, levels_[c].size, levels_[a].size);
                k_.block(levels_[a].offset, levels_[a].offset, levels_[a].size, levels_[a].size) +=
                    rate * blk.adjoint() * blk;
            }
        }
        g_.push_back(std::move(gt));
        nonzero_.push_back(std::move(nz));
    }
}

int SpectralTerm::level_of(double energy) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), energy,
                               [](const Level& lv, double x) { return lv.energy < x; });
    int best = -1;
    double best_gap = 2.0 * tol_;
    for (auto cand : {it, it == levels_.begin() ? it : it - 1}) {
        if (cand == levels_.end()) continue;
        const double gap = std::abs(cand->energy - energy);
        if (gap <= best_gap) {
            best_gap = gap;
            best = static_cast<int>(cand - levels_.begin());
        }
    }
    return best;
}

void SpectralTerm::accumulate(const Mat& at, Mat& y, Picture picture) const {
    const int nl = num_levels();
    for (size_t gi = 0; gi < g_.size(); ++gi) {
        const Mat& gt = g_[gi];
        const auto& nz = nonzero_[gi];
        for (int a = 0; a < nl; ++a) {
            const Level& la = levels_[a];
            for (int c = 0; c < nl; ++c) {
                if (!nz[static_cast<size_t>(c) * nl + a]) continue;
                const Level& lc = levels_[c];
                const double w = la.energy - lc.energy;
                const double rate = picture == Picture::Heisenberg ? gamma_(w) : gamma_(-w);
                if (rate == 0.0) continue;
                Mat t = gt.block(lc.offset, la.offset, lc.size, la.size).adjoint() *
                        at.middleRows(lc.offset, lc.size);
                for (int b = 0; b < nl; ++b) {
                    const Level& lb = levels_[b];
                    const int dl = level_of(lb.energy - w);
                    if (dl < 0 || !nz[static_cast<size_t>(dl) * nl + b]) continue;
                    const Level& ld = levels_[dl];
                    y.block(la.offset, lb.offset, la.size, lb.size).noalias() +=
                        rate * t.middleCols(ld.offset, ld.size) *
                        gt.block(ld.offset, lb.offset, ld.size, lb.size);
                }
            }
        }
    }
}

Mat SpectralTerm::apply(const Mat& a, Picture picture) const {
    Mat at = v_.adjoint() * a * v_;
    Mat y = -0.5 * (k_ * at + at * k_);
    accumulate(at, y, picture);
    return v_ * y * v_.adjoint();
}

int SpectralTerm::num_components() const {
    int count = 0;
    for (size_t gi = 0; gi < g_.size(); ++gi) {
        std::vector<double> freqs;
        const int nl = num_levels();
        for (int a = 0; a < nl; ++a) {
            for (int c = 0; c < nl; ++c) {
                if (!nonzero_[gi][static_cast<size_t>(c) * nl + a]) continue;
                const double w = levels_[a].energy - levels_[c].energy;
                if (gamma_(w) == 0.0) continue;
                freqs.push_back(w);
            }
        }
        std::sort(freqs.begin(), freqs.end());
        for (size_t i = 0; i < freqs.size(); ++i) {
            if (i == 0 || freqs[i] - freqs[i - 1] > 2 * tol_) ++count;
        }
    }
    return count;
}

std::vector<Mat> SpectralTerm::materialize_jumps(int coupling) const {
    const int nl = num_levels();
    const Mat& gt = g_.at(coupling);
    struct Piece {
        double w;
        int c, a;
    };
    std::vector<Piece> pieces;
    for (int a = 0; a < nl; ++a) {
        for (int c = 0; c < nl; ++c) {
            if (!nonzero_[coupling][static_cast<size_t>(c) * nl + a]) continue;
            pieces.push_back({levels_[a].energy - levels_[c].energy, c, a});
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.w < y.w; });
    std::vector<Mat> out;
    const Eigen::Index d = gt.rows();
    size_t i = 0;
    while (i < pieces.size()) {
        size_t j = i;
        Mat gw = Mat::Zero(d, d);
        while (j < pieces.size() && pieces[j].w - pieces[i].w <= 2 * tol_) {
            const Level& lc = levels_[pieces[j].c];
            const Level& la = levels_[pieces[j].a];
            gw.block(lc.offset, la.offset, lc.size, la.size) = gt.block(lc.offset, la.offset, lc.size, la.size);
            ++j;
        }
        const double rate = gamma_(pieces[i].w);
        if (rate > 0.0) out.push_back(std::sqrt(rate) * v_ * gw.adjoint() * v_.adjoint());
        i = j;
    }
    return out;
}

double SpectralTerm::strength_bound() const { return 2.0 * op_norm(k_); }

// ---------------------------------------------------------------------------

Liouvillian::Liouvillian(const Lattice& lattice) : lattice_(lattice) {}

Liouvillian::Compiled Liouvillian::compile(const LocalLindbladTerm& term) const {
    Compiled out;
    const int k = static_cast<int>(term.support.size());
    const int dim = 1 << k;
    out.k = Mat::Zero(dim, dim);
    for (const auto& l : term.jumps) out.k += l * l.adjoint();
    const int nj = static_cast<int>(term.jumps.size());
    const double direct_cost = (2.0 * nj + 4.0) * std::pow(8.0, k);
    const double cut = 1e-15;
    auto nonzeros = [&](const Mat& m) {
        std::vector<std::tuple<int, int, cplx>> nz;
        for (int c = 0; c < dim; ++c) {
            for (int r = 0; r < dim; ++r) {
                if (m(r, c) != 0.0) nz.emplace_back(r, c, m(r, c));
            }
        }
        return nz;
    };
    std::vector<std::vector<std::tuple<int, int, cplx>>> jumps;
    double estimate = 0.0;
    for (const auto& l : term.jumps) {
        jumps.push_back(nonzeros(l));
        estimate += static_cast<double>(jumps.back().size()) * jumps.back().size();
    }
    // The non-jump part is X -> G X + X G^dagger with G = iH - K/2 (H and K Hermitian).
    const Mat g = -0.5 * out.k + (term.hamiltonian ? Mat(cplx(0, 1) * *term.hamiltonian) : Mat::Zero(dim, dim));
    const auto gnz = nonzeros(g);
    estimate += 2.0 * dim * gnz.size();
    if (k > 16 || estimate > direct_cost) {
        out.direct = true;
        return out;
    }
    // Entry (s, sp, t, tp): L[E_{t,tp}](s, sp) for the matrix unit E_{t,tp}.
    std::unordered_map<uint64_t, cplx> acc;
    auto key = [](int s, int sp, int t, int tp) {
        return (uint64_t(s) << 48) | (uint64_t(sp) << 32) | (uint64_t(t) << 16) | uint64_t(tp);
    };
    for (const auto& nz : jumps) {
        for (const auto& [s, t, a] : nz) {
            for (const auto& [sp, tp, b] : nz) acc[key(s, sp, t, tp)] += a * std::conj(b);
        }
    }
    for (const auto& [s, t, v] : gnz) {
        for (int r = 0; r < dim; ++r) {
            acc[key(s, r, t, r)] += v;
            acc[key(r, s, r, t)] += std::conj(v);
        }
    }
    for (const auto& [kk, v] : acc) {
        if (std::abs(v) <= cut) continue;
        const int s = static_cast<int>(kk >> 48), sp = static_cast<int>((kk >> 32) & 0xffff);
        const int t = static_cast<int>((kk >> 16) & 0xffff), tp = static_cast<int>(kk & 0xffff);
        out.heis.push_back({s, sp, t, tp, v});
        out.schr.push_back({t, tp, s, sp, std::conj(v)});
    }
    if (static_cast<double>(out.heis.size()) > direct_cost) {
        out.direct = true;
        out.heis.clear();
        out.schr.clear();
        return out;
    }
    auto order = [](const SuperEntry& a, const SuperEntry& b) {
        return std::tie(a.sp, a.tp, a.s, a.t) < std::tie(b.sp, b.tp, b.s, b.t);
    };
    std::sort(out.heis.begin(), out.heis.end(), order);
    std::sort(out.schr.begin(), out.schr.end(), order);
    auto diag_ok = [](const std::vector<SuperEntry>& es) {
        for (const auto& e : es) {
            if (e.t == e.tp && e.s != e.sp) return false;
        }
        return true;
    };
    out.diag_heis = diag_ok(out.heis);
    out.diag_schr = diag_ok(out.schr);
    return out;
}

void Liouvillian::add_term(LocalLindbladTerm term) {
    std::vector<int> sorted;
    const int k = static_cast<int>(term.support.size());
    if (k == 0) throw std::invalid_argument("Liouvillian: term with empty support");
    // bring every matrix into ascending factor order
    auto fix = [&](const Mat& m) { return canonicalize_factors(m, term.support, sorted); };
    if (term.hamiltonian) {
        Mat h = fix(*term.hamiltonian);
        if (!hermitian(h, 1e-12)) throw std::invalid_argument("Liouvillian: term Hamiltonian not self-adjoint");
        term.hamiltonian = h;
    }
    for (auto& l : term.jumps) l = fix(l);
    if (!term.hamiltonian && term.jumps.empty()) {
        sorted = term.support;
        std::sort(sorted.begin(), sorted.end());
    }
    term.support = sorted;
    for (int x : term.support) {
        if (x < 0 || x >= num_sites()) throw std::invalid_argument("Liouvillian: term outside lattice");
        range_ = std::max(range_, lattice_.distance(term.center, x));
    }
    Compiled c = compile(term);
    double b = 2.0 * op_norm(c.k);
    if (term.hamiltonian) b += 2.0 * op_norm(*term.hamiltonian);
    term_strength_.push_back(b);
    strength_ = std::max(strength_, b);
    terms_.push_back(std::move(term));
    compiled_.push_back(std::move(c));
}

void Liouvillian::add_spectral(std::shared_ptr<const SpectralTerm> term) {
    if (term->num_sites() != num_sites()) throw std::invalid_argument("Liouvillian: spectral term size");
    for (int x = 0; x < num_sites(); ++x) range_ = std::max(range_, lattice_.distance(0, x));
    const double b = term->strength_bound();
    term_strength_.push_back(b);
    strength_ = std::max(strength_, b);
    spectral_.push_back(std::move(term));
}

std::vector<double> Liouvillian::term_strengths() const { return term_strength_; }

void Liouvillian::apply_term(size_t i, const Layout& lay, const Mat& x, Mat& out, Picture picture) const {
    const Compiled& c = compiled_[i];
    const auto& so = lay.sub_off;
    const auto& ro = lay.rest_off;
    if (!c.direct) {
        const auto& entries = picture == Picture::Heisenberg ? c.heis : c.schr;
        for (int r2 : ro) {
            for (const auto& e : entries) {
                cplx* dst = out.col(so[e.sp] + r2).data() + so[e.s];
                const cplx* src = x.col(so[e.tp] + r2).data() + so[e.t];
                const cplx v = e.c;
                for (int r : ro) dst[r] += v * src[r];
            }
        }
        return;
    }
    const LocalLindbladTerm& term = terms_[i];
    const cplx im(0, 1);
    const double sign = picture == Picture::Heisenberg ? 1.0 : -1.0;
    if (term.hamiltonian) {
        out += (sign * im) * (left_multiply(*term.hamiltonian, lay, x) - right_multiply(x, *term.hamiltonian, lay));
    }
    for (const auto& l : term.jumps) {
        if (picture == Picture::Heisenberg) {
            out += left_multiply(l, lay, right_multiply(x, l.adjoint(), lay));
        } else {
            out += left_multiply(l.adjoint(), lay, right_multiply(x, l, lay));
        }
    }
    out -= 0.5 * (left_multiply(c.k, lay, x) + right_multiply(x, c.k, lay));
}

void Liouvillian::apply_term_diag(size_t i, const Layout& lay, const Vec& x, Mat* dense_out, Vec* diag_out,
                                  Picture picture) const {
    const Compiled& c = compiled_[i];
    const auto& so = lay.sub_off;
    const auto& ro = lay.rest_off;
    if (c.direct) {
        Mat xd = x.asDiagonal();
        Mat tmp = Mat::Zero(xd.rows(), xd.cols());
        apply_term(i, lay, xd, tmp, picture);
        if (dense_out) {
            *dense_out += tmp;
        } else {
            *diag_out += tmp.diagonal();
        }
        return;
    }
    const auto& entries = picture == Picture::Heisenberg ? c.heis : c.schr;
    for (const auto& e : entries) {
        if (e.t != e.tp) continue;
        const cplx v = e.c;
        if (diag_out) {
            for (int r : ro) (*diag_out)(so[e.s] + r) += v * x(so[e.t] + r);
        } else {
            for (int r : ro) (*dense_out)(so[e.s] + r, so[e.sp] + r) += v * x(so[e.t] + r);
        }
    }
}

bool Liouvillian::diagonal_preserving(Picture picture) const {
    if (!spectral_.empty()) return false;
    for (const auto& c : compiled_) {
        if (c.direct) return false;
        if (!(picture == Picture::Heisenberg ? c.diag_heis : c.diag_schr)) return false;
    }
    return true;
}

std::vector<int> Liouvillian::closure(const std::vector<int>& sites) const {
    if (!spectral_.empty()) return lattice_.all().sites();
    Region r(num_sites(), sites);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : terms_) {
            Region ts(num_sites(), t.support);
            if (ts.intersects(r) && !ts.subset_of(r)) {
                r = r.united(ts);
                changed = true;
            }
        }
    }
    return r.sites();
}

GlobalOperator Liouvillian::apply_impl(const GlobalOperator& a, Picture picture) const {
    if (a.num_sites() != num_sites()) throw std::invalid_argument("Liouvillian::apply: dimension mismatch");
    const int n = num_sites();
    std::vector<size_t> hit;
    std::vector<int> region = a.support();
    Region sa = a.support_region();
    for (size_t i = 0; i < terms_.size(); ++i) {
        const bool use = picture == Picture::Schrodinger || sa.intersects(Region(n, terms_[i].support));
        if (use) {
            hit.push_back(i);
            region = merge_sites(region, terms_[i].support);
        }
    }
    const bool spectral = !spectral_.empty() && (picture == Picture::Schrodinger || !a.support().empty());
    if (spectral) region = lattice_.all().sites();
    if (hit.empty() && !spectral) return GlobalOperator::zero(n);

    bool diag_out = a.is_diagonal() && !spectral;
    for (size_t i : hit) {
        const Compiled& c = compiled_[i];
        diag_out = diag_out && !c.direct && (picture == Picture::Heisenberg ? c.diag_heis : c.diag_schr);
    }
    if (diag_out) {
        Vec x = a.diag_on_sites(region);
        Vec out = Vec::Zero(x.size());
        for (size_t i : hit) apply_term_diag(i, make_layout(terms_[i].support, region), x, nullptr, &out, picture);
        return GlobalOperator::diagonal(n, region, std::move(out));
    }
    const Eigen::Index d = Eigen::Index(1) << region.size();
    Mat out = Mat::Zero(d, d);
    if (a.is_diagonal()) {
        Vec x = a.diag_on_sites(region);
        for (size_t i : hit) apply_term_diag(i, make_layout(terms_[i].support, region), x, &out, nullptr, picture);
    } else {
        Mat x = a.on_sites(region);
        for (size_t i : hit) apply_term(i, make_layout(terms_[i].support, region), x, out, picture);
    }
    if (spectral) {
        Mat x = a.on_sites(region);
        for (const auto& s : spectral_) out += s->apply(x, picture);
    }
    if (static_cast<int>(region.size()) == n) return GlobalOperator::full(n, std::move(out));
    GlobalOperator res = GlobalOperator::local(n, region, out);
    return res;
}

GlobalOperator Liouvillian::apply(const GlobalOperator& a) const { return apply_impl(a, Picture::Heisenberg); }

GlobalOperator Liouvillian::apply_adjoint(const GlobalOperator& rho) const {
    return apply_impl(rho, Picture::Schrodinger);
}

Mat Liouvillian::apply_on(const std::vector<int>& region, const Mat& x, Picture picture) const {
    const int n = num_sites();
    Region r(n, region);
    if (picture == Picture::Schrodinger && static_cast<int>(region.size()) != n) {
        throw std::invalid_argument("Schrodinger-picture application needs the full lattice");
    }
    Mat out = Mat::Zero(x.rows(), x.cols());
    for (size_t i = 0; i < terms_.size(); ++i) {
        Region ts(n, terms_[i].support);
        if (!ts.intersects(r)) continue;
        if (!ts.subset_of(r)) throw std::invalid_argument("apply_on: region not closed under the generator");
        apply_term(i, make_layout(terms_[i].support, region), x, out, picture);
    }
    if (!spectral_.empty()) {
        if (static_cast<int>(region.size()) != n) throw std::invalid_argument("apply_on: spectral term needs full lattice");
        for (const auto& s : spectral_) out += s->apply(x, picture);
    }
    return out;
}

Vec Liouvillian::apply_diag_on(const std::vector<int>& region, const Vec& x, Picture picture) const {
    if (!diagonal_preserving(picture)) throw std::logic_error("apply_diag_on: generator not diagonal preserving");
    const int n = num_sites();
    Region r(n, region);
    if (picture == Picture::Schrodinger && static_cast<int>(region.size()) != n) {
        throw std::invalid_argument("Schrodinger-picture application needs the full lattice");
    }
    Vec out = Vec::Zero(x.size());
    for (size_t i = 0; i < terms_.size(); ++i) {
        Region ts(n, terms_[i].support);
        if (!ts.intersects(r)) continue;
        if (!ts.subset_of(r)) throw std::invalid_argument("apply_diag_on: region not closed under the generator");
        apply_term_diag(i, make_layout(terms_[i].support, region), x, nullptr, &out, picture);
    }
    return out;
}

Liouvillian Liouvillian::restricted(const Region& region) const {
    Liouvillian out(lattice_);
    out.model = model;
    out.rate_name = rate_name;
    out.beta = beta;
    out.coupling_j = coupling_j;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!Region(num_sites(), terms_[i].support).intersects(region)) continue;
        out.terms_.push_back(terms_[i]);
        out.compiled_.push_back(compiled_[i]);
        out.term_strength_.push_back(term_strength_[i]);
        out.strength_ = std::max(out.strength_, term_strength_[i]);
        for (int x : terms_[i].support) out.range_ = std::max(out.range_, lattice_.distance(terms_[i].center, x));
    }
    if (!region.empty()) {
        for (const auto& s : spectral_) out.add_spectral(s);
    }
    return out;
}

std::pair<Liouvillian, TruncationReport> Liouvillian::truncated(int radius) const {
    if (radius < 0) throw std::invalid_argument("truncate: negative radius");
    const int n = num_sites();
    Liouvillian out(lattice_);
    out.model = model + "-truncated";
    out.rate_name = rate_name;
    out.beta = beta;
    out.coupling_j = coupling_j;
    TruncationReport rep;
    rep.radius = radius;
    auto reduce = [&](const Mat& m, const std::vector<int>& sup, const Region& keep, std::vector<int>& kept) {
        GlobalOperator g = sup.size() == static_cast<size_t>(n) ? GlobalOperator::full(n, m)
                                                                  : GlobalOperator::local(n, sup, m);
        GlobalOperator e = conditional_expectation(g.densified(), keep);
        kept = e.support();
        return e;
    };
    auto process = [&](int center, const std::vector<int>& sup, const std::optional<Mat>& h,
                       const std::vector<Mat>& jumps) {
        Region keep = lattice_.ball(center, radius).intersected(Region(n, sup));
        if (keep.empty()) keep = Region(n, {center});
        LocalLindbladTerm t;
        t.center = center;
        t.support = keep.sites();
        double err = 0.0;
        std::vector<int> kept;
        if (h) {
            GlobalOperator orig = GlobalOperator::local(n, sup, *h);
            GlobalOperator red = reduce(*h, sup, keep, kept);
            err += 2.0 * op_norm(orig - red);
            t.hamiltonian = red.on_sites(t.support);
        }
        for (const auto& l : jumps) {
            GlobalOperator orig = sup.size() == static_cast<size_t>(n) ? GlobalOperator::full(n, l)
                                                                        : GlobalOperator::local(n, sup, l);
            GlobalOperator red = reduce(l, sup, keep, kept);
            // the conditional expectation contracts, so ||L~|| <= ||L||
            err += 4.0 * op_norm(orig) * op_norm(orig - red);
            t.jumps.push_back(red.on_sites(t.support));
        }
        rep.term_errors.push_back(err);
        rep.remainder_strength += err;
        out.add_term(std::move(t));
    };
    for (const auto& t : terms_) process(t.center, t.support, t.hamiltonian, t.jumps);
    std::vector<int> all = lattice_.all().sites();
    for (const auto& s : spectral_) {
        for (size_t gi = 0; gi < s->couplings().size(); ++gi) {
            const auto& sup = s->couplings()[gi].support();
            const int center = sup.empty() ? 0 : sup.front();
            process(center, all, std::nullopt, s->materialize_jumps(static_cast<int>(gi)));
        }
    }
    return {std::move(out), std::move(rep)};
}

Mat Liouvillian::superoperator(Picture picture) const {
    const int n = num_sites();
    if (n > 6) throw std::invalid_argument("superoperator: only available for N <= 6");
    const Eigen::Index d = Eigen::Index(1) << n;
    std::vector<int> all = lattice_.all().sites();
    Mat s(d * d, d * d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            Mat e = Mat::Zero(d, d);
            e(i, j) = 1.0;
            Mat col = apply_on(all, e, picture);
            s.col(i + j * d) = Eigen::Map<const Vec>(col.data(), d * d);
        }
    }
    return s;
}

Liouvillian restrict(const Liouvillian& l, const Region& region) { return l.restricted(region); }

Region restricted_region(const Liouvillian& l, const Region& a) { return l.lattice().enlarge(a, l.range()); }

GlobalOperator apply_heisenberg(const Liouvillian& l, const GlobalOperator& a) { return l.apply(a); }

std::pair<Liouvillian, TruncationReport> truncate(const Liouvillian& l, int radius) { return l.truncated(radius); }

}  // namespace dssb
