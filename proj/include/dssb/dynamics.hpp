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

#ifndef DSSB_DYNAMICS_HPP
#define DSSB_DYNAMICS_HPP

#include <vector>

#include "dssb/liouvillian.hpp"
#include "dssb/states.hpp"

namespace dssb {

struct IntegratorStats {
    int steps = 0;
    int rejected = 0;
    double tol = 0.0;
};

/// Samples w0(A(t)) of a Heisenberg trajectory.
struct Trajectory {
    std::vector<double> times;
    std::vector<cplx> values;
    IntegratorStats stats;
};

/// e^{tL}[A] by adaptive Dormand-Prince 5(4) integration with an absolute
/// per-step tolerance on operator entries. The operator is evolved on the
/// closure of its support (kept diagonal when the generator allows it).
GlobalOperator evolve_observable(const Liouvillian& l, const GlobalOperator& a, double t, double tol = 1e-10,
                                 IntegratorStats* stats = nullptr);
/// Schrodinger-picture evolution of a density matrix.
StateFunctional evolve_state(const Liouvillian& l, const StateFunctional& rho, double t, double tol = 1e-10,
                             IntegratorStats* stats = nullptr);
/// w0(A(t)) at the requested (increasing) times.
Trajectory observe(const Liouvillian& l, const StateFunctional& omega0, const GlobalOperator& a,
                   const std::vector<double>& times, double tol = 1e-10);
/// e^{tL}[A] through the dense superoperator exponential. Only N <= 6.
GlobalOperator evolve_observable_expm(const Liouvillian& l, const GlobalOperator& a, double t);

struct LiebRobinsonResult {
    double defect = 0.0;
    int radius = 0;
    Region cone;
    /// The cone is the whole lattice, so the defect is trivially zero.
    bool covers_lattice = false;
};
/// ||A(t) - A_cone(t)|| with A_cone evolved under the generator restricted to
/// enlarge(supp A, ceil(v_tilde t)).
LiebRobinsonResult lieb_robinson_defect(const Liouvillian& l, const GlobalOperator& a, double t, double v_tilde,
                                        double tol = 1e-11);

struct SurvivalResult {
    bool exceeded = false;  // threshold not reached by t_max
    double time = 0.0;
    double t_max = 0.0;
    double delta = 0.0;
    IntegratorStats stats;
};
/// First t with |w0(A(t)) - w0(A)| >= delta, located by bisection on the
/// cubic Hermite interpolant of the accepted steps.
SurvivalResult survival_time(const Liouvillian& l, const StateFunctional& omega0, const GlobalOperator& a,
                             double delta, double t_max, double tol = 1e-9);

}  // namespace dssb

#endif
