// SPDX-License-Identifier: Apache-2.0
//
// fdrelay: outage analysis and signaling optimization for full-duplex
// decode-and-forward relays with residual self-interference
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <functional>

namespace fdrelay {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;  // accumulated error estimate
    int evals = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Intervals are bisected until each
// one meets its width-proportional share of abs_tol or the interval budget
// is exhausted (converged = false, abs_err reports what was achieved).
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_intervals = 4000);

// Integral of f over [0, inf) for integrands decaying at least
// exponentially, via the change of variables x = scale * t / (1 - t).
// scale should match the decay length of f so the mass lands mid-interval.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double scale, double abs_tol);

}  // namespace fdrelay
