// Copyright 2026 The temporal-cert Authors
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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tcert/linalg.hpp"
#include "tcert/ncycle.hpp"
#include "tcert/random.hpp"

namespace tcert::ncycle {
namespace {

Matrix random_direction(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g;
    Matrix d(n, n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = g(rng);
            d(i, j) = v;
            d(j, i) = v;
            norm += 2.0 * v * v;
        }
    }
    d *= 1.0 / std::sqrt(norm);
    return d;
}

void fit(RobustnessCurve& c) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (c.samples.empty()) {
        c.fitted_slope = c.fit_residual = c.loglog_exponent = c.envelope_ratio = nan;
        c.warnings.push_back("no samples; fit undefined");
        return;
    }
    double se = 0.0, sd = 0.0, dd = 0.0;
    for (const auto& s : c.samples) {
        se += s.epsilon * s.epsilon;
        sd += s.epsilon * s.distance;
        dd += s.distance * s.distance;
    }
    c.fitted_slope = sd / se;
    double res = 0.0;
    c.envelope_ratio = 0.0;
    for (const auto& s : c.samples) {
        const double r = s.distance - c.fitted_slope * s.epsilon;
        res += r * r;
        c.envelope_ratio = std::max(c.envelope_ratio, s.distance / (c.fitted_slope * s.epsilon));
    }
    c.fit_residual = dd > 0.0 ? std::sqrt(res / dd) : 0.0;

    // Ordinary least squares of log d against log eps.
    double mx = 0.0, my = 0.0;
    for (const auto& s : c.samples) {
        mx += std::log(s.epsilon);
        my += std::log(s.distance);
    }
    const double k = static_cast<double>(c.samples.size());
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : c.samples) {
        const double dx = std::log(s.epsilon) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(s.distance) - my);
    }
    if (sxx <= 0.0) {
        c.loglog_exponent = nan;
        c.warnings.push_back("a single deficit level cannot fix a log-log exponent");
    } else {
        c.loglog_exponent = sxy / sxx;
    }
}

}  // namespace

SymMatrix project_unit_diagonal_psd(const SymMatrix& x) {
    const auto e = eig_sym(x);
    const std::size_t n = x.dim();
    Matrix clipped(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(e.eigenvalues[k], 0.0);
        if (lam == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                clipped(i, j) += lam * e.eigenvectors(i, k) * e.eigenvectors(j, k);
    }
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(clipped(i, i) > 0.0)) {
            throw std::domain_error("project_unit_diagonal_psd: clipped matrix has a zero diagonal");
        }
        scale[i] = 1.0 / std::sqrt(clipped(i, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) clipped(i, j) *= scale[i] * scale[j];
    for (std::size_t i = 0; i < n; ++i) clipped(i, i) = 1.0;
    return SymMatrix(std::move(clipped));
}

RobustnessCurve robustness_experiment(int n, const RobustnessOptions& opts) {
    const NCycleInequality ineq = build(n);
    if (opts.epsilons.empty()) throw std::invalid_argument("robustness_experiment: no epsilons");
    for (double e : opts.epsilons) {
        if (!(e > 0.0)) throw std::invalid_argument("robustness_experiment: epsilons must be positive");
    }
    if (opts.trials_per_eps < 1) throw std::invalid_argument("robustness_experiment: trials_per_eps < 1");

    const SymMatrix x_opt = analytic_optimizer(n);
    const Matrix& w = dual_certificate(n).w.matrix();
    const double opt = ineq.quantum_bound;
    const std::size_t dim = x_opt.dim();

    RobustnessCurve curve;
    curve.n = n;
    std::uint64_t stream = 0;
    for (double target : opts.epsilons) {
        for (int t = 0; t < opts.trials_per_eps; ++t, ++stream) {
            Rng rng = make_rng(opts.seed, stream);
            Matrix dir = random_direction(rng, dim);
            if (opts.inward_only && inner(w, dir) < 0.0) dir *= -1.0;

            auto point = [&](double s) { return project_unit_diagonal_psd(SymMatrix(x_opt.matrix() + s * dir)); };
            auto deficit = [&](double s) { return opt - ineq.evaluate(point(s)); };

            double lo = 0.0, hi = 1.0;
            int grow = 0;
            while (deficit(hi) < target && grow < 60) {
                lo = hi;
                hi *= 2.0;
                ++grow;
            }
            bool hit = false;
            double s = hi;
            for (int it = 0; it < opts.bisection_cap; ++it) {
                s = 0.5 * (lo + hi);
                const double f = deficit(s);
                if (std::abs(f - target) <= opts.deficit_rel_tol * target) {
                    hit = true;
                    break;
                }
                (f < target ? lo : hi) = s;
            }
            if (!hit) {
                ++curve.skipped;
                std::ostringstream os;
                os << "eps=" << target << " trial " << t << ": deficit not reached within "
                   << opts.bisection_cap << " bisection steps";
                curve.warnings.push_back(os.str());
                continue;
            }
            const SymMatrix x = point(s);
            RobustnessSample sample;
            sample.target = target;
            sample.epsilon = opt - ineq.evaluate(x);
            sample.distance = frobenius_distance(x, x_opt);
            sample.min_eigenvalue = min_eigenvalue(x);
            for (std::size_t i = 0; i < dim; ++i)
                sample.diag_residual = std::max(sample.diag_residual, std::abs(x(i, i) - 1.0));
            curve.samples.push_back(sample);
        }
    }
    fit(curve);
    return curve;
}

}  // namespace tcert::ncycle
