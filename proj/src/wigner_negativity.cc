// Copyright 2026 The gkp-magic Authors
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

#include "gkp/wigner_negativity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkp/parallel.hpp"

namespace gkp {
namespace {

struct Grid1d {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t cells;
    int order;
};

Grid1d make_grid(const QuadratureConfig& cfg) {
    std::vector<double> x;
    std::vector<double> w;
    gauss_legendre(cfg.points_per_cell, x, w);
    const auto cells = static_cast<std::size_t>(std::ceil(2.0 * cfg.box_halfwidth / cfg.cell - 1e-9));
    const double start = -0.5 * static_cast<double>(cells) * cfg.cell;
    const double half = 0.5 * cfg.cell;
    Grid1d g{{}, {}, cells, cfg.points_per_cell};
    g.nodes.reserve(cells * x.size());
    g.weights.reserve(cells * x.size());
    for (std::size_t c = 0; c < cells; ++c) {
        double mid = start + (static_cast<double>(c) + 0.5) * cfg.cell;
        for (std::size_t k = 0; k < x.size(); ++k) {
            g.nodes.push_back(mid + half * x[k]);
            g.weights.push_back(half * w[k]);
        }
    }
    return g;
}

std::vector<cplx> tabulate(const std::function<cplx(double)>& f, const std::vector<double>& xs) {
    std::vector<cplx> out(xs.size());
    const std::size_t block = 256;
    const std::size_t blocks = (xs.size() + block - 1) / block;
    parallel_for(blocks, [&](std::size_t b) {
        const std::size_t end = std::min(xs.size(), (b + 1) * block);
        for (std::size_t i = b * block; i < end; ++i) out[i] = f(xs[i]);
    });
    return out;
}

// Sums per-cell-row partial results in index order so that the total does not
// depend on how rows were scheduled.
template <typename RowFn>
WignerIntegrals reduce_rows(const Grid1d& g, const RowFn& row_fn) {
    std::vector<WignerIntegrals> partial(g.cells, WignerIntegrals{0.0, 0.0});
    parallel_for(g.cells, [&](std::size_t c) {
        WignerIntegrals acc{0.0, 0.0};
        for (int k = 0; k < g.order; ++k) {
            std::size_t i = c * static_cast<std::size_t>(g.order) + static_cast<std::size_t>(k);
            WignerIntegrals r = row_fn(i);
            acc.abs_integral += g.weights[i] * r.abs_integral;
            acc.integral += g.weights[i] * r.integral;
        }
        partial[c] = acc;
    });
    WignerIntegrals total{0.0, 0.0};
    for (const auto& p : partial) {
        total.abs_integral += p.abs_integral;
        total.integral += p.integral;
    }
    return total;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

double envelope_sigma(SqueezingParam s) { return 1.0 / (2.0 * s.sigma()); }

double envelope_tail_mass(SqueezingParam s, double box_halfwidth) {
    double inside = std::erf(box_halfwidth / (std::numbers::sqrt2 * envelope_sigma(s)));
    // 1 - inside^2 without cancellation: (1 - inside)(1 + inside).
    return std::erfc(box_halfwidth / (std::numbers::sqrt2 * envelope_sigma(s))) * (1.0 + inside);
}

QuadratureConfig default_quadrature(SqueezingParam s, double tail_tol, double cell, int points_per_cell) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw ConfigError("tail_tol must lie in (0, 1)");
    double k = 1.0;
    while (envelope_tail_mass(s, k * envelope_sigma(s)) >= tail_tol) k += 0.125;
    return QuadratureConfig{k * envelope_sigma(s), cell, points_per_cell, tail_tol};
}

void validate_config(const QuadratureConfig& cfg) {
    if (!(cfg.cell > 0.0 && cfg.cell <= std::sqrt(std::numbers::pi) / 2.0)) {
        throw ConfigError("quadrature cell must lie in (0, sqrt(pi)/2]");
    }
    if (cfg.points_per_cell < 1 || cfg.points_per_cell > 64) {
        throw ConfigError("points_per_cell must lie in [1, 64]");
    }
    if (!(cfg.box_halfwidth > 0.0) || !std::isfinite(cfg.box_halfwidth)) {
        throw ConfigError("box_halfwidth must be positive");
    }
    if (!(cfg.tail_tol > 0.0)) throw ConfigError("tail_tol must be positive");
}

void validate_config(const QuadratureConfig& cfg, SqueezingParam s) {
    validate_config(cfg);
    if (envelope_tail_mass(s, cfg.box_halfwidth) >= cfg.tail_tol) {
        throw ConfigError("box_halfwidth too small: envelope mass outside the box exceeds tail_tol");
    }
}

WignerIntegrals integrate_wigner(const SeparableWigner& w, const QuadratureConfig& cfg) {
    validate_config(cfg);
    const Grid1d g = make_grid(cfg);
    const std::size_t n = g.nodes.size();
    const std::size_t terms = w.terms.size();

    std::vector<std::vector<cplx>> q_tab;
    std::vector<double> p_re(terms * n);
    std::vector<double> p_im(terms * n);
    for (std::size_t t = 0; t < terms; ++t) {
        q_tab.push_back(tabulate(w.terms[t].q_factor, g.nodes));
        std::vector<cplx> p = tabulate(w.terms[t].p_factor, g.nodes);
        for (std::size_t i = 0; i < n; ++i) {
            p_re[t * n + i] = p[i].real();
            p_im[t * n + i] = p[i].imag();
        }
    }

    return reduce_rows(g, [&](std::size_t i) {
        std::vector<double> alpha_re(terms);
        std::vector<double> alpha_im(terms);
        for (std::size_t t = 0; t < terms; ++t) {
            cplx a = w.terms[t].coeff * q_tab[t][i];
            alpha_re[t] = a.real();
            alpha_im[t] = a.imag();
        }
        double abs_sum = 0.0;
        double sum = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            double v = 0.0;
            for (std::size_t t = 0; t < terms; ++t) {
                v += alpha_re[t] * p_re[t * n + l] - alpha_im[t] * p_im[t * n + l];
            }
            abs_sum += g.weights[l] * std::abs(v);
            sum += g.weights[l] * v;
        }
        return WignerIntegrals{abs_sum, sum};
    });
}

WignerIntegrals integrate_wigner(const std::function<double(WignerPoint)>& w, const QuadratureConfig& cfg) {
    validate_config(cfg);
    const Grid1d g = make_grid(cfg);
    return reduce_rows(g, [&](std::size_t i) {
        double abs_sum = 0.0;
        double sum = 0.0;
        for (std::size_t l = 0; l < g.nodes.size(); ++l) {
            double v = w(WignerPoint{g.nodes[i], g.nodes[l]});
            abs_sum += g.weights[l] * std::abs(v);
            sum += g.weights[l] * v;
        }
        return WignerIntegrals{abs_sum, sum};
    });
}

double negativity(ApproxState state, SqueezingParam s, const QuadratureConfig& cfg, double theta_tol) {
    validate_config(cfg, s);
    SeparableWigner w = state == ApproxState::zero
                            ? separable_wigner_jjp(s, LogicalLabel::zero, LogicalLabel::zero, theta_tol)
                            : separable_wigner_h(s, theta_tol);
    return integrate_wigner(w, cfg).abs_integral;
}

double negativity(const SeparableWigner& w, const QuadratureConfig& cfg) {
    return integrate_wigner(w, cfg).abs_integral;
}

double negativity(const std::function<double(WignerPoint)>& w, const QuadratureConfig& cfg) {
    return integrate_wigner(w, cfg).abs_integral;
}

std::vector<NegativityRow> negativity_sweep(std::span<const double> db_grid, const SweepPolicy& policy) {
    for (std::size_t i = 0; i < db_grid.size(); ++i) {
        double db = db_grid[i];
        if (!(db > 0.0 && db <= kMaxSweepDb)) {
            throw std::invalid_argument("negativity_sweep: dB values must lie in (0, 20], got " +
                                        std::to_string(db));
        }
        if (i > 0 && !(db_grid[i - 1] < db)) {
            throw std::invalid_argument("negativity_sweep: dB grid must be strictly ascending");
        }
    }
    std::vector<NegativityRow> rows;
    rows.reserve(db_grid.size());
    for (double db : db_grid) {
        SqueezingParam s = SqueezingParam::from_db(db);
        QuadratureConfig cfg = default_quadrature(s, policy.tail_tol, policy.cell, policy.points_per_cell);
        rows.push_back(NegativityRow{db, s.sigma2(), negativity(ApproxState::zero, s, cfg, policy.theta_tol),
                                     negativity(ApproxState::h, s, cfg, policy.theta_tol)});
    }
    return rows;
}

}  // namespace gkp
