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

#include "gkp/ideal_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gkp {
namespace {

using cplx = std::complex<double>;
constexpr int kPeriod = DeltaLattice::kPeriodUnits;

int reduce(int x) { return ((x % kPeriod) + kPeriod) % kPeriod; }

// Spikes of W_{|j><j'|} in the sigma -> 0 limit. The q factor
// theta[0; (j+j')/4 + h] collapses onto q = sqrt(pi)((j+j')/2 + 2h) mod 2 sqrt(pi);
// the p factor theta[(j-j')/4 + h; 0] collapses onto p = k sqrt(pi)/2 with
// phase exp(-2 i pi k ((j-j')/4 + h)), for h in {0, 1/2}. Both terms carry the
// same delta normalization.
std::map<LatticeCoord, cplx> operator_spikes(int j, int jp) {
    std::map<LatticeCoord, cplx> out;
    for (int half = 0; half < 2; ++half) {
        int q = reduce(j + jp + 2 * half);
        double a = (j - jp) / 4.0 + 0.5 * half;
        for (int k = 0; k < kPeriod; ++k) {
            out[LatticeCoord{q, k}] += std::polar(1.0, -2.0 * std::numbers::pi * k * a);
        }
    }
    return out;
}

void check_mode(int mode, int num_modes) {
    if (mode < 0 || mode >= num_modes) {
        throw std::invalid_argument("apply_symplectic: mode index " + std::to_string(mode) +
                                    " out of range for " + std::to_string(num_modes) + " modes");
    }
}

}  // namespace

IdealState parse_ideal_state(std::string_view name) {
    if (name == "zero") return IdealState::zero;
    if (name == "one") return IdealState::one;
    if (name == "plus") return IdealState::plus;
    if (name == "minus") return IdealState::minus;
    if (name == "h") return IdealState::h;
    if (name == "pi8") return IdealState::pi8;
    throw std::invalid_argument("unknown ideal state '" + std::string(name) + "'");
}

std::string_view ideal_state_name(IdealState state) {
    switch (state) {
        case IdealState::zero: return "zero";
        case IdealState::one: return "one";
        case IdealState::plus: return "plus";
        case IdealState::minus: return "minus";
        case IdealState::h: return "h";
        case IdealState::pi8: return "pi8";
    }
    return "?";
}

double DeltaLattice::unit() { return std::sqrt(std::numbers::pi) / 2.0; }

DeltaLattice::DeltaLattice(int num_modes, std::span<const LatticeEntry> entries) : num_modes_(num_modes) {
    if (num_modes < 1) throw std::invalid_argument("DeltaLattice: need at least one mode");
    std::map<std::vector<LatticeCoord>, double> merged;
    double scale = 0.0;
    for (const auto& e : entries) {
        if (static_cast<int>(e.coords.size()) != num_modes) {
            throw std::invalid_argument("DeltaLattice: entry has wrong number of modes");
        }
        std::vector<LatticeCoord> key = e.coords;
        for (auto& c : key) c = LatticeCoord{reduce(c.q), reduce(c.p)};
        merged[key] += e.weight;
        scale = std::max(scale, std::abs(e.weight));
    }
    for (auto& [coords, w] : merged) {
        // Weights are sums of a few O(1) numbers; cancellation leaves rounding noise only.
        if (std::abs(w) > 1e-12 * scale) entries_.push_back(LatticeEntry{coords, w});
    }
    bool any_positive = std::any_of(entries_.begin(), entries_.end(),
                                    [](const LatticeEntry& e) { return e.weight > 0.0; });
    if (!any_positive) throw std::invalid_argument("DeltaLattice: no positive weight");
}

double DeltaLattice::abs_weight_sum() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::abs(e.weight);
    return s;
}

double DeltaLattice::weight_sum() const {
    double s = 0.0;
    for (const auto& e : entries_) s += e.weight;
    return s;
}

bool DeltaLattice::operator==(const DeltaLattice& other) const {
    if (num_modes_ != other.num_modes_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].coords != other.entries_[i].coords) return false;
        if (std::abs(entries_[i].weight - other.entries_[i].weight) > 1e-12) return false;
    }
    return true;
}

DeltaLattice lattice_for_logical(cplx a0, cplx a1) {
    const cplx amps[2] = {a0, a1};
    std::map<LatticeCoord, cplx> total;
    for (int j = 0; j < 2; ++j) {
        for (int jp = 0; jp < 2; ++jp) {
            cplx c = amps[j] * std::conj(amps[jp]);
            for (const auto& [coord, w] : operator_spikes(j, jp)) total[coord] += c * w;
        }
    }
    double max_abs = 0.0;
    for (const auto& [coord, w] : total) max_abs = std::max(max_abs, std::abs(w.real()));
    if (!(max_abs > 0.0)) throw std::invalid_argument("lattice_for_logical: zero state");
    std::vector<LatticeEntry> entries;
    for (const auto& [coord, w] : total) {
        // Hermitian combination: imaginary parts cancel between |j><j'| and |j'><j|.
        entries.push_back(LatticeEntry{{coord}, w.real() / max_abs});
    }
    return DeltaLattice(1, entries);
}

DeltaLattice lattice_for(IdealState state) {
    const double r = 1.0 / std::numbers::sqrt2;
    const double c8 = std::cos(std::numbers::pi / 8.0);
    const double s8 = std::sin(std::numbers::pi / 8.0);
    switch (state) {
        case IdealState::zero: return lattice_for_logical(1.0, 0.0);
        case IdealState::one: return lattice_for_logical(0.0, 1.0);
        case IdealState::plus: return lattice_for_logical(r, r);
        case IdealState::minus: return lattice_for_logical(r, -r);
        case IdealState::h: return lattice_for_logical(c8, s8);
        case IdealState::pi8:
            return lattice_for_logical(std::polar(r, -std::numbers::pi / 8.0),
                                       std::polar(r, std::numbers::pi / 8.0));
    }
    throw std::invalid_argument("lattice_for: unknown state");
}

double unit_cell_negativity(const DeltaLattice& lattice, std::span<const double> eps_per_mode) {
    if (static_cast<int>(eps_per_mode.size()) != lattice.num_modes()) {
        throw std::invalid_argument("unit_cell_negativity: need one eps per mode");
    }
    const double u = DeltaLattice::unit();
    const double period = kPeriod * u;
    for (double eps : eps_per_mode) {
        if (!(eps > 0.0 && eps < u)) {
            throw std::invalid_argument("unit_cell_negativity: eps must lie in (0, sqrt(pi)/2)");
        }
    }
    double abs_sum = 0.0;
    double sum = 0.0;
    for (const auto& e : lattice.entries()) {
        // Each coordinate has exactly one periodic image in [eps, period + eps).
        bool inside = true;
        for (std::size_t m = 0; m < e.coords.size(); ++m) {
            const double lo = eps_per_mode[m];
            for (int x : {e.coords[m].q, e.coords[m].p}) {
                double rep = x * u;
                if (rep < lo) rep += period;
                inside = inside && rep >= lo && rep < lo + period;
            }
        }
        if (inside) {
            abs_sum += std::abs(e.weight);
            sum += e.weight;
        }
    }
    if (!(sum > 0.0)) throw std::domain_error("unit_cell_negativity: non-positive weight sum");
    return abs_sum / sum;
}

double unit_cell_negativity(const DeltaLattice& lattice, double eps) {
    std::vector<double> per_mode(static_cast<std::size_t>(lattice.num_modes()), eps);
    return unit_cell_negativity(lattice, per_mode);
}

DeltaLattice tensor(const DeltaLattice& a, const DeltaLattice& b) {
    std::vector<LatticeEntry> entries;
    entries.reserve(a.entries().size() * b.entries().size());
    for (const auto& ea : a.entries()) {
        for (const auto& eb : b.entries()) {
            LatticeEntry e{ea.coords, ea.weight * eb.weight};
            e.coords.insert(e.coords.end(), eb.coords.begin(), eb.coords.end());
            entries.push_back(std::move(e));
        }
    }
    return DeltaLattice(a.num_modes() + b.num_modes(), entries);
}

DeltaLattice apply_symplectic(const DeltaLattice& lattice, const SymplecticGate& gate) {
    const int n = lattice.num_modes();
    std::vector<LatticeEntry> entries = lattice.entries();
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, HadamardGate>) {
                check_mode(g.mode, n);
                for (auto& e : entries) {
                    auto& c = e.coords[static_cast<std::size_t>(g.mode)];
                    c = LatticeCoord{c.p, -c.q};
                }
            } else if constexpr (std::is_same_v<G, PhaseGate>) {
                check_mode(g.mode, n);
                for (auto& e : entries) {
                    auto& c = e.coords[static_cast<std::size_t>(g.mode)];
                    c = LatticeCoord{c.q, c.p + c.q};
                }
            } else {
                check_mode(g.control, n);
                check_mode(g.target, n);
                if (g.control == g.target) {
                    throw std::invalid_argument("apply_symplectic: CNOT needs distinct modes");
                }
                for (auto& e : entries) {
                    auto& c1 = e.coords[static_cast<std::size_t>(g.control)];
                    auto& c2 = e.coords[static_cast<std::size_t>(g.target)];
                    LatticeCoord n1{c1.q, c1.p - c2.p};
                    LatticeCoord n2{c1.q + c2.q, c2.p};
                    c1 = n1;
                    c2 = n2;
                }
            }
        },
        gate);
    return DeltaLattice(n, entries);
}

}  // namespace gkp
