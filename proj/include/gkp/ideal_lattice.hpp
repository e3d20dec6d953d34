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

#pragma once

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace gkp {

/// Ideal (infinitely squeezed) logical states with built-in lattices.
enum class IdealState { zero, one, plus, minus, h, pi8 };

/// Parses "zero", "one", "plus", "minus", "h", "pi8". Throws
/// std::invalid_argument on anything else.
IdealState parse_ideal_state(std::string_view name);
std::string_view ideal_state_name(IdealState state);

/// Phase-space position of one mode in units of sqrt(pi)/2, reduced to the
/// period [0, 4).
struct LatticeCoord {
    int q;
    int p;
    auto operator<=>(const LatticeCoord&) const = default;
};

struct LatticeEntry {
    std::vector<LatticeCoord> coords;  // one per mode
    double weight;
};

/// Periodic array of weighted Dirac deltas describing the Wigner function of
/// an ideal GKP state over one 2 sqrt(pi) x 2 sqrt(pi) cell per mode.
///
/// Coordinates are exact integers in units of sqrt(pi)/2, so the period is 4
/// units. Construction reduces every coordinate modulo the period, merges
/// coinciding entries by adding weights and drops entries whose merged weight
/// vanishes.
class DeltaLattice {
  public:
    static constexpr int kPeriodUnits = 4;
    /// Length of one coordinate unit, sqrt(pi)/2.
    static double unit();

    DeltaLattice(int num_modes, std::span<const LatticeEntry> entries);

    int num_modes() const { return num_modes_; }
    const std::vector<LatticeEntry>& entries() const { return entries_; }

    double abs_weight_sum() const;
    double weight_sum() const;

    bool operator==(const DeltaLattice& other) const;

  private:
    int num_modes_;
    std::vector<LatticeEntry> entries_;  // sorted by coords
};

/// Lattice of the single-mode ideal state a0|0> + a1|1>, obtained as the
/// sigma -> 0 limit of the standard-form Wigner functions of |j><j'|. The
/// result is rescaled so the largest |weight| is 1.
DeltaLattice lattice_for_logical(std::complex<double> a0, std::complex<double> a1);

DeltaLattice lattice_for(IdealState state);

/// Unit-cell negativity sum|w| / sum w over the representatives of each entry
/// inside [eps, 2 sqrt(pi) + eps) for every mode. Requires 0 < eps < sqrt(pi)/2
/// (std::invalid_argument otherwise); throws std::domain_error when the
/// signed weight sum is not positive.
double unit_cell_negativity(const DeltaLattice& lattice, double eps);
double unit_cell_negativity(const DeltaLattice& lattice, std::span<const double> eps_per_mode);

DeltaLattice tensor(const DeltaLattice& a, const DeltaLattice& b);

/// Gaussian unitaries implementing the logical Clifford generators. Their
/// action on quadratures (Heisenberg picture):
///   Hadamard: q -> p, p -> -q
///   Phase:    q -> q, p -> p + q  (S = exp(i q^2 / 2))
///   Cnot:     q1 -> q1, p1 -> p1 - p2, q2 -> q1 + q2, p2 -> p2
struct HadamardGate {
    int mode = 0;
};
struct PhaseGate {
    int mode = 0;
};
struct CnotGate {
    int control = 0;
    int target = 1;
};
using SymplecticGate = std::variant<HadamardGate, PhaseGate, CnotGate>;

/// Moves each delta from x to M x (M the quadrature map above), then reduces
/// and merges. Throws std::invalid_argument for bad mode indices.
DeltaLattice apply_symplectic(const DeltaLattice& lattice, const SymplecticGate& gate);

}  // namespace gkp
