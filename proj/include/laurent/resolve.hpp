/*
   Copyright 2026 The laurent-decide Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAURENT_RESOLVE_HPP
#define LAURENT_RESOLVE_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laurent/greenberg.hpp"
#include "laurent/hensel.hpp"
#include "laurent/poly.hpp"

namespace laurent::resolve {

using greenberg::Status;
using greenberg::Verdict;
using poly::MultiPoly;
using poly::RatPoly;

/// Equations f_i = 0 and at most one inequation g != 0 over F_q[t][X_1..X_m],
/// asking for a solution in F_q[[t]]^m.
struct AffineSystem {
    std::size_t nvars = 0;
    std::vector<MultiPoly> equations;
    std::optional<MultiPoly> inequation;
};

enum class Regularity { Regular, Singular, Inconclusive };

std::string to_string(Regularity r);

struct RegularityReport {
    Regularity status = Regularity::Inconclusive;
    /// Reduced basis over F_q(t) of the equations plus the spread-out
    /// Jacobian minors (the non-smooth locus on the generic fibre).
    std::vector<RatPoly> locus;
    /// Dimension of the generic fibre; nullopt for the empty locus.
    std::optional<int> dimension;
};

/// Regular iff the non-smooth locus of the system, with t treated as a
/// variable, misses the generic fibre. Singular is reported only for
/// hypersurfaces; other non-regular cases are Inconclusive.
RegularityReport regularity_check(const AffineSystem& system);

/// One affine chart of the blow-up of the plane at a point.
struct BlowupChart {
    /// 1: Y = X * Y'; 2: X = X' * Y.
    int index = 1;
    MultiPoly strict;
    /// Images of the original coordinates in the chart coordinates.
    std::vector<MultiPoly> back_map;
    /// The exceptional coordinate (X in chart 1, Y in chart 2).
    MultiPoly exceptional;
    unsigned multiplicity = 0;
};

std::array<BlowupChart, 2> blow_up_origin(const MultiPoly& curve);

/// Blow-up centred at (a, b) with a, b in F_q[t] (given as X-free polynomials).
std::array<BlowupChart, 2> blow_up_at(const MultiPoly& curve, const MultiPoly& a, const MultiPoly& b);

/// Adjoins u to the equations; u must not vanish on the whole locus.
AffineSystem descend(const AffineSystem& system, const MultiPoly& u);
/// Adjoins all of `centre`; the dimension must drop.
AffineSystem descend(const AffineSystem& system, std::span<const MultiPoly> centre);

/// Candidate blow-up centres of a singular plane curve: points (a, b) of
/// F_q[t]^2 covering the whole singular locus, or nullopt if the locus has
/// points that are not of this form.
std::optional<std::vector<std::pair<MultiPoly, MultiPoly>>> singular_centres(const RegularityReport& report,
                                                                             const MultiPoly& curve);

struct ResolveConfig {
    greenberg::SearchOptions search;
    hensel::PerturbBudget perturb;
    int max_blowup_depth = 8;
    /// Precision cap of the direct search tried before blowing up.
    int probe_precision = 16;
    /// Variable names used in trace lines.
    std::vector<std::string> names;
};

Verdict decide_existential(const AffineSystem& system, const ResolveConfig& config = {});

/// Number of rounds of point blow-ups after which every strict transform of
/// a plane curve is regular, or nullopt past max_depth or when a centre
/// is not rational.
std::optional<int> resolution_depth(const MultiPoly& curve, int max_depth = 8);

struct Check {
    bool ok = false;
    std::string message;
};

/// Independent re-check of a verdict against the system it answers: SAT
/// witnesses are re-certified, lifted to doubled precision and mapped back;
/// radical refutations are re-expanded.
Check verify(const AffineSystem& original, const Verdict& verdict);

}  // namespace laurent::resolve

#endif
