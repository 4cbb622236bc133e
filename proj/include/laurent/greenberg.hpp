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

#ifndef LAURENT_GREENBERG_HPP
#define LAURENT_GREENBERG_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laurent/hensel.hpp"
#include "laurent/ideal.hpp"
#include "laurent/poly.hpp"
#include "laurent/series.hpp"

namespace laurent::greenberg {

using ff::FqElem;
using hensel::Point;
using poly::MultiPoly;

/// Coefficient expansion of a system over F_q[t] modulo t^N. Variable
/// Y_{j,k} (coefficient of t^k in X_j) has index k * m + j.
struct WeilRestriction {
    std::vector<MultiPoly> original;
    std::size_t nvars = 0;
    int level = 0;
    /// One equation per (f_i, k) in that order; zero coefficients are kept.
    std::vector<MultiPoly> restricted;

    [[nodiscard]] std::size_t index(std::size_t j, int k) const {
        return static_cast<std::size_t>(k) * nvars + j;
    }
    /// Series point from an assignment of the restricted variables.
    [[nodiscard]] Point point(std::span<const FqElem> y) const;
};

WeilRestriction weil_restrict(std::span<const MultiPoly> system, std::size_t nvars, int level);

/// Lexicographically least zero in F_q^nvars (variables in index order,
/// values in field enumeration order), or nullopt.
std::optional<std::vector<FqElem>> solve_finite(std::span<const MultiPoly> system, std::size_t nvars,
                                                int threads = 1);

/// The first `cap` zeros in lexicographic order.
std::vector<std::vector<FqElem>> solve_all(std::span<const MultiPoly> system, std::size_t nvars, std::size_t cap,
                                           int threads = 1);

/// Truncation levels 1, 2, 4, ... up to max_precision.
struct PrecisionSchedule {
    int max_precision = 64;
    [[nodiscard]] std::vector<int> levels() const;
};

struct SearchOptions {
    PrecisionSchedule schedule;
    /// Solutions mod t^N tried for certification per level.
    std::size_t candidate_cap = 256;
    /// Search-tree nodes per first-coordinate branch and level.
    long long node_budget = 1LL << 22;
    int threads = 1;
};

/// Solutions of a system mod t^N in lexicographic order of the coefficient
/// vector (Y_{1,0}, ..., Y_{m,0}, Y_{1,1}, ...). `complete` is false when the
/// node budget cut the search.
struct TruncatedSolutions {
    std::vector<Point> solutions;
    bool complete = true;
    long long nodes = 0;
};

TruncatedSolutions solve_truncated(std::span<const MultiPoly> system, std::size_t nvars, int level,
                                   std::size_t cap, long long node_budget = 1LL << 22, int threads = 1);

enum class Status { Sat, Unsat, Unknown };

std::string to_string(Status s);

struct SatEvidence {
    /// The system the certificate refers to (a chart after any blow-ups).
    std::vector<MultiPoly> system;
    std::optional<MultiPoly> inequation;
    Point witness;
    hensel::HenselCertificate certificate;
    /// Truncation level at which the candidate was found.
    int found_at = 0;
    /// Original coordinates as polynomials in the chart variables; empty for
    /// the identity.
    std::vector<MultiPoly> back_map;
    /// Witness in the caller's coordinates.
    Point original;
};

struct Refutation {
    enum class Kind { Truncation, Radical, Composite };
    Kind kind = Kind::Truncation;
    /// Largest truncation level used by a truncation refutation.
    int level = 0;
    /// Rabinowitsch certificates over F_q(t), one per radical step.
    std::vector<ideal::RadicalCertificate<poly::RatRing>> radical;
};

struct Verdict {
    Status status = Status::Unknown;
    std::optional<SatEvidence> sat;
    std::optional<Refutation> refutation;
    std::string reason;
    std::vector<std::string> trace;
};

/// Hook applied to each certified candidate: return the (possibly moved)
/// accepted point, or nullopt to reject it.
using Acceptor = std::function<std::optional<hensel::Lifted>(const hensel::Lifted&)>;

/// Equations only. SAT needs a certified candidate at some level N whose
/// lift to precision 2N <= max_precision re-certifies (and is accepted);
/// UNSAT means no solution mod t^N for a scheduled N.
Verdict decide_positive(std::span<const MultiPoly> system, std::size_t nvars, const SearchOptions& options = {},
                        const Acceptor& accept = {});

}  // namespace laurent::greenberg

#endif
