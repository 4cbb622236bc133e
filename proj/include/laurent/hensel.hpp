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

#ifndef LAURENT_HENSEL_HPP
#define LAURENT_HENSEL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "laurent/ideal.hpp"
#include "laurent/poly.hpp"
#include "laurent/series.hpp"

namespace laurent::hensel {

using poly::MultiPoly;
using series::TruncatedSeries;

using Point = std::vector<TruncatedSeries>;

/// A square Jacobian minor (rows = equations, cols = variables) whose
/// determinant has exact valuation e at a witness known to precision N.
/// Guarantees a root in F_q[[t]]^m congruent to the witness mod t^(N-e);
/// the root keeps every non-chosen coordinate fixed.
struct HenselCertificate {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    int e = 0;
    int precision = 0;
    /// Krull dimension d of the generic fibre; rows.size() = m - d.
    int dimension = 0;
};

struct PerturbBudget {
    int directions = 8;
    int depths = 16;
};

struct Lifted {
    Point point;
    HenselCertificate certificate;
};

struct PerturbOutcome {
    std::optional<Lifted> result;
    int attempts = 0;
};

/// Liftability checks and Newton lifting for one system of equations in
/// F_q[t][X_1..X_m]. Caches the dimension and the localized membership
/// tests used when the system has more equations than the chosen minor.
class Lifter {
public:
    Lifter(std::vector<MultiPoly> equations, std::size_t nvars);

    [[nodiscard]] const std::vector<MultiPoly>& equations() const { return eqs_; }
    [[nodiscard]] std::size_t nvars() const { return m_; }
    /// None for the unit ideal.
    [[nodiscard]] std::optional<int> dimension() const { return dim_; }

    /// Certificate with N = point precision.
    [[nodiscard]] std::optional<HenselCertificate> certify(const Point& x) const;
    /// Certificate for a claim at level N <= point precision: residuals vanish
    /// mod t^N and N > 2e, with the determinant valuation computed from the
    /// full stored precision.
    [[nodiscard]] std::optional<HenselCertificate> certify_at(const Point& x, int n) const;
    /// The certified root truncated mod t^target. Non-chosen coordinates are
    /// read as exact polynomials from their stored coefficients.
    [[nodiscard]] Point lift(const Point& x, const HenselCertificate& cert, int target) const;

    /// Number of Newton steps taken by the last lift (for tracing).
    [[nodiscard]] int last_iterations() const { return last_iterations_; }
    /// Minimum residual valuation over the chosen rows after each Newton step
    /// of the last lift, starting with the initial residual.
    [[nodiscard]] const std::vector<int>& last_residuals() const { return last_residuals_; }

private:
    bool localized_member(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    std::vector<MultiPoly> eqs_;
    std::size_t m_;
    std::optional<int> dim_;
    std::vector<std::vector<MultiPoly>> jac_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, bool> member_cache_;
    mutable int last_iterations_ = 0;
    mutable std::vector<int> last_residuals_;
};

std::optional<HenselCertificate> certify_liftable(std::span<const MultiPoly> equations, const Point& point);

Point newton_lift(std::span<const MultiPoly> equations, const Point& point, const HenselCertificate& cert,
                  int target_precision);

/// Moves a certified point along free coordinates until g has exact finite
/// valuation at the certified root. Directions in coordinate order, depths
/// increasing from 2e + 1, scalars in field enumeration order.
PerturbOutcome smooth_perturb(const Lifter& lifter, const Point& point, const HenselCertificate& cert,
                              const MultiPoly& g, const PerturbBudget& budget = {});

PerturbOutcome smooth_perturb(std::span<const MultiPoly> equations, const Point& point,
                              const HenselCertificate& cert, const MultiPoly& g, const PerturbBudget& budget = {});

/// Determinant by Leibniz expansion of a square matrix of series.
TruncatedSeries determinant(const std::vector<std::vector<TruncatedSeries>>& a, const ff::FqContext* ctx,
                            int precision);

}  // namespace laurent::hensel

#endif
