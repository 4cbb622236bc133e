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

#ifndef LAURENT_SERIES_HPP
#define LAURENT_SERIES_HPP

#include <span>
#include <string>
#include <vector>

#include "laurent/ff.hpp"
#include "laurent/poly.hpp"

namespace laurent::series {

using ff::FqContext;
using ff::FqElem;

/// Result of a t-adic valuation on a truncation: either exact, or only known
/// to be at least the precision (all stored coefficients vanish).
struct Valuation {
    int value = 0;
    bool at_least = false;

    [[nodiscard]] bool exact() const { return !at_least; }
    /// True when the valuation is certainly >= n.
    [[nodiscard]] bool at_least_value(int n) const { return value >= n; }
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::string to_string(const Valuation& v);

/// An element of F_q[t]/(t^N) with explicit precision N >= 1.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    /// Zero at precision n.
    TruncatedSeries(const FqContext* ctx, int precision);
    /// Coefficients padded with zeros or cut to `precision`.
    TruncatedSeries(const FqContext* ctx, std::vector<FqElem> coeffs, int precision);

    static TruncatedSeries constant(const FqContext* ctx, FqElem c, int precision);
    static TruncatedSeries from_upoly(const poly::UPoly& p, int precision);

    [[nodiscard]] const FqContext* ctx() const { return ctx_; }
    [[nodiscard]] int precision() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] const std::vector<FqElem>& coeffs() const { return c_; }
    [[nodiscard]] FqElem coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, FqElem v) { c_[static_cast<std::size_t>(k)] = v; }

    [[nodiscard]] Valuation valuation() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    [[nodiscard]] TruncatedSeries operator-() const;
    [[nodiscard]] TruncatedSeries scaled(FqElem s) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// Reduction to a lower precision.
    [[nodiscard]] TruncatedSeries truncated(int precision) const;
    /// Reads the stored coefficients as an exact polynomial and re-truncates
    /// at a (possibly higher) precision.
    [[nodiscard]] TruncatedSeries padded(int precision) const;
    /// Exact division by t^e; the first e coefficients must vanish, and the
    /// precision drops by e.
    [[nodiscard]] TruncatedSeries shift_down(int e) const;
    /// Inverse of a unit (valuation 0) to full precision.
    [[nodiscard]] TruncatedSeries invert_unit() const;

    [[nodiscard]] std::string to_string() const;

private:
    const FqContext* ctx_ = nullptr;
    std::vector<FqElem> c_;
};

/// Power series of a rational function lying in F_q[[t]], to precision n.
TruncatedSeries expand_rational(const poly::RationalFunction& r, int precision);

/// Evaluates f in F_q[t][X] (t read as the series variable) or in F_q[X] at a
/// point of series of one common precision. `precision` is required only
/// when f has no X variables.
TruncatedSeries evaluate(const poly::MultiPoly& f, std::span<const TruncatedSeries> point, int precision = 0);

/// Evaluation at an F_q point of a polynomial without t.
FqElem evaluate(const poly::MultiPoly& f, std::span<const FqElem> point);

/// Minimum valuation over a list of series (AtLeast only when all are).
Valuation min_valuation(std::span<const TruncatedSeries> values);

}  // namespace laurent::series

#endif
