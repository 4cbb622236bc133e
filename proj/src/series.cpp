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

#include "laurent/series.hpp"

#include <algorithm>

#include "laurent/error.hpp"

namespace laurent::series {

std::string to_string(const Valuation& v) {
    return v.at_least ? "AtLeast(" + std::to_string(v.value) + ")" : std::to_string(v.value);
}

TruncatedSeries::TruncatedSeries(const FqContext* ctx, int precision) : ctx_(ctx) {
    if (precision < 1) throw Error("series precision must be >= 1");
    c_.assign(static_cast<std::size_t>(precision), FqElem{});
}

TruncatedSeries::TruncatedSeries(const FqContext* ctx, std::vector<FqElem> coeffs, int precision)
    : ctx_(ctx), c_(std::move(coeffs)) {
    if (precision < 1) throw Error("series precision must be >= 1");
    c_.resize(static_cast<std::size_t>(precision), FqElem{});
}

TruncatedSeries TruncatedSeries::constant(const FqContext* ctx, FqElem c, int precision) {
    TruncatedSeries s(ctx, precision);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_upoly(const poly::UPoly& p, int precision) {
    return TruncatedSeries(p.ctx(), p.coeffs(), precision);
}

Valuation TruncatedSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return {static_cast<int>(k), false};
    return {precision(), true};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    TruncatedSeries r(a.ctx_, n);
    for (int k = 0; k < n; ++k) r.c_[k] = a.ctx_->add(a.c_[k], b.c_[k]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    TruncatedSeries r(a.ctx_, n);
    for (int k = 0; k < n; ++k) r.c_[k] = a.ctx_->sub(a.c_[k], b.c_[k]);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.precision(), b.precision());
    const FqContext* ctx = a.ctx_;
    TruncatedSeries r(ctx, n);
    for (int i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] = ctx->add(r.c_[i + j], ctx->mul(a.c_[i], b.c_[j]));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c = ctx_->neg(c);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(FqElem s) const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c = ctx_->mul(c, s);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    if (precision > this->precision()) throw Error("cannot truncate to a higher precision");
    return TruncatedSeries(ctx_, c_, precision);
}

TruncatedSeries TruncatedSeries::padded(int precision) const { return TruncatedSeries(ctx_, c_, precision); }

TruncatedSeries TruncatedSeries::shift_down(int e) const {
    if (e == 0) return *this;
    if (e >= precision()) throw Error("shift exceeds precision");
    for (int k = 0; k < e; ++k)
        if (!c_[k].is_zero()) throw Error("series not divisible by t^" + std::to_string(e));
    return TruncatedSeries(ctx_, std::vector<FqElem>(c_.begin() + e, c_.end()), precision() - e);
}

TruncatedSeries TruncatedSeries::invert_unit() const {
    if (c_[0].is_zero()) throw Error("inverting a non-unit series");
    const int n = precision();
    TruncatedSeries r(ctx_, n);
    const FqElem inv0 = ctx_->inv(c_[0]);
    r.c_[0] = inv0;
    for (int k = 1; k < n; ++k) {
        FqElem acc{};
        for (int j = 1; j <= k; ++j) acc = ctx_->add(acc, ctx_->mul(c_[j], r.c_[k - j]));
        r.c_[k] = ctx_->neg(ctx_->mul(acc, inv0));
    }
    return r;
}

std::string TruncatedSeries::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) out += ",";
        out += ctx_->to_string(c_[k]);
    }
    return out + "] mod t^" + std::to_string(precision());
}

TruncatedSeries expand_rational(const poly::RationalFunction& r, int precision) {
    const FqContext* ctx = r.ctx();
    if (r.is_zero()) return TruncatedSeries(ctx, precision);
    if (r.valuation() < 0) throw Error("rational function " + r.to_string() + " is not in F_q[[t]]");
    // Denominator coprime to numerator and valuation >= 0 force den(0) != 0.
    const auto den = TruncatedSeries::from_upoly(r.den(), precision);
    return TruncatedSeries::from_upoly(r.num(), precision) * den.invert_unit();
}

TruncatedSeries evaluate(const poly::MultiPoly& f, std::span<const TruncatedSeries> point, int precision) {
    const FqContext* ctx = f.ring().ctx;
    if (point.size() != f.nvars()) throw Error("evaluation arity mismatch");
    int n = point.empty() ? precision : 0;
    for (const auto& s : point) {
        if (n == 0) n = s.precision();
        if (s.precision() != n) throw Error("series precision mismatch in evaluation");
    }
    if (n == 0) throw Error("evaluation of a variable-free polynomial needs a precision");
    const std::size_t m = f.nvars();
    std::vector<std::vector<TruncatedSeries>> powers(m);
    TruncatedSeries acc(ctx, n);
    for (const auto& term : f.terms()) {
        const int tpow = f.with_t() ? term.exp[m] : 0;
        if (tpow >= n) continue;
        TruncatedSeries v(ctx, n);
        v.set_coeff(tpow, term.coeff);
        for (std::size_t j = 0; j < m; ++j) {
            const unsigned k = term.exp[j];
            if (k == 0) continue;
            auto& pw = powers[j];
            if (pw.empty()) pw.push_back(TruncatedSeries::constant(ctx, ctx->one(), n));
            while (pw.size() <= k) pw.push_back(pw.back() * point[j]);
            v = v * pw[k];
        }
        acc = acc + v;
    }
    return acc;
}

FqElem evaluate(const poly::MultiPoly& f, std::span<const FqElem> point) { return f.evaluate(point); }

Valuation min_valuation(std::span<const TruncatedSeries> values) {
    Valuation best{0, true};
    bool first = true;
    for (const auto& s : values) {
        const Valuation v = s.valuation();
        if (first || v.value < best.value || (v.value == best.value && v.exact())) best = v;
        first = false;
    }
    return best;
}

}  // namespace laurent::series
