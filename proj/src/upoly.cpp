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

#include "laurent/upoly.hpp"

#include "laurent/error.hpp"

namespace laurent::poly {

UPoly::UPoly(const FqContext* ctx, std::vector<FqElem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const FqContext* ctx, FqElem c) { return UPoly(ctx, {c}); }

UPoly UPoly::monomial(const FqContext* ctx, FqElem c, std::size_t degree) {
    std::vector<FqElem> v(degree + 1);
    v[degree] = c;
    return UPoly(ctx, std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (!ctx_) ctx_ = o.ctx_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    const FqContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
    if (a.is_zero() || b.is_zero()) return UPoly(ctx);
    std::vector<FqElem> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = ctx->add(r[i + j], ctx->mul(a.c_[i], b.c_[j]));
    }
    return UPoly(ctx, std::move(r));
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = ctx_->neg(c);
    return r;
}

UPoly UPoly::scaled(FqElem s) const {
    UPoly r(*this);
    for (auto& c : r.c_) c = ctx_->mul(c, s);
    r.trim();
    return r;
}

UPoly UPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    UPoly r(ctx_);
    r.c_.assign(k, FqElem{});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly result = constant(ctx_, ctx_->one());
    UPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error("univariate division by zero");
    const FqContext* ctx = ctx_ ? ctx_ : d.ctx_;
    UPoly r = *this;
    r.ctx_ = ctx;
    if (r.degree() < d.degree()) return {UPoly(ctx), r};
    std::vector<FqElem> q(r.c_.size() - d.c_.size() + 1);
    const FqElem inv_lead = ctx->inv(d.lead());
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = r.c_.size() - d.c_.size();
        const FqElem f = ctx->mul(r.lead(), inv_lead);
        q[shift] = f;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            r.c_[shift + i] = ctx->sub(r.c_[shift + i], ctx->mul(f, d.c_[i]));
        r.trim();
    }
    return {UPoly(ctx, std::move(q)), r};
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(ctx_->inv(lead()));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly(ctx_);
    std::vector<FqElem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = ctx_->mul(ctx_->from_int(static_cast<long long>(i)), c_[i]);
    return UPoly(ctx_, std::move(r));
}

FqElem UPoly::eval(FqElem x) const {
    FqElem acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
}

bool UPoly::is_pth_power() const {
    const std::size_t p = ctx_ ? ctx_->p() : 2;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero() && i % p != 0) return false;
    return true;
}

UPoly UPoly::pth_root() const {
    if (is_zero()) return *this;
    const std::size_t p = ctx_->p();
    std::vector<FqElem> r((c_.size() - 1) / p + 1);
    for (std::size_t i = 0; i < c_.size(); i += p) r[i / p] = ctx_->pth_root(c_[i]);
    return UPoly(ctx_, std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = ctx_->to_string(c_[i]);
        const bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace laurent::poly
