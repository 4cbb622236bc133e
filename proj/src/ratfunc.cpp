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

#include "laurent/ratfunc.hpp"

#include "laurent/error.hpp"

namespace laurent::poly {

RationalFunction::RationalFunction(const FqContext* ctx)
    : num_(ctx), den_(UPoly::constant(ctx, ctx->one())) {}

RationalFunction::RationalFunction(UPoly num)
    : num_(std::move(num)), den_(UPoly::constant(num_.ctx(), num_.ctx()->one())) {}

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(const FqContext* ctx, FqElem c) {
    return RationalFunction(UPoly::constant(ctx, c));
}

RationalFunction RationalFunction::t(const FqContext* ctx) {
    return RationalFunction(UPoly::monomial(ctx, ctx->one(), 1));
}

void RationalFunction::normalize() {
    const FqContext* c = ctx();
    if (num_.is_zero()) {
        num_ = UPoly(c);
        den_ = UPoly::constant(c, c->one());
        return;
    }
    if (den_.degree() > 0) {
        const UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    const FqElem inv_lead = c->inv(den_.lead());
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
}

int RationalFunction::valuation() const {
    if (is_zero()) throw Error("valuation of zero rational function");
    return num_.low_degree() - den_.low_degree();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.is_polynomial() && b.is_polynomial()) {
        RationalFunction r(a.num_ * b.num_);
        return r;
    }
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("inversion of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
    RationalFunction r(num_.pow(e));
    r.den_ = den_.pow(e);
    r.normalize();
    return r;
}

RationalFunction RationalFunction::pth_root() const {
    if (!is_pth_power()) throw Error("rational function is not a p-th power");
    return RationalFunction(num_.pth_root(), den_.pth_root());
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n' d - n d') / d^2
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::to_string() const {
    const std::string n = num_.to_string();
    if (is_polynomial()) return n;
    const bool wrap_n = num_.coeffs().size() > 1 || n.find('+') != std::string::npos;
    return (wrap_n ? "(" + n + ")" : n) + "/(" + den_.to_string() + ")";
}

}  // namespace laurent::poly
