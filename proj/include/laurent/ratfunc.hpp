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

#ifndef LAURENT_RATFUNC_HPP
#define LAURENT_RATFUNC_HPP

#include <string>

#include "laurent/upoly.hpp"

namespace laurent::poly {

/// Reduced fraction num/den in F_q(t): den monic, gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(const FqContext* ctx);
    explicit RationalFunction(UPoly num);
    RationalFunction(UPoly num, UPoly den);

    static RationalFunction constant(const FqContext* ctx, FqElem c);
    /// The uniformizer t.
    static RationalFunction t(const FqContext* ctx);

    [[nodiscard]] const FqContext* ctx() const { return num_.ctx() ? num_.ctx() : den_.ctx(); }
    [[nodiscard]] const UPoly& num() const { return num_; }
    [[nodiscard]] const UPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
    /// t-adic valuation; throws on zero.
    [[nodiscard]] int valuation() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    [[nodiscard]] RationalFunction operator-() const;
    [[nodiscard]] RationalFunction inverse() const;
    [[nodiscard]] RationalFunction pow(unsigned e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// True when this is r^p for some r in F_q(t).
    [[nodiscard]] bool is_pth_power() const { return num_.is_pth_power() && den_.is_pth_power(); }
    [[nodiscard]] RationalFunction pth_root() const;
    /// d/dt.
    [[nodiscard]] RationalFunction derivative() const;

    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    UPoly num_;
    UPoly den_;
};

}  // namespace laurent::poly

#endif
