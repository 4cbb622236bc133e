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

#ifndef LAURENT_UPOLY_HPP
#define LAURENT_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "laurent/ff.hpp"

namespace laurent::poly {

using ff::FqContext;
using ff::FqElem;

/// Dense univariate polynomial over F_q (in t when used as coefficient data).
/// Coefficients low-to-high with no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const FqContext* ctx) : ctx_(ctx) {}
    UPoly(const FqContext* ctx, std::vector<FqElem> coeffs);

    static UPoly constant(const FqContext* ctx, FqElem c);
    static UPoly monomial(const FqContext* ctx, FqElem c, std::size_t degree);

    [[nodiscard]] const FqContext* ctx() const { return ctx_; }
    [[nodiscard]] const std::vector<FqElem>& coeffs() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0].code == 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] FqElem lead() const { return c_.empty() ? FqElem{} : c_.back(); }
    [[nodiscard]] FqElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FqElem{}; }
    /// Index of the lowest nonzero coefficient; -1 for zero.
    [[nodiscard]] int low_degree() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    [[nodiscard]] UPoly operator-() const;
    [[nodiscard]] UPoly scaled(FqElem s) const;
    [[nodiscard]] UPoly shifted(std::size_t k) const;  // times t^k
    [[nodiscard]] UPoly pow(unsigned e) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws on division by zero.
    [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    [[nodiscard]] UPoly monic() const;
    [[nodiscard]] UPoly derivative() const;
    [[nodiscard]] FqElem eval(FqElem x) const;

    /// True when every exponent with nonzero coefficient is divisible by p.
    [[nodiscard]] bool is_pth_power() const;
    /// The p-th root of a polynomial satisfying is_pth_power().
    [[nodiscard]] UPoly pth_root() const;

    [[nodiscard]] std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    const FqContext* ctx_ = nullptr;
    std::vector<FqElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

}  // namespace laurent::poly

#endif
