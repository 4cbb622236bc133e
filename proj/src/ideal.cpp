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

#include "laurent/ideal.hpp"

namespace laurent::ideal {

using poly::RatPoly;
using poly::RatRing;

RatPoly t_derivative(const RatPoly& f) {
    std::vector<RatPoly::Term> out;
    for (const auto& term : f.terms()) {
        auto d = term.coeff.derivative();
        if (!d.is_zero()) out.push_back({term.exp, std::move(d)});
    }
    return RatPoly::from_terms(f.ring(), f.nvars(), false, std::move(out));
}

namespace {

RatPoly monic(const RatPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.ring().inv(f.leading().coeff));
}

bool all_derivations_vanish(const RatPoly& f) {
    for (std::size_t j = 0; j < f.nvars(); ++j)
        if (!f.derivative(j).is_zero()) return false;
    return t_derivative(f).is_zero();
}

RatPoly pth_root(const RatPoly& f) {
    const std::size_t p = f.ring().ctx->p();
    std::vector<RatPoly::Term> out;
    for (const auto& term : f.terms()) {
        Monomial e = term.exp;
        for (auto& x : e) {
            if (x % p != 0) throw Error("polynomial is not a p-th power");
            x = static_cast<std::uint16_t>(x / p);
        }
        out.push_back({std::move(e), term.coeff.pth_root()});
    }
    return RatPoly::from_terms(f.ring(), f.nvars(), false, std::move(out));
}

}  // namespace

RatPoly squarefree_part(const RatPoly& f, std::size_t main_var) {
    if (f.is_constant()) return f.is_zero() ? f : monic(f);
    const std::size_t m = f.nvars();
    std::vector<RatPoly> derivs;
    if (main_var < m) derivs.push_back(f.derivative(main_var));
    for (std::size_t j = 0; j < m; ++j)
        if (j != main_var) derivs.push_back(f.derivative(j));
    derivs.push_back(t_derivative(f));

    RatPoly g = f;
    for (const auto& d : derivs) {
        if (g.is_constant()) break;
        g = gcd(g, d);
    }
    if (g.is_constant()) return monic(f);
    // a: product of the irreducible factors whose multiplicity is prime to p.
    const RatPoly a = *exact_divide(f, g);
    RatPoly b = g;
    while (!b.is_constant()) {
        const RatPoly h = gcd(b, a);
        if (h.is_constant()) break;
        b = *exact_divide(b, h);
    }
    if (b.is_constant()) return monic(a);
    if (!all_derivations_vanish(b)) throw Error("squarefree_part: residual factor is not a p-th power");
    return monic(a * squarefree_part(pth_root(b), main_var));
}

}  // namespace laurent::ideal
