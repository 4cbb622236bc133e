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

#include "laurent/poly.hpp"

namespace laurent::poly {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::map<Monomial, UPoly, GrevlexGreater> t_coefficients(const MultiPoly& f) {
    const FqContext* ctx = f.ring().ctx;
    const std::size_t m = f.nvars();
    std::map<Monomial, UPoly, GrevlexGreater> out;
    for (const auto& term : f.terms()) {
        Monomial x(term.exp.begin(), term.exp.begin() + static_cast<std::ptrdiff_t>(m));
        const std::size_t k = f.with_t() ? term.exp[m] : 0;
        auto [it, fresh] = out.try_emplace(x, UPoly(ctx));
        it->second += UPoly::monomial(ctx, term.coeff, k);
    }
    return out;
}

MultiPoly from_t_coefficients(const FqContext* ctx, std::size_t nvars,
                              const std::map<Monomial, UPoly, GrevlexGreater>& coeffs) {
    std::vector<MultiPoly::Term> terms;
    for (const auto& [x, c] : coeffs) {
        for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
            if (c.coeffs()[k].is_zero()) continue;
            Monomial e = x;
            e.push_back(static_cast<std::uint16_t>(k));
            terms.push_back({std::move(e), c.coeffs()[k]});
        }
    }
    return MultiPoly::from_terms(FqRing{ctx}, nvars, true, std::move(terms));
}

RatPoly to_rational(const MultiPoly& f) {
    const FqContext* ctx = f.ring().ctx;
    std::vector<RatPoly::Term> terms;
    for (auto& [x, c] : t_coefficients(f)) terms.push_back({x, RationalFunction(c)});
    return RatPoly::from_terms(RatRing{ctx}, f.nvars(), false, std::move(terms));
}

MultiPoly clear_denominators(const RatPoly& f) {
    const FqContext* ctx = f.ring().ctx;
    UPoly l = UPoly::constant(ctx, ctx->one());
    for (const auto& term : f.terms()) {
        const UPoly& d = term.coeff.den();
        l = l * d.divmod(gcd(l, d)).first;
    }
    const FqElem low = l.coeff(static_cast<std::size_t>(l.low_degree()));
    l = l.scaled(ctx->inv(low));
    std::map<Monomial, UPoly, GrevlexGreater> coeffs;
    for (const auto& term : f.terms()) {
        const RationalFunction scaled = term.coeff * RationalFunction(l);
        coeffs.emplace(term.exp, scaled.num());
    }
    return from_t_coefficients(ctx, f.nvars(), coeffs);
}

std::vector<MultiPoly> clear_denominators(std::span<const RatPoly> system) {
    std::vector<MultiPoly> out;
    out.reserve(system.size());
    for (const auto& f : system) out.push_back(clear_denominators(f));
    return out;
}

MultiPoly primitive_part(const MultiPoly& f) {
    if (f.is_zero()) return f;
    const FqContext* ctx = f.ring().ctx;
    auto coeffs = t_coefficients(f);
    UPoly g(ctx);
    for (const auto& [x, c] : coeffs) g = gcd(g, c);
    if (g.degree() <= 0) return f;
    for (auto& [x, c] : coeffs) c = c.divmod(g).first;
    return from_t_coefficients(ctx, f.nvars(), coeffs);
}

}  // namespace laurent::poly
