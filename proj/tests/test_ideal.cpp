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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "laurent/ideal.hpp"

using namespace testing_helpers;
using laurent::ff::FqContext;
using laurent::ideal::buchberger;
using laurent::ideal::dimension;
using laurent::ideal::ideal_membership;
using laurent::ideal::normal_form;
using laurent::ideal::radical_membership;
using laurent::ideal::squarefree_part;
using laurent::poly::RationalFunction;

namespace {

using Gb = laurent::ideal::GroebnerBasis<FqRing>;

MultiPoly random_poly(const PolyRing& r, std::mt19937& rng, unsigned max_deg, int nterms) {
    std::uniform_int_distribution<unsigned> exp(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> coef(1, r.field->q() - 1);
    MultiPoly f(r.ring(), r.m, r.with_t);
    for (int k = 0; k < nterms; ++k) {
        laurent::poly::Monomial e(r.m, 0);
        unsigned budget = max_deg;
        for (auto& x : e) {
            x = static_cast<std::uint16_t>(std::min(budget, exp(rng)));
            budget -= x;
        }
        f += MultiPoly::monomial(r.ring(), r.m, false, e, FqElem{coef(rng)});
    }
    return f;
}

Gb gb_of(const PolyRing& r, std::vector<MultiPoly> gens) { return buchberger(gens, r.m, r.ring()); }

bool divides(const RatPoly& d, const RatPoly& f) { return laurent::ideal::exact_divide(f, d).has_value(); }

}  // namespace

TEST_CASE("buchberger examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2, false};
    const auto x = r.x(0), y = r.x(1);
    auto gb = gb_of(r, {y - x * x, x * y - x * x * x});
    REQUIRE(gb.generators.size() == 1);
    // Monic with grevlex leading term X^2.
    CHECK(gb.generators[0] == x * x - y);

    auto mono = gb_of(r, {x, y});
    REQUIRE(mono.generators.size() == 2);
    CHECK(mono.generators[0] == y);
    CHECK(mono.generators[1] == x);

    auto zero = gb_of(r, {MultiPoly(r.ring(), 2)});
    CHECK(zero.generators.empty());
    CHECK(zero.is_zero_ideal());
    CHECK(gb_of(r, {x - r.c(1), x}).is_unit());
}

TEST_CASE("buchberger over F_q(t)") {
    auto f3 = FqContext::make(3);
    RatPolyRing q{f3, 2};
    const auto x = q.x(0), y = q.x(1), t = q.t();
    std::vector<RatPoly> gens{x * y - t, x * x - t * y};
    const auto gb = buchberger(gens, 2, q.ring());
    for (const auto& g : gens) CHECK(ideal_membership(g, gb));
    CHECK(dimension(gb) == 0);
    // x = t / y substituted into x^2 = t y gives y^3 = t.
    CHECK(ideal_membership(y.pow(3) - t, gb));
    CHECK_FALSE(ideal_membership(y.pow(3) - q.c(1), gb));
}

TEST_CASE("ideal_membership examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2, false};
    const auto x = r.x(0), y = r.x(1);
    CHECK_FALSE(ideal_membership(x, gb_of(r, {x * x})));
    CHECK(ideal_membership(y - x * x, gb_of(r, {y - x * x})));
    CHECK(ideal_membership(x * x * y - x.pow(4), gb_of(r, {y - x * x})));
}

TEST_CASE("radical_membership examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2, false};
    const auto x = r.x(0), y = r.x(1);
    CHECK(radical_membership(x, gb_of(r, {x * x})));
    CHECK_FALSE(radical_membership(x, gb_of(r, {y})));
    CHECK(radical_membership(r.c(1), gb_of(r, {x - r.c(1), x})));

    std::vector<MultiPoly> gens{x * x};
    auto cert = laurent::ideal::radical_certificate(x, std::span<const MultiPoly>(gens), 2, r.ring());
    CHECK(cert.member);
    CHECK(laurent::ideal::verify_radical_certificate(cert));
    auto bad = cert;
    bad.cofactors[0] = bad.cofactors[0] + cert.rabinowitsch - cert.rabinowitsch + MultiPoly::constant(r.ring(), 3, false, f3->one());
    CHECK_FALSE(laurent::ideal::verify_radical_certificate(bad));
}

TEST_CASE("dimension examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2, false};
    const auto x = r.x(0), y = r.x(1);
    CHECK(dimension(gb_of(r, {x * y - r.c(1)})) == 1);
    CHECK(dimension(gb_of(r, {x, y})) == 0);
    CHECK_FALSE(dimension(gb_of(r, {r.c(1)})).has_value());
    CHECK(dimension(gb_of(r, {MultiPoly(r.ring(), 2)})) == 2);
}

TEST_CASE("squarefree_part examples") {
    auto f3 = FqContext::make(3);
    RatPolyRing q{f3, 2};
    const auto x = q.x(0), y = q.x(1);
    const auto c = y - x * x;
    const auto s = squarefree_part(c * c, 1);
    CHECK(divides(s, c));
    CHECK(divides(c, s));

    RatPolyRing q1{f3, 1};
    const auto xp = q1.x(0).pow(3) - q1.t();
    const auto s2 = squarefree_part(xp);
    CHECK(divides(s2, xp));
    CHECK(divides(xp, s2));
    CHECK(squarefree_part(q1.x(0).pow(2)) == q1.x(0));

    // (X^3 - t^3) = (X - t)^3: every derivation vanishes on the p-th power.
    const auto cube = q1.x(0).pow(3) - q1.t().pow(3);
    CHECK(squarefree_part(cube) == q1.x(0) - q1.t());
    // (X^3 - t)^3 y: derivative in X vanishes, in t does not.
    const auto mixed = (x.pow(3) - q.t()).pow(3) * y;
    const auto sm = squarefree_part(mixed);
    CHECK(divides(sm, (x.pow(3) - q.t()) * y));
    CHECK(divides((x.pow(3) - q.t()) * y, sm));
}

TEST_CASE("groebner properties") {
    for (std::uint32_t p : {2U, 3U}) {
        auto f = FqContext::make(p);
        PolyRing r{f, 3, false};
        std::mt19937 rng(p * 13);
        for (int it = 0; it < 25; ++it) {
            std::vector<MultiPoly> gens{random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)};
            const auto gb = buchberger(gens, 3, r.ring(), {}, true);
            // idempotence
            const auto again = buchberger(gb.generators, 3, r.ring());
            CHECK(again.generators == gb.generators);
            // tracked cofactors reproduce every basis element
            for (std::size_t i = 0; i < gb.generators.size(); ++i) {
                MultiPoly acc(r.ring(), 3);
                for (std::size_t k = 0; k < gens.size(); ++k) acc += gb.cofactors[i][k] * gens[k];
                CHECK(acc == gb.generators[i]);
            }
            // pairwise S-polynomials reduce to zero is implied by membership of products
            const auto h = random_poly(r, rng, 3, 4);
            std::vector<MultiPoly> quot;
            const auto rem = normal_form(h, gb, &quot);
            MultiPoly acc = rem;
            for (std::size_t j = 0; j < quot.size(); ++j) acc += quot[j] * gb.generators[j];
            CHECK(acc == h);
            CHECK(ideal_membership(h * gens[0] + gens[1], gb));
            if (ideal_membership(h, gb)) CHECK(radical_membership(h, gb));
            CHECK(radical_membership(h * gens[0], gb));
        }
    }
}

TEST_CASE("dimension drops on prime ideals") {
    // Graphs of polynomial maps X1 = h1(X2, X3) [, X2 = h2(X3)] are prime.
    auto f = FqContext::make(3);
    PolyRing r{f, 3, false};
    std::mt19937 rng(17);
    auto in_vars = [&](std::vector<std::size_t> vars) {
        MultiPoly h = r.c(static_cast<long long>(rng() % 3));
        for (int k = 0; k < 3; ++k) {
            MultiPoly term = r.c(1 + static_cast<long long>(rng() % 2));
            for (auto v : vars) term = term * r.x(v).pow(rng() % 3);
            h += term;
        }
        return h;
    };
    for (int it = 0; it < 30; ++it) {
        std::vector<MultiPoly> gens{r.x(0) - in_vars({1, 2})};
        if (it % 2) gens.push_back(r.x(1) - in_vars({2}));
        const auto gb = buchberger(gens, 3, r.ring());
        const auto d = dimension(gb);
        REQUIRE(d.has_value());
        CHECK(*d == 3 - static_cast<int>(gens.size()));
        const auto h = random_poly(r, rng, 3, 3);
        if (radical_membership(h, gb)) continue;
        auto bigger = gens;
        bigger.push_back(h);
        const auto d2 = dimension(buchberger(bigger, 3, r.ring()));
        CHECK((!d2 || *d2 < *d));
    }
}

TEST_CASE("squarefree_part properties") {
    auto f3 = FqContext::make(3);
    RatPolyRing q{f3, 2};
    const auto x = q.x(0), y = q.x(1), t = q.t();
    std::vector<RatPoly> factors{x - t, y * y - x, x * y + t, y - t * t, x.pow(3) - t};
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int it = 0; it < 20; ++it) {
        RatPoly f = q.c(1);
        RatPoly rad = q.c(1);
        for (const auto& g : factors) {
            const int k = e(rng);
            if (k) {
                f = f * g.pow(static_cast<unsigned>(k));
                rad = rad * g;
            }
        }
        if (f.is_constant()) continue;
        const auto s = squarefree_part(f);
        CHECK(divides(s, f));
        CHECK(divides(s, rad));
        CHECK(divides(rad, s));
        std::vector<RatPoly> gens{f};
        CHECK(radical_membership(s, buchberger(gens, 2, q.ring())));
    }
}
