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
#include "laurent/greenberg.hpp"

using namespace testing_helpers;
using laurent::ff::FqContext;
using namespace laurent::greenberg;

namespace {

// Independent oracle: enumerate every tuple of F_q[t]/(t^N) and evaluate.
std::optional<Point> brute_force(const std::vector<MultiPoly>& sys, std::size_t m, int n, const Field& f) {
    const std::uint64_t q = f->q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m * static_cast<std::size_t>(n); ++i) total *= q;
    std::optional<Point> best;
    for (std::uint64_t code = 0; code < total; ++code) {
        // digit i of code (base q) is Y_i in k-major order; the lex order on digits from
        // the most significant side is what solve_truncated reports.
        std::vector<FqElem> y(m * static_cast<std::size_t>(n));
        std::uint64_t c = code;
        for (std::size_t i = y.size(); i-- > 0;) {
            y[i] = FqElem{static_cast<std::uint32_t>(c % q)};
            c /= q;
        }
        Point x;
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<FqElem> cs;
            for (int k = 0; k < n; ++k) cs.push_back(y[static_cast<std::size_t>(k) * m + j]);
            x.emplace_back(f.get(), cs, n);
        }
        bool ok = true;
        for (const auto& g : sys)
            if (!laurent::series::evaluate(g, x).valuation().at_least) ok = false;
        if (ok) return x;
    }
    return best;
}

MultiPoly random_poly(const PolyRing& r, std::mt19937& rng, unsigned deg, int nterms) {
    std::uniform_int_distribution<std::uint32_t> coef(1, r.field->q() - 1);
    MultiPoly f(r.ring(), r.m, true);
    for (int k = 0; k < nterms; ++k) {
        laurent::poly::Monomial e(r.m + 1, 0);
        unsigned budget = deg;
        for (auto& x : e) {
            x = static_cast<std::uint16_t>(rng() % (budget + 1));
            budget -= x;
        }
        f += MultiPoly::monomial(r.ring(), r.m, true, e, FqElem{coef(rng)});
    }
    return f;
}

}  // namespace

TEST_CASE("weil_restrict examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> a{r.x(0).pow(2) - r.t()};
    auto w = weil_restrict(a, 1, 2);
    PolyRing y{f3, 2, false};
    REQUIRE(w.restricted.size() == 2);
    CHECK(w.restricted[0] == y.x(0).pow(2));
    CHECK(w.restricted[1] == y.c(2) * y.x(0) * y.x(1) - y.c(1));

    std::vector<MultiPoly> b{r.x(0) - r.t()};
    auto wb = weil_restrict(b, 1, 2);
    CHECK(wb.restricted[0] == y.x(0));
    CHECK(wb.restricted[1] == y.x(1) - y.c(1));

    auto f2 = FqContext::make(2);
    PolyRing r2{f2, 1};
    PolyRing y2{f2, 2, false};
    std::vector<MultiPoly> c{r2.x(0).pow(2) - (r2.c(1) + r2.t())};
    auto wc = weil_restrict(c, 1, 2);
    CHECK(wc.restricted[0] == y2.x(0).pow(2) + y2.c(1));
    CHECK(wc.restricted[1] == y2.c(1));
}

TEST_CASE("solve_finite examples") {
    auto f3 = FqContext::make(3);
    PolyRing y{f3, 2, false};
    std::vector<MultiPoly> a{y.x(0).pow(2), y.c(2) * y.x(0) * y.x(1) - y.c(1)};
    CHECK_FALSE(solve_finite(a, 2));

    auto f2 = FqContext::make(2);
    PolyRing y2{f2, 1, false};
    std::vector<MultiPoly> b{y2.x(0)};
    auto sb = solve_finite(b, 1);
    REQUIRE(sb);
    CHECK(sb->at(0).code == 0);
    std::vector<MultiPoly> c{y2.x(0).pow(2) + y2.x(0) + y2.c(1)};
    CHECK_FALSE(solve_finite(c, 1));

    auto f4 = FqContext::make(2, 2);
    PolyRing y4{f4, 1, false};
    std::vector<MultiPoly> d{y4.x(0).pow(2) + y4.x(0) + y4.c(1)};
    auto sd = solve_finite(d, 1);
    REQUIRE(sd);
    CHECK(f4->to_string(sd->at(0)) == "a");
}

TEST_CASE("decide_positive examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> a{r.x(0).pow(2) - r.t()};
    auto va = decide_positive(a, 1);
    CHECK(va.status == Status::Unsat);
    REQUIRE(va.refutation);
    CHECK(va.refutation->level == 2);

    std::vector<MultiPoly> b{r.x(0).pow(2) - (r.c(1) + r.t())};
    auto vb = decide_positive(b, 1);
    REQUIRE(vb.status == Status::Sat);
    CHECK(ints(vb.sat->witness[0]) == std::vector<long long>{1, 2});
    CHECK(vb.sat->certificate.e == 0);
    CHECK(vb.sat->certificate.precision == 2);
    CHECK(vb.sat->found_at == 1);

    std::vector<MultiPoly> c{r.x(0) - r.t()};
    auto vc = decide_positive(c, 1);
    REQUIRE(vc.status == Status::Sat);
    CHECK(vc.sat->certificate.precision == 2);
    CHECK(ints(vc.sat->witness[0]) == std::vector<long long>{0, 1});

    for (std::uint32_t p : {2U, 3U, 5U}) {
        auto f = FqContext::make(p);
        PolyRing rp{f, 1};
        std::vector<MultiPoly> s{rp.x(0).pow(p) - rp.t()};
        auto v = decide_positive(s, 1);
        CHECK(v.status == Status::Unsat);
        REQUIRE(v.refutation);
        CHECK(v.refutation->level == 2);
    }

    SearchOptions tight;
    tight.schedule.max_precision = 1;
    auto vt = decide_positive(b, 1, tight);
    CHECK(vt.status == Status::Unknown);
    CHECK(vt.reason == "precision-exhausted");
}

TEST_CASE("truncation equivalence against brute force") {
    for (std::uint32_t p : {2U, 3U}) {
        auto f = FqContext::make(p);
        for (std::size_t m : {1U, 2U}) {
            PolyRing r{f, m};
            std::mt19937 rng(p * 100 + static_cast<unsigned>(m));
            const int max_n = m == 1 ? 4 : 2;
            for (int it = 0; it < 25; ++it) {
                std::vector<MultiPoly> sys{random_poly(r, rng, 3, 3)};
                if (m == 2) sys.push_back(random_poly(r, rng, 2, 2));
                for (int n = 1; n <= max_n; ++n) {
                    const auto oracle = brute_force(sys, m, n, f);
                    const auto w = weil_restrict(sys, m, n);
                    const auto fin = solve_finite(w.restricted, m * static_cast<std::size_t>(n));
                    const auto tr = solve_truncated(sys, m, n, 1);
                    CHECK(oracle.has_value() == fin.has_value());
                    CHECK(oracle.has_value() == !tr.solutions.empty());
                    if (oracle && fin) {
                        CHECK(w.point(*fin) == *oracle);
                        CHECK(tr.solutions.front() == *oracle);
                    }
                    if (!oracle) {
                        // monotonicity: stays unsolvable at higher levels
                        for (int n2 = n + 1; n2 <= max_n; ++n2) CHECK_FALSE(brute_force(sys, m, n2, f));
                    }
                }
            }
        }
    }
}

TEST_CASE("threaded search is deterministic") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2};
    std::mt19937 rng(9);
    for (int it = 0; it < 10; ++it) {
        std::vector<MultiPoly> sys{random_poly(r, rng, 3, 3)};
        const auto a = solve_truncated(sys, 2, 3, 50, 1LL << 20, 1);
        const auto b = solve_truncated(sys, 2, 3, 50, 1LL << 20, 4);
        CHECK(a.solutions == b.solutions);
        const auto w = weil_restrict(sys, 2, 2);
        CHECK(solve_all(w.restricted, 4, 20, 1) == solve_all(w.restricted, 4, 20, 3));
    }
}

TEST_CASE("SAT verdicts do not regress with finer schedules") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2};
    std::mt19937 rng(21);
    int sats = 0;
    for (int it = 0; it < 30; ++it) {
        std::vector<MultiPoly> sys{random_poly(r, rng, 3, 3) + r.x(0)};
        SearchOptions small;
        small.schedule.max_precision = 8;
        SearchOptions big;
        big.schedule.max_precision = 32;
        const auto a = decide_positive(sys, 2, small);
        if (a.status != Status::Sat) continue;
        ++sats;
        const auto b = decide_positive(sys, 2, big);
        REQUIRE(b.status == Status::Sat);
        const int n = a.sat->found_at - a.sat->certificate.e;
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(a.sat->witness[j].truncated(std::max(1, n)) == b.sat->witness[j].truncated(std::max(1, n)));
        if (b.status == Status::Unsat) CHECK(false);
    }
    CHECK(sats > 0);
}

TEST_CASE("verdict trichotomy") {
    auto f2 = FqContext::make(2);
    PolyRing r{f2, 1};
    std::vector<std::vector<MultiPoly>> cases{{r.x(0).pow(2) + r.x(0) + r.c(1)},
                                              {r.x(0) * r.x(0) - r.t() * r.t()},
                                              {r.x(0) - r.t().pow(2)}};
    for (const auto& sys : cases) {
        const auto v = decide_positive(sys, 1);
        const int flags = (v.status == Status::Sat) + (v.status == Status::Unsat) + (v.status == Status::Unknown);
        CHECK(flags == 1);
        CHECK(v.sat.has_value() == (v.status == Status::Sat));
        CHECK(v.refutation.has_value() == (v.status == Status::Unsat));
        CHECK(v.reason.empty() == (v.status != Status::Unknown));
    }
}
