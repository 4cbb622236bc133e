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
#include "laurent/error.hpp"
#include "laurent/hensel.hpp"

using namespace testing_helpers;
using laurent::ff::FqContext;
using laurent::hensel::certify_liftable;
using laurent::hensel::Lifter;
using laurent::hensel::newton_lift;
using laurent::hensel::Point;
using laurent::hensel::smooth_perturb;

namespace {

bool residuals_vanish(const std::vector<MultiPoly>& sys, const Point& x, int n) {
    for (const auto& f : sys)
        if (laurent::series::evaluate(f, x).valuation().value < n) return false;
    return true;
}

bool congruent(const Point& a, const Point& b, int n) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].truncated(n) != b[j].truncated(n)) return false;
    return true;
}

}  // namespace

TEST_CASE("certify_liftable examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> a{r.x(0).pow(2) - (r.c(1) + r.t())};
    auto c = certify_liftable(a, {series(f3, {1}, 1)});
    REQUIRE(c);
    CHECK(c->e == 0);
    CHECK(c->precision == 1);
    CHECK(c->cols == std::vector<std::size_t>{0});

    std::vector<MultiPoly> b{r.x(0).pow(2) - r.t()};
    CHECK_FALSE(certify_liftable(b, {series(f3, {0, 0}, 2)}));

    std::vector<MultiPoly> lin{r.x(0) - r.t()};
    auto cl = certify_liftable(lin, {series(f3, {0, 1, 0}, 3)});
    REQUIRE(cl);
    CHECK(cl->e == 0);
}

TEST_CASE("certificate with positive e") {
    // X^2 - t^2 at X = t: minor 2X has valuation 1, needs N > 2.
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> sys{r.x(0).pow(2) - r.t().pow(2)};
    CHECK_FALSE(certify_liftable(sys, {series(f3, {0, 1}, 2)}));
    auto c = certify_liftable(sys, {series(f3, {0, 1, 0}, 3)});
    REQUIRE(c);
    CHECK(c->e == 1);
    // X^2 - t^2 - t^3 = (X - t sqrt(1+t))(X + ...), starting at X = t mod t^3.
    std::vector<MultiPoly> s2{r.x(0).pow(2) - r.t().pow(2) - r.t().pow(3)};
    Point x{series(f3, {0, 1, 0, 0}, 4)};
    CHECK_FALSE(certify_liftable(s2, x));
    Point x5{series(f3, {0, 1, 2, 1, 0}, 5)};
    auto c2 = certify_liftable(s2, x5);
    REQUIRE(c2);
    const auto out = newton_lift(s2, x5, *c2, 12);
    CHECK(residuals_vanish(s2, out, 12));
    CHECK(congruent(out, x5, 5 - c2->e));
}

TEST_CASE("overdetermined systems use a localized membership check") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> sys{r.x(0).pow(2) - r.x(0), r.x(0)};
    auto c = certify_liftable(sys, {series(f3, {0}, 1)});
    REQUIRE(c);
    CHECK(c->rows == std::vector<std::size_t>{1});
    CHECK_FALSE(certify_liftable(sys, {series(f3, {1}, 1)}));

    std::vector<MultiPoly> same{r.x(0) - r.t(), r.x(0).pow(2) - r.t().pow(2)};
    auto c2 = certify_liftable(same, {series(f3, {0, 1}, 2)});
    REQUIRE(c2);
    CHECK(c2->rows == std::vector<std::size_t>{0});
}

TEST_CASE("unit ideal has no certificate") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> sys{r.x(0), r.x(0) - r.t()};
    CHECK_FALSE(certify_liftable(sys, {series(f3, {0}, 1)}));
}

TEST_CASE("newton_lift examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> a{r.x(0).pow(2) - (r.c(1) + r.t())};
    Point x{series(f3, {1}, 1)};
    auto c = certify_liftable(a, x);
    REQUIRE(c);
    const auto out = newton_lift(a, x, *c, 3);
    CHECK(ints(out[0]) == std::vector<long long>{1, 2, 1});

    std::vector<MultiPoly> lin{r.x(0) - r.t()};
    Point xl{series(f3, {0, 1}, 2)};
    auto cl = certify_liftable(lin, xl);
    REQUIRE(cl);
    CHECK(ints(newton_lift(lin, xl, *cl, 6)[0]) == std::vector<long long>{0, 1, 0, 0, 0, 0});

    PolyRing r2{f3, 2};
    std::vector<MultiPoly> sys{r2.x(0) * r2.x(1) - r2.c(1), r2.x(0) - (r2.c(1) + r2.t())};
    Point p{series(f3, {1}, 1), series(f3, {1}, 1)};
    auto c2 = certify_liftable(sys, p);
    REQUIRE(c2);
    const auto o2 = newton_lift(sys, p, *c2, 2);
    CHECK(ints(o2[0]) == std::vector<long long>{1, 1});
    CHECK(ints(o2[1]) == std::vector<long long>{1, 2});
}

TEST_CASE("lifting properties on random univariate systems") {
    for (std::uint32_t p : {2U, 3U, 5U}) {
        auto f = FqContext::make(p);
        PolyRing r{f, 1};
        std::mt19937 rng(p * 31);
        std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
        int certified = 0;
        for (int it = 0; it < 40; ++it) {
            MultiPoly poly = r.x(0).pow(3);
            for (unsigned dx = 0; dx < 3; ++dx)
                for (unsigned dt = 0; dt < 3; ++dt)
                    poly += r.c(FqElem{coef(rng)}) * r.x(0).pow(dx) * r.t().pow(dt);
            std::vector<MultiPoly> sys{poly};
            Lifter lifter(sys, 1);
            for (std::uint32_t a0 = 0; a0 < p; ++a0)
                for (std::uint32_t a1 = 0; a1 < p; ++a1) {
                    Point x{TruncatedSeries(f.get(), {FqElem{a0}, FqElem{a1}, FqElem{0}}, 3)};
                    auto c = lifter.certify(x);
                    if (!c) continue;
                    ++certified;
                    const int target = 9;
                    const auto out = lifter.lift(x, *c, target);
                    CHECK(residuals_vanish(sys, out, target));
                    CHECK(congruent(out, x, 3 - c->e));
                    // quadratic convergence, two steps at a time
                    const auto& res = lifter.last_residuals();
                    for (std::size_t k = 1; k < res.size(); ++k)
                        CHECK(res[k] >= std::min(2 * res[k - 1] - 2 * c->e, target + c->e));
                    // re-lifting extends rather than changes
                    const auto further = lifter.lift(out, *lifter.certify(out), 2 * target);
                    CHECK(congruent(further, out, target));
                    CHECK(residuals_vanish(sys, further, 2 * target));
                }
        }
        CHECK(certified > 0);
    }
}

TEST_CASE("smooth_perturb examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2};
    const auto x = r.x(0), y = r.x(1);

    std::vector<MultiPoly> parab{y - x * x};
    Point p0{series(f3, {0}, 1), series(f3, {0}, 1)};
    auto c0 = certify_liftable(parab, p0);
    REQUIRE(c0);
    auto out = smooth_perturb(parab, p0, *c0, x);
    REQUIRE(out.result);
    const auto& pt = out.result->point;
    CHECK(ints(pt[0]).size() >= 3);
    CHECK(pt[0].truncated(3) == series(f3, {0, 1, 0}, 3));
    CHECK(pt[1].truncated(3) == series(f3, {0, 0, 1}, 3));
    CHECK(residuals_vanish(parab, pt, pt[0].precision()));

    std::vector<MultiPoly> hyp{x * y - r.c(1)};
    Point p1{series(f3, {1}, 1), series(f3, {1}, 1)};
    auto c1 = certify_liftable(hyp, p1);
    REQUIRE(c1);
    auto o1 = smooth_perturb(hyp, p1, *c1, x - r.c(1));
    REQUIRE(o1.result);
    const auto& q = o1.result->point;
    const auto gv = laurent::series::evaluate(x - r.c(1), q).valuation();
    CHECK(gv.exact());
    CHECK(gv.value == 1);
    CHECK(residuals_vanish(hyp, q, q[0].precision()));

    PolyRing r1{f3, 1};
    std::vector<MultiPoly> lin{r1.x(0) - r1.t()};
    Point pl{series(f3, {0, 1}, 2)};
    auto cl = certify_liftable(lin, pl);
    REQUIRE(cl);
    auto ol = smooth_perturb(lin, pl, *cl, r1.x(0));
    REQUIRE(ol.result);
    CHECK(ol.result->point == pl);
    CHECK(ol.attempts == 0);
}

TEST_CASE("smooth_perturb gives up when no free direction exists") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 1};
    std::vector<MultiPoly> lin{r.x(0) - r.t()};
    Point pl{series(f3, {0, 1}, 2)};
    auto cl = certify_liftable(lin, pl);
    REQUIRE(cl);
    auto o = smooth_perturb(lin, pl, *cl, r.x(0) - r.t());
    CHECK_FALSE(o.result);
}

TEST_CASE("smooth_perturb is deterministic and sound") {
    auto f5 = FqContext::make(5);
    PolyRing r{f5, 2};
    const auto x = r.x(0), y = r.x(1);
    std::vector<MultiPoly> cusp{y * y - x.pow(3)};
    Point p{series(f5, {1}, 1), series(f5, {1}, 1)};
    auto c = certify_liftable(cusp, p);
    REQUIRE(c);
    const auto g = x - r.c(1);
    auto a = smooth_perturb(cusp, p, *c, g);
    auto b = smooth_perturb(cusp, p, *c, g);
    REQUIRE(a.result);
    REQUIRE(b.result);
    CHECK(a.result->point == b.result->point);
    const auto& pt = a.result->point;
    CHECK(residuals_vanish(cusp, pt, pt[0].precision()));
    CHECK(laurent::series::evaluate(g, pt).valuation().exact());
    CHECK(a.result->certificate.precision == pt[0].precision());
}
