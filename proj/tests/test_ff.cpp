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
#include <set>

#include "laurent/error.hpp"
#include "laurent/ff.hpp"

using laurent::Error;
using laurent::ff::FqContext;
using laurent::ff::FqElem;

TEST_CASE("context construction") {
    auto f2 = FqContext::make(2);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus().empty());

    auto f4 = FqContext::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->q() == 4);

    CHECK_THROWS_AS(FqContext::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // (x+1)^2
    CHECK_THROWS_AS(FqContext::make(4), Error);
    CHECK_THROWS_AS(FqContext::make(3, 2, std::vector<std::uint32_t>{1, 1}), Error);  // wrong degree
}

TEST_CASE("default modulus is the smallest irreducible") {
    CHECK(FqContext::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(FqContext::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FqContext::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("field spec strings") {
    auto f = FqContext::parse("p=2 n=2 modulus=1,1,1");
    CHECK(f->q() == 4);
    CHECK(FqContext::parse("p=5")->q() == 5);
    CHECK_THROWS_AS(FqContext::parse("p=6"), Error);
    CHECK_THROWS_AS(FqContext::parse("n=2"), Error);
    CHECK_THROWS_AS(FqContext::parse("p=2 n=2 modulus=1,0,1"), Error);
}

TEST_CASE("arithmetic examples") {
    auto f2 = FqContext::make(2);
    CHECK(f2->add(f2->one(), f2->one()).is_zero());

    auto f4 = FqContext::make(2, 2);
    const FqElem a = f4->generator();
    // a^2 = a + 1 modulo x^2 + x + 1
    CHECK(f4->mul(a, a) == f4->add(a, f4->one()));
    CHECK(f4->to_string(f4->mul(a, a)) == "a+1");

    auto f3 = FqContext::make(3);
    CHECK(f3->inv(f3->from_int(2)) == f3->from_int(2));
    CHECK_THROWS_AS(f3->inv(f3->zero()), Error);
    CHECK(f3->from_int(-1) == f3->from_int(2));
}

TEST_CASE("enumeration order") {
    auto f4 = FqContext::make(2, 2);
    auto all = f4->enumerate();
    REQUIRE(all.size() == 4);
    CHECK(f4->to_string(all[0]) == "0");
    CHECK(f4->to_string(all[1]) == "1");
    CHECK(f4->to_string(all[2]) == "a");
    CHECK(f4->to_string(all[3]) == "a+1");
    auto f3 = FqContext::make(3)->enumerate();
    CHECK(f3 == std::vector<FqElem>{{0}, {1}, {2}});
}

TEST_CASE("field axioms over full enumeration") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 9}}) {
        auto f = FqContext::make(p, n);
        const auto all = f->enumerate();
        std::set<std::uint32_t> codes;
        for (auto x : all) codes.insert(x.code);
        CHECK(codes.size() == f->q());
        std::mt19937 rng(17 + p * 31 + n);
        std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
        for (int it = 0; it < 300; ++it) {
            FqElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->add(a, f->neg(a)).is_zero());
        }
        for (auto a : all) {
            CHECK(f->pow(a, f->q()) == a);
            CHECK(f->pow(f->pth_root(a), p) == a);
            if (!a.is_zero()) CHECK(f->mul(f->inv(a), a) == f->one());
        }
        if (f->q() <= 64) {
            for (auto a : all)
                for (auto b : all) {
                    CHECK(codes.count(f->add(a, b).code) == 1);
                    CHECK(codes.count(f->mul(a, b).code) == 1);
                }
        }
    }
}
