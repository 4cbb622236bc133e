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

#include <map>
#include <random>

#include "helpers.hpp"
#include "laurent/frontend.hpp"

using namespace testing_helpers;
using laurent::ff::FqContext;
using laurent::poly::RationalFunction;
using laurent::poly::UPoly;
using namespace laurent::frontend;
using laurent::greenberg::Status;

namespace {

Status decide_text(const std::string& text, const Field& f) { return decide(parse(text, f), f).verdict.status; }

int error_column(const std::string& text, const Field& f) {
    try {
        parse(text, f);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

// Direct evaluation of a term at a point of F_q(t), independent of to_polynomial.
RationalFunction eval(const Term& t, const std::map<std::string, RationalFunction>& at, const Field& f) {
    const auto* ctx = f.get();
    switch (t.kind) {
        case Term::Kind::Var: return at.at(t.name);
        case Term::Kind::Int: return RationalFunction::constant(ctx, ctx->from_int(t.value));
        case Term::Kind::Uniformizer: return RationalFunction::t(ctx);
        case Term::Kind::Generator: return RationalFunction::constant(ctx, ctx->generator());
        case Term::Kind::Add: return eval(t.args[0], at, f) + eval(t.args[1], at, f);
        case Term::Kind::Sub: return eval(t.args[0], at, f) - eval(t.args[1], at, f);
        case Term::Kind::Mul: return eval(t.args[0], at, f) * eval(t.args[1], at, f);
        case Term::Kind::Div: return eval(t.args[0], at, f) / eval(t.args[1], at, f);
        case Term::Kind::Neg: return -eval(t.args[0], at, f);
        case Term::Kind::Pow: return eval(t.args[0], at, f).pow(static_cast<unsigned>(t.value));
    }
    return RationalFunction(ctx);
}

bool holds(const Formula& phi, const std::map<std::string, RationalFunction>& at, const Field& f) {
    switch (phi.kind) {
        case Formula::Kind::Eq: return (eval(phi.terms[0], at, f) - eval(phi.terms[1], at, f)).is_zero();
        case Formula::Kind::InRing: {
            const auto v = eval(phi.terms[0], at, f);
            return v.is_zero() || v.valuation() >= 0;
        }
        case Formula::Kind::Not: return !holds(phi.args[0], at, f);
        case Formula::Kind::And:
            for (const auto& a : phi.args)
                if (!holds(a, at, f)) return false;
            return true;
        case Formula::Kind::Or:
            for (const auto& a : phi.args)
                if (holds(a, at, f)) return true;
            return false;
    }
    return false;
}

bool system_holds(const laurent::resolve::AffineSystem& s, const std::vector<MultiPoly>& images) {
    for (const auto& e : s.equations)
        if (!e.substitute(images).is_zero()) return false;
    return !s.inequation || !s.inequation->substitute(images).is_zero();
}

}  // namespace

TEST_CASE("parse examples") {
    auto f3 = FqContext::make(3);
    const auto s = parse("exists X. X*X = 1 + t", f3);
    REQUIRE(s.vars.size() == 1);
    CHECK(s.vars[0].name == "X");
    CHECK(s.matrix.kind == Formula::Kind::Eq);
    CHECK(s.matrix.terms[0].kind == Term::Kind::Mul);
    CHECK(s.matrix.terms[1].kind == Term::Kind::Add);
    CHECK(s.matrix.terms[1].args[1].kind == Term::Kind::Uniformizer);

    const auto s2 = parse("exists X. O(X) & ~(X = 0)", f3);
    REQUIRE(s2.matrix.kind == Formula::Kind::And);
    CHECK(s2.matrix.args[0].kind == Formula::Kind::InRing);
    CHECK(s2.matrix.args[1].kind == Formula::Kind::Not);
    CHECK(s2.matrix.args[1].args[0].kind == Formula::Kind::Eq);

    CHECK(error_column("exists X. X = )", f3) == 13);
    CHECK_THROWS_AS(parse("exists X. X*X = Y", f3), laurent::Error);
    CHECK_THROWS_AS(parse("exists X. 1/X = 1", f3), laurent::Error);
    CHECK(parse("exists X. w*X = 1", f3) == parse("exists X. t*X = 1", f3));
    CHECK(parse("exists X. pi*X = 1", f3) == parse("exists X. t*X = 1", f3));
    CHECK(parse("O(t) & ~O(1/t)", f3).vars.empty());
}

TEST_CASE("printing is involutive under re-parsing") {
    auto f4 = FqContext::make(2, 2);
    const std::vector<std::string> bank = {
        "exists X, Y. X*Y = 1 & ~(X = 1)",
        "exists X. ~(O(X) | X^2 + a*X = t/(1+t)) & (X = 0 | -X = t^3)",
        "O(t) & ~O(1/t)",
        "exists X Y. (X - Y)*(X + Y) = 2*t | ~~(X = Y)",
    };
    for (const auto& text : bank) {
        const auto s = parse(text, f4);
        const auto printed = to_string(s);
        INFO(text << " -> " << printed);
        const auto again = parse(printed, f4);
        CHECK(again == s);
        CHECK(to_string(again) == printed);
        const Sentence nnf{s.vars, to_nnf(s.matrix)};
        CHECK(parse(to_string(nnf), f4) == nnf);
    }
}

TEST_CASE("eliminate_valuation_atoms examples") {
    auto f3 = FqContext::make(3);
    // InRing(t) -> y^2 + y = t*t^2 with one fresh variable.
    const auto a = eliminate_valuation_atoms(parse("O(t)", f3));
    REQUIRE(a.vars.size() == 1);
    CHECK(a.vars[0].name == "y_1");
    CHECK(a.vars[0].fresh);
    CHECK(a.matrix.kind == Formula::Kind::Eq);
    CHECK(decide(a, f3).verdict.status == Status::Sat);

    const auto b = eliminate_valuation_atoms(parse("O(1/t)", f3));
    CHECK(decide(b, f3).verdict.status == Status::Unsat);

    // ~InRing(1/t) -> t*(1/t)*w = 1 & y^2 + y = t*w^2.
    const auto c = eliminate_valuation_atoms(parse("~O(1/t)", f3));
    REQUIRE(c.vars.size() == 2);
    CHECK(c.vars[0].fresh);
    CHECK(c.vars[1].fresh);
    CHECK(c.matrix.kind == Formula::Kind::And);
    CHECK(decide(c, f3).verdict.status == Status::Sat);

    // Names already in use are skipped.
    const auto d = eliminate_valuation_atoms(parse("exists y_1. O(y_1)", f3));
    REQUIRE(d.vars.size() == 2);
    CHECK(d.vars[1].name == "y_2");
}

TEST_CASE("to_systems examples") {
    auto f3 = FqContext::make(3);
    PolyRing r{f3, 2};
    const auto x = r.x(0), y = r.x(1);

    const auto one = to_systems(parse("exists X, Y. X*Y = 1 & ~(X = 1) & ~(Y = t)", f3), f3);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].equations.size() == 1);
    CHECK(one[0].equations[0] == x * y - r.c(1));
    REQUIRE(one[0].inequation);
    CHECK(*one[0].inequation == (x - r.c(1)) * (y - r.t()));

    const auto two = to_systems(parse("exists X, Y. X = 0 | Y = 1", f3), f3);
    REQUIRE(two.size() == 2);
    CHECK(two[0].equations[0] == x);
    CHECK(two[1].equations[0] == y - r.c(1));

    const auto cleared = to_systems(parse("exists X, Y. X = 1/t * Y", f3), f3);
    REQUIRE(cleared.size() == 1);
    REQUIRE(cleared[0].equations.size() == 1);
    const auto& e = cleared[0].equations[0];
    CHECK((e == r.t() * x - y || e == y - r.t() * x));
}

TEST_CASE("decide examples") {
    auto f3 = FqContext::make(3);
    const auto sat = decide(parse("exists X. X*X = 1+t", f3), f3);
    REQUIRE(sat.verdict.status == Status::Sat);
    CHECK(ints(sat.verdict.sat->original[0].truncated(2)) == std::vector<long long>{1, 2});
    CHECK(sat.inverted.empty());

    const auto unsat = decide(parse("exists X. X*X = t", f3), f3);
    REQUIRE(unsat.verdict.status == Status::Unsat);
    CHECK(unsat.verdict.refutation->level == 2);

    CHECK(decide_text("O(t) & ~O(1/t)", f3) == Status::Sat);
    CHECK(decide_text("O(1/t)", f3) == Status::Unsat);

    // Needs a root of negative valuation.
    const auto inv = decide(parse("exists X. t*X = 1", f3), f3);
    REQUIRE(inv.verdict.status == Status::Sat);
    CHECK(inv.inverted == std::vector<std::size_t>{0});
}

TEST_CASE("valuation atoms on the ground-term bank") {
    for (auto [p, n] : {std::pair{2U, 1U}, {3U, 1U}, {2U, 2U}}) {
        auto f = FqContext::make(p, n);
        for (std::uint64_t code = 1; code < f->q(); ++code) {
            const std::string c = n == 1 ? std::to_string(code) : (code == 1 ? "1" : code == 2 ? "a" : "(a+1)");
            for (int k = -3; k <= 3; ++k) {
                const std::string x =
                    k >= 0 ? c + "*t^" + std::to_string(k) : c + "/t^" + std::to_string(-k);
                INFO("q=" << f->q() << " x=" << x);
                CHECK((decide_text("O(" + x + ")", f) == Status::Sat) == (k >= 0));
                CHECK((decide_text("~O(" + x + ")", f) == Status::Sat) == (k < 0));
            }
        }
    }
}

TEST_CASE("to_systems preserves models at polynomial points") {
    auto f2 = FqContext::make(2);
    auto f3 = FqContext::make(3);
    const std::vector<std::string> atoms = {
        "X*X = 1 + t", "X = t", "t*X = 1", "X^2 + X = t/(1+t)", "X*(X - 1) = 0", "X^3 = X", "X = 1/t - 1/t",
    };
    std::mt19937 rng(20261014);
    for (const auto& f : {f2, f3}) {
        for (int trial = 0; trial < 60; ++trial) {
            auto atom = [&] {
                std::string a = atoms[rng() % atoms.size()];
                return (rng() % 3 == 0) ? "~(" + a + ")" : a;
            };
            std::string text = "exists X. ";
            const int clauses = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < clauses; ++i) {
                if (i) text += " | ";
                text += "(" + atom() + " & " + atom() + ")";
            }
            if (rng() % 2) text = "exists X. ~(" + text.substr(10) + ")";
            const auto s = parse(text, f);
            const auto systems = to_systems(s, f);
            PolyRing r{f, 1};
            // Every x in F_q[t] of degree < 3.
            const std::uint64_t q = f->q();
            for (std::uint64_t code = 0; code < q * q * q; ++code) {
                std::vector<FqElem> cs;
                MultiPoly image = r.c(0);
                std::uint64_t rest = code;
                for (int k = 0; k < 3; ++k, rest /= q) {
                    cs.push_back(f->from_int(static_cast<long long>(rest % q)));
                    image += r.c(cs.back()) * r.t().pow(static_cast<unsigned>(k));
                }
                const RationalFunction value(UPoly(f.get(), cs));
                const bool direct = holds(s.matrix, {{"X", value}}, f);
                bool via = false;
                for (const auto& sys : systems) via = via || system_holds(sys, {image});
                INFO(text << " at code " << code);
                CHECK(direct == via);
            }
        }
    }
}

TEST_CASE("decide is independent of the thread count") {
    auto f3 = FqContext::make(3);
    laurent::resolve::ResolveConfig cfg;
    for (const std::string text : {"exists X. X*X = t | X*X = 1+t", "exists X Y. X*Y = 1 & ~(X = 1)",
                                   "exists X. X*X = t", "exists X. O(X) & ~O(t*X*X)"}) {
        const auto s = parse(text, f3);
        const auto a = decide(s, f3, cfg, 1);
        const auto b = decide(s, f3, cfg, 4);
        INFO(text);
        CHECK(a.verdict.status == b.verdict.status);
        CHECK(a.verdict.trace == b.verdict.trace);
        CHECK(a.branches == b.branches);
        if (a.verdict.sat && b.verdict.sat) {
            REQUIRE(a.verdict.sat->original.size() == b.verdict.sat->original.size());
            for (std::size_t i = 0; i < a.verdict.sat->original.size(); ++i)
                CHECK(a.verdict.sat->original[i] == b.verdict.sat->original[i]);
        }
    }
}
