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

#include "laurent/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>

namespace laurent::frontend {

using poly::MultiPoly;
using poly::RationalFunction;
using poly::RatPoly;
using poly::RatRing;
using resolve::AffineSystem;
using resolve::Status;
using resolve::Verdict;

ParseError::ParseError(int column, const std::string& message)
    : Error("syntax error at column " + std::to_string(column) + ": " + message), column_(column) {}

bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.args == b.args;
}

bool operator==(const Formula& a, const Formula& b) {
    return a.kind == b.kind && a.terms == b.terms && a.args == b.args;
}

namespace {

struct Token {
    enum class Type { Ident, Int, Sym, End };
    Type type = Type::End;
    std::string text;
    int column = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 9) throw ParseError(col, "integer literal too large");
            out.push_back({Token::Type::Int, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (std::string_view("=&|~()+-*/^.,").find(c) != std::string_view::npos) {
            out.push_back({Token::Type::Sym, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError(col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Type::End, "", static_cast<int>(s.size()) + 1});
    return out;
}

bool is_uniformizer(const std::string& s) { return s == "t" || s == "w" || s == "pi"; }

bool contains_var(const Term& t) {
    if (t.kind == Term::Kind::Var) return true;
    return std::any_of(t.args.begin(), t.args.end(), contains_var);
}

Term node(Term::Kind k, std::vector<Term> args, int column = 0) {
    Term t;
    t.kind = k;
    t.args = std::move(args);
    t.column = column;
    return t;
}

class Parser {
public:
    Parser(std::string_view text, const ff::Field& field) : toks_(lex(text)), field_(field) {}

    Sentence sentence() {
        Sentence s;
        if (peek().type == Token::Type::Ident && peek().text == "exists") {
            advance();
            while (peek().type == Token::Type::Ident) {
                const Token& v = advance();
                if (reserved(v.text)) fail(v.column, "'" + v.text + "' cannot be a variable name");
                for (const auto& existing : s.vars)
                    if (existing.name == v.text) fail(v.column, "variable '" + v.text + "' declared twice");
                s.vars.push_back({v.text, false});
                if (is_sym(",")) advance();
            }
            if (s.vars.empty()) fail(last_, "expected a variable after 'exists'");
            expect(".");
        }
        vars_ = &s.vars;
        s.matrix = formula();
        if (peek().type != Token::Type::End) fail(last_, "unexpected '" + peek().text + "'");
        return s;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() {
        last_ = toks_[pos_].column;
        return toks_[pos_++];
    }
    bool is_sym(const char* s) const { return peek().type == Token::Type::Sym && peek().text == s; }
    [[noreturn]] void fail(int col, const std::string& msg) const { throw ParseError(std::max(col, 1), msg); }
    void expect(const char* s) {
        if (!is_sym(s)) fail(last_, std::string("expected '") + s + "'");
        advance();
    }
    bool reserved(const std::string& s) const {
        return is_uniformizer(s) || s == "exists" || s == "O" || (s == "a" && field_->n() > 1);
    }

    Formula formula() {
        Formula f = conj();
        while (is_sym("|")) {
            const int col = peek().column;
            advance();
            Formula g;
            g.kind = Formula::Kind::Or;
            g.column = col;
            Formula rhs = conj();
            g.args = {std::move(f), std::move(rhs)};
            f = std::move(g);
        }
        return f;
    }

    Formula conj() {
        Formula f = unary();
        while (is_sym("&")) {
            const int col = peek().column;
            advance();
            Formula g;
            g.kind = Formula::Kind::And;
            g.column = col;
            Formula rhs = unary();
            g.args = {std::move(f), std::move(rhs)};
            f = std::move(g);
        }
        return f;
    }

    Formula unary() {
        if (is_sym("~")) {
            Formula f;
            f.kind = Formula::Kind::Not;
            f.column = peek().column;
            advance();
            f.args.push_back(unary());
            return f;
        }
        if (is_sym("(")) {
            const std::size_t save = pos_;
            const int save_last = last_;
            try {
                advance();
                Formula f = formula();
                expect(")");
                return f;
            } catch (const ParseError& first) {
                pos_ = save;
                last_ = save_last;
                try {
                    return atom();
                } catch (const ParseError& second) {
                    if (first.column() > second.column()) throw first;
                    throw;
                }
            }
        }
        return atom();
    }

    Formula atom() {
        Formula f;
        if (peek().type == Token::Type::Ident && peek().text == "O") {
            f.kind = Formula::Kind::InRing;
            f.column = peek().column;
            advance();
            expect("(");
            f.terms.push_back(term());
            expect(")");
            return f;
        }
        f.kind = Formula::Kind::Eq;
        f.column = peek().column;
        Term lhs = term();
        expect("=");
        Term rhs = term();
        f.terms = {std::move(lhs), std::move(rhs)};
        return f;
    }

    Term term() {
        Term t;
        if (is_sym("-")) {
            const int col = peek().column;
            advance();
            Term arg = prod();
            t = node(Term::Kind::Neg, {std::move(arg)}, col);
        } else {
            t = prod();
        }
        while (is_sym("+") || is_sym("-")) {
            const bool plus = peek().text == "+";
            const int col = peek().column;
            advance();
            Term rhs = prod();
            t = node(plus ? Term::Kind::Add : Term::Kind::Sub, {std::move(t), std::move(rhs)}, col);
        }
        return t;
    }

    Term prod() {
        Term t = power();
        while (is_sym("*") || is_sym("/")) {
            const bool mul = peek().text == "*";
            const int col = peek().column;
            advance();
            Term rhs = power();
            if (!mul) {
                if (contains_var(rhs)) fail(col, "division by a term with variables");
                if (to_polynomial(rhs, {}, field_).is_zero()) fail(col, "division by zero");
            }
            t = node(mul ? Term::Kind::Mul : Term::Kind::Div, {std::move(t), std::move(rhs)}, col);
        }
        return t;
    }

    Term power() {
        Term t = primary();
        if (is_sym("^")) {
            const int col = peek().column;
            advance();
            if (peek().type != Token::Type::Int) fail(last_, "expected an integer exponent");
            Term p = node(Term::Kind::Pow, {std::move(t)}, col);
            p.value = std::stoll(advance().text);
            return p;
        }
        return t;
    }

    Term primary() {
        const Token& tok = peek();
        if (tok.type == Token::Type::Int) {
            Term t = node(Term::Kind::Int, {}, tok.column);
            t.value = std::stoll(advance().text);
            return t;
        }
        if (tok.type == Token::Type::Ident) {
            const std::string name = tok.text;
            const int col = tok.column;
            if (is_uniformizer(name)) {
                advance();
                return node(Term::Kind::Uniformizer, {}, col);
            }
            if (name == "a" && field_->n() > 1) {
                advance();
                return node(Term::Kind::Generator, {}, col);
            }
            if (name == "O" || name == "exists") fail(col, "unexpected '" + name + "'");
            bool bound = false;
            for (const auto& v : *vars_)
                if (v.name == name) bound = true;
            if (!bound) fail(col, "unbound variable '" + name + "'");
            advance();
            Term t = node(Term::Kind::Var, {}, col);
            t.name = name;
            return t;
        }
        if (is_sym("(")) {
            advance();
            Term t = term();
            expect(")");
            return t;
        }
        if (is_sym("-")) {
            const int col = peek().column;
            advance();
            Term arg = primary();
            return node(Term::Kind::Neg, {std::move(arg)}, col);
        }
        if (tok.type == Token::Type::End) fail(last_, "unexpected end of input");
        fail(last_, "unexpected '" + tok.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int last_ = 1;
    const ff::Field& field_;
    const std::vector<Variable>* vars_ = nullptr;
};

}  // namespace

Sentence parse(std::string_view text, const ff::Field& field) {
    Parser p(text, field);
    return p.sentence();
}

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.name;
        case Term::Kind::Int: return std::to_string(t.value);
        case Term::Kind::Uniformizer: return "t";
        case Term::Kind::Generator: return "a";
        case Term::Kind::Add: return "(" + to_string(t.args[0]) + " + " + to_string(t.args[1]) + ")";
        case Term::Kind::Sub: return "(" + to_string(t.args[0]) + " - " + to_string(t.args[1]) + ")";
        case Term::Kind::Mul: return "(" + to_string(t.args[0]) + " * " + to_string(t.args[1]) + ")";
        case Term::Kind::Div: return "(" + to_string(t.args[0]) + " / " + to_string(t.args[1]) + ")";
        case Term::Kind::Neg: return "(-" + to_string(t.args[0]) + ")";
        case Term::Kind::Pow: return "(" + to_string(t.args[0]) + "^" + std::to_string(t.value) + ")";
    }
    return "";
}

std::string to_string(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Eq: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
        case Formula::Kind::InRing: return "O(" + to_string(f.terms[0]) + ")";
        case Formula::Kind::Not: return "~(" + to_string(f.args[0]) + ")";
        case Formula::Kind::And: return "(" + to_string(f.args[0]) + " & " + to_string(f.args[1]) + ")";
        case Formula::Kind::Or: return "(" + to_string(f.args[0]) + " | " + to_string(f.args[1]) + ")";
    }
    return "";
}

std::string to_string(const Sentence& s) {
    std::string out;
    if (!s.vars.empty()) {
        out = "exists";
        for (const auto& v : s.vars) out += " " + v.name;
        out += ". ";
    }
    return out + to_string(s.matrix);
}

Formula to_nnf(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Eq:
        case Formula::Kind::InRing: return f;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Formula g = f;
            g.args = {to_nnf(f.args[0]), to_nnf(f.args[1])};
            return g;
        }
        case Formula::Kind::Not: break;
    }
    const Formula& inner = f.args[0];
    switch (inner.kind) {
        case Formula::Kind::Eq:
        case Formula::Kind::InRing: return f;
        case Formula::Kind::Not: return to_nnf(inner.args[0]);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            Formula g;
            g.kind = inner.kind == Formula::Kind::And ? Formula::Kind::Or : Formula::Kind::And;
            g.column = inner.column;
            for (const auto& a : inner.args) {
                Formula n;
                n.kind = Formula::Kind::Not;
                n.column = a.column;
                n.args = {a};
                g.args.push_back(to_nnf(n));
            }
            return g;
        }
    }
    return f;
}

namespace {

Term var_term(const std::string& name) {
    Term t = node(Term::Kind::Var, {});
    t.name = name;
    return t;
}

Term int_term(long long v) {
    Term t = node(Term::Kind::Int, {});
    t.value = v;
    return t;
}

Term square(Term a) {
    Term p = node(Term::Kind::Pow, {std::move(a)});
    p.value = 2;
    return p;
}

Formula equation(Term l, Term r) {
    Formula f;
    f.kind = Formula::Kind::Eq;
    f.terms = {std::move(l), std::move(r)};
    return f;
}

// y^2 + y = t * s^2
Formula artin_schreier(const std::string& y, const Term& s) {
    return equation(node(Term::Kind::Add, {square(var_term(y)), var_term(y)}),
                    node(Term::Kind::Mul, {node(Term::Kind::Uniformizer, {}), square(s)}));
}

struct Eliminator {
    std::vector<Variable>& vars;
    std::set<std::string> used;
    int counter = 0;

    std::string fresh() {
        std::string name;
        do name = "y_" + std::to_string(++counter);
        while (used.count(name));
        used.insert(name);
        vars.push_back({name, true});
        return name;
    }

    Formula run(const Formula& f) {
        switch (f.kind) {
            case Formula::Kind::Eq: return f;
            case Formula::Kind::InRing: return artin_schreier(fresh(), f.terms[0]);
            case Formula::Kind::And:
            case Formula::Kind::Or: {
                Formula g = f;
                g.args = {run(f.args[0]), run(f.args[1])};
                return g;
            }
            case Formula::Kind::Not: {
                const Formula& a = f.args[0];
                if (a.kind != Formula::Kind::InRing) return f;
                const std::string w = fresh();
                const std::string y = fresh();
                Formula both;
                both.kind = Formula::Kind::And;
                both.column = f.column;
                Term tsw = node(Term::Kind::Mul,
                                {node(Term::Kind::Mul, {node(Term::Kind::Uniformizer, {}), a.terms[0]}), var_term(w)});
                both.args = {equation(std::move(tsw), int_term(1)), artin_schreier(y, var_term(w))};
                return both;
            }
        }
        return f;
    }
};

struct Literal {
    bool positive = true;
    const Formula* atom = nullptr;
};

std::vector<std::vector<Literal>> dnf(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Eq: return {{Literal{true, &f}}};
        case Formula::Kind::Not:
            if (f.args[0].kind != Formula::Kind::Eq) throw Error("formula is not in negation normal form");
            return {{Literal{false, &f.args[0]}}};
        case Formula::Kind::InRing: throw Error("valuation atoms must be eliminated first");
        case Formula::Kind::Or: {
            auto a = dnf(f.args[0]);
            auto b = dnf(f.args[1]);
            a.insert(a.end(), b.begin(), b.end());
            return a;
        }
        case Formula::Kind::And: {
            const auto a = dnf(f.args[0]);
            const auto b = dnf(f.args[1]);
            std::vector<std::vector<Literal>> out;
            for (const auto& x : a)
                for (const auto& y : b) {
                    auto c = x;
                    c.insert(c.end(), y.begin(), y.end());
                    out.push_back(std::move(c));
                }
            return out;
        }
    }
    return {};
}

}  // namespace

Sentence eliminate_valuation_atoms(const Sentence& s) {
    Sentence out;
    out.vars = s.vars;
    Eliminator e{out.vars, {}, 0};
    for (const auto& v : s.vars) e.used.insert(v.name);
    out.matrix = e.run(to_nnf(s.matrix));
    return out;
}

RatPoly to_polynomial(const Term& t, const std::vector<Variable>& vars, const ff::Field& field) {
    const auto* ctx = field.get();
    const RatRing ring{ctx};
    const std::size_t m = vars.size();
    auto constant = [&](const RationalFunction& r) { return RatPoly::constant(ring, m, false, r); };
    switch (t.kind) {
        case Term::Kind::Var:
            for (std::size_t j = 0; j < m; ++j)
                if (vars[j].name == t.name) return RatPoly::variable(ring, m, false, j);
            throw Error("unbound variable '" + t.name + "'");
        case Term::Kind::Int: return constant(ring.from_int(t.value));
        case Term::Kind::Uniformizer: return constant(RationalFunction::t(ctx));
        case Term::Kind::Generator: return constant(RationalFunction::constant(ctx, ctx->generator()));
        case Term::Kind::Add: return to_polynomial(t.args[0], vars, field) + to_polynomial(t.args[1], vars, field);
        case Term::Kind::Sub: return to_polynomial(t.args[0], vars, field) - to_polynomial(t.args[1], vars, field);
        case Term::Kind::Mul: return to_polynomial(t.args[0], vars, field) * to_polynomial(t.args[1], vars, field);
        case Term::Kind::Neg: return -to_polynomial(t.args[0], vars, field);
        case Term::Kind::Pow:
            return to_polynomial(t.args[0], vars, field).pow(static_cast<unsigned>(t.value));
        case Term::Kind::Div: {
            const auto d = to_polynomial(t.args[1], vars, field);
            if (!d.is_constant()) throw Error("division by a term with variables");
            if (d.is_zero()) throw Error("division by zero");
            return to_polynomial(t.args[0], vars, field).scaled(d.constant_value().inverse());
        }
    }
    throw Error("bad term");
}

std::vector<AffineSystem> to_systems(const Sentence& s, const ff::Field& field) {
    const std::size_t m = s.vars.size();
    std::vector<AffineSystem> out;
    const Formula nnf = to_nnf(s.matrix);
    for (const auto& conj : dnf(nnf)) {
        AffineSystem sys;
        sys.nvars = m;
        for (const auto& lit : conj) {
            const auto diff = to_polynomial(lit.atom->terms[0], s.vars, field) -
                              to_polynomial(lit.atom->terms[1], s.vars, field);
            const auto cleared = poly::clear_denominators(diff);
            if (lit.positive) {
                sys.equations.push_back(cleared);
            } else {
                sys.inequation = sys.inequation ? *sys.inequation * cleared : cleared;
            }
        }
        out.push_back(std::move(sys));
    }
    return out;
}

namespace {

MultiPoly invert_poly(const MultiPoly& f, std::size_t j) {
    const unsigned d = f.degree_in(j);
    std::vector<MultiPoly::Term> terms;
    const std::size_t m = f.nvars();
    for (const auto& term : f.terms()) {
        auto e = term.exp;
        const unsigned k = e[j];
        e[j] = static_cast<std::uint16_t>(d - k);
        e[m] = static_cast<std::uint16_t>(e[m] + d - k);
        terms.push_back({std::move(e), term.coeff});
    }
    return MultiPoly::from_terms(f.ring(), m, true, std::move(terms));
}

}  // namespace

AffineSystem invert_chart(const AffineSystem& s, const std::vector<std::size_t>& inverted) {
    if (inverted.empty()) return s;
    AffineSystem out = s;
    const auto* ctx = s.equations.empty() ? s.inequation->ring().ctx : s.equations.front().ring().ctx;
    const poly::FqRing ring{ctx};
    MultiPoly g = s.inequation ? *s.inequation : MultiPoly::constant(ring, s.nvars, true, ctx->one());
    for (auto j : inverted) {
        for (auto& f : out.equations) f = invert_poly(f, j);
        g = invert_poly(g, j) * MultiPoly::variable(ring, s.nvars, true, j);
    }
    out.inequation = g;
    return out;
}

namespace {

struct Task {
    std::size_t disjunct;
    std::vector<std::size_t> inverted;
    AffineSystem system;
};

std::string chart_name(const Task& t, const std::vector<Variable>& vars) {
    std::string s = "disjunct " + std::to_string(t.disjunct + 1) + ", chart ";
    if (t.inverted.empty()) return s + "O^" + std::to_string(vars.size());
    s += "inverted {";
    for (std::size_t i = 0; i < t.inverted.size(); ++i) s += (i ? ", " : "") + vars[t.inverted[i]].name;
    return s + "}";
}

}  // namespace

Outcome decide(const Sentence& s, const ff::Field& field, const resolve::ResolveConfig& config, int threads) {
    const Sentence plain = eliminate_valuation_atoms(s);
    const auto systems = to_systems(plain, field);
    std::vector<std::size_t> user;
    for (std::size_t j = 0; j < plain.vars.size(); ++j)
        if (!plain.vars[j].fresh) user.push_back(j);
    if (user.size() > 12) throw Error("too many variables ranging over the Laurent series field");
    std::vector<Task> tasks;
    for (std::size_t d = 0; d < systems.size(); ++d)
        for (std::uint32_t mask = 0; mask < (1U << user.size()); ++mask) {
            std::vector<std::size_t> inv;
            for (std::size_t i = 0; i < user.size(); ++i)
                if (mask & (1U << i)) inv.push_back(user[i]);
            tasks.push_back({d, inv, invert_chart(systems[d], inv)});
        }

    Outcome out;
    for (const auto& v : plain.vars) out.names.push_back(v.name);
    std::vector<Verdict> results;
    auto run = [&](std::size_t i, int inner_threads) {
        auto cfg = config;
        cfg.search.threads = inner_threads;
        cfg.names = out.names;
        return resolve::decide_existential(tasks[i].system, cfg);
    };
    const std::size_t width = threads > 1 ? static_cast<std::size_t>(threads) : 1;
    std::optional<std::size_t> winner;
    for (std::size_t start = 0; start < tasks.size() && !winner; start += width) {
        const std::size_t end = std::min(tasks.size(), start + width);
        if (width == 1) {
            results.push_back(run(start, 1));
        } else {
            std::vector<std::future<Verdict>> batch;
            for (std::size_t i = start; i < end; ++i) batch.push_back(std::async(std::launch::async, run, i, 1));
            for (auto& f : batch) results.push_back(f.get());
        }
        for (std::size_t i = start; i < end; ++i)
            if (results[i].status == Status::Sat) {
                winner = i;
                break;
            }
    }
    const std::size_t used = winner ? *winner + 1 : tasks.size();
    std::vector<std::string> trace;
    for (std::size_t i = 0; i < used; ++i) {
        const auto& r = results[i];
        std::string line = chart_name(tasks[i], plain.vars) + ": " + greenberg::to_string(r.status);
        if (r.status == Status::Unknown) line += " (" + r.reason + ")";
        out.branches.push_back(line);
        trace.push_back(line);
        for (const auto& l : r.trace) trace.push_back("  " + l);
    }
    if (winner) {
        out.verdict = results[*winner];
        out.disjunct = tasks[*winner].disjunct;
        out.inverted = tasks[*winner].inverted;
        out.system = tasks[*winner].system;
        out.verdict.trace = std::move(trace);
        return out;
    }
    Verdict v;
    bool all_unsat = true;
    for (const auto& r : results)
        if (r.status != Status::Unsat) all_unsat = false;
    if (all_unsat) {
        v.status = Status::Unsat;
        greenberg::Refutation ref{greenberg::Refutation::Kind::Composite, 0, {}};
        for (const auto& r : results) {
            ref.level = std::max(ref.level, r.refutation->level);
            for (const auto& c : r.refutation->radical) ref.radical.push_back(c);
        }
        if (results.size() == 1) ref.kind = results[0].refutation->kind;
        v.refutation = std::move(ref);
    } else {
        for (const auto& r : results)
            if (r.status == Status::Unknown) {
                v.reason = r.reason;
                break;
            }
    }
    v.trace = std::move(trace);
    out.verdict = std::move(v);
    return out;
}

}  // namespace laurent::frontend
