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

#ifndef LAURENT_FRONTEND_HPP
#define LAURENT_FRONTEND_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/ff.hpp"
#include "laurent/poly.hpp"
#include "laurent/resolve.hpp"

namespace laurent::frontend {

class ParseError : public Error {
public:
    ParseError(int column, const std::string& message);
    [[nodiscard]] int column() const { return column_; }

private:
    int column_;
};

struct Term {
    enum class Kind { Var, Int, Uniformizer, Generator, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Int;
    std::string name;
    long long value = 0;  // Int literal or Pow exponent
    std::vector<Term> args;
    int column = 0;

    /// Structural equality; source columns are ignored.
    friend bool operator==(const Term& a, const Term& b);
};

struct Formula {
    enum class Kind { Eq, InRing, Not, And, Or };
    Kind kind = Kind::Eq;
    std::vector<Term> terms;
    std::vector<Formula> args;
    int column = 0;

    friend bool operator==(const Formula& a, const Formula& b);
};

struct Variable {
    std::string name;
    /// Introduced by valuation-atom elimination; such variables may be taken
    /// in F_q[[t]] without changing the truth value.
    bool fresh = false;
    friend bool operator==(const Variable&, const Variable&) = default;
};

struct Sentence {
    std::vector<Variable> vars;
    Formula matrix;
    friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// sentence := ["exists" ident {[","] ident} "."] formula
/// formula  := conj {"|" conj};  conj := unary {"&" unary}
/// unary    := "~" unary | "(" formula ")" | "O" "(" term ")" | term "=" term
/// term     := ["-"] prod {("+"|"-") prod};  prod := power {("*"|"/") power}
/// power    := atom ["^" integer];  atom := integer | ident | "(" term ")"
/// "t", "w" and "pi" name the uniformizer; "a" is the field generator when
/// n > 1. Division is allowed only by variable-free terms.
Sentence parse(std::string_view text, const ff::Field& field);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sentence& s);

/// Negations pushed down to atoms.
Formula to_nnf(const Formula& f);

/// InRing(s) becomes y^2 + y = t s^2 and ~InRing(s) becomes
/// t s w = 1 & y^2 + y = t w^2, with fresh variables named y_1, y_2, ...
/// in elimination order (names already in use are skipped).
Sentence eliminate_valuation_atoms(const Sentence& s);

/// Value of a term in F_q(t)[vars].
poly::RatPoly to_polynomial(const Term& t, const std::vector<Variable>& vars, const ff::Field& field);

/// Disjunctive normal form as systems over F_q[t]: equations cleared of
/// denominators, inequations merged into one product. Needs a sentence
/// without InRing atoms.
std::vector<resolve::AffineSystem> to_systems(const Sentence& s, const ff::Field& field);

/// Substitutes X_j = 1/(t W_j) for j in `inverted` (clearing the powers of
/// t W_j) and adds W_j != 0 to the inequation.
resolve::AffineSystem invert_chart(const resolve::AffineSystem& s, const std::vector<std::size_t>& inverted);

struct Outcome {
    resolve::Verdict verdict;
    /// Deciding disjunct and chart (SAT), else nullopt.
    std::optional<std::size_t> disjunct;
    std::vector<std::size_t> inverted;
    resolve::AffineSystem system;
    std::vector<std::string> names;
    /// One line per branch that was run.
    std::vector<std::string> branches;
};

/// Each variable ranges over F_q((t)): a disjunct is split into charts where
/// every non-fresh variable lies in F_q[[t]] or is 1/(t W) with W in F_q[[t]].
Outcome decide(const Sentence& s, const ff::Field& field, const resolve::ResolveConfig& config = {},
               int threads = 1);

}  // namespace laurent::frontend

#endif
