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

#ifndef LAURENT_POLY_HPP
#define LAURENT_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "laurent/error.hpp"
#include "laurent/ff.hpp"
#include "laurent/ratfunc.hpp"
#include "laurent/upoly.hpp"

namespace laurent::poly {

using Monomial = std::vector<std::uint16_t>;

/// Graded reverse lexicographic comparison; true when a is strictly greater.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Coefficient domain F_q.
struct FqRing {
    using Elem = FqElem;
    const FqContext* ctx = nullptr;

    [[nodiscard]] Elem zero() const { return {}; }
    [[nodiscard]] Elem one() const { return ctx->one(); }
    [[nodiscard]] Elem from_int(long long v) const { return ctx->from_int(v); }
    [[nodiscard]] Elem add(const Elem& a, const Elem& b) const { return ctx->add(a, b); }
    [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const { return ctx->sub(a, b); }
    [[nodiscard]] Elem neg(const Elem& a) const { return ctx->neg(a); }
    [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const { return ctx->mul(a, b); }
    [[nodiscard]] Elem inv(const Elem& a) const { return ctx->inv(a); }
    [[nodiscard]] bool is_zero(const Elem& a) const { return a.is_zero(); }
    [[nodiscard]] bool is_one(const Elem& a) const { return a.code == 1; }
    [[nodiscard]] std::string to_string(const Elem& a) const { return ctx->to_string(a); }
    friend bool operator==(const FqRing& a, const FqRing& b) { return a.ctx == b.ctx; }
};

/// Coefficient domain F_q(t).
struct RatRing {
    using Elem = RationalFunction;
    const FqContext* ctx = nullptr;

    [[nodiscard]] Elem zero() const { return RationalFunction(ctx); }
    [[nodiscard]] Elem one() const { return RationalFunction::constant(ctx, ctx->one()); }
    [[nodiscard]] Elem from_int(long long v) const { return RationalFunction::constant(ctx, ctx->from_int(v)); }
    [[nodiscard]] Elem add(const Elem& a, const Elem& b) const { return a + b; }
    [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    [[nodiscard]] Elem neg(const Elem& a) const { return -a; }
    [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    [[nodiscard]] Elem inv(const Elem& a) const { return a.inverse(); }
    [[nodiscard]] bool is_zero(const Elem& a) const { return a.is_zero(); }
    [[nodiscard]] bool is_one(const Elem& a) const { return a.is_one(); }
    [[nodiscard]] std::string to_string(const Elem& a) const { return a.to_string(); }
    friend bool operator==(const RatRing& a, const RatRing& b) { return a.ctx == b.ctx; }
};

/// Sparse multivariate polynomial in X_1..X_m over the coefficient domain R.
/// With `with_t` an extra trailing exponent slot carries the power of t, so
/// Poly<FqRing> with t is F_q[t][X]. Terms are kept sorted by decreasing
/// grevlex order with no zero coefficients; the zero polynomial has no terms.
template <class R>
class Poly {
public:
    using Elem = typename R::Elem;
    struct Term {
        Monomial exp;
        Elem coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(R ring, std::size_t nvars, bool with_t = false) : ring_(ring), nvars_(nvars), with_t_(with_t) {}

    static Poly constant(R ring, std::size_t nvars, bool with_t, const Elem& c) {
        Poly p(ring, nvars, with_t);
        if (!ring.is_zero(c)) p.terms_.push_back({Monomial(nvars + with_t, 0), c});
        return p;
    }
    /// X_{index+1}; index == nvars selects t (requires with_t).
    static Poly variable(R ring, std::size_t nvars, bool with_t, std::size_t index) {
        if (index >= nvars + with_t) throw Error("variable index out of range");
        Poly p(ring, nvars, with_t);
        Monomial m(nvars + with_t, 0);
        m[index] = 1;
        p.terms_.push_back({std::move(m), ring.one()});
        return p;
    }
    static Poly monomial(R ring, std::size_t nvars, bool with_t, Monomial exp, const Elem& c) {
        Poly p(ring, nvars, with_t);
        if (exp.size() != nvars + with_t) throw Error("monomial arity mismatch");
        if (!ring.is_zero(c)) p.terms_.push_back({std::move(exp), c});
        return p;
    }
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Poly from_terms(R ring, std::size_t nvars, bool with_t, std::vector<Term> terms) {
        std::map<Monomial, Elem, GrevlexGreater> acc;
        for (auto& t : terms) {
            if (t.exp.size() != nvars + with_t) throw Error("monomial arity mismatch");
            auto [it, fresh] = acc.try_emplace(t.exp, t.coeff);
            if (!fresh) it->second = ring.add(it->second, t.coeff);
        }
        Poly p(ring, nvars, with_t);
        p.assign_from(acc);
        return p;
    }

    [[nodiscard]] const R& ring() const { return ring_; }
    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] bool with_t() const { return with_t_; }
    [[nodiscard]] std::size_t slots() const { return nvars_ + (with_t_ ? 1 : 0); }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exp) == 0);
    }
    /// Constant with no X or t dependence.
    [[nodiscard]] Elem constant_value() const {
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.empty() ? ring_.zero() : terms_[0].coeff;
    }
    /// No X dependence (t allowed).
    [[nodiscard]] bool is_x_free() const {
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.exp[i]) return false;
        return true;
    }
    [[nodiscard]] const Term& leading() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }

    /// Maximum exponent sum over terms, counting t. Throws on zero.
    [[nodiscard]] unsigned total_degree() const {
        if (terms_.empty()) throw Error("total degree of the zero polynomial");
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, total(t.exp));
        return d;
    }
    [[nodiscard]] unsigned degree_in(std::size_t slot) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[slot]);
        return d;
    }
    /// Minimum over terms of the exponent sum restricted to the X slots: the
    /// multiplicity at the origin of the X-space.
    [[nodiscard]] unsigned order_at_origin() const {
        if (terms_.empty()) throw Error("order of the zero polynomial");
        unsigned d = ~0U;
        for (const auto& t : terms_) {
            unsigned s = 0;
            for (std::size_t i = 0; i < nvars_; ++i) s += t.exp[i];
            d = std::min(d, s);
        }
        return d;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.with_t_ == b.with_t_ && a.terms_ == b.terms_;
    }

    Poly& operator+=(const Poly& o) { return *this = combine(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = combine(*this, o, true); }
    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_, a.nvars_, a.with_t_);
        if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].exp, b.terms_[0].coeff);
        if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].exp, a.terms_[0].coeff);
        std::map<Monomial, Elem, GrevlexGreater> acc;
        Monomial m(a.slots());
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(x.exp[i] + y.exp[i]);
                Elem c = a.ring_.mul(x.coeff, y.coeff);
                auto [it, fresh] = acc.try_emplace(m, c);
                if (!fresh) it->second = a.ring_.add(it->second, c);
            }
        }
        Poly r(a.ring_, a.nvars_, a.with_t_);
        r.assign_from(acc);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    [[nodiscard]] Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
        return r;
    }
    [[nodiscard]] Poly scaled(const Elem& s) const {
        if (ring_.is_zero(s)) return Poly(ring_, nvars_, with_t_);
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff = ring_.mul(t.coeff, s);
        return r;
    }
    /// this * c * x^exp; multiplication by a monomial preserves the term order.
    [[nodiscard]] Poly mul_term(const Monomial& exp, const Elem& c) const {
        if (ring_.is_zero(c)) return Poly(ring_, nvars_, with_t_);
        Poly r(*this);
        for (auto& t : r.terms_) {
            for (std::size_t i = 0; i < exp.size(); ++i) t.exp[i] = static_cast<std::uint16_t>(t.exp[i] + exp[i]);
            t.coeff = ring_.mul(t.coeff, c);
        }
        return r;
    }
    [[nodiscard]] Poly pow(unsigned e) const {
        Poly result = constant(ring_, nvars_, with_t_, ring_.one());
        Poly base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e) base = base * base;
        }
        return result;
    }

    /// Formal partial derivative in the given slot (X_j, or t for slot nvars).
    [[nodiscard]] Poly derivative(std::size_t slot) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.exp[slot] == 0) continue;
            Elem c = ring_.mul(ring_.from_int(t.exp[slot]), t.coeff);
            if (ring_.is_zero(c)) continue;
            Monomial m = t.exp;
            --m[slot];
            out.push_back({std::move(m), std::move(c)});
        }
        return from_terms(ring_, nvars_, with_t_, std::move(out));
    }

    /// Divides every term by exp (which must divide each term).
    [[nodiscard]] Poly divide_monomial(const Monomial& exp) const {
        Poly r(*this);
        for (auto& t : r.terms_) {
            for (std::size_t i = 0; i < exp.size(); ++i) {
                if (t.exp[i] < exp[i]) throw Error("monomial does not divide polynomial");
                t.exp[i] = static_cast<std::uint16_t>(t.exp[i] - exp[i]);
            }
        }
        return r;
    }

    /// Substitutes images[j] for X_{j+1}. Images share ring and shape; with t
    /// present the t slot is kept (image polynomials must also carry t).
    [[nodiscard]] Poly substitute(std::span<const Poly> images) const {
        if (images.size() != nvars_) throw Error("substitution arity mismatch");
        const Poly& proto = images.empty() ? *this : images[0];
        const std::size_t nv = proto.nvars_;
        const bool wt = proto.with_t_;
        if (with_t_ && !wt) throw Error("substitution would drop t");
        Poly result(ring_, nv, wt);
        std::vector<std::vector<Poly>> powers(nvars_);
        for (const auto& term : terms_) {
            Monomial e(nv + wt, 0);
            if (with_t_) e[nv] = term.exp[nvars_];
            Poly mono = monomial(ring_, nv, wt, std::move(e), term.coeff);
            for (std::size_t j = 0; j < nvars_; ++j) {
                const unsigned k = term.exp[j];
                if (k == 0) continue;
                auto& pw = powers[j];
                if (pw.empty()) pw.push_back(constant(ring_, nv, wt, ring_.one()));
                while (pw.size() <= k) pw.push_back(pw.back() * images[j]);
                mono = mono * pw[k];
            }
            result += mono;
        }
        return result;
    }

    /// Same polynomial with its X variables re-indexed into a space of
    /// `nvars` variables; mapping[j] is the new index of X_{j+1}.
    [[nodiscard]] Poly embed(std::size_t nvars, std::span<const std::size_t> mapping) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(nvars + with_t_, 0);
            for (std::size_t j = 0; j < nvars_; ++j) m[mapping[j]] = t.exp[j];
            if (with_t_) m[nvars] = t.exp[nvars_];
            out.push_back({std::move(m), t.coeff});
        }
        return from_terms(ring_, nvars, with_t_, std::move(out));
    }

    /// Evaluation at a point of the coefficient domain (no t slot).
    [[nodiscard]] Elem evaluate(std::span<const Elem> point) const {
        if (with_t_) throw Error("evaluate at field point needs a value for t");
        if (point.size() != nvars_) throw Error("evaluation arity mismatch");
        Elem acc = ring_.zero();
        for (const auto& t : terms_) {
            Elem v = t.coeff;
            for (std::size_t j = 0; j < nvars_; ++j)
                for (unsigned k = 0; k < t.exp[j]; ++k) v = ring_.mul(v, point[j]);
            acc = ring_.add(acc, v);
        }
        return acc;
    }

    [[nodiscard]] std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            std::string cs = ring_.to_string(t.coeff);
            std::string mono;
            for (std::size_t i = 0; i < t.exp.size(); ++i) {
                if (!t.exp[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(i, names);
                if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
            }
            const bool compound = cs.find_first_of("+/") != std::string::npos;
            std::string piece;
            if (mono.empty()) {
                piece = compound ? "(" + cs + ")" : cs;
            } else if (ring_.is_one(t.coeff)) {
                piece = mono;
            } else {
                piece = (compound ? "(" + cs + ")" : cs) + "*" + mono;
            }
            if (!out.empty()) out += " + ";
            out += piece;
        }
        return out;
    }

    [[nodiscard]] std::string var_name(std::size_t slot, const std::vector<std::string>& names) const {
        if (slot == nvars_) return "t";
        if (slot < names.size()) return names[slot];
        return "X" + std::to_string(slot + 1);
    }

private:
    static unsigned total(const Monomial& m) {
        unsigned s = 0;
        for (auto e : m) s += e;
        return s;
    }

    void check_compatible(const Poly& o) const {
        if (nvars_ != o.nvars_ || with_t_ != o.with_t_ || !(ring_ == o.ring_))
            throw Error("polynomial domain mismatch");
    }

    void assign_from(const std::map<Monomial, Elem, GrevlexGreater>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (!ring_.is_zero(c)) terms_.push_back({m, c});
    }

    static Poly combine(const Poly& a, const Poly& b, bool subtract) {
        a.check_compatible(b);
        Poly r(a.ring_, a.nvars_, a.with_t_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && grevlex_greater(a.terms_[i].exp, b.terms_[j].exp))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grevlex_greater(b.terms_[j].exp, a.terms_[i].exp)) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back({t.exp, subtract ? a.ring_.neg(t.coeff) : t.coeff});
            } else {
                Elem c = subtract ? a.ring_.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                  : a.ring_.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!a.ring_.is_zero(c)) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    R ring_{};
    std::size_t nvars_ = 0;
    bool with_t_ = false;
    std::vector<Term> terms_;
};

/// Polynomial in X over F_q[t] (t in the trailing slot) or over F_q.
using MultiPoly = Poly<FqRing>;
/// Polynomial in X over F_q(t).
using RatPoly = Poly<RatRing>;

/// n x m matrix of partial derivatives; entry (i, j) = d f_i / d X_j.
template <class R>
struct JacobianMatrix {
    std::vector<std::vector<Poly<R>>> entries;
};

template <class R>
JacobianMatrix<R> jacobian(std::span<const Poly<R>> system, std::size_t nvars, bool include_t = false) {
    JacobianMatrix<R> jac;
    for (const auto& f : system) {
        std::vector<Poly<R>> row;
        for (std::size_t j = 0; j < nvars; ++j) row.push_back(f.derivative(j));
        if (include_t) row.push_back(f.derivative(nvars));
        jac.entries.push_back(std::move(row));
    }
    return jac;
}

/// Determinant by Leibniz expansion (the matrices here are tiny).
template <class R>
Poly<R> determinant(const std::vector<std::vector<Poly<R>>>& m, const Poly<R>& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    Poly<R> acc = one - one;
    std::vector<std::size_t> cols(n - 1);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly<R>>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly<R>> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly<R> term = m[0][c] * determinant(minor, one);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// F_q[t][X] -> F_q(t)[X] by collecting t-powers into coefficients.
RatPoly to_rational(const MultiPoly& f);
/// Scales f by the lcm of its coefficient denominators (normalised to have
/// lowest nonzero t-coefficient 1); result in F_q[t][X].
MultiPoly clear_denominators(const RatPoly& f);
std::vector<MultiPoly> clear_denominators(std::span<const RatPoly> system);
/// Divides out the monic gcd (in F_q[t]) of all t-coefficient polynomials.
/// Zero stays zero.
MultiPoly primitive_part(const MultiPoly& f);
/// Coefficient polynomial in t of each distinct X-monomial.
std::map<Monomial, UPoly, GrevlexGreater> t_coefficients(const MultiPoly& f);
MultiPoly from_t_coefficients(const FqContext* ctx, std::size_t nvars,
                              const std::map<Monomial, UPoly, GrevlexGreater>& coeffs);

}  // namespace laurent::poly

#endif
