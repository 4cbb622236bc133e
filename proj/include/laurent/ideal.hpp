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

#ifndef LAURENT_IDEAL_HPP
#define LAURENT_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "laurent/poly.hpp"

namespace laurent::ideal {

using poly::Monomial;
using poly::Poly;

/// Block order: the first `elim` variables compared by grevlex first, ties
/// broken by grevlex on the rest. elim = 0 is plain grevlex.
struct MonomialOrder {
    std::size_t elim = 0;

    [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const {
        if (elim == 0) return poly::grevlex_greater(a, b);
        Monomial a1(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(elim));
        Monomial b1(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(elim));
        if (a1 != b1) return poly::grevlex_greater(a1, b1);
        Monomial a2(a.begin() + static_cast<std::ptrdiff_t>(elim), a.end());
        Monomial b2(b.begin() + static_cast<std::ptrdiff_t>(elim), b.end());
        return poly::grevlex_greater(a2, b2);
    }
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Reduced, monic Groebner basis sorted by increasing leading term.
/// `cofactors[i][k]` (when tracked) expresses generators[i] as
/// sum_k cofactors[i][k] * input[k].
template <class R>
struct GroebnerBasis {
    R ring{};
    std::size_t nvars = 0;
    MonomialOrder order{};
    std::vector<Poly<R>> generators;
    std::vector<std::vector<Poly<R>>> cofactors;
    std::vector<Poly<R>> input;

    [[nodiscard]] bool is_unit() const {
        return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
    }
    [[nodiscard]] bool is_zero_ideal() const { return generators.empty(); }
};

namespace detail {

// Polynomial with terms sorted by a runtime monomial order.
template <class R>
struct OPoly {
    using Term = typename Poly<R>::Term;
    std::vector<Term> terms;

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    [[nodiscard]] const Term& lt() const { return terms.front(); }
};

template <class R>
OPoly<R> to_ordered(const Poly<R>& f, const MonomialOrder& ord) {
    OPoly<R> o{f.terms()};
    if (ord.elim != 0)
        std::sort(o.terms.begin(), o.terms.end(),
                  [&](const auto& a, const auto& b) { return ord.greater(a.exp, b.exp); });
    return o;
}

template <class R>
Poly<R> from_ordered(const OPoly<R>& f, const R& ring, std::size_t nvars) {
    return Poly<R>::from_terms(ring, nvars, false, f.terms);
}

// a - c * x^m * b, all sorted by ord.
template <class R>
OPoly<R> sub_scaled(const OPoly<R>& a, const typename R::Elem& c, const Monomial& m, const OPoly<R>& b,
                    const R& ring, const MonomialOrder& ord) {
    OPoly<R> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    auto shifted_of = [&](std::size_t k) {
        shifted = b.terms[k].exp;
        for (std::size_t s = 0; s < shifted.size(); ++s) shifted[s] = static_cast<std::uint16_t>(shifted[s] + m[s]);
        return shifted;
    };
    bool have = false;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j < b.terms.size() && !have) {
            shifted_of(j);
            have = true;
        }
        if (j == b.terms.size() || (i < a.terms.size() && ord.greater(a.terms[i].exp, shifted))) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || ord.greater(shifted, a.terms[i].exp)) {
            r.terms.push_back({shifted, ring.neg(ring.mul(c, b.terms[j].coeff))});
            ++j;
            have = false;
        } else {
            auto v = ring.sub(a.terms[i].coeff, ring.mul(c, b.terms[j].coeff));
            if (!ring.is_zero(v)) r.terms.push_back({a.terms[i].exp, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return r;
}

template <class R>
OPoly<R> add_term(const OPoly<R>& a, const typename R::Elem& c, const Monomial& m, const R& ring,
                  const MonomialOrder& ord) {
    OPoly<R> single;
    single.terms.push_back({m, ring.one()});
    return sub_scaled(a, ring.neg(c), Monomial(m.size(), 0), single, ring, ord);
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline unsigned degree(const Monomial& a) {
    unsigned d = 0;
    for (auto e : a) d += e;
    return d;
}

template <class R>
struct Item {
    OPoly<R> p;
    std::vector<OPoly<R>> cof;
    unsigned sugar = 0;
};

// Full reduction of `it` modulo basis items; quotients are folded into the
// cofactors when tracking is on.
template <class R>
void reduce_full(Item<R>& it, const std::vector<Item<R>>& basis, const std::vector<bool>& active, const R& ring,
                 const MonomialOrder& ord, bool track) {
    OPoly<R> rem;
    OPoly<R> p = std::move(it.p);
    while (!p.is_zero()) {
        const auto& lt = p.lt();
        bool reduced = false;
        for (std::size_t g = 0; g < basis.size(); ++g) {
            if (!active[g]) continue;
            const auto& glt = basis[g].p.lt();
            if (!poly::divides(glt.exp, lt.exp)) continue;
            const auto c = ring.mul(lt.coeff, ring.inv(glt.coeff));
            const Monomial q = quotient(lt.exp, glt.exp);
            if (track)
                for (std::size_t k = 0; k < it.cof.size(); ++k)
                    it.cof[k] = sub_scaled(it.cof[k], c, q, basis[g].cof[k], ring, ord);
            p = sub_scaled(p, c, q, basis[g].p, ring, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    it.p = std::move(rem);
}

template <class R>
void make_monic(Item<R>& it, const R& ring, const MonomialOrder& ord, bool track) {
    if (it.p.is_zero()) return;
    const auto inv = ring.inv(it.p.lt().coeff);
    if (ring.is_one(inv)) return;
    const Monomial one(it.p.lt().exp.size(), 0);
    OPoly<R> empty;
    auto scale = [&](OPoly<R>& f) { f = sub_scaled(empty, ring.neg(inv), one, f, ring, ord); };
    scale(it.p);
    if (track)
        for (auto& c : it.cof) scale(c);
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` (Buchberger with
/// sugar pair selection and the coprime-leading-term criterion).
template <class R>
GroebnerBasis<R> buchberger(std::span<const Poly<R>> gens, std::size_t nvars, const R& ring,
                            MonomialOrder ord = {}, bool track_cofactors = false) {
    using namespace detail;
    GroebnerBasis<R> gb;
    gb.ring = ring;
    gb.nvars = nvars;
    gb.order = ord;
    gb.input.assign(gens.begin(), gens.end());
    for (const auto& g : gens)
        if (g.with_t() || g.nvars() != nvars) throw Error("buchberger needs polynomials over a field in the declared variables");
    const std::size_t ninput = gens.size();
    const Monomial zero_m(nvars, 0);

    std::vector<Item<R>> items;
    std::vector<bool> active;
    for (std::size_t k = 0; k < ninput; ++k) {
        if (gens[k].is_zero()) continue;
        Item<R> it;
        it.p = to_ordered(gens[k], ord);
        if (track_cofactors) {
            it.cof.resize(ninput);
            it.cof[k].terms.push_back({zero_m, ring.one()});
        }
        it.sugar = gens[k].total_degree();
        make_monic(it, ring, ord, track_cofactors);
        items.push_back(std::move(it));
        active.push_back(true);
    }

    struct Pair {
        unsigned sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!active[i]) continue;
            const auto& a = items[i].p.lt().exp;
            const auto& b = items[j].p.lt().exp;
            if (coprime(a, b)) continue;
            Monomial l = lcm(a, b);
            const unsigned dl = degree(l);
            const unsigned s = std::max(items[i].sugar + dl - degree(a), items[j].sugar + dl - degree(b));
            pairs.push_back({s, std::move(l), i, j});
        }
    };
    for (std::size_t j = 0; j < items.size(); ++j) add_pairs_for(j);

    auto found_unit = [&]() {
        for (std::size_t k = 0; k < items.size(); ++k)
            if (active[k] && degree(items[k].p.lt().exp) == 0) return true;
        return false;
    };

    while (!pairs.empty() && !found_unit()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
            if (x.sugar != y.sugar) return x.sugar < y.sugar;
            if (x.lcm != y.lcm) return ord.greater(y.lcm, x.lcm);
            return std::tie(x.j, x.i) < std::tie(y.j, y.i);
        });
        const Pair pr = *best;
        pairs.erase(best);
        if (!active[pr.i] || !active[pr.j]) continue;
        const auto& fi = items[pr.i];
        const auto& fj = items[pr.j];
        Item<R> s;
        s.sugar = pr.sugar;
        const Monomial qi = quotient(pr.lcm, fi.p.lt().exp);
        const Monomial qj = quotient(pr.lcm, fj.p.lt().exp);
        OPoly<R> empty;
        // Both are monic: S = qi*fi - qj*fj.
        s.p = sub_scaled(empty, ring.neg(ring.one()), qi, fi.p, ring, ord);
        s.p = sub_scaled(s.p, ring.one(), qj, fj.p, ring, ord);
        if (track_cofactors) {
            s.cof.resize(ninput);
            for (std::size_t k = 0; k < ninput; ++k) {
                s.cof[k] = sub_scaled(empty, ring.neg(ring.one()), qi, fi.cof[k], ring, ord);
                s.cof[k] = sub_scaled(s.cof[k], ring.one(), qj, fj.cof[k], ring, ord);
            }
        }
        reduce_full(s, items, active, ring, ord, track_cofactors);
        if (s.p.is_zero()) continue;
        make_monic(s, ring, ord, track_cofactors);
        items.push_back(std::move(s));
        active.push_back(true);
        add_pairs_for(items.size() - 1);
    }

    // Minimise: drop items whose leading term is divisible by another's.
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!active[k]) continue;
        for (std::size_t l = 0; l < items.size(); ++l) {
            if (l == k || !active[l]) continue;
            const auto& a = items[l].p.lt().exp;
            const auto& b = items[k].p.lt().exp;
            if (poly::divides(a, b) && (a != b || l < k)) {
                active[k] = false;
                break;
            }
        }
    }
    // Inter-reduce tails.
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!active[k]) continue;
        active[k] = false;
        Item<R> tail;
        tail.p.terms.assign(items[k].p.terms.begin() + 1, items[k].p.terms.end());
        // Reducing the tail subtracts multiples of other items; the item's own
        // cofactors absorb the same multiples.
        if (track_cofactors) tail.cof = items[k].cof;
        reduce_full(tail, items, active, ring, ord, track_cofactors);
        OPoly<R> rebuilt = tail.p;
        rebuilt.terms.insert(rebuilt.terms.begin(), items[k].p.terms.front());
        items[k].p = std::move(rebuilt);
        if (track_cofactors) items[k].cof = std::move(tail.cof);
        active[k] = true;
    }

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < items.size(); ++k)
        if (active[k]) keep.push_back(k);
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return ord.greater(items[b].p.lt().exp, items[a].p.lt().exp);
    });
    if (!keep.empty() && degree(items[keep.front()].p.lt().exp) == 0) keep.resize(1);
    for (std::size_t k : keep) {
        gb.generators.push_back(from_ordered(items[k].p, ring, nvars));
        if (track_cofactors) {
            std::vector<Poly<R>> c;
            for (const auto& x : items[k].cof) c.push_back(from_ordered(x, ring, nvars));
            gb.cofactors.push_back(std::move(c));
        }
    }
    return gb;
}

template <class R>
GroebnerBasis<R> buchberger(const std::vector<Poly<R>>& gens, std::size_t nvars, const R& ring,
                            MonomialOrder ord = {}, bool track_cofactors = false) {
    return buchberger(std::span<const Poly<R>>(gens), nvars, ring, ord, track_cofactors);
}

/// Leading monomial of f under the basis order.
template <class R>
Monomial leading_monomial(const Poly<R>& f, const MonomialOrder& ord) {
    const auto& ts = f.terms();
    if (ts.empty()) throw Error("leading monomial of zero");
    if (ord.elim == 0) return ts.front().exp;
    const auto* best = &ts.front();
    for (const auto& t : ts)
        if (ord.greater(t.exp, best->exp)) best = &t;
    return best->exp;
}

/// Remainder of f modulo the basis; `quotients`, when given, receives q_j
/// with f - remainder = sum_j q_j * generators[j].
template <class R>
Poly<R> normal_form(const Poly<R>& f, const GroebnerBasis<R>& gb, std::vector<Poly<R>>* quotients = nullptr) {
    using namespace detail;
    const R& ring = gb.ring;
    std::vector<Item<R>> basis;
    std::vector<bool> active;
    const bool track = quotients != nullptr;
    const std::size_t ng = gb.generators.size();
    const Monomial zero_m(gb.nvars, 0);
    for (std::size_t j = 0; j < ng; ++j) {
        Item<R> it;
        it.p = to_ordered(gb.generators[j], gb.order);
        if (track) {
            it.cof.resize(ng);
            it.cof[j].terms.push_back({zero_m, ring.one()});
        }
        basis.push_back(std::move(it));
        active.push_back(true);
    }
    Item<R> item;
    item.p = to_ordered(f, gb.order);
    if (track) item.cof.resize(ng);
    reduce_full(item, basis, active, ring, gb.order, track);
    if (track) {
        quotients->clear();
        for (const auto& c : item.cof) quotients->push_back(-from_ordered(c, ring, gb.nvars));
    }
    return from_ordered(item.p, ring, gb.nvars);
}

template <class R>
bool ideal_membership(const Poly<R>& f, const GroebnerBasis<R>& gb) {
    return normal_form(f, gb).is_zero();
}

/// Evidence for g in sqrt(I) by the Rabinowitsch trick: in one extra
/// variable Z (index nvars), 1 = sum_k cofactors[k] * input[k] +
/// cofactors.back() * (1 - Z g).
template <class R>
struct RadicalCertificate {
    bool member = false;
    std::vector<Poly<R>> input;  // generators of I lifted into nvars + 1 variables
    Poly<R> rabinowitsch;        // 1 - Z g
    std::vector<Poly<R>> cofactors;
};

template <class R>
Poly<R> lift_one_var(const Poly<R>& f, std::size_t nvars) {
    std::vector<std::size_t> map(f.nvars());
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = j;
    return f.embed(nvars + 1, map);
}

template <class R>
RadicalCertificate<R> radical_certificate(const Poly<R>& g, std::span<const Poly<R>> gens, std::size_t nvars,
                                          const R& ring) {
    RadicalCertificate<R> cert;
    for (const auto& f : gens) cert.input.push_back(lift_one_var(f, nvars));
    const auto one = Poly<R>::constant(ring, nvars + 1, false, ring.one());
    const auto z = Poly<R>::variable(ring, nvars + 1, false, nvars);
    cert.rabinowitsch = one - z * lift_one_var(g, nvars);
    std::vector<Poly<R>> all = cert.input;
    all.push_back(cert.rabinowitsch);
    auto gb = buchberger(all, nvars + 1, ring, {}, true);
    cert.member = gb.is_unit();
    if (cert.member) {
        // generator is the constant 1 after monic normalisation.
        cert.cofactors = gb.cofactors[0];
    }
    return cert;
}

/// Checks the identity carried by a certificate by direct expansion.
template <class R>
bool verify_radical_certificate(const RadicalCertificate<R>& cert) {
    if (!cert.member) return false;
    if (cert.cofactors.size() != cert.input.size() + 1) return false;
    Poly<R> acc = cert.rabinowitsch - cert.rabinowitsch;
    for (std::size_t k = 0; k < cert.input.size(); ++k) acc += cert.cofactors[k] * cert.input[k];
    acc += cert.cofactors.back() * cert.rabinowitsch;
    return acc.is_constant() && !acc.is_zero() && acc.ring().is_one(acc.constant_value());
}

template <class R>
bool radical_membership(const Poly<R>& g, const GroebnerBasis<R>& gb) {
    if (ideal_membership(g, gb)) return true;
    std::vector<Poly<R>> all;
    for (const auto& f : gb.generators) all.push_back(lift_one_var(f, gb.nvars));
    const auto one = Poly<R>::constant(gb.ring, gb.nvars + 1, false, gb.ring.one());
    const auto z = Poly<R>::variable(gb.ring, gb.nvars + 1, false, gb.nvars);
    all.push_back(one - z * lift_one_var(g, gb.nvars));
    return buchberger(all, gb.nvars + 1, gb.ring).is_unit();
}

/// Krull dimension of k[X]/I, or nullopt when I = (1).
template <class R>
std::optional<int> dimension(const GroebnerBasis<R>& gb) {
    if (gb.is_unit()) return std::nullopt;
    const std::size_t m = gb.nvars;
    std::vector<Monomial> lts;
    for (const auto& g : gb.generators) lts.push_back(leading_monomial(g, gb.order));
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lt : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i)
                if (lt[i] && !(mask & (1U << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

/// Exact quotient f / d in R[X], or nullopt if d does not divide f.
template <class R>
std::optional<Poly<R>> exact_divide(const Poly<R>& f, const Poly<R>& d) {
    if (d.is_zero()) throw Error("division by the zero polynomial");
    GroebnerBasis<R> single;
    single.ring = f.ring();
    single.nvars = f.nvars();
    const auto inv = f.ring().inv(d.leading().coeff);
    single.generators.push_back(d.scaled(inv));
    std::vector<Poly<R>> q;
    const auto r = normal_form(f, single, &q);
    if (!r.is_zero()) return std::nullopt;
    return q[0].scaled(inv);
}

/// Monic gcd of two polynomials over a field, via (f) ∩ (g) = (lcm) computed
/// by eliminating an auxiliary variable.
template <class R>
Poly<R> gcd(const Poly<R>& f, const Poly<R>& g) {
    const R& ring = f.ring();
    const std::size_t m = f.nvars();
    auto monic = [&](const Poly<R>& p) { return p.is_zero() ? p : p.scaled(ring.inv(p.leading().coeff)); };
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    const auto one = Poly<R>::constant(ring, m, false, ring.one());
    if (f.is_constant() || g.is_constant()) return one;
    if (auto q = exact_divide(f, g)) return monic(g);
    if (auto q = exact_divide(g, f)) return monic(f);
    std::vector<std::size_t> shift(m);
    for (std::size_t j = 0; j < m; ++j) shift[j] = j + 1;
    const auto s = Poly<R>::variable(ring, m + 1, false, 0);
    const auto one1 = Poly<R>::constant(ring, m + 1, false, ring.one());
    std::vector<Poly<R>> gens{s * f.embed(m + 1, shift), (one1 - s) * g.embed(m + 1, shift)};
    const auto gb = buchberger(gens, m + 1, ring, MonomialOrder{1});
    std::optional<Poly<R>> lcm;
    std::vector<std::size_t> back(m + 1, 0);
    for (const auto& h : gb.generators) {
        if (h.degree_in(0) != 0) continue;
        std::vector<Poly<R>> imgs{Poly<R>::constant(ring, m, false, ring.zero())};
        for (std::size_t j = 0; j < m; ++j) imgs.push_back(Poly<R>::variable(ring, m, false, j));
        lcm = h.substitute(imgs);
        break;
    }
    if (!lcm) throw Error("gcd: elimination produced no lcm");
    auto q = exact_divide(f * g, *lcm);
    if (!q) throw Error("gcd: lcm does not divide product");
    return monic(*q);
}

/// Squarefree part over F_q(t): same zero locus over every extension of
/// F_q(t), no repeated factors. Uses all derivations d/dX_j and d/dt, and
/// extracts p-th roots of the parts on which every derivation vanishes.
poly::RatPoly squarefree_part(const poly::RatPoly& f, std::size_t main_var = 0);

/// d/dt applied to the coefficients.
poly::RatPoly t_derivative(const poly::RatPoly& f);

}  // namespace laurent::ideal

#endif
