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

#include "laurent/resolve.hpp"

#include <algorithm>

#include "laurent/error.hpp"
#include "laurent/ideal.hpp"

namespace laurent::resolve {

using ff::FqContext;
using greenberg::Refutation;
using greenberg::SatEvidence;
using hensel::Lifter;
using hensel::Point;
using poly::FqRing;
using poly::RatRing;
using series::TruncatedSeries;

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::Regular: return "regular";
        case Regularity::Singular: return "singular";
        case Regularity::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

const FqContext* context_of(const AffineSystem& s) {
    if (!s.equations.empty()) return s.equations.front().ring().ctx;
    if (s.inequation) return s.inequation->ring().ctx;
    throw Error("empty system");
}

std::vector<RatPoly> rational(std::span<const MultiPoly> fs) {
    std::vector<RatPoly> out;
    for (const auto& f : fs) out.push_back(poly::to_rational(f));
    return out;
}

std::vector<RatPoly> basis_of(std::span<const MultiPoly> eqs, std::size_t m, const FqContext* ctx) {
    return ideal::buchberger(rational(eqs), m, RatRing{ctx}).generators;
}

std::optional<int> dimension_of(std::span<const MultiPoly> eqs, std::size_t m, const FqContext* ctx) {
    if (eqs.empty()) return static_cast<int>(m);
    return ideal::dimension(ideal::buchberger(rational(eqs), m, RatRing{ctx}));
}

std::string poly_text(const MultiPoly& f, const std::vector<std::string>& names) { return f.to_string(names); }

std::string list_text(std::span<const MultiPoly> fs, const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + poly_text(fs[i], names);
    return s + "}";
}

MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& images) {
    return images.empty() ? f : f.substitute(images);
}

}  // namespace

RegularityReport regularity_check(const AffineSystem& system) {
    RegularityReport rep;
    const std::size_t m = system.nvars;
    if (system.equations.empty()) {
        rep.status = Regularity::Regular;
        rep.dimension = static_cast<int>(m);
        return rep;
    }
    const FqContext* ctx = context_of(system);
    const RatRing ring{ctx};
    const auto gb = ideal::buchberger(rational(system.equations), m, ring);
    rep.dimension = ideal::dimension(gb);
    if (!rep.dimension) {
        rep.status = Regularity::Regular;
        rep.locus = gb.generators;
        return rep;
    }
    const std::size_t r = m - static_cast<std::size_t>(*rep.dimension);
    const auto jac = poly::jacobian<FqRing>(system.equations, m, true).entries;
    std::vector<MultiPoly> gens = system.equations;
    const auto one = MultiPoly::constant(FqRing{ctx}, m, true, ctx->one());
    for (const auto& rows : poly::subsets(system.equations.size(), r))
        for (const auto& cols : poly::subsets(m + 1, r)) {
            std::vector<std::vector<MultiPoly>> minor;
            for (auto i : rows) {
                std::vector<MultiPoly> row;
                for (auto j : cols) row.push_back(jac[i][j]);
                minor.push_back(std::move(row));
            }
            auto d = poly::determinant(minor, one);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
    const auto locus = ideal::buchberger(rational(gens), m, ring);
    rep.locus = locus.generators;
    if (locus.is_unit()) rep.status = Regularity::Regular;
    else if (system.equations.size() == 1) rep.status = Regularity::Singular;
    else rep.status = Regularity::Inconclusive;
    return rep;
}

std::array<BlowupChart, 2> blow_up_origin(const MultiPoly& curve) {
    if (curve.nvars() != 2 || !curve.with_t()) throw Error("blow-up needs a plane curve over F_q[t]");
    if (curve.is_zero()) throw Error("blow-up of the zero polynomial");
    const unsigned mu = curve.order_at_origin();
    if (mu == 0) throw Error("curve does not pass through the origin");
    const FqRing ring = curve.ring();
    const auto x = MultiPoly::variable(ring, 2, true, 0);
    const auto y = MultiPoly::variable(ring, 2, true, 1);
    std::array<BlowupChart, 2> charts;
    charts[0].index = 1;
    charts[0].back_map = {x, x * y};
    charts[0].exceptional = x;
    charts[0].strict = curve.substitute(charts[0].back_map).divide_monomial({static_cast<std::uint16_t>(mu), 0, 0});
    charts[1].index = 2;
    charts[1].back_map = {x * y, y};
    charts[1].exceptional = y;
    charts[1].strict = curve.substitute(charts[1].back_map).divide_monomial({0, static_cast<std::uint16_t>(mu), 0});
    for (auto& c : charts) c.multiplicity = mu;
    return charts;
}

std::array<BlowupChart, 2> blow_up_at(const MultiPoly& curve, const MultiPoly& a, const MultiPoly& b) {
    if (!a.is_x_free() || !b.is_x_free()) throw Error("blow-up centre must have coordinates in F_q[t]");
    const FqRing ring = curve.ring();
    const auto x = MultiPoly::variable(ring, 2, true, 0);
    const auto y = MultiPoly::variable(ring, 2, true, 1);
    std::vector<MultiPoly> shift{x + a, y + b};
    auto charts = blow_up_origin(curve.substitute(shift));
    for (auto& c : charts) {
        c.back_map[0] = c.back_map[0] + a;
        c.back_map[1] = c.back_map[1] + b;
    }
    return charts;
}

AffineSystem descend(const AffineSystem& system, const MultiPoly& u) {
    const FqContext* ctx = context_of(system);
    std::vector<RatPoly> gens = rational(system.equations);
    const auto gb = ideal::buchberger(gens, system.nvars, RatRing{ctx});
    if (ideal::radical_membership(poly::to_rational(u), gb)) throw Error("descent polynomial vanishes on the locus");
    std::vector<MultiPoly> one{u};
    return descend(system, std::span<const MultiPoly>(one));
}

AffineSystem descend(const AffineSystem& system, std::span<const MultiPoly> centre) {
    const FqContext* ctx = context_of(system);
    AffineSystem out = system;
    for (const auto& u : centre) out.equations.push_back(u);
    const auto before = dimension_of(system.equations, system.nvars, ctx);
    const auto after = dimension_of(out.equations, out.nvars, ctx);
    if (!before || (after && *after >= *before)) throw Error("descent does not lower the dimension");
    return out;
}

std::optional<std::vector<std::pair<MultiPoly, MultiPoly>>> singular_centres(const RegularityReport& report,
                                                                             const MultiPoly& curve) {
    const FqContext* ctx = curve.ring().ctx;
    const FqRing ring{ctx};
    const RatRing rring{ctx};
    std::vector<std::pair<MultiPoly, MultiPoly>> out;
    auto as_poly = [&](const poly::RationalFunction& r) -> std::optional<MultiPoly> {
        if (!r.is_polynomial()) return std::nullopt;
        std::map<poly::Monomial, poly::UPoly, poly::GrevlexGreater> c;
        c.emplace(poly::Monomial{0, 0}, r.num());
        return poly::from_t_coefficients(ctx, 2, c);
    };
    // A single point: reduced basis {Y - b, X - a}.
    if (report.locus.size() == 2) {
        std::optional<MultiPoly> a, b;
        for (const auto& g : report.locus) {
            if (g.total_degree() != 1 || g.terms().size() > 2) continue;
            const auto& lead = g.leading();
            const std::size_t v = lead.exp[0] ? 0 : 1;
            const auto c = g.terms().size() == 2 ? -g.terms()[1].coeff : rring.zero();
            if (g.terms().size() == 2 && (g.terms()[1].exp[0] || g.terms()[1].exp[1])) continue;
            if (v == 0) a = as_poly(c);
            else b = as_poly(c);
        }
        if (a && b) {
            out.emplace_back(*a, *b);
            return out;
        }
    }
    ideal::GroebnerBasis<RatRing> gb;
    gb.ring = rring;
    gb.nvars = 2;
    gb.generators = report.locus;
    const auto elems = ctx->enumerate();
    std::vector<std::pair<ff::FqElem, ff::FqElem>> pts;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            bool on = true;
            for (const auto& g : report.locus) {
                std::vector<RatPoly> imgs{RatPoly::constant(rring, 0, false, poly::RationalFunction::constant(ctx, a)),
                                          RatPoly::constant(rring, 0, false, poly::RationalFunction::constant(ctx, b))};
                if (!g.substitute(imgs).is_zero()) {
                    on = false;
                    break;
                }
            }
            if (on) pts.emplace_back(a, b);
        }
    if (pts.empty() || pts.size() > 12) return std::nullopt;
    // The product of the maximal ideals must lie in the radical of the locus.
    const auto x = RatPoly::variable(rring, 2, false, 0);
    const auto y = RatPoly::variable(rring, 2, false, 1);
    const std::size_t k = pts.size();
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        RatPoly prod = RatPoly::constant(rring, 2, false, rring.one());
        for (std::size_t i = 0; i < k; ++i) {
            const auto& [a, b] = pts[i];
            prod = prod * ((mask >> i) & 1U
                               ? y - RatPoly::constant(rring, 2, false, poly::RationalFunction::constant(ctx, b))
                               : x - RatPoly::constant(rring, 2, false, poly::RationalFunction::constant(ctx, a)));
        }
        if (!ideal::radical_membership(prod, gb)) return std::nullopt;
    }
    for (const auto& [a, b] : pts)
        out.emplace_back(MultiPoly::constant(ring, 2, true, a), MultiPoly::constant(ring, 2, true, b));
    return out;
}

namespace {

struct Engine {
    const ResolveConfig& cfg;

    static std::string indent(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

    static Verdict unsat_radical(ideal::RadicalCertificate<RatRing> cert, std::vector<std::string> trace) {
        Verdict v;
        v.status = Status::Unsat;
        v.refutation = Refutation{Refutation::Kind::Radical, 0, {std::move(cert)}};
        v.trace = std::move(trace);
        return v;
    }

    Verdict search(const AffineSystem& s, const greenberg::SearchOptions& opts) const {
        if (!s.inequation) return greenberg::decide_positive(s.equations, s.nvars, opts);
        Lifter lifter(s.equations, s.nvars);
        const MultiPoly g = *s.inequation;
        const auto budget = cfg.perturb;
        auto accept = [&](const hensel::Lifted& l) {
            return hensel::smooth_perturb(lifter, l.point, l.certificate, g, budget).result;
        };
        auto v = greenberg::decide_positive(s.equations, s.nvars, opts, accept);
        if (v.sat) v.sat->inequation = g;
        return v;
    }

    Verdict only_inequation(const AffineSystem& s, std::vector<std::string> trace) const {
        Verdict v;
        v.trace = std::move(trace);
        const FqContext* ctx = context_of(s);
        Lifter lifter({}, s.nvars);
        Point zero(s.nvars, TruncatedSeries(ctx, 1));
        const auto cert = lifter.certify(zero);
        auto out = hensel::smooth_perturb(lifter, zero, *cert, *s.inequation, cfg.perturb);
        if (!out.result) {
            v.reason = "perturb-budget-exhausted";
            return v;
        }
        v.status = Status::Sat;
        SatEvidence ev;
        ev.inequation = s.inequation;
        ev.witness = out.result->point;
        ev.certificate = out.result->certificate;
        ev.found_at = 1;
        ev.original = ev.witness;
        v.sat = std::move(ev);
        v.trace.push_back("no equations: point chosen with g != 0");
        return v;
    }

    // Combines chart and descent verdicts of one blow-up step.
    static Verdict aggregate(std::vector<Verdict> parts, std::vector<std::vector<MultiPoly>> maps,
                             std::vector<std::string> trace) {
        Verdict out;
        out.trace = std::move(trace);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto& p = parts[i];
            for (auto& line : p.trace) out.trace.push_back(std::move(line));
            if (p.status == Status::Sat && out.status != Status::Sat) {
                out.status = Status::Sat;
                auto ev = std::move(*p.sat);
                if (!maps[i].empty()) {
                    std::vector<MultiPoly> composed;
                    for (const auto& img : maps[i]) composed.push_back(compose(img, ev.back_map));
                    ev.back_map = std::move(composed);
                    Point orig;
                    for (const auto& img : ev.back_map) orig.push_back(series::evaluate(img, ev.witness));
                    ev.original = std::move(orig);
                }
                out.sat = std::move(ev);
                return out;
            }
        }
        bool all_unsat = true;
        for (const auto& p : parts)
            if (p.status != Status::Unsat) all_unsat = false;
        if (all_unsat) {
            out.status = Status::Unsat;
            Refutation r{Refutation::Kind::Composite, 0, {}};
            for (auto& p : parts) {
                r.level = std::max(r.level, p.refutation->level);
                for (auto& c : p.refutation->radical) r.radical.push_back(std::move(c));
            }
            out.refutation = std::move(r);
            return out;
        }
        for (const auto& p : parts)
            if (p.status == Status::Unknown) {
                out.reason = p.reason;
                break;
            }
        return out;
    }

    Verdict run(const AffineSystem& input, int depth) const {
        const std::string pad = indent(depth);
        std::vector<std::string> trace;
        AffineSystem s;
        s.nvars = input.nvars;
        const FqContext* ctx = context_of(input);
        const RatRing rring{ctx};
        for (const auto& f : input.equations)
            if (!f.is_zero()) s.equations.push_back(poly::primitive_part(f));
        if (input.inequation) {
            if (input.inequation->is_x_free() && !input.inequation->is_zero())
                trace.push_back(pad + "normalize: inequation is a nonzero constant, dropped");
            else
                s.inequation = input.inequation;
        }
        trace.push_back(pad + "normalize: " + std::to_string(s.equations.size()) + " equation(s) in " +
                        std::to_string(s.nvars) + " variable(s)" +
                        (s.inequation ? ", inequation " + poly_text(*s.inequation, cfg.names) : ""));
        const auto rat = rational(s.equations);
        if (!s.equations.empty()) {
            const auto gb = ideal::buchberger(rat, s.nvars, rring);
            if (gb.is_unit()) {
                trace.push_back(pad + "normalize: 1 lies in the ideal over F_q(t)");
                const auto one = RatPoly::constant(rring, s.nvars, false, rring.one());
                return unsat_radical(ideal::radical_certificate(one, std::span<const RatPoly>(rat), s.nvars, rring),
                                     std::move(trace));
            }
        }
        if (s.inequation) {
            auto cert = ideal::radical_certificate(poly::to_rational(*s.inequation), std::span<const RatPoly>(rat),
                                                   s.nvars, rring);
            if (cert.member) {
                trace.push_back(pad + "normalize: g lies in the radical of the ideal");
                return unsat_radical(std::move(cert), std::move(trace));
            }
        }
        if (s.equations.empty()) {
            if (!s.inequation || s.nvars == 0) {
                Verdict v;
                v.status = Status::Sat;
                SatEvidence ev;
                ev.witness = Point(s.nvars, TruncatedSeries(ctx, 1));
                ev.original = ev.witness;
                ev.certificate.precision = 1;
                ev.certificate.dimension = static_cast<int>(s.nvars);
                v.sat = std::move(ev);
                v.trace = std::move(trace);
                v.trace.push_back(pad + "no conditions left");
                return v;
            }
            return only_inequation(s, std::move(trace));
        }
        {
            std::vector<MultiPoly> cleaned;
            for (const auto& g : ideal::buchberger(rat, s.nvars, rring).generators)
                cleaned.push_back(poly::primitive_part(poly::clear_denominators(g)));
            if (cleaned.size() == 1 && s.nvars > 0) {
                std::size_t main = 0;
                while (main + 1 < s.nvars && cleaned[0].degree_in(main) == 0) ++main;
                cleaned[0] = poly::primitive_part(
                    poly::clear_denominators(ideal::squarefree_part(poly::to_rational(cleaned[0]), main)));
            }
            s.equations = std::move(cleaned);
        }
        trace.push_back(pad + "normalize: equations " + list_text(s.equations, cfg.names));
        if (s.nvars == 0) {
            auto v = greenberg::decide_positive(s.equations, 0, cfg.search);
            for (auto& l : v.trace) trace.push_back(pad + l);
            v.trace = std::move(trace);
            return v;
        }
        const auto rep = regularity_check(s);
        trace.push_back(pad + "regularity: " + to_string(rep.status));
        if (rep.status == Regularity::Regular) return finish(search(s, cfg.search), std::move(trace), pad);

        // Direct search first; SAT and UNSAT from it are sound regardless of regularity.
        auto probe_opts = cfg.search;
        probe_opts.schedule.max_precision = std::min(cfg.search.schedule.max_precision, cfg.probe_precision);
        const bool plane = s.nvars == 2 && s.equations.size() == 1 && rep.status == Regularity::Singular;
        auto probe = search(s, plane ? probe_opts : cfg.search);
        if (probe.status != Status::Unknown) {
            trace.push_back(pad + "direct search decided the system");
            return finish(std::move(probe), std::move(trace), pad);
        }
        trace.push_back(pad + "direct search undecided (" + probe.reason + ")");
        if (!plane) {
            trace.push_back(pad + "resolution: locus is not a singular plane curve");
            return unknown("resolution-out-of-scope", std::move(trace));
        }
        if (depth >= cfg.max_blowup_depth) {
            trace.push_back(pad + "resolution: blow-up depth limit reached");
            return unknown("blowup-depth", std::move(trace));
        }
        const auto centres = singular_centres(rep, s.equations[0]);
        if (!centres) {
            trace.push_back(pad + "resolution: singular locus has a point that is not rational");
            return unknown("non-rational-singular-point", std::move(trace));
        }
        const auto& [a, b] = centres->front();
        trace.push_back(pad + "blow-up at (" + poly_text(a, cfg.names) + ", " + poly_text(b, cfg.names) + ")");
        const auto charts = blow_up_at(s.equations[0], a, b);
        std::vector<Verdict> parts;
        std::vector<std::vector<MultiPoly>> maps;
        for (const auto& c : charts) {
            AffineSystem child;
            child.nvars = 2;
            child.equations = {c.strict};
            if (s.inequation) child.inequation = s.inequation->substitute(c.back_map);
            auto cv = run(child, depth + 1);
            cv.trace.insert(cv.trace.begin(), pad + "chart " + std::to_string(c.index) + ": strict transform " +
                                                  poly_text(c.strict, cfg.names) + " (multiplicity " +
                                                  std::to_string(c.multiplicity) + ")");
            const bool sat = cv.status == Status::Sat;
            parts.push_back(std::move(cv));
            maps.push_back(c.back_map);
            if (sat) return aggregate(std::move(parts), std::move(maps), std::move(trace));
        }
        const auto x = MultiPoly::variable(s.equations[0].ring(), 2, true, 0);
        const auto y = MultiPoly::variable(s.equations[0].ring(), 2, true, 1);
        std::vector<MultiPoly> centre{x - a, y - b};
        auto dv = run(descend(s, std::span<const MultiPoly>(centre)), depth + 1);
        dv.trace.insert(dv.trace.begin(), pad + "descend: adjoin " + list_text(centre, cfg.names));
        parts.push_back(std::move(dv));
        maps.emplace_back();
        return aggregate(std::move(parts), std::move(maps), std::move(trace));
    }

    static Verdict unknown(std::string reason, std::vector<std::string> trace) {
        Verdict v;
        v.reason = std::move(reason);
        v.trace = std::move(trace);
        return v;
    }

    static Verdict finish(Verdict v, std::vector<std::string> trace, const std::string& pad) {
        for (auto& l : v.trace) trace.push_back(pad + l);
        v.trace = std::move(trace);
        return v;
    }
};

}  // namespace

Verdict decide_existential(const AffineSystem& system, const ResolveConfig& config) {
    if (system.equations.empty() && !system.inequation) throw Error("system has no equations and no inequation");
    for (const auto& f : system.equations)
        if (f.nvars() != system.nvars || !f.with_t()) throw Error("equation does not match the system variables");
    if (system.inequation && (system.inequation->nvars() != system.nvars || !system.inequation->with_t()))
        throw Error("inequation does not match the system variables");
    Engine engine{config};
    return engine.run(system, 0);
}

std::optional<int> resolution_depth(const MultiPoly& curve, int max_depth) {
    AffineSystem s;
    s.nvars = 2;
    const FqContext* ctx = curve.ring().ctx;
    auto basis = basis_of(std::span<const MultiPoly>(&curve, 1), 2, ctx);
    if (basis.size() != 1) {
        s.equations = {curve};
    } else {
        s.equations = {poly::primitive_part(poly::clear_denominators(ideal::squarefree_part(basis[0])))};
    }
    const auto rep = regularity_check(s);
    if (rep.status == Regularity::Regular) return 0;
    if (max_depth <= 0) return std::nullopt;
    const auto centres = singular_centres(rep, s.equations[0]);
    if (!centres) return std::nullopt;
    const auto charts = blow_up_at(s.equations[0], centres->front().first, centres->front().second);
    int worst = 0;
    for (const auto& c : charts) {
        if (c.strict.is_constant()) continue;
        const auto d = resolution_depth(c.strict, max_depth - 1);
        if (!d) return std::nullopt;
        worst = std::max(worst, *d);
    }
    return 1 + worst;
}

Check verify(const AffineSystem& original, const Verdict& verdict) {
    if (verdict.status == Status::Unknown) return {true, "unknown verdicts carry no claim"};
    if (verdict.status == Status::Unsat) {
        if (!verdict.refutation) return {false, "unsat verdict without evidence"};
        for (const auto& c : verdict.refutation->radical)
            if (!ideal::verify_radical_certificate(c)) return {false, "radical certificate does not expand to 1"};
        return {true, "refutation evidence checked"};
    }
    if (!verdict.sat) return {false, "sat verdict without evidence"};
    const auto& ev = *verdict.sat;
    const std::size_t m = ev.witness.size();
    if (m == 0) {
        for (const auto& f : original.equations)
            if (!f.is_zero()) return {false, "constant equation does not vanish"};
        return {true, "no variables"};
    }
    const int p = ev.witness.front().precision();
    Lifter lifter(ev.system, m);
    const auto cert = lifter.certify(ev.witness);
    if (!cert) return {false, "witness does not certify"};
    const int target = 2 * p;
    const auto lifted = lifter.lift(ev.witness, *cert, target);
    for (const auto& f : ev.system)
        if (series::evaluate(f, lifted).valuation().value < target) return {false, "lifted residual too large"};
    if (!lifter.certify(lifted)) return {false, "lifted point does not re-certify"};
    if (ev.inequation && !series::evaluate(*ev.inequation, lifted).valuation().exact())
        return {false, "inequation not certified nonzero"};
    Point back;
    if (ev.back_map.empty()) back = lifted;
    else
        for (const auto& img : ev.back_map) back.push_back(series::evaluate(img, lifted));
    if (back.size() != original.nvars) return {false, "back map has the wrong arity"};
    for (const auto& f : original.equations)
        if (series::evaluate(f, back).valuation().value < target) return {false, "original equation fails"};
    if (original.inequation && !series::evaluate(*original.inequation, back).valuation().exact())
        return {false, "original inequation vanishes"};
    for (std::size_t j = 0; j < m && j < ev.original.size() && ev.back_map.empty(); ++j)
        if (ev.original[j] != ev.witness[j]) return {false, "reported witness differs"};
    return {true, "re-lifted to t^" + std::to_string(target)};
}

}  // namespace laurent::resolve
