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

#include "laurent/greenberg.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "laurent/error.hpp"

namespace laurent::greenberg {

using ff::FqContext;
using poly::FqRing;
using poly::Monomial;
using series::TruncatedSeries;

Point WeilRestriction::point(std::span<const FqElem> y) const {
    if (y.size() != nvars * static_cast<std::size_t>(level)) throw Error("assignment arity mismatch");
    const FqContext* ctx = original.empty() ? nullptr : original.front().ring().ctx;
    Point out;
    for (std::size_t j = 0; j < nvars; ++j) {
        std::vector<FqElem> c;
        for (int k = 0; k < level; ++k) c.push_back(y[index(j, k)]);
        out.emplace_back(ctx, std::move(c), level);
    }
    return out;
}

WeilRestriction weil_restrict(std::span<const MultiPoly> system, std::size_t nvars, int level) {
    if (level < 1) throw Error("truncation level must be positive");
    WeilRestriction w;
    w.original.assign(system.begin(), system.end());
    w.nvars = nvars;
    w.level = level;
    if (system.empty()) return w;
    const FqRing ring = system.front().ring();
    const std::size_t nv = nvars * static_cast<std::size_t>(level);
    std::vector<MultiPoly> images;
    const auto t = MultiPoly::variable(ring, nv, true, nv);
    for (std::size_t j = 0; j < nvars; ++j) {
        MultiPoly img(ring, nv, true);
        MultiPoly tk = MultiPoly::constant(ring, nv, true, ring.ctx->one());
        for (int k = 0; k < level; ++k) {
            img += MultiPoly::variable(ring, nv, true, w.index(j, k)) * tk;
            tk = tk * t;
        }
        images.push_back(std::move(img));
    }
    for (const auto& f : system) {
        if (f.nvars() != nvars || !f.with_t()) throw Error("weil_restrict needs equations in F_q[t][X]");
        const auto expanded = f.substitute(images);
        std::vector<std::vector<MultiPoly::Term>> by_k(static_cast<std::size_t>(level));
        for (const auto& term : expanded.terms()) {
            const unsigned k = term.exp[nv];
            if (k >= static_cast<unsigned>(level)) continue;
            Monomial e(term.exp.begin(), term.exp.begin() + static_cast<std::ptrdiff_t>(nv));
            by_k[k].push_back({std::move(e), term.coeff});
        }
        for (auto& terms : by_k) w.restricted.push_back(MultiPoly::from_terms(ring, nv, false, std::move(terms)));
    }
    return w;
}

namespace {

struct FiniteSearch {
    std::span<const MultiPoly> system;
    std::size_t nvars;
    std::size_t cap;
    std::vector<FqElem> elems;
    // equations to check once variable v is assigned
    std::vector<std::vector<std::size_t>> due;
    std::vector<std::size_t> constant_eqs;

    FiniteSearch(std::span<const MultiPoly> sys, std::size_t n, std::size_t c) : system(sys), nvars(n), cap(c) {
        if (!sys.empty()) elems = sys.front().ring().ctx->enumerate();
        due.resize(n);
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const auto& f = sys[i];
            if (f.with_t() || f.nvars() != n) throw Error("solve_finite needs polynomials over F_q in the given variables");
            std::optional<std::size_t> top;
            for (const auto& term : f.terms())
                for (std::size_t v = 0; v < n; ++v)
                    if (term.exp[v] && (!top || v > *top)) top = v;
            if (top) due[*top].push_back(i);
            else constant_eqs.push_back(i);
        }
    }

    bool constants_ok() const {
        for (auto i : constant_eqs)
            if (!system[i].is_zero()) return false;
        return true;
    }

    void run(std::vector<FqElem>& y, std::size_t v, std::vector<std::vector<FqElem>>& out) const {
        if (out.size() >= cap) return;
        if (v == nvars) {
            out.push_back(y);
            return;
        }
        for (const auto& c : elems) {
            y[v] = c;
            bool ok = true;
            for (auto i : due[v])
                if (!series::evaluate(system[i], y).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) run(y, v + 1, out);
            if (out.size() >= cap) break;
        }
        y[v] = FqElem{0};
    }
};

template <class Branch>
auto fan_out(std::size_t branches, int threads, Branch&& branch) {
    using Result = decltype(branch(std::size_t{0}));
    std::vector<Result> results(branches);
    if (threads <= 1 || branches <= 1) {
        for (std::size_t b = 0; b < branches; ++b) results[b] = branch(b);
        return results;
    }
    std::size_t next = 0;
    while (next < branches) {
        std::vector<std::future<Result>> batch;
        const std::size_t end = std::min(branches, next + static_cast<std::size_t>(threads));
        for (std::size_t b = next; b < end; ++b) batch.push_back(std::async(std::launch::async, branch, b));
        for (std::size_t b = next; b < end; ++b) results[b] = batch[b - next].get();
        next = end;
    }
    return results;
}

}  // namespace

std::vector<std::vector<FqElem>> solve_all(std::span<const MultiPoly> system, std::size_t nvars, std::size_t cap,
                                           int threads) {
    std::vector<std::vector<FqElem>> out;
    if (cap == 0) return out;
    if (system.empty()) {
        // Every assignment is a solution; the least is all zeros.
        out.emplace_back(nvars, FqElem{0});
        if (cap == 1 || nvars == 0) return out;
        throw Error("solve_all without equations needs a field to enumerate");
    }
    FiniteSearch search(system, nvars, cap);
    if (!search.constants_ok()) return out;
    if (nvars == 0) {
        out.emplace_back();
        return out;
    }
    auto parts = fan_out(search.elems.size(), threads, [&](std::size_t b) {
        std::vector<std::vector<FqElem>> local;
        std::vector<FqElem> y(nvars, FqElem{0});
        y[0] = search.elems[b];
        for (auto i : search.due[0])
            if (!series::evaluate(system[i], y).is_zero()) return local;
        search.run(y, 1, local);
        return local;
    });
    for (auto& p : parts)
        for (auto& s : p) {
            if (out.size() >= cap) return out;
            out.push_back(std::move(s));
        }
    return out;
}

std::optional<std::vector<FqElem>> solve_finite(std::span<const MultiPoly> system, std::size_t nvars, int threads) {
    auto all = solve_all(system, nvars, 1, threads);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<int> PrecisionSchedule::levels() const {
    std::vector<int> out;
    for (int n = 1; n <= max_precision; n *= 2) out.push_back(n);
    return out;
}

namespace {

struct TruncatedSearch {
    std::span<const MultiPoly> system;
    std::size_t m;
    int level;
    std::size_t cap;
    long long budget;
    const FqContext* ctx;
    std::vector<FqElem> elems;

    Point point_at(const std::vector<FqElem>& y, int precision) const {
        Point out;
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<FqElem> c;
            for (int k = 0; k < precision; ++k) c.push_back(y[static_cast<std::size_t>(k) * m + j]);
            out.emplace_back(ctx, std::move(c), precision);
        }
        return out;
    }

    bool level_ok(const std::vector<FqElem>& y, int k) const {
        const auto x = point_at(y, k + 1);
        for (const auto& f : system)
            if (!series::evaluate(f, x).coeff(k).is_zero()) return false;
        return true;
    }

    // Returns false when the node budget ran out.
    bool run(std::vector<FqElem>& y, std::size_t pos, TruncatedSolutions& out) const {
        const std::size_t total = m * static_cast<std::size_t>(level);
        if (pos == total) {
            out.solutions.push_back(point_at(y, level));
            return true;
        }
        for (const auto& c : elems) {
            if (++out.nodes > budget) return false;
            y[pos] = c;
            const bool block_done = (pos % m) == m - 1;
            if (!block_done || level_ok(y, static_cast<int>(pos / m))) {
                if (!run(y, pos + 1, out)) return false;
            }
            if (out.solutions.size() >= cap) break;
        }
        y[pos] = FqElem{0};
        return true;
    }
};

}  // namespace

TruncatedSolutions solve_truncated(std::span<const MultiPoly> system, std::size_t nvars, int level,
                                   std::size_t cap, long long node_budget, int threads) {
    if (level < 1) throw Error("truncation level must be positive");
    if (nvars == 0) throw Error("solve_truncated needs at least one variable");
    if (system.empty()) throw Error("solve_truncated needs at least one equation");
    TruncatedSearch search{system, nvars, level, cap, node_budget, system.front().ring().ctx, {}};
    search.elems = search.ctx->enumerate();
    auto parts = fan_out(search.elems.size(), threads, [&](std::size_t b) {
        TruncatedSolutions local;
        std::vector<FqElem> y(nvars * static_cast<std::size_t>(level), FqElem{0});
        y[0] = search.elems[b];
        local.nodes = 1;
        if (nvars == 1 && !search.level_ok(y, 0)) return local;
        local.complete = search.run(y, 1, local);
        return local;
    });
    TruncatedSolutions out;
    for (auto& p : parts) {
        out.nodes += p.nodes;
        for (auto& s : p.solutions)
            if (out.solutions.size() < cap) out.solutions.push_back(std::move(s));
        if (!p.complete) {
            out.complete = false;
            break;
        }
        if (out.solutions.size() >= cap) break;
    }
    return out;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Sat: return "sat";
        case Status::Unsat: return "unsat";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

Verdict decide_constant(std::span<const MultiPoly> system, const SearchOptions& options) {
    Verdict v;
    int first_bad = -1;
    for (const auto& f : system) {
        if (f.is_zero()) continue;
        // f is a nonzero element of F_q[t]; its valuation is the lowest t-power.
        int val = 1 << 30;
        for (const auto& term : f.terms()) val = std::min(val, static_cast<int>(term.exp[0]));
        if (first_bad < 0 || val < first_bad) first_bad = val;
    }
    if (first_bad < 0) {
        v.status = Status::Sat;
        SatEvidence ev;
        ev.system.assign(system.begin(), system.end());
        v.sat = std::move(ev);
        v.trace.push_back("no variables: every equation is identically zero");
        return v;
    }
    for (int n : options.schedule.levels())
        if (n > first_bad) {
            v.status = Status::Unsat;
            v.refutation = Refutation{Refutation::Kind::Truncation, n, {}};
            v.trace.push_back("no variables: a nonzero constant survives mod t^" + std::to_string(n));
            return v;
        }
    v.reason = "precision-exhausted";
    return v;
}

}  // namespace

Verdict decide_positive(std::span<const MultiPoly> system, std::size_t nvars, const SearchOptions& options,
                        const Acceptor& accept) {
    if (system.empty()) throw Error("decide_positive needs at least one equation");
    if (nvars == 0) return decide_constant(system, options);
    hensel::Lifter lifter(std::vector<MultiPoly>(system.begin(), system.end()), nvars);
    Verdict v;
    bool rejected = false;
    bool cut = false;
    const int max_n = options.schedule.max_precision;
    for (int n : options.schedule.levels()) {
        auto sols =
            solve_truncated(system, nvars, n, options.candidate_cap, options.node_budget, options.threads);
        v.trace.push_back("level " + std::to_string(n) + ": " + std::to_string(sols.solutions.size()) +
                          (sols.complete ? "" : "+") + " solutions mod t^" + std::to_string(n));
        if (sols.solutions.empty()) {
            if (!sols.complete) {
                cut = true;
                break;
            }
            v.status = Status::Unsat;
            v.refutation = Refutation{Refutation::Kind::Truncation, n, {}};
            v.trace.push_back("no solution mod t^" + std::to_string(n));
            return v;
        }
        if (2 * n > max_n) continue;
        for (const auto& x : sols.solutions) {
            const auto cert = lifter.certify(x);
            if (!cert) continue;
            const auto lifted = lifter.lift(x, *cert, 2 * n);
            const auto again = lifter.certify(lifted);
            if (!again) continue;
            hensel::Lifted cand{lifted, *again};
            if (accept) {
                auto moved = accept(cand);
                if (!moved) {
                    rejected = true;
                    continue;
                }
                cand = std::move(*moved);
            }
            v.status = Status::Sat;
            SatEvidence ev;
            ev.system.assign(system.begin(), system.end());
            ev.witness = cand.point;
            ev.certificate = cand.certificate;
            ev.found_at = n;
            ev.original = cand.point;
            v.sat = std::move(ev);
            v.trace.push_back("certified candidate at level " + std::to_string(n) +
                              " (e=" + std::to_string(cand.certificate.e) + "), lifted to t^" +
                              std::to_string(cand.certificate.precision));
            return v;
        }
        if (!sols.complete) {
            cut = true;
            break;
        }
    }
    v.reason = rejected ? "perturb-budget-exhausted" : cut ? "search-budget-exhausted" : "precision-exhausted";
    return v;
}

}  // namespace laurent::greenberg
