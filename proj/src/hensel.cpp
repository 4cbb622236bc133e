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

#include "laurent/hensel.hpp"

#include <algorithm>
#include <numeric>

#include "laurent/error.hpp"

namespace laurent::hensel {

using ff::FqContext;
using ff::FqElem;
using poly::RatPoly;
using poly::RatRing;

namespace {

int common_precision(const Point& x) {
    if (x.empty()) throw Error("empty point");
    const int p = x.front().precision();
    for (const auto& s : x)
        if (s.precision() != p) throw Error("point coordinates have different precisions");
    return p;
}

Point padded(const Point& x, int n) {
    Point out;
    out.reserve(x.size());
    for (const auto& s : x) out.push_back(s.padded(n));
    return out;
}

bool vanishes_below(const TruncatedSeries& s, int n) { return s.valuation().value >= n; }

std::vector<std::vector<TruncatedSeries>> submatrix(const std::vector<std::vector<TruncatedSeries>>& a,
                                                    const std::vector<std::size_t>& rows,
                                                    const std::vector<std::size_t>& cols) {
    std::vector<std::vector<TruncatedSeries>> out;
    for (auto i : rows) {
        std::vector<TruncatedSeries> row;
        for (auto j : cols) row.push_back(a[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TruncatedSeries determinant(const std::vector<std::vector<TruncatedSeries>>& a, const FqContext* ctx,
                            int precision) {
    const std::size_t n = a.size();
    if (n == 0) return TruncatedSeries::constant(ctx, ctx->one(), precision);
    if (n == 1) return a[0][0];
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TruncatedSeries acc(ctx, precision);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        TruncatedSeries term = a[0][perm[0]];
        for (std::size_t i = 1; i < n; ++i) term = term * a[i][perm[i]];
        acc = (inversions % 2) ? acc - term : acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Lifter::Lifter(std::vector<MultiPoly> equations, std::size_t nvars) : eqs_(std::move(equations)), m_(nvars) {
    for (const auto& f : eqs_)
        if (f.nvars() != m_ || !f.with_t()) throw Error("lifting needs equations in F_q[t][X_1..X_m]");
    if (eqs_.empty()) {
        dim_ = static_cast<int>(m_);
    } else {
        std::vector<RatPoly> rat;
        for (const auto& f : eqs_) rat.push_back(poly::to_rational(f));
        dim_ = ideal::dimension(ideal::buchberger(rat, m_, RatRing{eqs_.front().ring().ctx}));
        jac_ = poly::jacobian<poly::FqRing>(eqs_, m_).entries;
    }
}

bool Lifter::localized_member(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    if (rows.size() == eqs_.size()) return true;
    {
        std::lock_guard lock(mu_);
        auto it = member_cache_.find({rows, cols});
        if (it != member_cache_.end()) return it->second;
    }
    // f_k in (f_R) localized at det: f_k reduces to 0 modulo (f_R, 1 - Z det).
    const RatRing ring{eqs_.front().ring().ctx};
    std::vector<std::size_t> embed(m_);
    std::iota(embed.begin(), embed.end(), 0);
    std::vector<std::vector<MultiPoly>> minor;
    for (auto i : rows) {
        std::vector<MultiPoly> row;
        for (auto j : cols) row.push_back(jac_[i][j]);
        minor.push_back(std::move(row));
    }
    const auto one = MultiPoly::constant(eqs_.front().ring(), m_, true, eqs_.front().ring().ctx->one());
    const RatPoly det = poly::to_rational(poly::determinant(minor, one)).embed(m_ + 1, embed);
    std::vector<RatPoly> gens;
    for (auto i : rows) gens.push_back(poly::to_rational(eqs_[i]).embed(m_ + 1, embed));
    const auto z = RatPoly::variable(ring, m_ + 1, false, m_);
    gens.push_back(RatPoly::constant(ring, m_ + 1, false, ring.one()) - z * det);
    const auto gb = ideal::buchberger(gens, m_ + 1, ring);
    bool ok = true;
    for (std::size_t k = 0; k < eqs_.size() && ok; ++k) {
        if (std::find(rows.begin(), rows.end(), k) != rows.end()) continue;
        ok = ideal::ideal_membership(poly::to_rational(eqs_[k]).embed(m_ + 1, embed), gb);
    }
    std::lock_guard lock(mu_);
    member_cache_[{rows, cols}] = ok;
    return ok;
}

std::optional<HenselCertificate> Lifter::certify(const Point& x) const {
    return certify_at(x, common_precision(x));
}

std::optional<HenselCertificate> Lifter::certify_at(const Point& x, int n) const {
    if (x.size() != m_) throw Error("point arity does not match the system");
    const int p = common_precision(x);
    if (n < 1 || n > p) throw Error("certification level out of range");
    if (!dim_) return std::nullopt;
    for (const auto& f : eqs_)
        if (!vanishes_below(series::evaluate(f, x), n)) return std::nullopt;
    const std::size_t r = m_ - static_cast<std::size_t>(*dim_);
    const FqContext* ctx = x.front().ctx();
    std::vector<std::vector<TruncatedSeries>> jx(eqs_.size());
    for (std::size_t i = 0; i < eqs_.size(); ++i)
        for (std::size_t j = 0; j < m_; ++j) jx[i].push_back(series::evaluate(jac_[i][j], x, p));

    struct Candidate {
        int e;
        std::vector<std::size_t> rows, cols;
    };
    std::vector<Candidate> cands;
    for (const auto& rows : poly::subsets(eqs_.size(), r))
        for (const auto& cols : poly::subsets(m_, r)) {
            const auto v = determinant(submatrix(jx, rows, cols), ctx, p).valuation();
            if (v.exact() && n > 2 * v.value) cands.push_back({v.value, rows, cols});
        }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.e < b.e; });
    for (const auto& c : cands) {
        if (!localized_member(c.rows, c.cols)) continue;
        return HenselCertificate{c.rows, c.cols, c.e, n, *dim_};
    }
    return std::nullopt;
}

Point Lifter::lift(const Point& x, const HenselCertificate& cert, int target) const {
    if (target < 1) throw Error("target precision must be positive");
    if (x.size() != m_) throw Error("point arity does not match the system");
    const int e = cert.e;
    const int goal = target + e;
    const int w = goal + e;
    Point cur = padded(x, w);
    const std::size_t r = cert.rows.size();
    const FqContext* ctx = x.front().ctx();
    last_iterations_ = 0;
    last_residuals_.clear();
    int prev = -1;
    while (true) {
        std::vector<TruncatedSeries> res;
        int v = w;
        for (auto i : cert.rows) {
            res.push_back(series::evaluate(eqs_[i], cur));
            v = std::min(v, res.back().valuation().value);
        }
        last_residuals_.push_back(v);
        if (v >= goal) break;
        if (v <= prev || v <= 2 * e) throw Error("certificate is not valid at the point");
        prev = v;
        std::vector<std::vector<TruncatedSeries>> a(r);
        for (std::size_t i = 0; i < r; ++i)
            for (auto j : cert.cols) a[i].push_back(series::evaluate(jac_[cert.rows[i]][j], cur, w));
        const auto det = determinant(a, ctx, w);
        const auto dv = det.valuation();
        if (!dv.exact() || dv.value != e) throw Error("certificate minor changed valuation during lifting");
        const auto unit_inv = det.shift_down(e).invert_unit();
        for (std::size_t j = 0; j < r; ++j) {
            // delta_j = sum_i adj[j][i] res_i / det, adj[j][i] = (-1)^(i+j) minor(i, j).
            TruncatedSeries num(ctx, w);
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<std::vector<TruncatedSeries>> sub;
                for (std::size_t ii = 0; ii < r; ++ii) {
                    if (ii == i) continue;
                    std::vector<TruncatedSeries> row;
                    for (std::size_t jj = 0; jj < r; ++jj)
                        if (jj != j) row.push_back(a[ii][jj]);
                    sub.push_back(std::move(row));
                }
                const auto term = determinant(sub, ctx, w) * res[i];
                num = ((i + j) % 2) ? num - term : num + term;
            }
            const auto delta = (num.shift_down(e) * unit_inv).padded(w);
            auto& xc = cur[cert.cols[j]];
            xc = xc - delta;
        }
        ++last_iterations_;
    }
    Point out;
    for (const auto& s : cur) out.push_back(s.truncated(target));
    return out;
}

std::optional<HenselCertificate> certify_liftable(std::span<const MultiPoly> equations, const Point& point) {
    if (point.empty()) throw Error("empty point");
    Lifter lifter(std::vector<MultiPoly>(equations.begin(), equations.end()), point.size());
    return lifter.certify(point);
}

Point newton_lift(std::span<const MultiPoly> equations, const Point& point, const HenselCertificate& cert,
                  int target_precision) {
    if (point.empty()) throw Error("empty point");
    Lifter lifter(std::vector<MultiPoly>(equations.begin(), equations.end()), point.size());
    return lifter.lift(point, cert, target_precision);
}

PerturbOutcome smooth_perturb(const Lifter& lifter, const Point& point, const HenselCertificate& cert,
                              const MultiPoly& g, const PerturbBudget& budget) {
    PerturbOutcome out;
    const int p = common_precision(point);
    const int e = cert.e;
    if (p - e >= 1) {
        Point low;
        for (const auto& s : point) low.push_back(s.truncated(p - e));
        if (series::evaluate(g, low, p - e).valuation().exact()) {
            out.result = Lifted{point, cert};
            return out;
        }
    }
    const FqContext* ctx = point.front().ctx();
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < point.size(); ++j)
        if (std::find(cert.cols.begin(), cert.cols.end(), j) == cert.cols.end()) free.push_back(j);
    if (free.size() > static_cast<std::size_t>(std::max(0, budget.directions)))
        free.resize(static_cast<std::size_t>(std::max(0, budget.directions)));
    const auto scalars = ctx->enumerate();
    for (auto j : free) {
        for (int k = 0; k < budget.depths; ++k) {
            const int depth = 2 * e + 1 + k;
            for (const auto& c : scalars) {
                if (c.is_zero()) continue;
                ++out.attempts;
                Point moved = padded(point, std::max(p, depth + 1));
                moved[j].set_coeff(depth, ctx->add(moved[j].coeff(depth), c));
                const auto moved_cert = lifter.certify_at(moved, depth);
                if (!moved_cert) continue;
                const int target = std::max(p, 2 * (depth + moved_cert->e + 1));
                auto lifted = lifter.lift(moved, *moved_cert, target);
                if (!series::evaluate(g, lifted, target).valuation().exact()) continue;
                auto final_cert = lifter.certify(lifted);
                if (!final_cert) continue;
                out.result = Lifted{std::move(lifted), *final_cert};
                return out;
            }
        }
    }
    return out;
}

PerturbOutcome smooth_perturb(std::span<const MultiPoly> equations, const Point& point,
                              const HenselCertificate& cert, const MultiPoly& g, const PerturbBudget& budget) {
    if (point.empty()) throw Error("empty point");
    Lifter lifter(std::vector<MultiPoly>(equations.begin(), equations.end()), point.size());
    return smooth_perturb(lifter, point, cert, g, budget);
}

}  // namespace laurent::hensel
