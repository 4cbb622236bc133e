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

#ifndef LAURENT_TESTS_HELPERS_HPP
#define LAURENT_TESTS_HELPERS_HPP

#include <vector>

#include "laurent/ff.hpp"
#include "laurent/poly.hpp"
#include "laurent/series.hpp"

namespace testing_helpers {

using laurent::ff::Field;
using laurent::ff::FqElem;
using laurent::poly::FqRing;
using laurent::poly::MultiPoly;
using laurent::poly::RatPoly;
using laurent::poly::RatRing;
using laurent::series::TruncatedSeries;

/// Builders for F_q[t][X_1..X_m] (or F_q[X] when with_t is false).
struct PolyRing {
    Field field;
    std::size_t m;
    bool with_t = true;

    [[nodiscard]] FqRing ring() const { return FqRing{field.get()}; }
    [[nodiscard]] MultiPoly x(std::size_t i) const { return MultiPoly::variable(ring(), m, with_t, i); }
    [[nodiscard]] MultiPoly t() const { return MultiPoly::variable(ring(), m, with_t, m); }
    [[nodiscard]] MultiPoly c(long long v) const {
        return MultiPoly::constant(ring(), m, with_t, field->from_int(v));
    }
    [[nodiscard]] MultiPoly c(FqElem v) const { return MultiPoly::constant(ring(), m, with_t, v); }
};

/// Builders for F_q(t)[X_1..X_m].
struct RatPolyRing {
    Field field;
    std::size_t m;

    [[nodiscard]] RatRing ring() const { return RatRing{field.get()}; }
    [[nodiscard]] RatPoly x(std::size_t i) const { return RatPoly::variable(ring(), m, false, i); }
    [[nodiscard]] RatPoly c(long long v) const { return RatPoly::constant(ring(), m, false, ring().from_int(v)); }
    [[nodiscard]] RatPoly t() const {
        return RatPoly::constant(ring(), m, false, laurent::poly::RationalFunction::t(field.get()));
    }
};

inline TruncatedSeries series(const Field& f, std::vector<long long> coeffs, int precision) {
    std::vector<FqElem> c;
    for (auto v : coeffs) c.push_back(f->from_int(v));
    return TruncatedSeries(f.get(), c, precision);
}

inline std::vector<long long> ints(const TruncatedSeries& s) {
    std::vector<long long> out;
    for (auto c : s.coeffs()) out.push_back(c.code);
    return out;
}

}  // namespace testing_helpers

#endif
