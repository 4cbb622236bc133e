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

#ifndef LAURENT_FF_HPP
#define LAURENT_FF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace laurent::ff {

/// Element of F_q packed as its coordinate vector in the basis 1, a, ..., a^{n-1}:
/// code = c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Only meaningful together with
/// the FqContext that produced it.
struct FqElem {
    std::uint32_t code = 0;

    [[nodiscard]] bool is_zero() const { return code == 0; }
    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

class FqContext;
using Field = std::shared_ptr<const FqContext>;

/// The finite field F_q, q = p^n, realised as F_p[x]/(modulus).
class FqContext {
public:
    /// Builds F_{p^n}. `modulus` lists the coefficients low-to-high and must be
    /// monic of degree n and irreducible; when absent and n > 1 the monic
    /// irreducible of smallest packed code is chosen.
    static Field make(std::uint32_t p, unsigned n = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Parses "p=<p> n=<n> [modulus=<c0,c1,...>]".
    static Field parse(const std::string& spec);

    [[nodiscard]] std::uint32_t p() const { return p_; }
    [[nodiscard]] unsigned n() const { return n_; }
    [[nodiscard]] std::uint32_t q() const { return q_; }
    /// Monic modulus low-to-high (size n+1); empty for prime fields.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    [[nodiscard]] FqElem zero() const { return {0}; }
    [[nodiscard]] FqElem one() const { return {1}; }
    [[nodiscard]] FqElem from_int(long long v) const;
    /// The class of x in F_p[x]/(modulus); only defined for n > 1.
    [[nodiscard]] FqElem generator() const;
    [[nodiscard]] FqElem from_coords(std::span<const std::uint32_t> coords) const;
    [[nodiscard]] std::vector<std::uint32_t> coords(FqElem a) const;

    [[nodiscard]] FqElem add(FqElem a, FqElem b) const;
    [[nodiscard]] FqElem sub(FqElem a, FqElem b) const;
    [[nodiscard]] FqElem neg(FqElem a) const;
    [[nodiscard]] FqElem mul(FqElem a, FqElem b) const;
    [[nodiscard]] FqElem inv(FqElem a) const;
    [[nodiscard]] FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    [[nodiscard]] FqElem pow(FqElem a, std::uint64_t e) const;
    /// Inverse Frobenius: the unique b with b^p = a.
    [[nodiscard]] FqElem pth_root(FqElem a) const;

    /// All q elements in increasing code order (lexicographic on coordinates,
    /// highest coordinate most significant): F_4 -> 0, 1, a, a+1.
    [[nodiscard]] std::vector<FqElem> enumerate() const;

    [[nodiscard]] std::string to_string(FqElem a) const;

    FqContext(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);

private:
    [[nodiscard]] FqElem mul_slow(FqElem a, FqElem b) const;

    std::uint32_t p_;
    unsigned n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> powp_;  // p^i
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint32_t> inv_table_;
    std::vector<std::uint32_t> neg_table_;
};

bool is_prime(std::uint64_t v);

/// Irreducibility of a monic polynomial over F_p (coefficients low-to-high).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);

}  // namespace laurent::ff

#endif
