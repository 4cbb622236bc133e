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

#include "laurent/ff.hpp"

#include <algorithm>
#include <sstream>

#include "laurent/error.hpp"

namespace laurent::ff {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo monic b over F_p.
Coeffs rem_mod_p(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = lead * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Next monic polynomial of the given degree in packed-code order; false on wrap.
bool next_monic(Coeffs& f, std::uint32_t p) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (++f[i] < p) return true;
        f[i] = 0;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        Coeffs d(k + 1, 0);
        d[k] = 1;
        do {
            if (rem_mod_p(f, d, p).empty()) return false;
        } while (next_monic(d, p));
    }
    return true;
}

Field FqContext::make(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) throw Error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > 65536) throw Error("field too large (q > 65536)");
    }
    Coeffs mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) {
            if (c >= p) throw Error("modulus coefficient out of range");
        }
        if (mod.size() != n + 1 || mod.back() != 1) throw Error("modulus must be monic of degree n");
        if (!is_irreducible_mod_p(mod, p)) throw Error("modulus is reducible over F_" + std::to_string(p));
        if (n == 1) mod.clear();
    } else if (n > 1) {
        mod.assign(n + 1, 0);
        mod[n] = 1;
        while (!is_irreducible_mod_p(mod, p)) next_monic(mod, p);
    }
    return std::make_shared<const FqContext>(p, n, std::move(mod));
}

Field FqContext::parse(const std::string& spec) {
    std::istringstream in(spec);
    std::string tok;
    std::optional<std::uint32_t> p;
    unsigned n = 1;
    std::optional<Coeffs> mod;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error("bad field spec token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        try {
            if (key == "p") {
                p = static_cast<std::uint32_t>(std::stoul(val));
            } else if (key == "n") {
                n = static_cast<unsigned>(std::stoul(val));
            } else if (key == "modulus") {
                Coeffs c;
                std::istringstream cs(val);
                std::string part;
                while (std::getline(cs, part, ',')) c.push_back(static_cast<std::uint32_t>(std::stoul(part)));
                mod = std::move(c);
            } else {
                throw Error("unknown field spec key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw Error("bad field spec value '" + tok + "'");
        }
    }
    if (!p) throw Error("field spec needs p=<prime>");
    return make(*p, n, mod);
}

FqContext::FqContext(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < n_; ++i) {
        powp_.push_back(q_);
        q_ *= p_;
    }
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            const std::uint32_t c = (a / powp_[i]) % p_;
            r += ((p_ - c) % p_) * powp_[i];
        }
        neg_table_[a] = r;
    }
    if (q_ <= 256) {
        add_table_.resize(std::size_t{q_} * q_);
        mul_table_.resize(std::size_t{q_} * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t r = 0;
                for (unsigned i = 0; i < n_; ++i) {
                    const std::uint32_t c = ((a / powp_[i]) % p_ + (b / powp_[i]) % p_) % p_;
                    r += c * powp_[i];
                }
                add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(r);
                mul_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(mul_slow({a}, {b}).code);
            }
        }
    }
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
        if (inv_table_[a] != 0) continue;
        const FqElem b = pow({a}, q_ - 2);
        inv_table_[a] = b.code;
        inv_table_[b.code] = a;
    }
}

FqElem FqContext::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FqElem FqContext::generator() const {
    if (n_ < 2) throw Error("prime field has no extension generator");
    return {p_};
}

FqElem FqContext::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() > n_) throw Error("too many coordinates for field element");
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) code += (coords[i] % p_) * powp_[i];
    return {code};
}

std::vector<std::uint32_t> FqContext::coords(FqElem a) const {
    std::vector<std::uint32_t> c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = (a.code / powp_[i]) % p_;
    return c;
}

FqElem FqContext::add(FqElem a, FqElem b) const {
    if (n_ == 1) {
        const std::uint32_t s = a.code + b.code;
        return {s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return {add_table_[std::size_t{a.code} * q_ + b.code]};
    std::uint32_t r = 0;
    for (unsigned i = 0; i < n_; ++i)
        r += (((a.code / powp_[i]) % p_ + (b.code / powp_[i]) % p_) % p_) * powp_[i];
    return {r};
}

FqElem FqContext::neg(FqElem a) const { return {neg_table_[a.code]}; }

FqElem FqContext::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqContext::mul(FqElem a, FqElem b) const {
    if (n_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    if (!mul_table_.empty()) return {mul_table_[std::size_t{a.code} * q_ + b.code]};
    return mul_slow(a, b);
}

FqElem FqContext::mul_slow(FqElem a, FqElem b) const {
    const auto ca = coords(a);
    const auto cb = coords(b);
    Coeffs prod(2 * n_, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    if (!modulus_.empty()) prod = rem_mod_p(prod, modulus_, p_);
    prod.resize(n_, 0);
    return from_coords(prod);
}

FqElem FqContext::inv(FqElem a) const {
    if (a.is_zero()) throw Error("inversion of zero in F_" + std::to_string(q_));
    return {inv_table_[a.code]};
}

FqElem FqContext::pow(FqElem a, std::uint64_t e) const {
    FqElem result = one();
    FqElem base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

FqElem FqContext::pth_root(FqElem a) const {
    // Frobenius has order n, so its inverse is a -> a^{p^{n-1}}.
    FqElem r = a;
    for (unsigned i = 1; i < n_; ++i) r = pow(r, p_);
    return r;
}

std::vector<FqElem> FqContext::enumerate() const {
    std::vector<FqElem> all(q_);
    for (std::uint32_t i = 0; i < q_; ++i) all[i] = {i};
    return all;
}

std::string FqContext::to_string(FqElem a) const {
    if (n_ == 1) return std::to_string(a.code);
    if (a.is_zero()) return "0";
    const auto c = coords(a);
    std::string out;
    for (unsigned i = n_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace laurent::ff
