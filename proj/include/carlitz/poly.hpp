/*
   Copyright 2026 the carlitz authors

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

#ifndef CARLITZ_POLY_HPP
#define CARLITZ_POLY_HPP

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

/// Univariate polynomial over GF(2^n). Coefficient i belongs to Z^i; the
/// sequence is normalized (no trailing zeros) and the zero polynomial is the
/// empty sequence.
struct Poly {
    const Field* field = nullptr;
    std::vector<uint32_t> c;

    Poly() = default;
    explicit Poly(const Field& f) : field(&f) {}
    Poly(const Field& f, std::vector<uint32_t> coeffs) : field(&f), c(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(Element a) { return Poly(*a.field, {a.bits}); }
    static Poly z(const Field& f) { return Poly(f, {0, 1}); }

    /// Product of (Z + r) over the given roots.
    static Poly from_roots(const Field& f, const std::vector<uint32_t>& roots) {
        Poly p(f, {1});
        for (uint32_t r : roots) p = p * Poly(f, {r, 1});
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    uint32_t coeff_raw(size_t i) const { return i < c.size() ? c[i] : 0; }
    Element coeff(size_t i) const { return {coeff_raw(i), field}; }
    Element lead() const { return {c.empty() ? 0 : c.back(), field}; }

    Element eval(Element x) const {
        check(*x.field);
        uint32_t acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = field->mul_raw(acc, x.bits) ^ c[i];
        return {acc, field};
    }

    Poly operator+(const Poly& o) const {
        check(*o.field);
        Poly r(*field);
        r.c.resize(std::max(c.size(), o.c.size()), 0);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff_raw(i) ^ o.coeff_raw(i);
        r.normalize();
        return r;
    }

    Poly operator*(const Poly& o) const {
        check(*o.field);
        if (is_zero() || o.is_zero()) return Poly(*field);
        Poly r(*field);
        r.c.assign(c.size() + o.c.size() - 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] ^= field->mul_raw(c[i], o.c[j]);
        }
        r.normalize();
        return r;
    }

    Poly scaled(Element s) const {
        Poly r(*field);
        r.c.resize(c.size());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = field->mul_raw(c[i], s.bits);
        r.normalize();
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inv_q2());
    }

    bool operator==(const Poly& o) const { return field->same_as(*o.field) && c == o.c; }

    void check(const Field& f) const {
        if (!field->same_as(f)) throw std::invalid_argument("polynomial field mismatch");
    }
};

struct PolyDivMod {
    Poly quot, rem;
};

inline PolyDivMod poly_divmod(const Poly& f, const Poly& g) {
    f.check(*g.field);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Field& k = *f.field;
    Poly r = f, q(k);
    q.c.assign(std::max<int>(f.degree() - g.degree() + 1, 0), 0);
    const uint32_t glead_inv = k.inv_q2_raw(g.c.back());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int shift = r.degree() - g.degree();
        const uint32_t s = k.mul_raw(r.c.back(), glead_inv);
        q.c[shift] ^= s;
        for (size_t i = 0; i < g.c.size(); ++i)
            r.c[i + shift] ^= k.mul_raw(s, g.c[i]);
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

inline Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).rem; }

/// Monic gcd; gcd(f, 0) = monic(f). Rejects gcd(0, 0).
inline Poly poly_gcd(Poly a, Poly b) {
    a.check(*b.field);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

/// Z^(2^n) mod f, by n successive squarings reduced mod f.
inline Poly frobenius_power_mod(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
    Poly t = poly_mod(Poly::z(*f.field), f);
    for (unsigned i = 0; i < f.field->degree(); ++i) t = poly_mod(t * t, f);
    return t;
}

/// gcd(f, Z^(2^n) - Z), the product of the distinct linear factors of f
/// over the base field.
inline Poly linear_factor_part(const Poly& f) {
    Poly s = frobenius_power_mod(f) + Poly::z(*f.field);
    return poly_gcd(f, poly_mod(s, f));
}

/// f has a root in GF(2^n).
inline bool has_root_in_field(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("constant polynomial");
    return linear_factor_part(f).degree() >= 1;
}

namespace detail {

inline void split_roots(const Poly& s, std::vector<uint32_t>& out, std::mt19937_64& rng) {
    if (s.degree() <= 0) return;
    const Field& k = *s.field;
    if (s.degree() == 1) {  // monic Z + r
        out.push_back(s.c[0]);
        return;
    }
    // Berlekamp trace splitting: gcd with Tr(uZ) separates roots by trace.
    for (int attempt = 0; attempt < 64; ++attempt) {
        const uint32_t u = 1 + rng() % (k.size() - 1);
        Poly t = poly_mod(Poly(k, {0, u}), s);
        Poly acc = t;
        for (unsigned i = 1; i < k.degree(); ++i) {
            t = poly_mod(t * t, s);
            acc = acc + t;
        }
        if (acc.is_zero()) continue;
        Poly g = poly_gcd(s, acc);
        if (g.degree() > 0 && g.degree() < s.degree()) {
            split_roots(g, out, rng);
            split_roots(poly_divmod(s, g).quot.monic(), out, rng);
            return;
        }
    }
    throw std::logic_error("trace splitting failed to separate roots");
}

}  // namespace detail

/// All distinct roots of f in the field. Exhaustive scan of the linear part
/// for fields up to 2^20 elements, trace splitting beyond.
inline std::vector<Element> roots_in_field(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("constant polynomial");
    const Field& k = *f.field;
    Poly s = linear_factor_part(f);
    std::vector<uint32_t> raw;
    if (s.degree() >= 1) {
        if (k.size() <= (uint64_t(1) << 20)) {
            for (uint32_t x = 0; x < k.size(); ++x)
                if (s.eval(k.elem(x)).is_zero()) raw.push_back(x);
        } else {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ s.c[0]);
            detail::split_roots(s, raw, rng);
        }
    }
    std::sort(raw.begin(), raw.end());
    std::vector<Element> out;
    out.reserve(raw.size());
    for (uint32_t r : raw) out.push_back(k.elem(r));
    return out;
}

namespace detail {

inline uint32_t det3(const Field& k, const uint32_t m[3][3]) {
    uint32_t d = 0;
    d ^= k.mul_raw(m[0][0], k.mul_raw(m[1][1], m[2][2]) ^ k.mul_raw(m[1][2], m[2][1]));
    d ^= k.mul_raw(m[0][1], k.mul_raw(m[1][0], m[2][2]) ^ k.mul_raw(m[1][2], m[2][0]));
    d ^= k.mul_raw(m[0][2], k.mul_raw(m[1][0], m[2][1]) ^ k.mul_raw(m[1][1], m[2][0]));
    return d;
}

}  // namespace detail

/// Resultant of two quadratics as the determinant of the 4x4 Sylvester
/// matrix; zero exactly when f and g share a root over the algebraic
/// closure.
inline Element resultant_quadratics(const Poly& f, const Poly& g) {
    f.check(*g.field);
    if (f.degree() != 2 || g.degree() != 2)
        throw std::invalid_argument("resultant_quadratics needs two quadratics");
    const Field& k = *f.field;
    const uint32_t f0 = f.c[2], f1 = f.c[1], f2 = f.c[0];
    const uint32_t g0 = g.c[2], g1 = g.c[1], g2 = g.c[0];
    const uint32_t m[4][4] = {{f0, 0, g0, 0},
                              {f1, f0, g1, g0},
                              {f2, f1, g2, g1},
                              {0, f2, 0, g2}};
    // Laplace expansion along the first row (signs vanish in char 2).
    uint32_t d = 0;
    for (int j = 0; j < 4; ++j) {
        if (m[0][j] == 0) continue;
        uint32_t minor[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
                if (col == j) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        d ^= k.mul_raw(m[0][j], detail::det3(k, minor));
    }
    return {d, &k};
}

// ---- text format: comma-separated hex coefficients, lowest degree first ----

inline std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ',';
        s += to_hex(f.coeff(i));
    }
    return s;
}

inline Poly poly_from_string(const Field& k, const std::string& s) {
    std::vector<uint32_t> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_hex_bits(tok));
    return Poly(k, std::move(coeffs));
}

}  // namespace carlitz

#endif
