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

#ifndef CARLITZ_FIELD_HPP
#define CARLITZ_FIELD_HPP

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace carlitz {

class Field;

/// An element of GF(2^n), n bits in the polynomial basis of its Field.
struct Element {
    uint32_t bits = 0;
    const Field* field = nullptr;

    Element() = default;
    Element(uint32_t b, const Field* f) : bits(b), field(f) {}

    bool is_zero() const { return bits == 0; }
    bool is_one() const { return bits == 1; }

    Element operator+(Element o) const;
    Element operator*(Element o) const;
    /// Multiplication by o^(2^n - 2); equals a/o for o != 0, and a/0 = 0.
    Element operator/(Element o) const;
    Element& operator+=(Element o) { return *this = *this + o; }
    Element& operator*=(Element o) { return *this = *this * o; }
    bool operator==(Element o) const;
    bool operator!=(Element o) const { return !(*this == o); }

    Element sqr() const;
    Element inv_q2() const;
    Element pow(uint64_t e) const;
    int trace() const;
};

namespace gf2x {
// Polynomials over GF(2) packed in machine words (bit i = coeff of x^i).

inline uint64_t mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline int deg(uint64_t f) { return f ? 63 - std::countl_zero(f) : -1; }

inline uint64_t mod(uint64_t a, uint64_t f) {
    const int df = deg(f);
    for (int i = deg(a); i >= df; i = deg(a)) a ^= f << (i - df);
    return a;
}

inline uint64_t gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t f) { return mod(mul(a, b), f); }

/// Rabin test: f irreducible iff x^(2^n) = x (mod f) and
/// gcd(x^(2^(n/p)) + x, f) = 1 for every prime p | n.
inline bool irreducible(uint64_t f) {
    const int n = deg(f);
    if (n < 1) return false;
    if ((f & 1) == 0) return n == 1;  // x | f
    auto frob = [&](int k) {
        uint64_t t = 2;  // x
        for (int i = 0; i < k; ++i) t = mulmod(t, t, f);
        return t;
    };
    if (frob(n) != 2) return false;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (gcd(frob(n / p) ^ 2u, f) != 1) return false;
    }
    return true;
}

}  // namespace gf2x

/// GF(2^n) for 2 <= n <= 24 in a fixed polynomial basis.
///
/// The default modulus for each degree is the Conway polynomial, so the
/// residue class of x is a primitive element and discrete logs against it
/// are well defined. A custom irreducible modulus may be supplied; the
/// generator is then searched for.
///
/// Immutable after construction and safe to share across threads. All
/// operations are pure.
class Field {
public:
    static constexpr unsigned min_degree = 2;
    static constexpr unsigned max_degree = 24;

    /// Conway polynomials over GF(2), degrees 1..24. Bit i = coeff of x^i.
    static uint32_t conway_modulus(unsigned n) {
        static constexpr std::array<uint32_t, 25> tab = {
            0,        0x3,      0x7,      0xb,      0x13,     0x25,    0x5b,
            0x83,     0x11d,    0x211,    0x46f,    0x805,    0x10eb,  0x201b,
            0x40a9,   0x8035,   0x1002d,  0x20009,  0x41403,  0x80027, 0x1006f3,
            0x200065, 0x401f61, 0x800021, 0x101e6a9};
        if (n >= tab.size()) throw std::invalid_argument("degree out of range");
        return tab[n];
    }

    explicit Field(unsigned n) : Field(n, conway_modulus(n)) {}

    Field(unsigned n, uint32_t modulus) : n_(n), mod_(modulus) {
        if (n < min_degree || n > max_degree)
            throw std::invalid_argument("field degree must be in 2..24");
        if (gf2x::deg(mod_) != static_cast<int>(n))
            throw std::invalid_argument("modulus degree does not match n");
        if (!gf2x::irreducible(mod_))
            throw std::invalid_argument("modulus is not irreducible");
        factor_group_order();
        gen_ = find_generator();
        build_trace_mask();
        if (n_ % 2 == 0) build_artin_schreier_solver();
        if (n_ <= eager_table_degree) ensure_tables();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    unsigned degree() const { return n_; }
    uint32_t modulus() const { return mod_; }
    uint64_t size() const { return uint64_t(1) << n_; }
    /// 2^n - 1, the multiplicative group order.
    uint32_t group_order() const { return (uint32_t(1) << n_) - 1; }

    Element zero() const { return {0, this}; }
    Element one() const { return {1, this}; }
    Element gen() const { return {gen_, this}; }
    Element elem(uint32_t bits) const {
        if (bits >= size()) throw std::invalid_argument("element bits out of range");
        return {bits, this};
    }

    bool same_as(const Field& o) const {
        return this == &o || (n_ == o.n_ && mod_ == o.mod_);
    }

    // ---- arithmetic on raw bit patterns ----

    uint32_t mul_raw(uint32_t a, uint32_t b) const {
        if (tables_ready_.load(std::memory_order_acquire)) {
            if (a == 0 || b == 0) return 0;
            uint32_t s = log_[a] + log_[b];
            if (s >= group_order()) s -= group_order();
            return exp_[s];
        }
        uint64_t acc = 0, aa = a;
        while (b) {
            if (b & 1) acc ^= aa;
            aa <<= 1;
            b >>= 1;
        }
        const uint64_t m = mod_;
        for (int i = gf2x::deg(acc); i >= static_cast<int>(n_); i = gf2x::deg(acc))
            acc ^= m << (i - n_);
        return static_cast<uint32_t>(acc);
    }

    uint32_t sqr_raw(uint32_t a) const { return mul_raw(a, a); }

    uint32_t pow_raw(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = sqr_raw(a);
            e >>= 1;
        }
        return r;
    }

    /// a^(2^n - 2): the multiplicative inverse extended by 0 -> 0.
    uint32_t inv_q2_raw(uint32_t a) const {
        if (tables_ready_.load(std::memory_order_acquire)) {
            if (a == 0) return 0;
            uint32_t l = log_[a];
            return exp_[l == 0 ? 0 : group_order() - l];
        }
        return pow_raw(a, group_order() - 1);
    }

    int trace_raw(uint32_t a) const { return std::popcount(a & trace_mask_) & 1; }

    /// Some z with z^2 + z = c, when trace(c) = 0; the other solution is z+1.
    std::optional<uint32_t> artin_schreier_raw(uint32_t c) const {
        if (trace_raw(c)) return std::nullopt;
        if (n_ % 2 == 1) {
            // half-trace: z = sum c^(4^i), i = 0..(n-1)/2
            uint32_t z = 0, t = c;
            for (unsigned i = 0;; ++i) {
                z ^= t;
                if (i == (n_ - 1) / 2) break;
                t = sqr_raw(sqr_raw(t));
            }
            return z;
        }
        // even n: solve the cached GF(2) system for z -> z^2 + z
        uint32_t r = c, z = 0;
        while (r) {
            const int b = 31 - std::countl_zero(r);
            if (as_pivot_val_[b] == 0) return std::nullopt;  // unreachable for trace 0
            r ^= as_pivot_val_[b];
            z ^= as_pivot_sol_[b];
        }
        return z;
    }

    /// b is in the subfield F_4 (that is, b^4 = b).
    bool in_f4_raw(uint32_t b) const { return sqr_raw(sqr_raw(b)) == b; }

    /// Discrete log against the generator: gen^k = a, a != 0. Baby-step
    /// giant-step when no log table is built.
    uint32_t dlog_raw(uint32_t a) const {
        if (a == 0) throw std::invalid_argument("dlog of zero");
        if (tables_ready_.load(std::memory_order_acquire)) return log_[a];
        const uint32_t ord = group_order();
        uint32_t m = 1;
        while (m * uint64_t(m) < ord) ++m;
        std::unordered_map<uint32_t, uint32_t> baby;
        baby.reserve(m * 2);
        uint32_t t = 1;
        for (uint32_t j = 0; j < m; ++j) {
            baby.emplace(t, j);
            t = mul_raw(t, gen_);
        }
        const uint32_t giant = inv_q2_raw(t);  // gen^{-m}
        t = a;
        for (uint32_t i = 0; i <= ord / m + 1; ++i) {
            auto it = baby.find(t);
            if (it != baby.end()) return (i * m + it->second) % ord;
            t = mul_raw(t, giant);
        }
        throw std::logic_error("dlog: generator does not generate the group");
    }

    /// Lazily build log/antilog tables (2^(n+1) words). Used automatically
    /// for n <= eager_table_degree; call explicitly to speed up larger n.
    void ensure_tables() const {
        if (n_ > hard_table_degree) return;
        std::call_once(tables_once_, [this] {
            const uint32_t ord = group_order();
            log_.assign(size(), 0);
            exp_.assign(ord, 0);
            uint32_t t = 1;
            for (uint32_t k = 0; k < ord; ++k) {
                exp_[k] = t;
                log_[t] = k;
                // multiply by the generator without the table path
                uint64_t acc = 0, aa = t;
                uint32_t b = gen_;
                while (b) {
                    if (b & 1) acc ^= aa;
                    aa <<= 1;
                    b >>= 1;
                }
                for (int i = gf2x::deg(acc); i >= static_cast<int>(n_); i = gf2x::deg(acc))
                    acc ^= uint64_t(mod_) << (i - n_);
                t = static_cast<uint32_t>(acc);
            }
            if (t != 1) throw std::logic_error("generator order mismatch");
            tables_ready_.store(true, std::memory_order_release);
        });
    }

    bool has_tables() const { return tables_ready_.load(std::memory_order_acquire); }

    const std::vector<uint32_t>& group_order_prime_factors() const { return q1_primes_; }

private:
    static constexpr unsigned eager_table_degree = 16;
    static constexpr unsigned hard_table_degree = 22;

    void factor_group_order() {
        uint32_t v = group_order();
        for (uint32_t p = 2; uint64_t(p) * p <= v; ++p) {
            if (v % p) continue;
            q1_primes_.push_back(p);
            while (v % p == 0) v /= p;
        }
        if (v > 1) q1_primes_.push_back(v);
    }

    bool is_primitive(uint32_t a) const {
        if (a == 0) return false;
        if (pow_raw(a, group_order()) != 1) return false;
        for (uint32_t p : q1_primes_)
            if (pow_raw(a, group_order() / p) == 1) return false;
        return true;
    }

    uint32_t find_generator() const {
        if (is_primitive(2)) return 2;  // residue of x; always the case for Conway moduli
        for (uint32_t a = 3; a < size(); ++a)
            if (is_primitive(a)) return a;
        throw std::logic_error("no primitive element found");
    }

    void build_trace_mask() {
        trace_mask_ = 0;
        for (unsigned j = 0; j < n_; ++j) {
            uint32_t t = uint32_t(1) << j, s = 0;
            for (unsigned i = 0; i < n_; ++i) {
                s ^= t;
                t = sqr_raw(t);
            }
            if (s & 1) trace_mask_ |= uint32_t(1) << j;
            else if (s != 0)
                throw std::logic_error("trace of basis element not in GF(2)");
        }
    }

    void build_artin_schreier_solver() {
        as_pivot_val_.fill(0);
        as_pivot_sol_.fill(0);
        for (unsigned j = 0; j < n_; ++j) {
            uint32_t v = sqr_raw(uint32_t(1) << j) ^ (uint32_t(1) << j);
            uint32_t s = uint32_t(1) << j;
            while (v) {
                const int b = 31 - std::countl_zero(v);
                if (as_pivot_val_[b] == 0) {
                    as_pivot_val_[b] = v;
                    as_pivot_sol_[b] = s;
                    break;
                }
                v ^= as_pivot_val_[b];
                s ^= as_pivot_sol_[b];
            }
        }
    }

    unsigned n_;
    uint32_t mod_;
    uint32_t gen_ = 0;
    uint32_t trace_mask_ = 0;
    std::vector<uint32_t> q1_primes_;
    std::array<uint32_t, 32> as_pivot_val_{};
    std::array<uint32_t, 32> as_pivot_sol_{};
    mutable std::vector<uint32_t> log_, exp_;
    mutable std::once_flag tables_once_;
    mutable std::atomic<bool> tables_ready_{false};
};

inline void check_same_field(const Element& a, const Element& b) {
    if (!a.field || !b.field || !a.field->same_as(*b.field))
        throw std::invalid_argument("elements belong to different fields");
}

inline Element Element::operator+(Element o) const {
    check_same_field(*this, o);
    return {bits ^ o.bits, field};
}

inline Element Element::operator*(Element o) const {
    check_same_field(*this, o);
    return {field->mul_raw(bits, o.bits), field};
}

inline Element Element::operator/(Element o) const {
    check_same_field(*this, o);
    return {field->mul_raw(bits, field->inv_q2_raw(o.bits)), field};
}

inline bool Element::operator==(Element o) const {
    check_same_field(*this, o);
    return bits == o.bits;
}

inline Element Element::sqr() const { return {field->sqr_raw(bits), field}; }
inline Element Element::inv_q2() const { return {field->inv_q2_raw(bits), field}; }
inline Element Element::pow(uint64_t e) const { return {field->pow_raw(bits, e), field}; }
inline int Element::trace() const { return field->trace_raw(bits); }

inline Element add(Element a, Element b) { return a + b; }
inline Element mul(Element a, Element b) { return a * b; }
inline Element inv_q2(Element a) { return a.inv_q2(); }
inline int trace(Element a) { return a.trace(); }
inline bool is_in_f4(Element b) { return b.field->in_f4_raw(b.bits); }

inline std::optional<Element> solve_artin_schreier(Element c) {
    auto z = c.field->artin_schreier_raw(c.bits);
    if (!z) return std::nullopt;
    return Element{*z, c.field};
}

// ---- text formats: lowercase hex bit values, optional g^k power form ----

inline std::string to_hex(Element a) {
    if (a.bits == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (uint32_t v = a.bits; v; v >>= 4) s.insert(s.begin(), digits[v & 0xf]);
    return s;
}

inline uint32_t parse_hex_bits(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty hex value");
    uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else if (ch == 'x' && v == 0) continue;  // tolerate 0x prefix
        else
            throw std::invalid_argument("bad hex digit in '" + s + "'");
        v = v << 4 | unsigned(d);
        if (v > 0xffffffffull) throw std::invalid_argument("hex value too large");
    }
    return static_cast<uint32_t>(v);
}

inline Element parse_element(const Field& f, const std::string& s) {
    return f.elem(parse_hex_bits(s));
}

/// "0", "1" or "g^k" with k the discrete log against the field generator.
inline std::string to_power_form(Element a) {
    if (a.bits == 0) return "0";
    uint32_t k = a.field->dlog_raw(a.bits);
    if (k == 0) return "1";
    return "g^" + std::to_string(k);
}

}  // namespace carlitz

#endif
