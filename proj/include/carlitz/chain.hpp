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

#ifndef CARLITZ_CHAIN_HPP
#define CARLITZ_CHAIN_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

/// Bracket fold: [a1, a2, ..., as] applies x -> x^(q-2) from the innermost
/// entry a_s outward, adding each earlier entry. Total on all inputs.
inline Element bracket_eval(const std::vector<Element>& entries) {
    if (entries.empty()) throw std::invalid_argument("empty bracket");
    const Field* f = entries.back().field;
    uint32_t t = entries.back().bits;
    for (size_t i = entries.size() - 1; i-- > 0;) {
        if (!entries[i].field->same_as(*f))
            throw std::invalid_argument("bracket entries from different fields");
        t = f->inv_q2_raw(t) ^ entries[i].bits;
    }
    return {t, f};
}

/// A permutation of GF(2^n) in Carlitz form: the coefficient sequence
/// a0,...,a_{m+1} of F(x) = [a_{m+1}, ..., a2, a1 + a0 x], with a0 != 0 and
/// the interior coefficients a2..am nonzero. m bounds the Carlitz rank from
/// above; chains are not canonicalized to minimal length.
struct Chain {
    const Field* field = nullptr;
    std::vector<uint32_t> a;  // a[i] = a_i, size m+2

    Chain() = default;

    Chain(const Field& f, std::vector<uint32_t> coeffs) : field(&f), a(std::move(coeffs)) {
        if (a.size() < 2) throw std::invalid_argument("chain needs at least a0, a1");
        if (a[0] == 0) throw std::invalid_argument("a0 must be nonzero");
        for (size_t i = 2; i + 1 < a.size(); ++i)
            if (a[i] == 0)
                throw std::invalid_argument("interior chain coefficient a" +
                                            std::to_string(i) + " is zero");
        for (uint32_t v : a)
            if (v >= f.size()) throw std::invalid_argument("chain coefficient out of range");
    }

    static Chain from_elements(const Field& f, const std::vector<Element>& coeffs) {
        std::vector<uint32_t> raw;
        raw.reserve(coeffs.size());
        for (auto e : coeffs) {
            if (!e.field->same_as(f)) throw std::invalid_argument("field mismatch");
            raw.push_back(e.bits);
        }
        return Chain(f, std::move(raw));
    }

    int m() const { return static_cast<int>(a.size()) - 2; }
    Element coeff(size_t i) const { return {a.at(i), field}; }

    Element eval(Element x) const {
        if (!x.field->same_as(*field)) throw std::invalid_argument("field mismatch");
        uint32_t t = field->mul_raw(a[0], x.bits) ^ a[1];
        for (size_t k = 2; k < a.size(); ++k) t = field->inv_q2_raw(t) ^ a[k];
        return {t, field};
    }

    /// Full lookup table; verifies bijectivity. Guarded against large n.
    std::vector<uint32_t> as_table(unsigned degree_guard = 20) const {
        if (field->degree() > degree_guard)
            throw std::invalid_argument("table realization refused for n > guard");
        field->ensure_tables();
        const size_t q = field->size();
        std::vector<uint32_t> t(q);
        for (size_t x = 0; x < q; ++x) t[x] = eval({uint32_t(x), field}).bits;
        std::vector<bool> seen(q, false);
        for (uint32_t v : t) {
            if (seen[v]) throw std::logic_error("chain did not realize a bijection");
            seen[v] = true;
        }
        return t;
    }

    bool is_standard() const {
        return a[0] == 1 && a[1] == 0 && a.back() == 0 && (m() < 2 || a[2] == 1);
    }

    bool operator==(const Chain& o) const { return field->same_as(*o.field) && a == o.a; }
};

/// Convergent sequences of a chain: alpha_{k+1} = a_{k+1} alpha_k + alpha_{k-1}
/// (and the same recurrence for beta), from alpha0=0, alpha1=a0, beta0=1,
/// beta1=a1.
struct Convergents {
    const Field* field = nullptr;
    std::vector<uint32_t> alpha, beta;  // index 0..m+1

    Element alpha_at(size_t i) const { return {alpha.at(i), field}; }
    Element beta_at(size_t i) const { return {beta.at(i), field}; }
    /// K_{i,j} = alpha_i beta_j + alpha_j beta_i.
    Element k(size_t i, size_t j) const {
        uint32_t v = field->mul_raw(alpha.at(i), beta.at(j)) ^
                     field->mul_raw(alpha.at(j), beta.at(i));
        return {v, field};
    }
};

inline Convergents convergents(const Chain& ch) {
    Convergents cv;
    cv.field = ch.field;
    const size_t len = ch.a.size();
    cv.alpha.assign(len, 0);
    cv.beta.assign(len, 0);
    cv.alpha[0] = 0;
    cv.alpha[1] = ch.a[0];
    cv.beta[0] = 1;
    cv.beta[1] = ch.a[1];
    for (size_t k = 1; k + 1 < len; ++k) {
        cv.alpha[k + 1] = ch.field->mul_raw(ch.a[k + 1], cv.alpha[k]) ^ cv.alpha[k - 1];
        cv.beta[k + 1] = ch.field->mul_raw(ch.a[k + 1], cv.beta[k]) ^ cv.beta[k - 1];
    }
    return cv;
}

/// Poles and exceptional values of a chain.
///
/// a_value[i] = A_i = (1/a0)[a1,...,a_i] for 1 <= i <= m+1 (index 0 unused).
/// The chain agrees with its linear fractional form away from {A_1..A_m};
/// at A_i it takes the exceptional value [a_{m+1},...,a_{i+1}].
/// sim_partition groups {1..m+1} by equal A_i; approx_partition groups
/// {0..m+1} by K_{i,j} = 0. Poles are deduplicated by keeping the minimal
/// index of each sim class.
struct PoleData {
    const Field* field = nullptr;
    std::vector<uint32_t> a_value;                // [1..m+1]
    std::vector<Element> poles;                   // distinct, minimal-index order
    std::vector<Element> exceptional;             // parallel to poles: F(pole)
    std::vector<std::vector<int>> sim_partition;  // classes of {1..m+1}
    std::vector<std::vector<int>> approx_partition;  // classes of {0..m+1}

    Element a_at(size_t i) const { return {a_value.at(i), field}; }

    Element exception_of(Element pole) const {
        for (size_t i = 0; i < poles.size(); ++i)
            if (poles[i] == pole) return exceptional[i];
        throw std::invalid_argument("not a pole");
    }

    bool is_pole(Element x) const {
        for (auto p : poles)
            if (p == x) return true;
        return false;
    }
};

inline PoleData pole_data(const Chain& ch) {
    const Field& k = *ch.field;
    const int m = ch.m();
    PoleData pd;
    pd.field = &k;
    pd.a_value.assign(m + 2, 0);
    const uint32_t a0inv = k.inv_q2_raw(ch.a[0]);
    for (int i = 1; i <= m + 1; ++i) {
        std::vector<Element> pre;
        for (int j = 1; j <= i; ++j) pre.push_back(ch.coeff(j));
        pd.a_value[i] = k.mul_raw(a0inv, bracket_eval(pre).bits);
    }
    // sim classes over {1..m+1}
    std::vector<int> sim_rep(m + 2, -1);
    for (int i = 1; i <= m + 1; ++i) {
        for (int j = 1; j < i; ++j)
            if (pd.a_value[j] == pd.a_value[i]) {
                sim_rep[i] = sim_rep[j];
                break;
            }
        if (sim_rep[i] < 0) sim_rep[i] = i;
    }
    std::map<int, std::vector<int>> sim_classes;
    for (int i = 1; i <= m + 1; ++i) sim_classes[sim_rep[i]].push_back(i);
    for (auto& [rep, cls] : sim_classes) pd.sim_partition.push_back(cls);

    // approx classes over {0..m+1} under K_{i,j} = 0
    Convergents cv = convergents(ch);
    std::vector<int> approx_rep(m + 2, -1);
    for (int i = 0; i <= m + 1; ++i) {
        for (int j = 0; j < i; ++j)
            if (cv.k(i, j).is_zero()) {
                approx_rep[i] = approx_rep[j];
                break;
            }
        if (approx_rep[i] < 0) approx_rep[i] = i;
    }
    std::map<int, std::vector<int>> approx_classes;
    for (int i = 0; i <= m + 1; ++i) approx_classes[approx_rep[i]].push_back(i);
    for (auto& [rep, cls] : approx_classes) pd.approx_partition.push_back(cls);

    // distinct poles with their exceptional values
    for (int i = 1; i <= m; ++i) {
        if (sim_rep[i] != i) continue;
        pd.poles.push_back({pd.a_value[i], &k});
        std::vector<Element> suf;
        for (int j = m + 1; j >= i + 1; --j) suf.push_back(ch.coeff(j));
        pd.exceptional.push_back(bracket_eval(suf));
    }
    return pd;
}

/// Standard form [0, b_m, ..., b3, 1, x] with b_i = a2^((-1)^(i+1)) a_i, an
/// affine-equivalent chain (differential and boomerang uniformity are
/// preserved). Chains with m = 1 reduce to the inverse function [0, x];
/// affine chains (m = 0) are rejected.
inline Chain reduce_to_standard(const Chain& ch) {
    const Field& k = *ch.field;
    const int m = ch.m();
    if (m == 0) throw std::invalid_argument("affine chain has no standard form");
    if (m == 1) return Chain(k, {1, 0, 0});
    std::vector<uint32_t> c(m + 2, 0);
    c[0] = 1;
    c[1] = 0;
    const uint32_t a2 = ch.a[2], a2inv = k.inv_q2_raw(ch.a[2]);
    for (int i = 2; i <= m; ++i) c[i] = k.mul_raw(i % 2 == 1 ? a2 : a2inv, ch.a[i]);
    c[m + 1] = 0;
    return Chain(k, std::move(c));
}

/// Compositional inverse of a standard chain: reverse the interior
/// coefficients, [0, a_m, ..., a3, 1, x] -> [0, 1, a3, ..., a_m, x].
inline Chain inverse_chain(const Chain& ch) {
    if (!ch.is_standard()) throw std::invalid_argument("chain is not in standard form");
    std::vector<uint32_t> c = ch.a;
    std::reverse(c.begin() + 2, c.end() - 1);
    return Chain(*ch.field, std::move(c));
}

struct AffineMap {
    Element mul, add;
    Element operator()(Element x) const { return mul * x + add; }
};

/// Affine maps exposing the chain as the inverse function (or the identity)
/// away from a small exceptional set P, |P| <= m.
struct Linearization {
    /// true: l2(F(l1(x))) = x^(q-2) for x outside exceptional.
    /// false (alpha_m = 0): l1(F(x)) = x for x outside exceptional.
    bool fractional = true;
    AffineMap l1, l2;
    std::vector<Element> exceptional;
};

inline Linearization linearize(const Chain& ch) {
    const Field& k = *ch.field;
    const int m = ch.m();
    Convergents cv = convergents(ch);
    PoleData pd = pole_data(ch);
    Linearization lin;
    const Element a0 = ch.coeff(0);
    const Element am{cv.alpha[m], &k}, am1{cv.alpha[m + 1], &k};
    const Element bm{cv.beta[m], &k}, bm1{cv.beta[m + 1], &k};
    if (!am.is_zero()) {
        lin.fractional = true;
        lin.l1 = {a0 / am, bm / am};
        lin.l2 = {am, am1};
        for (int i = 1; i <= m; ++i) {
            Element p = (am * pd.a_at(i) + bm) / a0;
            bool dup = false;
            for (auto e : lin.exceptional) dup |= e == p;
            if (!dup) lin.exceptional.push_back(p);
        }
    } else {
        lin.fractional = false;
        lin.l1 = {bm / am1, bm1 / am1};
        lin.l2 = {k.one(), k.zero()};
        for (int i = 1; i <= m; ++i) {
            Element p = pd.a_at(i);
            bool dup = false;
            for (auto e : lin.exceptional) dup |= e == p;
            if (!dup) lin.exceptional.push_back(p);
        }
    }
    return lin;
}

namespace detail {

/// lambda * F as a chain: scaling alternates between lambda and lambda^{-1}
/// from the outermost coefficient inward; the innermost affine pair takes
/// the factor the alternation lands on.
inline Chain scale_chain(const Chain& ch, Element lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("scaling by zero");
    const Field& k = *ch.field;
    std::vector<uint32_t> c = ch.a;
    const uint32_t lam = lambda.bits, lam_inv = k.inv_q2_raw(lam);
    uint32_t f = lam;
    for (int i = static_cast<int>(c.size()) - 1; i >= 2; --i) {
        c[i] = k.mul_raw(c[i], f);
        f = (f == lam) ? lam_inv : lam;
    }
    c[1] = k.mul_raw(c[1], f);
    c[0] = k.mul_raw(c[0], f);
    return Chain(k, std::move(c));
}

/// Remove interior zero coefficients: two adjacent inversions cancel, so
/// (..., c, 0, c', ...) collapses to (..., c + c', ...).
inline std::vector<uint32_t> collapse_interior_zeros(std::vector<uint32_t> c) {
    bool changed = true;
    while (changed && c.size() > 2) {
        changed = false;
        for (size_t i = 2; i + 1 < c.size(); ++i) {
            if (c[i] != 0) continue;
            c[i - 1] ^= c[i + 1];
            c.erase(c.begin() + i, c.begin() + i + 2);
            changed = true;
            break;
        }
    }
    return c;
}

/// F after E as one chain.
inline Chain compose_chains(const Chain& F, const Chain& E) {
    const Field& k = *F.field;
    if (!E.field->same_as(k)) throw std::invalid_argument("field mismatch");
    std::vector<uint32_t> c;
    if (E.m() == 0) {
        c = F.a;
        c[1] ^= k.mul_raw(F.a[0], E.a[1]);
        c[0] = k.mul_raw(F.a[0], E.a[0]);
    } else if (F.m() == 0) {
        Chain s = scale_chain(E, F.coeff(0));
        c = s.a;
        c.back() ^= F.a[1];
    } else {
        Chain inner(k, std::vector<uint32_t>(E.a.begin(), E.a.end() - 1));
        Chain s = scale_chain(inner, F.coeff(0).inv_q2());
        c = s.a;
        c.push_back(k.mul_raw(F.a[0], E.a.back()) ^ F.a[1]);
        c.insert(c.end(), F.a.begin() + 2, F.a.end());
    }
    return Chain(k, collapse_interior_zeros(std::move(c)));
}

/// [0, 1/c, c, 1/c + x/c^2]: realizes the transposition (0 c).
inline Chain transposition_gadget(Element c) {
    const Field& k = *c.field;
    if (c.is_zero()) throw std::invalid_argument("transposition with zero");
    const uint32_t ci = k.inv_q2_raw(c.bits);
    return Chain(k, {k.mul_raw(ci, ci), ci, c.bits, ci, 0});
}

/// [1/c, c, 1/c + x/c^2]: the gadget above without its outer inversion.
inline Chain transposition_gadget_open(Element c) {
    const Field& k = *c.field;
    const uint32_t ci = k.inv_q2_raw(c.bits);
    return Chain(k, {k.mul_raw(ci, ci), ci, c.bits, ci});
}

}  // namespace detail

/// A chain realizing pi(x)^(q-2) for the k-cycle pi = (c1 c2 ... ck),
/// composed from transposition gadgets. The chain length m is at most 3k+2
/// (3k-4 when the cycle contains zero).
inline Chain cycle_to_chain(const std::vector<Element>& cycle) {
    if (cycle.size() < 2) throw std::invalid_argument("cycle needs at least 2 entries");
    for (size_t i = 0; i < cycle.size(); ++i)
        for (size_t j = i + 1; j < cycle.size(); ++j)
            if (cycle[i] == cycle[j]) throw std::invalid_argument("repeated cycle entries");

    std::vector<Element> rot = cycle;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i].is_zero()) {
            std::rotate(rot.begin(), rot.begin() + i, rot.end());
            break;
        }

    // (c1 c2 ... ck) = (c1 ck)(c1 c_{k-1})...(c1 c2); with t_c = (0 c) the
    // telescoped products below realize pi, and dropping the outermost
    // inversion of the final gadget realizes pi(x)^(q-2).
    std::vector<Chain> seq;  // innermost first
    if (rot[0].is_zero()) {
        for (size_t i = 1; i + 1 < rot.size(); ++i)
            seq.push_back(detail::transposition_gadget(rot[i]));
        seq.push_back(detail::transposition_gadget_open(rot.back()));
    } else {
        seq.push_back(detail::transposition_gadget(rot[0]));
        for (size_t i = 1; i < rot.size(); ++i)
            seq.push_back(detail::transposition_gadget(rot[i]));
        seq.push_back(detail::transposition_gadget_open(rot[0]));
    }
    Chain acc = seq[0];
    for (size_t i = 1; i < seq.size(); ++i) acc = detail::compose_chains(seq[i], acc);
    return acc;
}

/// The palindromic chain [gamma, beta, beta, gamma + x]; realizes an
/// involution for any gamma and nonzero beta.
inline Chain make_involution(Element beta, Element gamma) {
    if (beta.is_zero()) throw std::invalid_argument("beta must be nonzero");
    if (!beta.field->same_as(*gamma.field)) throw std::invalid_argument("field mismatch");
    return Chain(*beta.field, {1, gamma.bits, beta.bits, beta.bits, gamma.bits});
}

// ---- text format: "a_{m+1},...,a2,a1+a0*x", hex coefficients ----

inline std::string chain_to_string(const Chain& ch) {
    std::string s;
    for (size_t i = ch.a.size(); i-- > 2;) {
        s += to_hex(ch.coeff(i));
        s += ',';
    }
    if (ch.a[1] == 0 && ch.a[0] == 1) {
        s += 'x';
    } else {
        s += to_hex(ch.coeff(1));
        s += '+';
        s += to_hex(ch.coeff(0));
        s += "*x";
    }
    return s;
}

/// Accepts the rendered form above; the affine entry may be "x", "a1+x",
/// "a0*x" or "a1+a0*x" (a bare "x" means a1=0, a0=1).
inline Chain chain_from_string(const Field& k, const std::string& text) {
    std::vector<std::string> toks;
    std::stringstream ss(text);
    std::string t;
    while (std::getline(ss, t, ',')) {
        t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
        toks.push_back(t);
    }
    if (toks.empty()) throw std::invalid_argument("empty chain");
    const std::string affine = toks.back();
    toks.pop_back();
    uint32_t a0 = 1, a1 = 0;
    const size_t plus = affine.find('+');
    std::string xpart = affine, cpart;
    if (plus != std::string::npos) {
        cpart = affine.substr(0, plus);
        xpart = affine.substr(plus + 1);
        a1 = parse_hex_bits(cpart);
    }
    if (xpart == "x") {
        a0 = 1;
    } else if (xpart.size() > 2 && xpart.substr(xpart.size() - 2) == "*x") {
        a0 = parse_hex_bits(xpart.substr(0, xpart.size() - 2));
    } else {
        throw std::invalid_argument("bad affine chain entry '" + affine + "'");
    }
    std::vector<uint32_t> c = {a0, a1};
    for (size_t i = toks.size(); i-- > 0;) c.push_back(parse_hex_bits(toks[i]));
    return Chain(k, std::move(c));
}

}  // namespace carlitz

#endif
