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

#ifndef CARLITZ_RANK3_HPP
#define CARLITZ_RANK3_HPP

#include "carlitz/perm.hpp"
#include "carlitz/poly.hpp"

namespace carlitz::rank3 {

/// The permutation G = [0, 1, beta, x] of Carlitz rank 3, beta outside
/// {0, 1}. Off its three poles G is the fraction (beta x + 1)/(alpha x + 1)
/// with alpha = beta + 1.
struct Params {
    Element beta, alpha;
    std::array<Element, 3> poles;        // 1/alpha, 1/beta, 0
    std::array<Element, 3> pole_images;  // G at the poles: 0, 1, beta/alpha

    static Params make(Element beta) {
        if (beta.is_zero() || beta.is_one())
            throw std::invalid_argument("beta must be outside {0, 1}");
        const Field& k = *beta.field;
        Params p;
        p.beta = beta;
        p.alpha = beta + k.one();
        p.poles = {p.alpha.inv_q2(), beta.inv_q2(), k.zero()};
        p.pole_images = {k.zero(), k.one(), beta / p.alpha};
        return p;
    }

    const Field& field() const { return *beta.field; }
    bool beta_in_f4() const { return is_in_f4(beta); }
    bool beta_cubic_zero() const {  // beta^3 + beta^2 + 1 = 0
        return (beta.sqr() * beta + beta.sqr() + field().one()).is_zero();
    }

    Chain chain() const { return Chain(field(), {1, 0, beta.bits, 1, 0}); }

    std::vector<Element> pole_vector() const {
        return {poles[0], poles[1], poles[2]};
    }

    Element g(Element x) const {  // the piecewise law, without a table
        for (int i = 0; i < 3; ++i)
            if (x == poles[i]) return pole_images[i];
        const Field& k = field();
        return (beta * x + k.one()) / (alpha * x + k.one());
    }
};

inline void require_classifier_domain(const Params& p) {
    if (p.beta_in_f4())
        throw std::invalid_argument(
            "closed-form classification requires beta outside F_4; use the oracle");
}

/// The classifier polynomials. The two quartics f12, f13 decide the
/// differential count; the five h12, h13, g1, g2, phi decide whether the
/// boomerang uniformity is 6.
struct ClassifierPolys {
    Poly f12, f13, h12, h13, g1, g2, phi;

    std::vector<std::pair<const char*, const Poly*>> named() const {
        return {{"f12", &f12}, {"f13", &f13}, {"h12", &h12}, {"h13", &h13},
                {"g1", &g1},   {"g2", &g2},   {"phi", &phi}};
    }
};

inline ClassifierPolys build_classifier_polys(const Params& p) {
    require_classifier_domain(p);
    const Field& k = p.field();
    const Element one = k.one(), b = p.beta, a = p.alpha;
    const Element ab = a / b;            // alpha/beta
    const Element ba = b / a;            // beta/alpha
    const Element a2 = a.sqr(), a4 = a2.sqr(), b2 = b.sqr(), b4 = b2.sqr();
    ClassifierPolys c;
    c.f12 = Poly(k, {ab.bits, ab.bits, (one / b).bits, 0, 1});
    c.f13 = Poly(k, {1, b.bits, a.bits, 0, 1});
    c.h12 = Poly(k, {(b4 / a4).bits, 0, 1, 1, 1});
    c.h13 = Poly(k, {(b2 / a4).bits, 0, (b / a2).bits, ba.bits, 1});
    c.g1 = Poly(k, {1, 1, ba.bits, 1, ba.bits, 1, 1});
    c.g2 = Poly(k, {1, b.bits, b.bits, 1, 1, 1, 1});
    c.phi = Poly(k, {(b / a2).bits, ba.bits, 1});
    return c;
}

enum class DuClass : int { four = 4, six = 6, eight = 8 };

/// Differential uniformity of G: 8 exactly when beta^3+beta^2+1 = 0, else 6
/// when f12 or f13 has a root in the field, else 4.
inline DuClass du_classify(const Params& p) {
    require_classifier_domain(p);
    if (p.beta_cubic_zero()) return DuClass::eight;
    ClassifierPolys c = build_classifier_polys(p);
    if (has_root_in_field(c.f12) || has_root_in_field(c.f13)) return DuClass::six;
    return DuClass::four;
}

/// Boomerang uniformity equals 6 (the minimum for this family) exactly when
/// none of h12, h13, g1, g2, phi has a root in the field.
inline bool bu_is_six(const Params& p) {
    require_classifier_domain(p);
    ClassifierPolys c = build_classifier_polys(p);
    return !(has_root_in_field(c.h12) || has_root_in_field(c.h13) ||
             has_root_in_field(c.g1) || has_root_in_field(c.g2) ||
             has_root_in_field(c.phi));
}

/// Names of classifier polynomials with a root in the field.
inline std::vector<std::string> triggered_polys(const Params& p) {
    ClassifierPolys c = build_classifier_polys(p);
    std::vector<std::string> out;
    for (auto [name, poly] : c.named())
        if (has_root_in_field(*poly)) out.emplace_back(name);
    return out;
}

/// For a outside {0, 1, beta/alpha, 1/alpha}: the three b with
/// a = G(p_i) + G(b + p_i), one per pole.
struct BValues {
    Element b1, b2, b3;
};

inline BValues b_values(const Params& p, Element a) {
    const Field& k = p.field();
    const Element one = k.one(), al = p.alpha, be = p.beta;
    if (a.is_zero() || a.is_one() || a == be / al || a == al.inv_q2())
        throw std::invalid_argument("a collides with a pole-pair sum");
    BValues v;
    v.b1 = one / (al * (al * a + be));
    v.b2 = (a + one) / (be * (al * a + one));
    v.b3 = (al * a + one) / (al.sqr() * a);
    return v;
}

struct BuWitness {
    Element a, c;
    bool validated = false;  // confirmed by the oracle at construction
    std::string source;      // which polynomial's root produced it
};

namespace detail {

/// The two solutions of the differential system at (a, b) that are forced
/// off the poles: neither 0 nor 1/beta may be a root of hhat^{(a,b)}.
inline bool c_side_off_poles(const Params& p, Element a, Element b) {
    const Element one = p.field().one();
    return !(a == (p.alpha * a + one) * b) &&
           !(a == p.beta * (p.alpha * a + p.beta) * b);
}

inline bool a_excluded(const Params& p, Element a) {
    return a.is_zero() || a.is_one() || a == p.beta / p.alpha ||
           a == p.alpha.inv_q2();
}

}  // namespace detail

/// A point (a, c) with at least 8 solutions of the boomerang system,
/// constructed from a root of the first triggered polynomial (fixed order
/// h12, h13, g1, g2, phi). Roots whose companion quadratics degenerate onto
/// a pole are skipped. Absent when the boomerang uniformity is 6.
/// Oracle-validated at construction for fields up to validate_guard bits.
inline std::optional<BuWitness> bu_witness(const Params& p,
                                           unsigned validate_guard = 14) {
    require_classifier_domain(p);
    const Field& k = p.field();
    const Element one = k.one(), b = p.beta, a = p.alpha, a2 = p.alpha.sqr();
    ClassifierPolys c = build_classifier_polys(p);

    std::vector<BuWitness> candidates;
    if (p.beta_cubic_zero()) {
        // (beta, 1) carries the differential count 8, which already solves
        // the boomerang system with c = b
        candidates.push_back({b, one, false, "du8"});
    } else {
        auto admissible_pair = [&](Element aa, Element b_first, Element b_second) {
            return !detail::a_excluded(p, aa) &&
                   detail::c_side_off_poles(p, aa, b_first) &&
                   detail::c_side_off_poles(p, aa, b_second);
        };
        for (Element z : has_root_in_field(c.h12) ? roots_in_field(c.h12)
                                                  : std::vector<Element>{}) {
            if (detail::a_excluded(p, z)) continue;
            BValues v = b_values(p, z);
            if (!admissible_pair(z, v.b1, v.b2)) continue;
            Element cc = (a * z + b.sqr()) / (a2 * z * (a2 * z.sqr() + a2 * z + b.sqr()));
            candidates.push_back({z, cc, false, "h12"});
        }
        for (Element z : has_root_in_field(c.h13) ? roots_in_field(c.h13)
                                                  : std::vector<Element>{}) {
            if (detail::a_excluded(p, z)) continue;
            BValues v = b_values(p, z);
            if (!admissible_pair(z, v.b1, v.b3)) continue;
            Element cc = b / (a2 * z * (a2 * z.sqr() + a * b * z + b));
            candidates.push_back({z, cc, false, "h13"});
        }
        for (Element z : has_root_in_field(c.g1) ? roots_in_field(c.g1)
                                                 : std::vector<Element>{}) {
            Element aa = (b / a) / (z.sqr() + z + one);
            if (detail::a_excluded(p, aa)) continue;
            BValues v = b_values(p, aa);
            // unprimed solution pair at (aa, b2), primed pair at (aa, b1)
            if (!admissible_pair(aa, v.b2, v.b1)) continue;
            candidates.push_back({aa, v.b1, false, "g1"});
        }
        for (Element z : has_root_in_field(c.g2) ? roots_in_field(c.g2)
                                                 : std::vector<Element>{}) {
            Element cc = one / (a * (z.sqr() + z + one));
            Element aa = one / (a * (a * cc + one));
            if (detail::a_excluded(p, aa)) continue;
            BValues v = b_values(p, aa);
            if (!(v.b3 == cc) || !admissible_pair(aa, v.b1, v.b3)) continue;
            candidates.push_back({aa, cc, false, "g2"});
        }
        for (Element z : has_root_in_field(c.phi) ? roots_in_field(c.phi)
                                                  : std::vector<Element>{}) {
            if (detail::a_excluded(p, z)) continue;
            BValues v = b_values(p, z);
            if (!detail::c_side_off_poles(p, z, v.b2)) continue;
            Element cc = (a * z + b) / (a * b);
            candidates.push_back({z, cc, false, "phi"});
        }
    }
    if (candidates.empty()) {
        if (bu_is_six(p)) return std::nullopt;
        throw std::logic_error("no admissible boomerang witness candidate");
    }
    std::optional<PermTable> g;
    if (k.degree() <= validate_guard) g = PermTable::from_chain(p.chain());
    for (BuWitness& w : candidates) {
        if (w.a.is_zero() || w.c.is_zero()) continue;
        if (g) {
            if (bu_point(*g, w.a, w.c) < 8) continue;
            w.validated = true;
        }
        return w;
    }
    throw std::logic_error("boomerang witness candidates all failed validation");
}

/// The quadratics whose roots locate the non-pole solution pair of the
/// differential system at (a, b): hhat = (X+u)(X+v), and its translates by
/// each pole.
struct AuxQuadratics {
    Poly hhat, h1, h2, h3;
};

inline AuxQuadratics aux_quadratics(const Params& p, Element a, Element b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("a, b must be nonzero");
    const Field& k = p.field();
    const Element one = k.one(), al = p.alpha, be = p.beta, a2 = p.alpha.sqr();
    AuxQuadratics q;
    const Element c0 = b / al + b / (a2 * a) + one / a2;
    q.hhat = Poly(k, {c0.bits, b.bits, 1});
    q.h1 = Poly(k, {(b / (a2 * a)).bits, b.bits, 1});
    q.h2 = Poly(k, {(b / (al * be) + b / (a2 * a) + one / (a2 * be.sqr())).bits, b.bits, 1});
    q.h3 = q.hhat;
    return q;
}

/// H_a(s, t) = s^2 + s t + t/(alpha^2 a).
inline Element h_bivariate(const Params& p, Element a, Element s, Element t) {
    return s.sqr() + s * t + t / (p.alpha.sqr() * a);
}

/// Closed-form verdict for one beta.
struct Verdict {
    DuClass du = DuClass::four;
    bool bu_six = false;
    std::vector<std::string> triggered;
    std::optional<BuWitness> witness;
};

inline Verdict classify(const Params& p, bool want_witness = true,
                        unsigned validate_guard = 14) {
    Verdict v;
    v.du = du_classify(p);
    v.bu_six = bu_is_six(p);
    v.triggered = triggered_polys(p);
    if (want_witness && !v.bu_six) v.witness = bu_witness(p, validate_guard);
    return v;
}

}  // namespace carlitz::rank3

#endif
