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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "carlitz/rank3.hpp"

using namespace carlitz;
using rank3::Params;

namespace {

std::vector<Element> betas_outside_f4(const Field& k) {
    std::vector<Element> out;
    for (uint32_t b = 2; b < k.size(); ++b)
        if (!k.in_f4_raw(b)) out.push_back(k.elem(b));
    return out;
}

}  // namespace

TEST_CASE("params and domain checks") {
    Field k(6);
    CHECK_THROWS_AS(Params::make(k.zero()), std::invalid_argument);
    CHECK_THROWS_AS(Params::make(k.one()), std::invalid_argument);

    // beta in F_4 \ F_2 is rejected by the classifiers
    uint32_t f4 = 0;
    for (uint32_t b = 2; b < k.size(); ++b)
        if ((k.sqr_raw(b) ^ b ^ 1u) == 0) f4 = b;
    REQUIRE(f4 != 0);
    Params pf4 = Params::make(k.elem(f4));
    CHECK(pf4.beta_in_f4());
    CHECK_THROWS_AS(rank3::du_classify(pf4), std::invalid_argument);
    CHECK_THROWS_AS(rank3::bu_is_six(pf4), std::invalid_argument);

    Params p = Params::make(k.elem(9));
    PermTable g = PermTable::from_chain(p.chain());
    for (int i = 0; i < 3; ++i)
        CHECK(g.forward[p.poles[i].bits] == p.pole_images[i].bits);
    for (uint32_t x = 0; x < k.size(); ++x)
        CHECK(p.g(k.elem(x)).bits == g.forward[x]);
}

TEST_CASE("classifier polynomial coefficients are as displayed") {
    Field k(8);
    Element b = k.elem(0x35), a = b + k.one();
    rank3::ClassifierPolys c = rank3::build_classifier_polys(Params::make(b));
    Element ba = b / a;
    CHECK(c.g1 == Poly(k, {1, 1, ba.bits, 1, ba.bits, 1, 1}));
    CHECK(c.g2 == Poly(k, {1, b.bits, b.bits, 1, 1, 1, 1}));
    CHECK(c.f12 == Poly(k, {(a / b).bits, (a / b).bits, (k.one() / b).bits, 0, 1}));
    CHECK(c.f13 == Poly(k, {1, b.bits, a.bits, 0, 1}));
    CHECK(c.h12 == Poly(k, {(b.sqr().sqr() / a.sqr().sqr()).bits, 0, 1, 1, 1}));
    CHECK(c.phi == Poly(k, {(b / a.sqr()).bits, ba.bits, 1}));
}

TEST_CASE("phi has a root exactly when trace(1/beta) vanishes") {
    for (unsigned n = 4; n <= 10; ++n) {
        Field k(n);
        CAPTURE(n);
        for (Element b : betas_outside_f4(k)) {
            rank3::ClassifierPolys c = rank3::build_classifier_polys(Params::make(b));
            REQUIRE(has_root_in_field(c.phi) == (b.inv_q2().trace() == 0));
        }
    }
}

TEST_CASE("du_classify equals the brute differential maximum") {
    for (unsigned n : {4u, 5u, 6u}) {
        Field k(n);
        CAPTURE(n);
        for (Element b : betas_outside_f4(k)) {
            Params p = Params::make(b);
            int want = ddt_max(PermTable::from_chain(p.chain())).max;
            REQUIRE(int(rank3::du_classify(p)) == want);
        }
    }

    // cubic roots exist when 3 | n and force the maximum 8
    Field k6(6);
    int eights = 0;
    for (Element b : betas_outside_f4(k6)) {
        Params p = Params::make(b);
        if (p.beta_cubic_zero()) {
            CHECK(rank3::du_classify(p) == rank3::DuClass::eight);
            ++eights;
        }
    }
    CHECK(eights == 3);
}

TEST_CASE("bu_is_six equals the brute boomerang test and matches known counts") {
    size_t bu6_n6 = 0;
    Field k6(6);
    for (Element b : betas_outside_f4(k6)) {
        Params p = Params::make(b);
        bool six = rank3::bu_is_six(p);
        REQUIRE(six == (bct_max(PermTable::from_chain(p.chain())).max == 6));
        bu6_n6 += six;
    }
    CHECK(bu6_n6 == 6);

    size_t bu6_n8 = 0;
    Field k8(8);
    for (Element b : betas_outside_f4(k8)) bu6_n8 += rank3::bu_is_six(Params::make(b));
    CHECK(bu6_n8 == 16);

    // n = 4: nobody reaches (4, 6)
    Field k4(4);
    int du4bu6 = 0;
    for (Element b : betas_outside_f4(k4)) {
        Params p = Params::make(b);
        du4bu6 += rank3::bu_is_six(p) && rank3::du_classify(p) == rank3::DuClass::four;
    }
    CHECK(du4bu6 == 0);
}

TEST_CASE("boomerang witnesses validate against the oracle") {
    for (unsigned n : {6u, 8u}) {
        Field k(n);
        CAPTURE(n);
        std::set<std::string> sources;
        for (Element b : betas_outside_f4(k)) {
            Params p = Params::make(b);
            auto w = rank3::bu_witness(p);
            if (rank3::bu_is_six(p)) {
                REQUIRE_FALSE(w.has_value());
            } else {
                REQUIRE(w.has_value());
                REQUIRE(w->validated);  // bu_point >= 8 checked at construction
                sources.insert(w->source);
            }
        }
        CHECK(sources.size() >= 2);
    }

    // the phi-sourced witness is (z, (alpha z + beta)/(alpha beta))
    Field k(8);
    for (Element b : betas_outside_f4(k)) {
        Params p = Params::make(b);
        rank3::ClassifierPolys c = rank3::build_classifier_polys(p);
        if (has_root_in_field(c.h12) || has_root_in_field(c.h13) ||
            has_root_in_field(c.g1) || has_root_in_field(c.g2))
            continue;
        if (!has_root_in_field(c.phi) || p.beta_cubic_zero()) continue;
        auto w = rank3::bu_witness(p);
        REQUIRE(w.has_value());
        CHECK(w->source == "phi");
        Element z = w->a;
        CHECK(c.phi.eval(z).is_zero());
        CHECK(w->c == (p.alpha * z + b) / (p.alpha * b));
    }
}

TEST_CASE("b-values solve their defining equations") {
    Field k(8);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Element b = k.elem(2 + rng() % (k.size() - 2));
        if (is_in_f4(b)) continue;
        Params p = Params::make(b);
        PermTable g = PermTable::from_chain(p.chain());
        Element a = k.elem(1 + rng() % (k.size() - 1));
        if (a.is_one() || a == p.beta / p.alpha || a == p.alpha.inv_q2()) continue;
        rank3::BValues v = rank3::b_values(p, a);
        // a = G(p_i) + G(b_i + p_i) for each pole
        CHECK((g.forward[p.poles[0].bits] ^ g.forward[(v.b1 + p.poles[0]).bits]) == a.bits);
        CHECK((g.forward[p.poles[1].bits] ^ g.forward[(v.b2 + p.poles[1]).bits]) == a.bits);
        CHECK((g.forward[p.poles[2].bits] ^ g.forward[v.b3.bits]) == a.bits);
        CHECK(v.b3 == (p.alpha * a + k.one()) / (p.alpha.sqr() * a));
        CHECK(du_point(g, a, v.b1) >= 2);
        CHECK(du_point(g, a, v.b2) >= 2);
        CHECK(du_point(g, a, v.b3) >= 2);
    }

    // b1 = b2 has a solution a exactly when trace(beta/alpha) = 0
    for (Element b : betas_outside_f4(k)) {
        Params p = Params::make(b);
        bool found = false;
        for (uint32_t a = 1; a < k.size() && !found; ++a) {
            Element ea = k.elem(a);
            if (ea.is_one() || ea == p.beta / p.alpha || ea == p.alpha.inv_q2()) continue;
            rank3::BValues v = rank3::b_values(p, ea);
            found = v.b1 == v.b2;
        }
        REQUIRE(found == ((p.beta / p.alpha).trace() == 0));
    }

    Params p = Params::make(k.elem(0x1d));
    CHECK_THROWS_AS(rank3::b_values(p, k.zero()), std::invalid_argument);
    CHECK_THROWS_AS(rank3::b_values(p, k.one()), std::invalid_argument);
    CHECK_THROWS_AS(rank3::b_values(p, p.beta / p.alpha), std::invalid_argument);
    CHECK_THROWS_AS(rank3::b_values(p, p.alpha.inv_q2()), std::invalid_argument);
}

TEST_CASE("auxiliary quadratics") {
    Field k(8);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        Element b = k.elem(2 + rng() % (k.size() - 2));
        if (is_in_f4(b)) continue;
        Params p = Params::make(b);
        Element a = k.elem(1 + rng() % (k.size() - 1));
        Element bb = k.elem(1 + rng() % (k.size() - 1));
        rank3::AuxQuadratics q = rank3::aux_quadratics(p, a, bb);

        // hhat never vanishes at the pole 1/alpha
        Element at_inv_alpha = q.hhat.eval(p.alpha.inv_q2());
        CHECK(at_inv_alpha == bb / (p.alpha.sqr() * a));
        CHECK_FALSE(at_inv_alpha.is_zero());
        // hhat(0) = 0 iff a = (alpha a + 1) b
        CHECK(q.hhat.eval(k.zero()).is_zero() ==
              (a == (p.alpha * a + k.one()) * bb));
        // translates of hhat by the poles
        for (uint32_t x = 0; x < k.size(); ++x) {
            Element ex = k.elem(x);
            REQUIRE(q.h1.eval(ex) == q.hhat.eval(ex + p.poles[0]));
            REQUIRE(q.h2.eval(ex) == q.hhat.eval(ex + p.poles[1]));
            REQUIRE(q.h3.eval(ex) == q.hhat.eval(ex));
        }
        // H_a ties the translated quadratic to its own constant term
        Element s = k.elem(rng() % k.size());
        REQUIRE(rank3::h_bivariate(p, a, s, bb) == q.h1.eval(s));

        // in-field off-pole roots of hhat are exactly the class-C pair
        PermTable g = PermTable::from_chain(p.chain());
        auto roots = roots_in_field(q.hhat);
        bool off_pole_pair = roots.size() == 2;
        for (auto r : roots)
            for (auto pl : p.poles) off_pole_pair &= !(r == pl);
        SolutionClassCounts scc =
            classify_solutions(g, p.pole_vector(), a, bb);
        REQUIRE((scc.no_pole == 2) == off_pole_pair);
        if (off_pole_pair) {
            CHECK((g.forward[roots[0].bits] ^ g.forward[roots[1].bits]) == a.bits);
            CHECK((roots[0] + roots[1]) == bb);
        }
    }
}

TEST_CASE("trace identities along the pole parametrizations") {
    Field k(8);
    for (Element b : betas_outside_f4(k)) {
        Params p = Params::make(b);
        Element one = k.one(), al = p.alpha;
        for (uint32_t ai = 1; ai < k.size(); ++ai) {
            Element a = k.elem(ai);
            if (a.is_one() || a == p.beta / al || a == al.inv_q2()) continue;
            rank3::BValues v = rank3::b_values(p, a);
            REQUIRE(p.beta / (al * a) == one / (a * v.b1 * al.sqr()) + one);
            REQUIRE(one / (al * v.b3) == one / (a * v.b3 * al.sqr()) + one);
        }
    }
}

TEST_CASE("resultant identities of the pole-pair quadratics") {
    for (unsigned n : {4u, 5u, 6u, 7u, 8u}) {
        Field k(n);
        CAPTURE(n);
        Element one = k.one();
        for (Element b : betas_outside_f4(k)) {
            Params p = Params::make(b);
            Element al = p.alpha, cubic = b.sqr() * b + b.sqr() + one;
            Element a4 = al.sqr().sqr(), a8 = a4.sqr();

            auto q12 = rank3::aux_quadratics(p, one, (al * b).inv_q2());
            auto q3 = rank3::aux_quadratics(p, one, b / al.sqr());
            REQUIRE(resultant_quadratics(q12.h1, q3.h3) == cubic / (a8 * b));
            REQUIRE(q12.h1.eval(b / al.sqr()) == cubic / (a4 * b));
            REQUIRE(q3.h3.eval((al * b).inv_q2()) == cubic / (a4 * b.sqr()));

            auto q13 = rank3::aux_quadratics(p, b / al, al.inv_q2());
            auto q2 = rank3::aux_quadratics(p, b / al, (al.sqr() * b).inv_q2());
            REQUIRE(resultant_quadratics(q13.h1, q2.h2) ==
                    cubic / (a4 * al.sqr() * b.sqr().sqr()));

            auto q23 = rank3::aux_quadratics(p, al.inv_q2(), b.inv_q2());
            auto q1 = rank3::aux_quadratics(p, al.inv_q2(), al.sqr().inv_q2());
            REQUIRE(resultant_quadratics(q23.h2, q1.h1) ==
                    cubic / (a4 * al * b.sqr()));
        }
    }
}

TEST_CASE("the discarded quartic is root-equivalent to h12") {
    for (unsigned n = 4; n <= 10; ++n) {
        Field k(n);
        CAPTURE(n);
        for (Element b : betas_outside_f4(k)) {
            Params p = Params::make(b);
            Element al = p.alpha;
            Element a5 = al.sqr().sqr() * al;
            Poly h23(k, {(b / a5).bits, 0, (al * b).inv_q2().bits, al.inv_q2().bits, 1});
            rank3::ClassifierPolys c = rank3::build_classifier_polys(p);
            REQUIRE(has_root_in_field(h23) == has_root_in_field(c.h12));
            // pointwise birational identity away from z = beta/alpha
            for (int t = 0; t < 8; ++t) {
                Element z = k.elem((t * 37 + 5) % k.size());
                Element den = al * z + b;
                if (den.is_zero()) continue;
                Element lhs = h23.eval(z);
                Element rhs = den.sqr().sqr() * c.h12.eval(b.sqr() * z / den) /
                              (al * b.pow(7));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("verdicts are constant on frobenius orbits") {
    for (unsigned n : {8u, 10u, 12u}) {
        Field k(n);
        CAPTURE(n);
        std::mt19937_64 rng(n);
        for (int t = 0; t < 15; ++t) {
            Element b = k.elem(2 + rng() % (k.size() - 2));
            if (is_in_f4(b)) continue;
            Params p = Params::make(b);
            auto du = rank3::du_classify(p);
            bool six = rank3::bu_is_six(p);
            Element conj = b;
            for (unsigned i = 1; i < n; ++i) {
                conj = conj.sqr();
                Params pc = Params::make(conj);
                REQUIRE(rank3::du_classify(pc) == du);
                REQUIRE(rank3::bu_is_six(pc) == six);
            }
        }
    }
}
