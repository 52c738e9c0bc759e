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

#include "carlitz/field.hpp"

using namespace carlitz;

TEST_CASE("construction validates modulus and generator") {
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field(25), std::invalid_argument);
    CHECK_THROWS_AS(Field(8, 0x11c), std::invalid_argument);   // x^8+x^4+x^3+x^2, reducible
    CHECK_THROWS_AS(Field(8, 0x1001), std::invalid_argument);  // degree mismatch
    CHECK_THROWS_AS(Field(4, (1u << 4) | 0x1), std::invalid_argument);  // x^4+1 = (x+1)^4

    for (unsigned n = 2; n <= 24; ++n) {
        Field f(n);
        CAPTURE(n);
        CHECK(f.gen().bits == 2);  // residue of x is primitive for Conway moduli
        // order exactly 2^n - 1
        CHECK(f.gen().pow(f.group_order()).is_one());
        for (uint32_t p : f.group_order_prime_factors())
            CHECK_FALSE(f.gen().pow(f.group_order() / p).is_one());
    }

    // AES modulus: irreducible but x is not primitive; search must find 0x03
    Field aes(8, 0x11b);
    CHECK(aes.gen().bits == 3);
}

TEST_CASE("add is xor with char-2 identities") {
    Field f(8);
    Element x = f.elem(0xa7), g = f.gen();
    CHECK((x + x).is_zero());
    CHECK(x + f.zero() == x);
    CHECK(g + g.sqr() == f.elem(0b110));

    Field f2(8);
    CHECK_NOTHROW(f.elem(1) + f2.elem(1));  // same degree+modulus: compatible
    Field g9(9);
    CHECK_THROWS_AS(f.elem(1) + g9.elem(1), std::invalid_argument);
    Field aes(8, 0x11b);
    CHECK_THROWS_AS(f.elem(1) * aes.elem(1), std::invalid_argument);
}

TEST_CASE("mul in F_256 with the Conway modulus") {
    Field f(8);
    Element g = f.gen();
    CHECK(f.elem(0x53) * f.one() == f.elem(0x53));
    CHECK(g.pow(4) * g.pow(4) == f.elem(0x1d));  // g^8 = g^4+g^3+g^2+1
    CHECK(g.pow(102) * g.pow(153) == f.one());   // g^255 = 1
}

TEST_CASE("inv_q2 maps 0 to 0 and inverts the rest") {
    Field f(11);
    CHECK(f.zero().inv_q2().is_zero());
    CHECK(f.one().inv_q2().is_one());
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Element a = f.elem(rng() % f.size());
        if (a.is_zero()) continue;
        CHECK((a * a.inv_q2()).is_one());
    }
}

TEST_CASE("trace basics") {
    for (unsigned n : {2u, 3u, 5u, 8u, 12u}) {
        Field f(n);
        CAPTURE(n);
        CHECK(f.zero().trace() == 0);
        CHECK(f.one().trace() == int(n % 2));
        size_t zeros = 0;
        for (uint32_t x = 0; x < f.size(); ++x) zeros += f.trace_raw(x) == 0;
        CHECK(zeros == f.size() / 2);
        // additive and Frobenius-invariant
        std::mt19937 rng(n);
        for (int i = 0; i < 100; ++i) {
            Element a = f.elem(rng() % f.size()), b = f.elem(rng() % f.size());
            CHECK((a + b).trace() == (a.trace() ^ b.trace()));
            CHECK(a.sqr().trace() == a.trace());
        }
    }
}

TEST_CASE("artin-schreier solver hits exactly the trace-0 half") {
    for (unsigned n : {4u, 5u, 6u, 7u, 8u, 10u}) {
        Field f(n);
        CAPTURE(n);
        auto z0 = solve_artin_schreier(f.zero());
        REQUIRE(z0.has_value());
        CHECK((z0->bits == 0 || z0->bits == 1));
        size_t solved = 0;
        for (uint32_t c = 0; c < f.size(); ++c) {
            auto z = solve_artin_schreier(f.elem(c));
            if (f.trace_raw(c) == 1) {
                CHECK_FALSE(z.has_value());
            } else {
                REQUIRE(z.has_value());
                CHECK((z->sqr() + *z).bits == c);
                ++solved;
            }
        }
        CHECK(solved == f.size() / 2);
    }
}

TEST_CASE("F_4 membership") {
    Field f5(5);
    CHECK(is_in_f4(f5.zero()));
    CHECK(is_in_f4(f5.one()));
    for (uint32_t b = 2; b < f5.size(); ++b) CHECK_FALSE(is_in_f4(f5.elem(b)));

    Field f6(6);
    size_t cnt = 0;
    for (uint32_t b = 0; b < f6.size(); ++b) {
        Element e = f6.elem(b);
        bool quad = (e.sqr() + e + f6.one()).is_zero();
        if (quad) {
            CHECK(is_in_f4(e));
            ++cnt;
        }
    }
    CHECK(cnt == 2);  // the two elements of F_4 \ F_2
}

TEST_CASE("field axioms, exhaustively small and sampled large") {
    for (unsigned n : {2u, 3u, 4u, 5u}) {
        Field f(n);
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b)
                for (uint32_t c = 0; c < f.size(); ++c) {
                    Element ea = f.elem(a), eb = f.elem(b), ec = f.elem(c);
                    REQUIRE(((ea * eb) * ec).bits == (ea * (eb * ec)).bits);
                    REQUIRE((ea * (eb + ec)).bits == (ea * eb + ea * ec).bits);
                }
    }
    for (unsigned n : {16u, 21u, 24u}) {
        Field f(n);
        std::mt19937_64 rng(n);
        for (int i = 0; i < 2000; ++i) {
            Element a = f.elem(rng() % f.size()), b = f.elem(rng() % f.size()),
                    c = f.elem(rng() % f.size());
            REQUIRE(((a * b) * c) == (a * (b * c)));
            REQUIRE((a * (b + c)) == (a * b + a * c));
            REQUIRE(a * b == b * a);
        }
    }
}

TEST_CASE("frobenius fixes the field: a^(2^n) = a") {
    for (unsigned n : {3u, 6u, 10u}) {
        Field f(n);
        for (uint32_t a = 0; a < f.size(); ++a) {
            Element t = f.elem(a);
            for (unsigned i = 0; i < n; ++i) t = t.sqr();
            REQUIRE(t.bits == a);
        }
    }
}

TEST_CASE("table and plain multiplication agree") {
    Field f(18);  // above the eager-table threshold
    std::mt19937 rng(3);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    std::vector<uint32_t> plain;
    for (int i = 0; i < 500; ++i) {
        uint32_t a = rng() % f.size(), b = rng() % f.size();
        pairs.emplace_back(a, b);
        plain.push_back(f.mul_raw(a, b));
    }
    f.ensure_tables();
    REQUIRE(f.has_tables());
    for (size_t i = 0; i < pairs.size(); ++i)
        CHECK(f.mul_raw(pairs[i].first, pairs[i].second) == plain[i]);
}

TEST_CASE("hex and power-form printing") {
    Field f(8);
    CHECK(to_hex(f.zero()) == "0");
    CHECK(to_hex(f.elem(0x1d)) == "1d");
    CHECK(parse_element(f, "1d").bits == 0x1d);
    CHECK(parse_element(f, "0x1D").bits == 0x1d);
    CHECK_THROWS_AS(parse_element(f, "zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(f, "100"), std::invalid_argument);  // >= 2^8
    CHECK(to_power_form(f.zero()) == "0");
    CHECK(to_power_form(f.one()) == "1");
    CHECK(to_power_form(f.gen().pow(153)) == "g^153");
    // dlog round trip on a field with no tables
    Field big(20);
    Element a = big.gen().pow(99999);
    CHECK(big.gen().pow(big.dlog_raw(a.bits)) == a);
}
