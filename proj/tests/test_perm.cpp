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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "carlitz/perm.hpp"

using namespace carlitz;

namespace {

Chain rank3_chain(const Field& k, uint32_t beta) { return Chain(k, {1, 0, beta, 1, 0}); }

PermTable random_perm(const Field& k, std::mt19937_64& rng) {
    std::vector<uint32_t> t(k.size());
    std::iota(t.begin(), t.end(), 0);
    std::shuffle(t.begin(), t.end(), rng);
    return PermTable::from_table(k, std::move(t));
}

}  // namespace

TEST_CASE("perm table construction and composition") {
    Field k(4);
    Chain inv(k, {1, 0, 0});
    PermTable p = PermTable::from_chain(inv);
    for (uint32_t x = 0; x < k.size(); ++x) CHECK(p.inverse[p.forward[x]] == x);
    CHECK(p.then(p.inverted()).is_identity());

    std::vector<uint32_t> bad(k.size(), 0);
    CHECK_THROWS_AS(PermTable::from_table(k, bad), std::invalid_argument);
}

TEST_CASE("the inverse function over F_256 is (4,6)") {
    Field k(8);
    PermTable p = PermTable::from_chain(Chain(k, {1, 0, 0}));
    OracleResult d = ddt_max(p);
    CHECK(d.max == 4);
    // witness attains the maximum
    int cnt = 0;
    for (uint32_t x = 0; x < k.size(); ++x)
        cnt += (p.forward[x] ^ p.forward[x ^ d.a.bits]) == d.b.bits;
    CHECK(cnt == 4);
    OracleResult bc = bct_max(p);
    CHECK(bc.max == 6);
    CHECK(algebraic_degree(p) == 7);
}

TEST_CASE("degenerate and affine permutations have flat tables") {
    Field k(6);
    CHECK(ddt_max(PermTable::from_chain(Chain(k, {1, 0, 1, 1, 0}))).max == 64);
    CHECK(ddt_max(PermTable::from_chain(Chain(k, {5, 9}))).max == 64);
    CHECK(algebraic_degree(PermTable::from_chain(Chain(k, {5, 9}))) == 1);
}

TEST_CASE("rank-2 boomerang uniformity by field degree") {
    for (unsigned n : {4u, 5u, 7u, 8u}) {
        Field k(n);
        CAPTURE(n);
        CHECK(bct_max(PermTable::from_chain(Chain(k, {1, 0, 1, 0}))).max == 6);
    }
    for (unsigned n : {6u, 9u}) {
        Field k(n);
        CAPTURE(n);
        CHECK(bct_max(PermTable::from_chain(Chain(k, {1, 0, 1, 0}))).max > 6);
    }
}

TEST_CASE("rank-3 with beta in F_4 \\ F_2: (4,6) exactly at n = 2 mod 4, 6 not dividing n") {
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        Field k(n);
        CAPTURE(n);
        uint32_t f4 = 0;
        for (uint32_t b = 2; b < k.size(); ++b)
            if ((k.sqr_raw(b) ^ b ^ 1u) == 0) {
                f4 = b;
                break;
            }
        REQUIRE(f4 != 0);
        PermTable p = PermTable::from_chain(rank3_chain(k, f4));
        const bool opt = ddt_max(p, 14).max == 4 && bct_max(p, 14).max == 6;
        CHECK(opt == (n == 10));
    }
}

TEST_CASE("fast boomerang pass agrees with the literal definition") {
    std::mt19937_64 rng(5);
    for (unsigned n : {4u, 5u, 6u}) {
        Field k(n);
        for (uint32_t beta = 2; beta < std::min<uint32_t>(k.size(), 8); ++beta) {
            PermTable p = PermTable::from_chain(rank3_chain(k, beta));
            OracleResult fast = bct_max(p), lit = bct_max_literal(p);
            CAPTURE(n, beta);
            REQUIRE(fast.max == lit.max);
        }
        for (int t = 0; t < 3; ++t) {
            PermTable p = random_perm(k, rng);
            REQUIRE(bct_max(p).max == bct_max_literal(p).max);
        }
    }
}

TEST_CASE("swapped-form points match the boomerang table of the inverse") {
    Field k(8);
    Element beta = k.elem(0xb3);
    Chain f(k, {1, 0, 1, beta.bits, 0});         // [0,beta,1,x]
    PermTable pf = PermTable::from_chain(f);
    PermTable g = pf.inverted();                 // G = F^{-1} = [0,1,beta,x]
    CHECK(g.forward == rank3_chain(k, beta.bits).as_table());

    OracleResult bc = bct_max(pf);
    int best = 0;
    for (uint32_t a = 1; a < k.size(); ++a)
        for (uint32_t c = 1; c < k.size(); ++c)
            best = std::max(best, bu_point(g, k.elem(a), k.elem(c)));
    CHECK(best == bc.max);
    // boomerang uniformity is inversion invariant
    CHECK(bct_max(g).max == bc.max);
    // witness point really attains the reported count
    CHECK(bu_point(pf.inverted(), bc.a, bc.b) == bc.max);
}

TEST_CASE("du_point sums, embeddings and the maximum-8 structure") {
    Field k(6);
    // roots of Z^3+Z^2+1 exist since 3 | 6
    std::vector<uint32_t> betas;
    for (uint32_t b = 0; b < k.size(); ++b)
        if ((k.mul_raw(k.mul_raw(b, b), b) ^ k.mul_raw(b, b) ^ 1u) == 0) betas.push_back(b);
    REQUIRE(betas.size() == 3);
    for (uint32_t beta : betas) {
        CAPTURE(beta);
        PermTable g = PermTable::from_chain(rank3_chain(k, beta));
        Element eb = k.elem(beta);
        CHECK(du_point(g, eb, k.one()) == 8);
        // the four unordered solution pairs
        std::set<std::pair<uint32_t, uint32_t>> pairs;
        for (uint32_t x = 0; x < k.size(); ++x)
            if ((g.forward[x] ^ g.forward[x ^ 1u]) == beta)
                pairs.insert({std::min(x, x ^ 1u), std::max(x, x ^ 1u)});
        auto up = [&](Element u) {
            return std::make_pair(std::min(u.bits, u.bits ^ 1u),
                                  std::max(u.bits, u.bits ^ 1u));
        };
        std::set<std::pair<uint32_t, uint32_t>> want = {
            up(eb.sqr()), up(eb.sqr() + eb), up(k.zero()), up(eb)};
        CHECK(pairs == want);
        // (beta, 1) is the unique maximising point
        OracleResult d = ddt_max(g);
        CHECK(d.max == 8);
        CHECK(bct_max(g).max >= 8);
    }

    // row sums: for fixed a, du_point over all b covers the field once
    Element a = k.elem(9);
    PermTable g = PermTable::from_chain(rank3_chain(k, 7));
    uint64_t sum = 0;
    for (uint32_t b = 1; b < k.size(); ++b) sum += du_point(g, a, k.elem(b));
    CHECK(sum == k.size());

    // bu_point dominates du_point
    for (uint32_t a2 = 1; a2 < k.size(); ++a2)
        for (uint32_t c2 = 1; c2 < k.size(); ++c2)
            REQUIRE(bu_point(g, k.elem(a2), k.elem(c2)) >=
                    du_point(g, k.elem(a2), k.elem(c2)));
}

TEST_CASE("solution classes") {
    Field k(8);
    Element beta = k.elem(0x47), alpha = beta + k.one();
    PermTable g = PermTable::from_chain(rank3_chain(k, beta.bits));
    std::vector<Element> poles = {alpha.inv_q2(), beta.inv_q2(), k.zero()};

    // a = G(1/alpha)+G(1/beta) = 1, b = 1/alpha + 1/beta = 1/(alpha beta)
    SolutionClassCounts scc =
        classify_solutions(g, poles, k.one(), (alpha * beta).inv_q2());
    CHECK(scc.both_poles == 2);

    std::mt19937_64 rng(11);
    std::set<uint32_t> pole_sums;  // all values G(p_i)+G(p_j)
    for (auto pi : poles)
        for (auto pj : poles)
            if (!(pi == pj)) pole_sums.insert(g.forward[pi.bits] ^ g.forward[pj.bits]);
    for (int t = 0; t < 2000; ++t) {
        Element a = k.elem(1 + rng() % (k.size() - 1));
        Element b = k.elem(1 + rng() % (k.size() - 1));
        SolutionClassCounts c = classify_solutions(g, poles, a, b);
        REQUIRE(c.total() == du_point(g, a, b));
        REQUIRE((c.no_pole == 0 || c.no_pole == 2));  // alpha_m != 0 here
        if (!pole_sums.count(a.bits)) REQUIRE(c.both_poles == 0);
    }
}

TEST_CASE("algebraic degree of rank-3 permutations is n-1") {
    for (unsigned n : {6u, 8u}) {
        Field k(n);
        std::mt19937_64 rng(n);
        for (int t = 0; t < 3; ++t) {
            uint32_t beta;
            do beta = 2 + rng() % (k.size() - 2);
            while (k.in_f4_raw(beta));
            CHECK(algebraic_degree(PermTable::from_chain(rank3_chain(k, beta))) ==
                  int(n - 1));
        }
    }
}

TEST_CASE("delta <= boomerang, with equality to 2 exactly for APN") {
    Field k5(5);
    // x^3 is an APN permutation for odd n
    std::vector<uint32_t> cube(k5.size());
    for (uint32_t x = 0; x < k5.size(); ++x) cube[x] = k5.mul_raw(k5.mul_raw(x, x), x);
    PermTable apn = PermTable::from_table(k5, std::move(cube));
    CHECK(ddt_max(apn).max == 2);
    CHECK(bct_max(apn).max == 2);

    std::mt19937_64 rng(13);
    for (unsigned n : {4u, 5u, 6u}) {
        Field k(n);
        for (int t = 0; t < 8; ++t) {
            PermTable p = random_perm(k, rng);
            int d = ddt_max(p).max, bc = bct_max(p).max;
            REQUIRE(d <= bc);
            REQUIRE(d % 2 == 0);
            REQUIRE((d == 2) == (bc == 2));
        }
    }
}

TEST_CASE("standard-form reduction preserves both maxima") {
    Field k(6);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 6; ++t) {
        std::vector<uint32_t> c(6);
        c[0] = 1 + rng() % (k.size() - 1);
        c[1] = rng() % k.size();
        for (int i = 2; i <= 4; ++i) c[i] = 1 + rng() % (k.size() - 1);
        c[5] = rng() % k.size();
        Chain ch(k, c);
        PermTable p = PermTable::from_chain(ch);
        PermTable ps = PermTable::from_chain(reduce_to_standard(ch));
        REQUIRE(ddt_max(p).max == ddt_max(ps).max);
        REQUIRE(bct_max(p).max == bct_max(ps).max);
    }
}

TEST_CASE("oracle guards") {
    Field k(16);
    PermTable p = PermTable::from_chain(Chain(k, {1, 0, 0}));
    CHECK_THROWS_AS(ddt_max(p), std::invalid_argument);
    CHECK_THROWS_AS(bct_max(p), std::invalid_argument);
    CHECK_THROWS_AS(bct_max_literal(p), std::invalid_argument);
    CHECK_NOTHROW(ddt_max(p, 16));
}

TEST_CASE("oracles are deterministic across parallelism") {
    Field k(7);
    PermTable p = PermTable::from_chain(rank3_chain(k, 0x51));
    OracleResult d1 = ddt_max(p, 14, 1), d4 = ddt_max(p, 14, 4);
    CHECK(d1.max == d4.max);
    CHECK(d1.a == d4.a);
    CHECK(d1.b == d4.b);
    OracleResult b1 = bct_max(p, 14, 1), b4 = bct_max(p, 14, 4);
    CHECK(b1.max == b4.max);
    CHECK(b1.a == b4.a);
    CHECK(b1.b == b4.b);
}
