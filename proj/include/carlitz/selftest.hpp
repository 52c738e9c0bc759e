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

#ifndef CARLITZ_SELFTEST_HPP
#define CARLITZ_SELFTEST_HPP

#include <functional>
#include <random>
#include <set>

#include "carlitz/sweep.hpp"

namespace carlitz::selftest {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct Options {
    uint64_t seed = 0xC0FFEE;
    unsigned jobs = 2;
    bool deep = false;  // extend the published-count check to n = 14, 16
};

namespace detail {

struct Ctx {
    Options opt;
    std::string fail;  // first failure description, empty = pass

    void expect(bool ok, const std::string& what) {
        if (!ok && fail.empty()) fail = what;
    }
};

inline Chain random_chain(const Field& k, int m, std::mt19937_64& rng) {
    std::vector<uint32_t> c(m + 2);
    c[0] = 1 + rng() % (k.size() - 1);
    c[1] = rng() % k.size();
    for (int i = 2; i <= m; ++i) c[i] = 1 + rng() % (k.size() - 1);
    c[m + 1] = rng() % k.size();
    return Chain(k, std::move(c));
}

inline Chain random_standard_chain(const Field& k, int m, std::mt19937_64& rng) {
    std::vector<uint32_t> c(m + 2, 0);
    c[0] = 1;
    c[1] = 0;
    c[2] = 1;
    for (int i = 3; i <= m; ++i) c[i] = 1 + rng() % (k.size() - 1);
    c[m + 1] = 0;
    return Chain(k, std::move(c));
}

inline std::vector<Element> betas_outside_f4(const Field& k) {
    std::vector<Element> out;
    for (uint32_t b = 2; b < k.size(); ++b)
        if (!k.in_f4_raw(b)) out.push_back(k.elem(b));
    return out;
}

// ---- gf2n ----

inline void field_axioms(Ctx& c) {
    for (unsigned n = 2; n <= 8; ++n) {
        Field k(n);
        for (uint32_t a = 0; a < k.size(); ++a)
            for (uint32_t b = 0; b < k.size(); ++b) {
                if (k.mul_raw(a, b) != k.mul_raw(b, a)) {
                    c.expect(false, "commutativity, n=" + std::to_string(n));
                    return;
                }
                for (uint32_t d = 0; d < k.size(); ++d) {
                    const bool assoc =
                        k.mul_raw(k.mul_raw(a, b), d) == k.mul_raw(a, k.mul_raw(b, d));
                    const bool dist = k.mul_raw(a, b ^ d) ==
                                      (k.mul_raw(a, b) ^ k.mul_raw(a, d));
                    if (!assoc || !dist) {
                        c.expect(false, "axiom failure, n=" + std::to_string(n));
                        return;
                    }
                }
            }
    }
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n = 9; n <= 24; ++n) {
        Field k(n);
        for (int t = 0; t < 500; ++t) {
            uint32_t a = rng() % k.size(), b = rng() % k.size(), d = rng() % k.size();
            c.expect(k.mul_raw(k.mul_raw(a, b), d) == k.mul_raw(a, k.mul_raw(b, d)),
                     "associativity sample, n=" + std::to_string(n));
            c.expect(k.mul_raw(a, b ^ d) == (k.mul_raw(a, b) ^ k.mul_raw(a, d)),
                     "distributivity sample, n=" + std::to_string(n));
            if (a) c.expect(k.mul_raw(a, k.inv_q2_raw(a)) == 1,
                            "inverse sample, n=" + std::to_string(n));
        }
    }
}

inline void frobenius_fixes_field(Ctx& c) {
    for (unsigned n = 2; n <= 10; ++n) {
        Field k(n);
        for (uint32_t a = 0; a < k.size(); ++a) {
            uint32_t t = a;
            for (unsigned i = 0; i < n; ++i) t = k.sqr_raw(t);
            c.expect(t == a, "a^(2^n) != a at n=" + std::to_string(n));
        }
    }
}

inline void trace_properties(Ctx& c) {
    for (unsigned n = 2; n <= 12; ++n) {
        Field k(n);
        size_t zeros = 0;
        for (uint32_t a = 0; a < k.size(); ++a) {
            zeros += k.trace_raw(a) == 0;
            c.expect(k.trace_raw(k.sqr_raw(a)) == k.trace_raw(a),
                     "trace not frobenius invariant, n=" + std::to_string(n));
        }
        c.expect(zeros == k.size() / 2, "trace-0 count, n=" + std::to_string(n));
        std::mt19937_64 rng(c.opt.seed + n);
        for (int t = 0; t < 200; ++t) {
            uint32_t a = rng() % k.size(), b = rng() % k.size();
            c.expect(k.trace_raw(a ^ b) == (k.trace_raw(a) ^ k.trace_raw(b)),
                     "trace not additive, n=" + std::to_string(n));
        }
    }
}

inline void artin_schreier_exact(Ctx& c) {
    for (unsigned n = 2; n <= 10; ++n) {
        Field k(n);
        for (uint32_t v = 0; v < k.size(); ++v) {
            auto z = k.artin_schreier_raw(v);
            if (k.trace_raw(v) == 0) {
                c.expect(z.has_value() && (k.sqr_raw(*z) ^ *z) == v,
                         "solvable case failed, n=" + std::to_string(n));
            } else {
                c.expect(!z.has_value(), "unsolvable case solved, n=" + std::to_string(n));
            }
        }
    }
}

// ---- brackets and convergents ----

inline void bracket_reversal(Ctx& c) {
    Field k(3);
    for (uint32_t b0 = 0; b0 < 8; ++b0)
        for (uint32_t b1 = 0; b1 < 8; ++b1)
            for (uint32_t b2 = 0; b2 < 8; ++b2)
                for (uint32_t b3 = 0; b3 < 8; ++b3) {
                    std::vector<Element> f = {k.elem(b0), k.elem(b1), k.elem(b2),
                                              k.elem(b3)};
                    std::vector<Element> r(f.rbegin(), f.rend());
                    c.expect(bracket_eval(f).is_zero() == bracket_eval(r).is_zero(),
                             "bracket reversal, length 4");
                }
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {6u, 11u, 17u}) {
        Field kk(n);
        for (int t = 0; t < 300; ++t) {
            std::vector<Element> f;
            const int len = 2 + int(rng() % 6);
            for (int i = 0; i < len; ++i) f.push_back(kk.elem(rng() % kk.size()));
            std::vector<Element> r(f.rbegin(), f.rend());
            c.expect(bracket_eval(f).is_zero() == bracket_eval(r).is_zero(),
                     "bracket reversal sample, n=" + std::to_string(n));
        }
    }
}

inline void convergent_identities(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {3u, 6u, 10u, 16u, 24u}) {
        Field k(n);
        for (int t = 0; t < 20; ++t) {
            Chain ch = random_chain(k, 1 + int(rng() % 7), rng);
            Convergents cv = convergents(ch);
            for (int i = 1; i <= ch.m() + 1; ++i) {
                c.expect(cv.k(i, i - 1) == ch.coeff(0),
                         "cross identity, n=" + std::to_string(n));
                c.expect(!(cv.alpha[i] == 0 && cv.beta[i] == 0),
                         "(alpha_i, beta_i) = (0,0)");
                c.expect(!(cv.alpha[i] == 0 && cv.alpha[i - 1] == 0),
                         "(alpha_i, alpha_{i-1}) = (0,0)");
            }
        }
    }
}

inline void rational_form_identities(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        Field k(n);
        for (int t = 0; t < 6; ++t) {
            Chain ch = random_chain(k, 1 + int(rng() % 6), rng);
            Convergents cv = convergents(ch);
            PoleData pd = pole_data(ch);
            const int m = ch.m();
            for (uint32_t x = 0; x < k.size(); ++x) {
                bool pole = false;
                for (int i = 1; i <= m; ++i) pole |= pd.a_value[i] == x;
                if (pole) continue;
                Element ex = k.elem(x);
                Element want = (cv.alpha_at(m + 1) * ex + cv.beta_at(m + 1)) *
                               (cv.alpha_at(m) * ex + cv.beta_at(m)).inv_q2();
                c.expect(ch.eval(ex) == want, "fraction form off poles");
            }
            for (size_t i = 0; i < pd.poles.size(); ++i)
                c.expect(ch.eval(pd.poles[i]) == pd.exceptional[i],
                         "exceptional value at pole");
        }
    }
}

inline void minimal_representative_correspondence(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    auto check_chain = [&](const Field& k, const Chain& ch) {
        Convergents cv = convergents(ch);
        PoleData pd = pole_data(ch);
        std::set<int> sim_min;
        for (auto& cls : pd.sim_partition) {
            int j = cls.front();
            sim_min.insert(j);
            c.expect(cv.alpha[j] != 0, "minimal sim representative has alpha = 0");
            c.expect(cv.beta_at(j) * Element{cv.alpha[j], &k}.inv_q2() == pd.a_at(j),
                     "A_j != beta_j/alpha_j at minimal representative");
        }
        std::set<int> approx_min;
        for (auto& cls : pd.approx_partition) {
            if (cv.alpha[cls.front()] == 0) continue;  // the class of index 0
            approx_min.insert(cls.front());
        }
        c.expect(sim_min == approx_min, "representative sets differ");
    };
    for (unsigned n : {3u, 4u, 6u, 8u}) {
        Field k(n);
        for (int t = 0; t < 25; ++t) check_chain(k, random_chain(k, 2 + int(rng() % 7), rng));
    }
    // the worked example with many coincidences
    Field k8(8);
    Element g = k8.gen();
    Chain worked(k8, {1, 0, 1, 1, g.pow(73).bits, g.pow(234).bits, g.pow(164).bits,
                      g.pow(153).bits, g.pow(102).bits, 0});
    check_chain(k8, worked);
}

inline void palindromic_involutions(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        Field k(n);
        for (int t = 0; t < 6; ++t) {
            const int m = 2 + int(rng() % 4);
            // a0 = 1 and a_{m+1-i} = a_{1+i}: draw the first half, mirror it
            std::vector<uint32_t> cc(m + 2, 0);
            cc[0] = 1;
            for (int i = 1; i <= m + 1; ++i) {
                int mirror = m + 2 - i;  // index with cc[i] = cc[mirror]
                if (mirror < i) {
                    cc[i] = cc[mirror];
                    continue;
                }
                uint32_t v = rng() % k.size();
                const bool interior_either =
                    (i >= 2 && i <= m) || (mirror >= 2 && mirror <= m);
                if (interior_either && v == 0) v = 1;
                cc[i] = v;
            }
            Chain ch(k, cc);
            auto tab = ch.as_table();
            for (uint32_t x = 0; x < k.size(); ++x) {
                if (tab[tab[x]] != x) {
                    c.expect(false, "palindromic chain not an involution, n=" +
                                        std::to_string(n));
                    return;
                }
            }
        }
    }
}

inline void affine_invariance_of_maxima(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u}) {
        Field k(n);
        for (int t = 0; t < 4; ++t) {
            Chain ch = random_chain(k, 2 + int(rng() % 3), rng);
            PermTable p = PermTable::from_chain(ch);
            PermTable ps = PermTable::from_chain(reduce_to_standard(ch));
            c.expect(ddt_max(p).max == ddt_max(ps).max,
                     "differential maximum changed under reduction");
            c.expect(bct_max(p).max == bct_max(ps).max,
                     "boomerang maximum changed under reduction");
        }
    }
}

inline void apn_bound(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u}) {
        Field k(n);
        for (int t = 0; t < 12; ++t) {
            Chain ch = random_standard_chain(k, 2 + int(rng() % 5), rng);
            PoleData pd = pole_data(ch);
            if (3 * pd.poles.size() >= k.size() / 2) continue;  // bound needs l < 2^(n-1)/3
            c.expect(ddt_max(PermTable::from_chain(ch)).max >= 4,
                     "short chain claimed APN, n=" + std::to_string(n));
        }
    }
}

// ---- uniformity oracles ----

inline void swapped_definition_equivalence(Ctx& c) {
    Field k6(6);
    for (Element b : betas_outside_f4(k6)) {
        Chain f(k6, {1, 0, 1, b.bits, 0});  // [0,beta,1,x]
        PermTable pf = PermTable::from_chain(f);
        PermTable g = pf.inverted();
        int best = 0;
        for (uint32_t a = 1; a < k6.size(); ++a)
            for (uint32_t cc = 1; cc < k6.size(); ++cc)
                best = std::max(best, bu_point(g, k6.elem(a), k6.elem(cc)));
        c.expect(best == bct_max(pf).max, "swapped form mismatch at n=6");
    }
    Field k8(8);
    std::mt19937_64 rng(c.opt.seed);
    for (int t = 0; t < 3; ++t) {
        Element b = k8.elem(2 + rng() % (k8.size() - 2));
        if (is_in_f4(b)) continue;
        Chain f(k8, {1, 0, 1, b.bits, 0});
        PermTable pf = PermTable::from_chain(f);
        PermTable g = pf.inverted();
        int best = 0;
        for (uint32_t a = 1; a < k8.size(); ++a)
            for (uint32_t cc = 1; cc < k8.size(); ++cc)
                best = std::max(best, bu_point(g, k8.elem(a), k8.elem(cc)));
        c.expect(best == bct_max(pf).max, "swapped form mismatch at n=8");
        c.expect(bct_max(g).max == bct_max(pf).max, "inversion changed the maximum");
    }
}

inline void delta_bounds_boomerang(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 5u, 6u}) {
        Field k(n);
        for (int t = 0; t < 10; ++t) {
            std::vector<uint32_t> tab(k.size());
            for (uint32_t x = 0; x < k.size(); ++x) tab[x] = x;
            std::shuffle(tab.begin(), tab.end(), rng);
            PermTable p = PermTable::from_table(k, std::move(tab));
            const int d = ddt_max(p).max, bc = bct_max(p).max;
            c.expect(d <= bc, "delta exceeds boomerang");
            c.expect(d % 2 == 0 && d >= 2, "odd or sub-2 delta");
            c.expect((d == 2) == (bc == 2), "APN equivalence broken");
        }
    }
    Field k5(5);
    std::vector<uint32_t> cube(k5.size());
    for (uint32_t x = 0; x < k5.size(); ++x) cube[x] = k5.mul_raw(k5.mul_raw(x, x), x);
    PermTable apn = PermTable::from_table(k5, std::move(cube));
    c.expect(ddt_max(apn).max == 2 && bct_max(apn).max == 2, "cube map not APN at n=5");
}

inline void ddt_row_sums(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u}) {
        Field k(n);
        Chain ch = random_chain(k, 3, rng);
        PermTable p = PermTable::from_chain(ch);
        for (uint32_t a = 1; a < k.size(); ++a) {
            uint64_t sum = 0;
            for (uint32_t b = 0; b < k.size(); ++b) {
                int cnt = 0;
                for (uint32_t x = 0; x < k.size(); ++x)
                    cnt += (p.forward[x] ^ p.forward[x ^ a]) == b;
                sum += cnt;
            }
            c.expect(sum == k.size(), "row sum mismatch");
        }
    }
}

inline void solution_class_criterion(Ctx& c) {
    // exact characterization of the off-pole solution pair. The convergents
    // belong to the standard chain F; the pole set and the analyzed
    // permutation belong to its inverse G (increasing-index arrangement).
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 5u, 6u}) {
        Field k(n);
        for (int t = 0; t < 8; ++t) {
            Chain f = random_standard_chain(k, 2 + int(rng() % 3), rng);
            Convergents cv = convergents(f);
            const int m = f.m();
            if (cv.alpha[m] == 0) continue;
            Element am = cv.alpha_at(m), am1 = cv.alpha_at(m - 1);
            Chain gch = inverse_chain(f);
            PoleData pd = pole_data(gch);
            PermTable g = PermTable::from_chain(gch);
            for (uint32_t ai = 1; ai < k.size(); ++ai)
                for (uint32_t bi = 1; bi < k.size(); ++bi) {
                    Element a = k.elem(ai), b = k.elem(bi);
                    SolutionClassCounts scc =
                        classify_solutions(g, pd.poles, a, b);
                    c.expect(scc.no_pole == 0 || scc.no_pole == 2,
                             "off-pole class size not 0 or 2");
                    bool tr0 = (k.one() / (a * b * am.sqr())).trace() == 0;
                    bool clean = true;
                    for (Element pl : pd.poles) {
                        Element x = am * pl + am1;
                        clean &= !(x.sqr() + b * am * x + b / a).is_zero();
                    }
                    c.expect((scc.no_pole == 2) == (tr0 && clean),
                             "off-pole pair existence criterion");
                }
        }
    }
}

// ---- polynomial machinery ----

inline void classifier_root_agreement(Ctx& c) {
    for (unsigned n = 4; n <= 12; ++n) {
        Field k(n);
        std::vector<Element> betas = betas_outside_f4(k);
        std::atomic<size_t> next{0};
        std::atomic<bool> ok{true};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < betas.size(); i = next.fetch_add(1)) {
                rank3::ClassifierPolys cp =
                    rank3::build_classifier_polys(rank3::Params::make(betas[i]));
                for (auto [name, poly] : cp.named()) {
                    bool scan = false;
                    for (uint32_t x = 0; x < k.size() && !scan; ++x)
                        scan = poly->eval(k.elem(x)).is_zero();
                    if (has_root_in_field(*poly) != scan) ok = false;
                }
            }
        };
        std::vector<std::thread> ts;
        for (unsigned t = 0; t < std::max(1u, c.opt.jobs); ++t) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
        c.expect(ok.load(), "root test vs scan, n=" + std::to_string(n));
    }
}

inline void roots_exact(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 7u, 10u}) {
        Field k(n);
        for (int t = 0; t < 20; ++t) {
            std::vector<uint32_t> coeffs(7);
            for (int i = 0; i < 6; ++i) coeffs[i] = rng() % k.size();
            coeffs[6] = 1 + rng() % (k.size() - 1);
            Poly f(k, coeffs);
            std::set<uint32_t> brute;
            for (uint32_t x = 0; x < k.size(); ++x)
                if (f.eval(k.elem(x)).is_zero()) brute.insert(x);
            std::set<uint32_t> got;
            for (auto e : roots_in_field(f)) got.insert(e.bits);
            c.expect(got == brute, "root set mismatch, n=" + std::to_string(n));
        }
    }
}

inline void frobenius_power_fixed_points(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 10u}) {
        Field k(n);
        for (int t = 0; t < 10; ++t) {
            std::vector<uint32_t> roots = {uint32_t(rng() % k.size()),
                                           uint32_t(rng() % k.size())};
            std::vector<uint32_t> tail(3);
            for (auto& v : tail) v = rng() % k.size();
            tail.push_back(1);
            Poly f = Poly::from_roots(k, roots) * Poly(k, tail);
            Poly fr = frobenius_power_mod(f);
            for (uint32_t r : roots)
                c.expect(fr.eval(k.elem(r)) == k.elem(r),
                         "frobenius power not fixing a planted root");
        }
    }
}

inline void resultant_closure_agreement(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {2u, 3u, 4u, 6u, 8u}) {
        Field k(n);
        Field k2(2 * n);
        // embed via discrete logs: x -> G^(dlog(x) * (2^(2n)-1)/(2^n-1))
        const uint64_t s = (k2.size() - 1) / (k.size() - 1);
        auto embed = [&](uint32_t x) -> uint32_t {
            if (x == 0) return 0;
            return k2.pow_raw(k2.gen().bits, uint64_t(k.dlog_raw(x)) * s % (k2.size() - 1));
        };
        // the tower moduli are compatible: embedding is a field homomorphism
        for (int t = 0; t < 30; ++t) {
            uint32_t a = rng() % k.size(), b = rng() % k.size();
            c.expect(embed(a ^ b) == (embed(a) ^ embed(b)),
                     "embedding not additive, n=" + std::to_string(n));
            c.expect(embed(k.mul_raw(a, b)) == k2.mul_raw(embed(a), embed(b)),
                     "embedding not multiplicative, n=" + std::to_string(n));
        }
        for (int t = 0; t < 40; ++t) {
            std::vector<uint32_t> fc = {uint32_t(rng() % k.size()),
                                        uint32_t(rng() % k.size()),
                                        1 + uint32_t(rng() % (k.size() - 1))};
            std::vector<uint32_t> gc = {uint32_t(rng() % k.size()),
                                        uint32_t(rng() % k.size()),
                                        1 + uint32_t(rng() % (k.size() - 1))};
            Poly f(k, fc), g(k, gc);
            bool share = false;
            for (uint32_t x = 0; x < k2.size() && !share; ++x) {
                Element e = k2.elem(x);
                auto ev = [&](const std::vector<uint32_t>& cc) {
                    Element acc = k2.zero();
                    for (size_t i = cc.size(); i-- > 0;)
                        acc = acc * e + k2.elem(embed(cc[i]));
                    return acc;
                };
                share = ev(fc).is_zero() && ev(gc).is_zero();
            }
            c.expect(resultant_quadratics(f, g).is_zero() == share,
                     "resultant vs quadratic-extension scan, n=" + std::to_string(n));
        }
    }
}

// ---- rank-3 classification ----

inline void trace_identities(Ctx& c) {
    for (unsigned n : {4u, 5u, 6u, 7u, 8u}) {
        Field k(n);
        Element one = k.one();
        for (Element b : betas_outside_f4(k)) {
            rank3::Params p = rank3::Params::make(b);
            for (uint32_t ai = 1; ai < k.size(); ++ai) {
                Element a = k.elem(ai);
                if (a.is_one() || a == p.beta / p.alpha || a == p.alpha.inv_q2())
                    continue;
                rank3::BValues v = rank3::b_values(p, a);
                c.expect(p.beta / (p.alpha * a) ==
                             one / (a * v.b1 * p.alpha.sqr()) + one,
                         "pole-1 trace identity");
                c.expect(one / (p.alpha * v.b3) ==
                             one / (a * v.b3 * p.alpha.sqr()) + one,
                         "pole-3 trace identity");
            }
        }
    }
}

inline void resultant_identities(Ctx& c) {
    for (unsigned n = 4; n <= 10; ++n) {
        Field k(n);
        Element one = k.one();
        for (Element b : betas_outside_f4(k)) {
            rank3::Params p = rank3::Params::make(b);
            Element al = p.alpha, cubic = b.sqr() * b + b.sqr() + one;
            Element a4 = al.sqr().sqr(), a8 = a4.sqr();
            auto q12 = rank3::aux_quadratics(p, one, (al * b).inv_q2());
            auto q3 = rank3::aux_quadratics(p, one, b / al.sqr());
            c.expect(resultant_quadratics(q12.h1, q3.h3) == cubic / (a8 * b),
                     "resultant identity (poles 1,2)");
            auto q13 = rank3::aux_quadratics(p, b / al, al.inv_q2());
            auto q2 = rank3::aux_quadratics(p, b / al, (al.sqr() * b).inv_q2());
            c.expect(resultant_quadratics(q13.h1, q2.h2) ==
                         cubic / (a4 * al.sqr() * b.sqr().sqr()),
                     "resultant identity (poles 1,3)");
            auto q23 = rank3::aux_quadratics(p, al.inv_q2(), b.inv_q2());
            auto q1 = rank3::aux_quadratics(p, al.inv_q2(), al.sqr().inv_q2());
            c.expect(resultant_quadratics(q23.h2, q1.h1) == cubic / (a4 * al * b.sqr()),
                     "resultant identity (poles 2,3)");
        }
    }
}

inline void redundant_quartic_equivalence(Ctx& c) {
    for (unsigned n = 4; n <= 10; ++n) {
        Field k(n);
        for (Element b : betas_outside_f4(k)) {
            rank3::Params p = rank3::Params::make(b);
            Element al = p.alpha;
            Element a5 = al.sqr().sqr() * al;
            Poly h23(k, {(b / a5).bits, 0, (al * b).inv_q2().bits, al.inv_q2().bits, 1});
            rank3::ClassifierPolys cp = rank3::build_classifier_polys(p);
            c.expect(has_root_in_field(h23) == has_root_in_field(cp.h12),
                     "redundant quartic disagrees, n=" + std::to_string(n));
        }
    }
}

inline void du8_structure(Ctx& c) {
    Field k(6);
    for (uint32_t b = 2; b < k.size(); ++b) {
        if ((k.mul_raw(k.mul_raw(b, b), b) ^ k.mul_raw(b, b) ^ 1u) != 0) continue;
        rank3::Params p = rank3::Params::make(k.elem(b));
        PermTable g = PermTable::from_chain(p.chain());
        c.expect(du_point(g, p.beta, k.one()) == 8, "du8 point count");
        std::set<uint32_t> lows;
        for (uint32_t x = 0; x < k.size(); ++x)
            if ((g.forward[x] ^ g.forward[x ^ 1u]) == b) lows.insert(std::min(x, x ^ 1u));
        Element eb = p.beta;
        std::set<uint32_t> want = {std::min(eb.sqr().bits, eb.sqr().bits ^ 1u),
                                   std::min((eb.sqr() + eb).bits, (eb.sqr() + eb).bits ^ 1u),
                                   0u, std::min(eb.bits, eb.bits ^ 1u)};
        c.expect(lows == want, "du8 solution pairs");
    }
}

inline void theorem_equivalences(Ctx& c) {
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        Field k(n);
        std::vector<Element> betas = betas_outside_f4(k);
        std::atomic<size_t> next{0};
        std::atomic<bool> ok_du{true}, ok_bu{true};
        // the differential check is exhaustive through n = 10; the boomerang
        // check covers every beta through n = 8 and one representative per
        // frobenius orbit at n = 10
        auto du_worker = [&] {
            for (size_t i = next.fetch_add(1); i < betas.size(); i = next.fetch_add(1)) {
                rank3::Params p = rank3::Params::make(betas[i]);
                PermTable g = PermTable::from_chain(p.chain());
                if (int(rank3::du_classify(p)) != ddt_max(g).max) ok_du = false;
                if (n <= 8 && rank3::bu_is_six(p) != (bct_max(g).max == 6))
                    ok_bu = false;
            }
        };
        std::vector<std::thread> ts;
        for (unsigned t = 0; t < std::max(1u, c.opt.jobs); ++t) ts.emplace_back(du_worker);
        for (auto& t : ts) t.join();
        if (n == 10) {
            auto reps = frobenius_orbit_reps(k);
            std::atomic<size_t> rnext{0};
            auto bu_worker = [&] {
                for (size_t i = rnext.fetch_add(1); i < reps.size();
                     i = rnext.fetch_add(1)) {
                    rank3::Params p = rank3::Params::make(k.elem(reps[i]));
                    PermTable g = PermTable::from_chain(p.chain());
                    if (rank3::bu_is_six(p) != (bct_max(g).max == 6)) ok_bu = false;
                }
            };
            std::vector<std::thread> ts2;
            for (unsigned t = 0; t < std::max(1u, c.opt.jobs); ++t)
                ts2.emplace_back(bu_worker);
            for (auto& t : ts2) t.join();
        }
        c.expect(ok_du.load(), "differential classifier mismatch, n=" + std::to_string(n));
        c.expect(ok_bu.load(), "boomerang classifier mismatch, n=" + std::to_string(n));
    }
}

inline void witness_soundness(Ctx& c) {
    for (unsigned n : {6u, 8u, 10u, 12u}) {
        Field k(n);
        std::vector<Element> betas = betas_outside_f4(k);
        std::atomic<size_t> next{0};
        std::atomic<bool> ok{true};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < betas.size(); i = next.fetch_add(1)) {
                rank3::Params p = rank3::Params::make(betas[i]);
                if (rank3::bu_is_six(p)) continue;
                try {
                    auto w = rank3::bu_witness(p);
                    if (!w || !w->validated) ok = false;
                } catch (const std::exception&) {
                    ok = false;
                }
            }
        };
        std::vector<std::thread> ts;
        for (unsigned t = 0; t < std::max(1u, c.opt.jobs); ++t) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
        c.expect(ok.load(), "witness missing or unvalidated, n=" + std::to_string(n));
    }
}

inline void frobenius_verdict_invariance(Ctx& c) {
    for (unsigned n : {6u, 8u, 10u, 12u}) {
        Field k(n);
        for (uint32_t rep : frobenius_orbit_reps(k)) {
            rank3::Params p = rank3::Params::make(k.elem(rep));
            auto du = rank3::du_classify(p);
            bool six = rank3::bu_is_six(p);
            uint32_t t = k.sqr_raw(rep);
            while (t != rep) {
                rank3::Params pc = rank3::Params::make(k.elem(t));
                if (rank3::du_classify(pc) != du || rank3::bu_is_six(pc) != six) {
                    c.expect(false, "verdict varies along orbit, n=" + std::to_string(n));
                    return;
                }
                t = k.sqr_raw(t);
            }
        }
    }
}

inline void published_counts(Ctx& c) {
    struct Row {
        unsigned n;
        uint64_t bu6, du4bu6;
    };
    std::vector<Row> rows = {{4, 4, 0}, {6, 6, 6}, {8, 16, 8}, {10, 80, 50}, {12, 264, 180}};
    if (c.opt.deep) {
        rows.push_back({14, 1148, 784});
        rows.push_back({16, 3696, 2080});
    }
    for (auto [n, bu6, du4bu6] : rows) {
        Field k(n);
        SweepRow r = sweep(k, c.opt.jobs);
        c.expect(r.count_bu6 == bu6 && r.count_du4_bu6 == du4bu6,
                 "count mismatch at n=" + std::to_string(n));
        SweepRow r1 = sweep(k, 1);
        c.expect(r1.count_bu6 == r.count_bu6 && r1.count_du4_bu6 == r.count_du4_bu6,
                 "parallel sweep differs at n=" + std::to_string(n));
    }
}

inline void orbit_members_agree_with_oracle(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u}) {
        Field k(n);
        auto reps = frobenius_orbit_reps(k);
        for (int t = 0; t < 3; ++t) {
            uint32_t rep = reps[rng() % reps.size()];
            PermTable g0 =
                PermTable::from_chain(rank3::Params::make(k.elem(rep)).chain());
            const int d0 = ddt_max(g0).max, b0 = bct_max(g0).max;
            uint32_t x = k.sqr_raw(rep);
            while (x != rep) {
                PermTable g =
                    PermTable::from_chain(rank3::Params::make(k.elem(x)).chain());
                c.expect(ddt_max(g).max == d0 && bct_max(g).max == b0,
                         "oracle verdict varies along orbit, n=" + std::to_string(n));
                x = k.sqr_raw(x);
            }
        }
    }
}

inline void involution_idempotence(Ctx& c) {
    std::mt19937_64 rng(c.opt.seed);
    for (unsigned n : {4u, 6u, 8u, 10u}) {
        Field k(n);
        for (int t = 0; t < 5; ++t) {
            Element b = k.elem(1 + rng() % (k.size() - 1));
            Element gm = k.elem(rng() % k.size());
            auto tab = make_involution(b, gm).as_table();
            bool ok = true;
            for (uint32_t x = 0; x < k.size(); ++x) ok &= tab[tab[x]] == x;
            c.expect(ok, "involution not self-inverse, n=" + std::to_string(n));
        }
    }
    // the involution shares the boomerang uniformity of [0,1,beta,x]
    Field k6(6);
    for (Element b : betas_outside_f4(k6)) {
        PermTable iv = PermTable::from_chain(make_involution(b, k6.zero()));
        PermTable g = PermTable::from_chain(rank3::Params::make(b).chain());
        c.expect(bct_max(iv).max == bct_max(g).max, "involution boomerang differs");
        c.expect(ddt_max(iv).max == ddt_max(g).max, "involution differential differs");
    }
}

}  // namespace detail

/// Every named invariant suite; one result per suite.
inline std::vector<CheckResult> run(const Options& opt = {}) {
    using Fn = std::function<void(detail::Ctx&)>;
    const std::vector<std::pair<std::string, Fn>> checks = {
        {"field-axioms", detail::field_axioms},
        {"frobenius-fixes-field", detail::frobenius_fixes_field},
        {"trace-properties", detail::trace_properties},
        {"artin-schreier-exact", detail::artin_schreier_exact},
        {"bracket-reversal", detail::bracket_reversal},
        {"convergent-identities", detail::convergent_identities},
        {"rational-form-identities", detail::rational_form_identities},
        {"minimal-representative-correspondence",
         detail::minimal_representative_correspondence},
        {"palindromic-involutions", detail::palindromic_involutions},
        {"affine-invariance-of-maxima", detail::affine_invariance_of_maxima},
        {"apn-bound", detail::apn_bound},
        {"swapped-definition-equivalence", detail::swapped_definition_equivalence},
        {"delta-bounds-boomerang", detail::delta_bounds_boomerang},
        {"ddt-row-sums", detail::ddt_row_sums},
        {"solution-class-criterion", detail::solution_class_criterion},
        {"classifier-root-agreement", detail::classifier_root_agreement},
        {"roots-exact", detail::roots_exact},
        {"frobenius-power-fixed-points", detail::frobenius_power_fixed_points},
        {"resultant-closure-agreement", detail::resultant_closure_agreement},
        {"trace-identities", detail::trace_identities},
        {"resultant-identities", detail::resultant_identities},
        {"redundant-quartic-equivalence", detail::redundant_quartic_equivalence},
        {"du8-structure", detail::du8_structure},
        {"theorem-equivalences", detail::theorem_equivalences},
        {"witness-soundness", detail::witness_soundness},
        {"frobenius-verdict-invariance", detail::frobenius_verdict_invariance},
        {"published-counts", detail::published_counts},
        {"orbit-oracle-spotcheck", detail::orbit_members_agree_with_oracle},
        {"involution-idempotence", detail::involution_idempotence},
    };
    std::vector<CheckResult> out;
    for (auto& [name, fn] : checks) {
        detail::Ctx ctx{opt, {}};
        try {
            fn(ctx);
        } catch (const std::exception& e) {
            ctx.expect(false, std::string("exception: ") + e.what());
        }
        out.push_back({name, ctx.fail.empty(), ctx.fail});
    }
    return out;
}

}  // namespace carlitz::selftest

#endif
