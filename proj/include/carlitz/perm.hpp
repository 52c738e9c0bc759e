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

#ifndef CARLITZ_PERM_HPP
#define CARLITZ_PERM_HPP

#include <chrono>
#include <functional>
#include <thread>

#include "carlitz/chain.hpp"

namespace carlitz {

/// A realized permutation of GF(2^n) with its inverse table.
struct PermTable {
    const Field* field = nullptr;
    std::vector<uint32_t> forward, inverse;

    static PermTable from_table(const Field& k, std::vector<uint32_t> fwd) {
        PermTable p;
        p.field = &k;
        p.inverse.assign(fwd.size(), 0);
        std::vector<bool> seen(fwd.size(), false);
        if (fwd.size() != k.size()) throw std::invalid_argument("table size mismatch");
        for (uint32_t x = 0; x < fwd.size(); ++x) {
            uint32_t y = fwd[x];
            if (y >= fwd.size() || seen[y]) throw std::invalid_argument("not a bijection");
            seen[y] = true;
            p.inverse[y] = x;
        }
        p.forward = std::move(fwd);
        return p;
    }

    static PermTable from_chain(const Chain& ch, unsigned degree_guard = 20) {
        return from_table(*ch.field, ch.as_table(degree_guard));
    }

    uint32_t operator()(uint32_t x) const { return forward[x]; }
    size_t size() const { return forward.size(); }

    PermTable inverted() const {
        PermTable p;
        p.field = field;
        p.forward = inverse;
        p.inverse = forward;
        return p;
    }

    PermTable then(const PermTable& outer) const {
        std::vector<uint32_t> t(size());
        for (uint32_t x = 0; x < size(); ++x) t[x] = outer.forward[forward[x]];
        return from_table(*field, std::move(t));
    }

    bool is_identity() const {
        for (uint32_t x = 0; x < size(); ++x)
            if (forward[x] != x) return false;
        return true;
    }
};

struct OracleResult {
    int max = 0;
    Element a, b;  // witness attaining the maximum
};

struct UniformityReport {
    int delta = 0;
    int boomerang = 0;
    std::optional<std::pair<Element, Element>> du_witness, bu_witness;
    enum class Method { oracle, closed_form } method = Method::oracle;
    double elapsed_ms = 0;
};

OracleResult ddt_max(const PermTable&, unsigned, unsigned);
OracleResult bct_max(const PermTable&, unsigned, unsigned);

/// Both oracle maxima with witnesses and timing. Enforces the structural
/// facts delta <= boomerang and evenness as internal consistency guards.
inline UniformityReport brute_report(const PermTable& p, unsigned degree_guard = 14,
                                     unsigned jobs = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    UniformityReport r;
    OracleResult d = ddt_max(p, degree_guard, jobs);
    OracleResult bc = bct_max(p, degree_guard, jobs);
    r.delta = d.max;
    r.boomerang = bc.max;
    r.du_witness = {{d.a, d.b}};
    r.bu_witness = {{bc.a, bc.b}};
    r.method = UniformityReport::Method::oracle;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (r.delta > r.boomerang || r.delta % 2 || r.boomerang % 2 || r.delta < 2)
        throw std::logic_error("oracle results violate structural bounds");
    return r;
}

namespace detail {

inline void parallel_chunks(uint32_t lo, uint32_t hi, unsigned jobs,
                            const std::function<void(uint32_t, uint32_t, unsigned)>& body) {
    if (jobs <= 1 || hi - lo < 2 * jobs) {
        body(lo, hi, 0);
        return;
    }
    std::vector<std::thread> ts;
    const uint32_t step = (hi - lo + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        uint32_t b = lo + t * step, e = std::min(hi, b + step);
        if (b >= e) break;
        ts.emplace_back(body, b, e, t);
    }
    for (auto& th : ts) th.join();
}

struct Best {
    uint64_t count = 0;
    uint32_t a = 0, b = 0;
    // higher count wins; ties resolve to the lexicographically least witness
    bool better_than(const Best& o) const {
        if (count != o.count) return count > o.count;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    void offer(uint64_t c, uint32_t aa, uint32_t bb) {
        Best cand{c, aa, bb};
        if (cand.better_than(*this)) *this = cand;
    }
};

}  // namespace detail

/// Differential uniformity: max_{a!=0,b} #{x : F(x) + F(x+a) = b}, with a
/// witness. O(2^(2n)) and refused above the degree guard.
inline OracleResult ddt_max(const PermTable& p, unsigned degree_guard = 14,
                            unsigned jobs = 1) {
    const Field& k = *p.field;
    if (k.degree() > degree_guard)
        throw std::invalid_argument("ddt oracle refused for n > guard");
    const uint32_t q = uint32_t(p.size());
    std::vector<detail::Best> best(jobs ? jobs : 1);
    detail::parallel_chunks(1, q, jobs, [&](uint32_t lo, uint32_t hi, unsigned tid) {
        std::vector<uint32_t> cnt(q, 0), stamp(q, 0xffffffffu);
        detail::Best mine;
        for (uint32_t a = lo; a < hi; ++a) {
            for (uint32_t x = 0; x < q; ++x) {
                const uint32_t b = p.forward[x] ^ p.forward[x ^ a];
                if (stamp[b] != a) {
                    stamp[b] = a;
                    cnt[b] = 0;
                }
                mine.offer(++cnt[b], a, b);
            }
        }
        best[tid] = mine;
    });
    detail::Best all;
    for (auto& b : best)
        if (b.better_than(all)) all = b;
    return {int(all.count), k.elem(all.a), k.elem(all.b)};
}

/// Number of ordered pairs (x, y) with G(x)+G(y) = a and x+y = b.
inline int du_point(const PermTable& g, Element a, Element b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("a, b must be nonzero");
    int c = 0;
    for (uint32_t x = 0; x < g.size(); ++x)
        c += (g.forward[x] ^ g.forward[x ^ b.bits]) == a.bits;
    return c;
}

/// Number of ordered pairs (x, y) with G(x)+G(y) = a = G(x+c)+G(y+c).
inline int bu_point(const PermTable& g, Element a, Element c) {
    if (a.is_zero() || c.is_zero()) throw std::invalid_argument("a, c must be nonzero");
    int n = 0;
    for (uint32_t x = 0; x < g.size(); ++x) {
        const uint32_t y = g.inverse[g.forward[x] ^ a.bits];
        n += (g.forward[x ^ c.bits] ^ g.forward[y ^ c.bits]) == a.bits;
    }
    return n;
}

/// Boomerang uniformity with witness. Runs the swapped formulation on the
/// inverse permutation: for each c, solutions x of G(x)+G(x+c) = key are
/// bucketed, and every ordered pair inside one bucket solves the system for
/// a = G(x)+G(y). O(2^(2n)) for permutations of bounded differential
/// uniformity.
inline OracleResult bct_max(const PermTable& p, unsigned degree_guard = 14,
                            unsigned jobs = 1) {
    const Field& k = *p.field;
    if (k.degree() > degree_guard)
        throw std::invalid_argument("bct oracle refused for n > guard");
    const uint32_t q = uint32_t(p.size());
    const std::vector<uint32_t>& G = p.inverse;
    std::vector<detail::Best> best(jobs ? jobs : 1);
    detail::parallel_chunks(1, q, jobs, [&](uint32_t lo, uint32_t hi, unsigned tid) {
        std::vector<uint32_t> key(q), head(q), tail(q), nxt(q);
        std::vector<uint32_t> bstamp(q, 0xffffffffu), cnt(q), cstamp(q, 0xffffffffu);
        detail::Best mine;
        for (uint32_t c = lo; c < hi; ++c) {
            for (uint32_t x = 0; x < q; ++x) {
                const uint32_t kk = G[x] ^ G[x ^ c];
                key[x] = kk;
                if (bstamp[kk] != c) {
                    bstamp[kk] = c;
                    head[kk] = tail[kk] = x;
                    nxt[x] = q;
                } else {
                    nxt[tail[kk]] = x;
                    tail[kk] = x;
                    nxt[x] = q;
                }
            }
            for (uint32_t x = 0; x < q; ++x) {
                const uint32_t kk = key[x];
                if (head[kk] != x) continue;  // visit each bucket once
                for (uint32_t u = x; u != q; u = nxt[u])
                    for (uint32_t v = x; v != q; v = nxt[v]) {
                        if (u == v) continue;
                        const uint32_t a = G[u] ^ G[v];
                        if (cstamp[a] != c) {
                            cstamp[a] = c;
                            cnt[a] = 0;
                        }
                        mine.offer(++cnt[a], a, c);
                    }
            }
        }
        best[tid] = mine;
    });
    detail::Best all;
    for (auto& b : best)
        if (b.better_than(all)) all = b;
    return {int(all.count), k.elem(all.a), k.elem(all.b)};
}

/// The quadruple-loop definition, for cross-checking the fast pass.
inline OracleResult bct_max_literal(const PermTable& p, unsigned degree_guard = 8) {
    const Field& k = *p.field;
    if (k.degree() > degree_guard)
        throw std::invalid_argument("literal bct oracle refused for n > guard");
    const uint32_t q = uint32_t(p.size());
    detail::Best all;
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 1; b < q; ++b) {
            uint64_t c = 0;
            for (uint32_t x = 0; x < q; ++x)
                c += (p.inverse[p.forward[x] ^ b] ^ p.inverse[p.forward[x ^ a] ^ b]) == a;
            all.offer(c, a, b);
        }
    return {int(all.count), k.elem(all.a), k.elem(all.b)};
}

struct SolutionClassCounts {
    int both_poles = 0;     // class A
    int one_pole = 0;       // class B
    int no_pole = 0;        // class C
    int total() const { return both_poles + one_pole + no_pole; }
};

/// Partition the ordered solutions of G(x)+G(y)=a, x+y=b by how many of the
/// two coordinates lie in the pole set.
inline SolutionClassCounts classify_solutions(const PermTable& g,
                                              const std::vector<Element>& poles,
                                              Element a, Element b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("a, b must be nonzero");
    uint64_t mask_small = 0;
    std::vector<bool> big;
    const bool use_small = g.size() <= 64;
    if (use_small)
        for (auto p : poles) mask_small |= uint64_t(1) << p.bits;
    else {
        big.assign(g.size(), false);
        for (auto p : poles) big[p.bits] = true;
    }
    auto is_pole = [&](uint32_t x) {
        return use_small ? (mask_small >> x & 1) != 0 : bool(big[x]);
    };
    SolutionClassCounts out;
    for (uint32_t x = 0; x < g.size(); ++x) {
        if ((g.forward[x] ^ g.forward[x ^ b.bits]) != a.bits) continue;
        const int inp = int(is_pole(x)) + int(is_pole(x ^ b.bits));
        if (inp == 2) ++out.both_poles;
        else if (inp == 1) ++out.one_pole;
        else ++out.no_pole;
    }
    return out;
}

/// The full difference distribution table, ddt[a][b].
inline std::vector<std::vector<uint32_t>> ddt_table(const PermTable& p,
                                                    unsigned degree_guard = 12) {
    if (p.field->degree() > degree_guard)
        throw std::invalid_argument("full ddt refused for n > guard");
    const uint32_t q = uint32_t(p.size());
    std::vector<std::vector<uint32_t>> t(q, std::vector<uint32_t>(q, 0));
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t x = 0; x < q; ++x) ++t[a][p.forward[x] ^ p.forward[x ^ a]];
    return t;
}

/// The full boomerang connectivity table, bct[a][b]; rows and columns at 0
/// hold the trivial value 2^n.
inline std::vector<std::vector<uint32_t>> bct_table(const PermTable& p,
                                                    unsigned degree_guard = 10) {
    if (p.field->degree() > degree_guard)
        throw std::invalid_argument("full bct refused for n > guard");
    const uint32_t q = uint32_t(p.size());
    const std::vector<uint32_t>& G = p.inverse;
    std::vector<std::vector<uint32_t>> t(q, std::vector<uint32_t>(q, 0));
    for (uint32_t i = 0; i < q; ++i) t[0][i] = t[i][0] = q;
    std::vector<uint32_t> key(q), head(q), tail(q), nxt(q), bstamp(q, 0xffffffffu);
    for (uint32_t c = 1; c < q; ++c) {
        for (uint32_t x = 0; x < q; ++x) {
            const uint32_t kk = G[x] ^ G[x ^ c];
            key[x] = kk;
            if (bstamp[kk] != c) {
                bstamp[kk] = c;
                head[kk] = tail[kk] = x;
                nxt[x] = q;
            } else {
                nxt[tail[kk]] = x;
                tail[kk] = x;
                nxt[x] = q;
            }
        }
        for (uint32_t x = 0; x < q; ++x) {
            if (head[key[x]] != x) continue;
            for (uint32_t u = x; u != q; u = nxt[u])
                for (uint32_t v = x; v != q; v = nxt[v])
                    if (u != v) ++t[G[u] ^ G[v]][c];
        }
    }
    return t;
}

/// Maximum weight of an exponent with a nonzero coefficient in the algebraic
/// normal form, over all output bits.
inline int algebraic_degree(const PermTable& p) {
    const uint32_t q = uint32_t(p.size());
    const unsigned n = p.field->degree();
    int deg = 0;
    std::vector<uint8_t> f(q);
    for (unsigned bit = 0; bit < n; ++bit) {
        for (uint32_t x = 0; x < q; ++x) f[x] = (p.forward[x] >> bit) & 1;
        for (unsigned i = 0; i < n; ++i)
            for (uint32_t x = 0; x < q; ++x)
                if (x >> i & 1) f[x] ^= f[x ^ (uint32_t(1) << i)];
        for (uint32_t x = 0; x < q; ++x)
            if (f[x]) deg = std::max(deg, std::popcount(x));
    }
    return deg;
}

}  // namespace carlitz

#endif
