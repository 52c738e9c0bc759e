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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "carlitz/carlitz.hpp"

using json = nlohmann::json;
using namespace carlitz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct GlobalOpts {
    unsigned n = 8;
    std::string modulus;  // hex, MSB = degree-n term; empty = Conway
    unsigned jobs = 1;
    std::string format = "json";
    std::string out;
};

Field make_field(const GlobalOpts& g) {
    if (g.modulus.empty()) return Field(g.n);
    return Field(g.n, parse_hex_bits(g.modulus));
}

/// Elements are hex bit values; "g^k" (k decimal) addresses the generator
/// power directly.
Element parse_element_arg(const Field& k, const std::string& s) {
    if (s.size() > 2 && s[0] == 'g' && s[1] == '^')
        return k.gen().pow(std::stoull(s.substr(2)) % k.group_order());
    return parse_element(k, s);
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << text << "\n";
}

json element_json(Element e) { return to_hex(e); }

json witness_json(const rank3::BuWitness& w) {
    return {{"a", to_hex(w.a)},
            {"c", to_hex(w.c)},
            {"validated", w.validated},
            {"source", w.source}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

/// Closed-form verdict plus optional oracle cross-check; shared by the
/// analyze and involution commands. Sets *disagree when the oracle and the
/// closed form differ.
json verdict_json(const Field& k, Element beta, bool want_witness, bool want_oracle,
                  unsigned oracle_guard, unsigned jobs, bool* disagree) {
    json j;
    j["n"] = k.degree();
    j["beta"] = to_hex(beta);
    if (k.degree() <= 24 && !beta.is_zero()) j["beta_power"] = to_power_form(beta);

    if (beta.is_zero() || beta.is_one()) {
        j["status"] = "degenerate";
        if (beta.is_one()) {
            // [0,1,1,x] is x+1 away from {0,1}: both tables are flat
            j["delta"] = uint64_t(k.size());
            j["boomerang"] = uint64_t(k.size());
            j["note"] = "beta = 1: the chain adds 1 everywhere except {0,1}; "
                        "differential and boomerang uniformity are 2^n";
        } else {
            j["note"] = "beta = 0 leaves the rank-3 family: [0,1,0,x] collapses to "
                        "(x+1)^(2^n-2), affine equivalent to the inverse function";
        }
        return j;
    }

    if (is_in_f4(beta)) {
        j["status"] = "f4-oracle";
        j["note"] = "beta lies in F_4: the closed-form classifier does not apply";
        if (k.degree() > oracle_guard)
            throw std::invalid_argument(
                "beta in F_4 needs the oracle, refused for n > " +
                std::to_string(oracle_guard));
        PermTable g = PermTable::from_chain(rank3::Params::make(beta).chain());
        OracleResult d = ddt_max(g, oracle_guard, jobs);
        OracleResult bc = bct_max(g, oracle_guard, jobs);
        j["method"] = "oracle";
        j["delta"] = d.max;
        j["boomerang"] = bc.max;
        return j;
    }

    rank3::Params p = rank3::Params::make(beta);
    j["status"] = "ok";
    j["method"] = "closed_form";
    j["du"] = int(rank3::du_classify(p));
    j["bu_is_six"] = rank3::bu_is_six(p);
    j["triggered"] = rank3::triggered_polys(p);
    if (want_witness && !rank3::bu_is_six(p)) {
        auto w = rank3::bu_witness(p, oracle_guard);
        if (w) j["witness"] = witness_json(*w);
    }
    if (want_oracle) {
        PermTable g = PermTable::from_chain(p.chain());
        OracleResult d = ddt_max(g, oracle_guard, jobs);
        OracleResult bc = bct_max(g, oracle_guard, jobs);
        const bool agree =
            d.max == j["du"].get<int>() && (bc.max == 6) == j["bu_is_six"].get<bool>();
        j["oracle"] = {{"delta", d.max}, {"boomerang", bc.max}, {"agreement", agree}};
        if (!agree && disagree) *disagree = true;
    }
    return j;
}

void write_matrix_csv(const std::string& path,
                      const std::vector<std::vector<uint32_t>>& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    for (const auto& row : m) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) f << ',';
            f << row[i];
        }
        f << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Carlitz-form permutations of GF(2^n): construction, exhaustive "
                 "differential/boomerang oracles, and closed-form rank-3 classifiers"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--n", g.n, "field degree (2..24)");
    app.add_option("--modulus", g.modulus,
                   "irreducible modulus as hex bits, MSB = degree-n term "
                   "(default: Conway polynomial)");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 64u));
    app.add_option("--format", g.format, "output format for sweep")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "write output to this path instead of stdout");

    // analyze
    std::string beta_hex;
    bool with_oracle = false, with_witness = false;
    unsigned oracle_guard = 14;
    auto* analyze = app.add_subcommand(
        "analyze", "closed-form uniformity verdict for G = [0,1,beta,x]");
    analyze->add_option("--beta", beta_hex, "beta as hex bits or g^k")->required();
    analyze->add_flag("--oracle", with_oracle,
                      "also run the brute-force oracles and report agreement");
    analyze->add_flag("--witness", with_witness,
                      "construct an (a,c) certifying boomerang count >= 8");
    bool with_polys = false;
    analyze->add_flag("--polys", with_polys,
                      "include the classifier polynomials (hex coefficients, "
                      "lowest degree first)");
    analyze->add_option("--oracle-guard", oracle_guard,
                        "largest n the exhaustive oracles accept");

    // brute
    std::string chain_text;
    bool full_tables = false;
    unsigned table_guard = 20;
    auto* brute = app.add_subcommand(
        "brute", "exhaustive differential/boomerang analysis of a chain");
    brute->add_option("--chain", chain_text,
                      "chain as \"a_{m+1},...,a_2,a1+a0*x\" (bare x means a1=0, a0=1)")
        ->required();
    brute->add_flag("--full-tables", full_tables,
                    "dump the full tables as <out>.ddt.csv and <out>.bct.csv");
    brute->add_option("--oracle-guard", oracle_guard,
                      "largest n the exhaustive oracles accept");
    brute->add_option("--table-guard", table_guard,
                      "largest n for which lookup tables are realized");

    // sweep
    bool deep = false;
    auto* sweepcmd = app.add_subcommand(
        "sweep", "classify one representative per frobenius orbit and tally "
                 "optimal beta");

    // involution
    std::string gamma_hex = "0";
    auto* invol = app.add_subcommand(
        "involution", "build the involution [gamma,beta,beta,gamma+x] and report "
                      "its verdict");
    invol->add_option("--beta", beta_hex, "beta as hex bits (nonzero)")->required();
    invol->add_option("--gamma", gamma_hex, "gamma as hex bits (default 0)");
    invol->add_flag("--oracle", with_oracle,
                    "also run the oracles on the involution table");
    invol->add_option("--oracle-guard", oracle_guard,
                      "largest n the exhaustive oracles accept");
    invol->add_option("--table-guard", table_guard,
                      "largest n for which lookup tables are realized");

    // selftest
    uint64_t seed = 0xC0FFEE;
    auto* selftestcmd =
        app.add_subcommand("selftest", "run the library's invariant suites");
    selftestcmd->add_flag("--deep", deep,
                          "extend the published-count check to n = 14, 16");
    selftestcmd->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) {
            const auto t0 = std::chrono::steady_clock::now();
            Field k = make_field(g);
            Element beta = parse_element_arg(k, beta_hex);
            bool disagree = false;
            json j = verdict_json(k, beta, with_witness, with_oracle, oracle_guard,
                                  g.jobs, &disagree);
            if (with_polys && !beta.is_zero() && !beta.is_one() && !is_in_f4(beta)) {
                rank3::ClassifierPolys cp =
                    rank3::build_classifier_polys(rank3::Params::make(beta));
                json polys;
                for (auto [name, poly] : cp.named()) polys[name] = poly_to_string(*poly);
                j["classifier_polys"] = polys;
            }
            j["elapsed_ms"] = ms_since(t0);
            emit(g, j.dump(2));
            return disagree ? kExitDisagreement : kExitOk;
        }

        if (*brute) {
            const auto t0 = std::chrono::steady_clock::now();
            Field k = make_field(g);
            Chain ch = chain_from_string(k, chain_text);
            PermTable p = PermTable::from_chain(ch, table_guard);
            UniformityReport r = brute_report(p, oracle_guard, g.jobs);
            json j;
            j["n"] = k.degree();
            j["chain"] = chain_to_string(ch);
            j["delta"] = r.delta;
            j["du_witness"] = {element_json(r.du_witness->first),
                               element_json(r.du_witness->second)};
            j["boomerang"] = r.boomerang;
            j["bu_witness"] = {element_json(r.bu_witness->first),
                               element_json(r.bu_witness->second)};
            j["algebraic_degree"] = algebraic_degree(p);
            j["elapsed_ms"] = ms_since(t0);
            if (full_tables) {
                if (g.out.empty())
                    throw std::invalid_argument("--full-tables needs --out <prefix>");
                write_matrix_csv(g.out + ".ddt.csv", ddt_table(p));
                write_matrix_csv(g.out + ".bct.csv", bct_table(p));
                std::cout << j.dump(2) << "\n";
            } else {
                emit(g, j.dump(2));
            }
            return kExitOk;
        }

        if (*sweepcmd) {
            Field k = make_field(g);
            SweepRow r = sweep(k, g.jobs);
            if (g.n % 2 == 1)
                std::cerr << "note: odd degree, no reference counts exist\n";
            if (g.format == "csv") {
                emit(g, sweep_csv_header() + "\n" + sweep_csv_row(r));
            } else {
                json j{{"n", r.n},
                       {"count_bu6", r.count_bu6},
                       {"count_du4_bu6", r.count_du4_bu6},
                       {"orbits", r.orbits_scanned},
                       {"elapsed_ms", r.elapsed_ms}};
                if (g.n % 2 == 1) j["note"] = "odd degree, no reference counts";
                emit(g, j.dump(2));
            }
            return kExitOk;
        }

        if (*invol) {
            const auto t0 = std::chrono::steady_clock::now();
            Field k = make_field(g);
            Element beta = parse_element_arg(k, beta_hex);
            Element gamma = parse_element_arg(k, gamma_hex);
            Chain ch = make_involution(beta, gamma);
            json j;
            j["n"] = k.degree();
            j["chain"] = chain_to_string(ch);
            if (k.degree() <= table_guard) {
                auto tab = ch.as_table(table_guard);
                bool ok = true;
                for (uint32_t x = 0; x < k.size(); ++x) ok &= tab[tab[x]] == x;
                if (!ok) throw std::logic_error("palindromic chain not an involution");
                j["involution_verified"] = true;
            } else {
                j["involution_verified"] = "skipped";
            }
            bool disagree = false;
            j["verdict"] = verdict_json(k, beta, with_witness, false, oracle_guard,
                                        g.jobs, nullptr);
            if (with_oracle) {
                PermTable p = PermTable::from_chain(ch, table_guard);
                OracleResult d = ddt_max(p, oracle_guard, g.jobs);
                OracleResult bc = bct_max(p, oracle_guard, g.jobs);
                j["oracle"] = {{"delta", d.max}, {"boomerang", bc.max}};
                const json& v = j["verdict"];
                if (v.contains("du")) {
                    const bool agree = d.max == v["du"].get<int>() &&
                                       (bc.max == 6) == v["bu_is_six"].get<bool>();
                    j["oracle"]["agreement"] = agree;
                    disagree = !agree;
                }
            }
            j["elapsed_ms"] = ms_since(t0);
            emit(g, j.dump(2));
            return disagree ? kExitDisagreement : kExitOk;
        }

        if (*selftestcmd) {
            selftest::Options opt;
            opt.seed = seed;
            opt.jobs = g.jobs;
            opt.deep = deep;
            auto results = selftest::run(opt);
            size_t failed = 0;
            std::string out;
            for (const auto& r : results) {
                out += (r.passed ? "ok   " : "FAIL ") + r.name;
                if (!r.passed) out += ": " + r.detail;
                out += "\n";
                failed += !r.passed;
            }
            out += failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                               : std::to_string(failed) + " suite(s) FAILED";
            emit(g, out);
            return failed == 0 ? kExitOk : kExitDisagreement;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
