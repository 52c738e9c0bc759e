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

#ifndef CARLITZ_SWEEP_HPP
#define CARLITZ_SWEEP_HPP

#include <atomic>
#include <cstdio>

#include "carlitz/rank3.hpp"

namespace carlitz {

/// One representative per Frobenius orbit {beta^(2^i)} of the field minus
/// F_4, ascending. Conjugate beta share all uniformity verdicts, so scanning
/// representatives suffices.
inline std::vector<uint32_t> frobenius_orbit_reps(const Field& k) {
    std::vector<bool> visited(k.size(), false);
    std::vector<uint32_t> reps;
    for (uint32_t b = 2; b < k.size(); ++b) {
        if (visited[b] || k.in_f4_raw(b)) continue;
        reps.push_back(b);  // ascending scan: first unvisited member is minimal
        uint32_t t = b;
        do {
            visited[t] = true;
            t = k.sqr_raw(t);
        } while (t != b);
    }
    return reps;
}

inline unsigned frobenius_orbit_size(const Field& k, uint32_t beta) {
    unsigned n = 0;
    uint32_t t = beta;
    do {
        ++n;
        t = k.sqr_raw(t);
    } while (t != beta);
    return n;
}

/// Per-degree tally of optimal permutations in the rank-3 family.
struct SweepRow {
    unsigned n = 0;
    uint64_t count_bu6 = 0;      // beta outside F_4 with boomerang uniformity 6
    uint64_t count_du4_bu6 = 0;  // of those, differential uniformity 4
    uint64_t orbits_scanned = 0;
    double elapsed_ms = 0;
};

/// Classify one representative per Frobenius orbit and weight the counts by
/// orbit size. Deterministic: counts are plain sums over the ascending
/// representative order, independent of the worker count.
inline SweepRow sweep(const Field& k, unsigned jobs = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<uint32_t> reps = frobenius_orbit_reps(k);
    SweepRow row;
    row.n = k.degree();
    row.orbits_scanned = reps.size();

    std::vector<uint8_t> bu6(reps.size(), 0), du4(reps.size(), 0);
    std::vector<uint32_t> osize(reps.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < reps.size(); i = next.fetch_add(1)) {
            rank3::Params p = rank3::Params::make(k.elem(reps[i]));
            bu6[i] = rank3::bu_is_six(p);
            if (bu6[i]) du4[i] = rank3::du_classify(p) == rank3::DuClass::four;
            osize[i] = frobenius_orbit_size(k, reps[i]);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (unsigned t = 0; t < jobs; ++t) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }
    for (size_t i = 0; i < reps.size(); ++i) {
        if (bu6[i]) row.count_bu6 += osize[i];
        if (bu6[i] && du4[i]) row.count_du4_bu6 += osize[i];
    }
    row.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return row;
}

inline std::string sweep_csv_header() { return "n,count_bu6,count_du4_bu6,orbits,elapsed_ms"; }

inline std::string sweep_csv_row(const SweepRow& r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%u,%llu,%llu,%llu,%.3f", r.n,
                  (unsigned long long)r.count_bu6, (unsigned long long)r.count_du4_bu6,
                  (unsigned long long)r.orbits_scanned, r.elapsed_ms);
    return buf;
}

}  // namespace carlitz

#endif
