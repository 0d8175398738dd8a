// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/bench.hpp"
#include "psp/balance.hpp"
#include "psp/cycles.hpp"
#include "psp/rng.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

namespace psp {

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

uint64_t trial_seed(uint64_t base, int32_t n, int64_t m, int32_t trial) {
    uint64_t h = splitmix64(base);
    h = splitmix64(h ^ static_cast<uint64_t>(n));
    h = splitmix64(h ^ static_cast<uint64_t>(m));
    h = splitmix64(h ^ static_cast<uint64_t>(trial));
    return h;
}

} // namespace

Graph random_sc_graph(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi, uint64_t seed) {
    if (n < 1)
        fail(errc::invalid_argument, "need at least one vertex");
    if (n > 1 && m < n)
        fail(errc::invalid_argument, "strong connectivity needs m >= n");
    if (n == 1 && m != 0)
        fail(errc::invalid_argument, "single vertex admits no arcs");
    std::mt19937_64 gen(seed);
    Graph g;
    g.n = n;
    if (n == 1)
        return g;

    // random permutation cycle covers every vertex
    std::vector<int32_t> perm(n);
    for (int32_t i = 0; i < n; ++i)
        perm[i] = i;
    for (int32_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[draw_below(gen, static_cast<uint64_t>(i) + 1)]);
    for (int32_t i = 0; i < n; ++i) {
        Arc a;
        a.tail = perm[i];
        a.head = perm[(i + 1) % n];
        a.cost = draw_range(gen, cost_lo, cost_hi);
        g.arcs.push_back(a);
    }
    // extra arcs; parallels allowed, self-loops not
    for (int64_t i = n; i < m; ++i) {
        Arc a;
        a.tail = static_cast<int32_t>(draw_below(gen, static_cast<uint64_t>(n)));
        a.head = static_cast<int32_t>(draw_below(gen, static_cast<uint64_t>(n) - 1));
        if (a.head >= a.tail)
            ++a.head;
        a.cost = draw_range(gen, cost_lo, cost_hi);
        g.arcs.push_back(a);
    }
    return g;
}

std::vector<TrialRecord> run_trials(const BenchConfig& cfg) {
    std::vector<TrialRecord> out;
    for (const auto& [n, m] : cfg.points) {
        int32_t trials = cfg.trials > 0 ? cfg.trials : std::max(n / 2, 50);
        for (int32_t t = 0; t < trials; ++t) {
            uint64_t seed = trial_seed(cfg.seed, n, m, t);
            TrialRecord rec;
            rec.n = n;
            rec.m = m;
            rec.seed = seed;
            rec.trial = t;
            if (cfg.mode == BenchMode::mmc) {
                Graph g = random_graph(n, m, cfg.cost_lo, cfg.cost_hi, seed);
                rec.max_degree = max_degree(g);
                int64_t t0 = now_ns();
                MmcRun par = min_mean_cycle_parametric_run(g);
                int64_t t1 = now_ns();
                auto karp = min_mean_cycle_karp(g);
                int64_t t2 = now_ns();
                bool agree = par.result.has_value() == karp.has_value() &&
                             (!karp || par.result->mean == *karp);
                if (!agree)
                    fail(errc::invalid_argument, "internal: solver disagreement in bench");
                rec.path_changes = par.path_changes;
                rec.pivots = par.pivots;
                rec.time_parametric_ns = t1 - t0;
                rec.time_karp_ns = t2 - t1;
            } else {
                Graph g = random_sc_graph(n, m, cfg.cost_lo, cfg.cost_hi, seed);
                rec.max_degree = max_degree(g);
                int64_t t0 = now_ns();
                BalanceResult r = min_balance(g);
                int64_t t1 = now_ns();
                rec.path_changes = r.path_changes;
                rec.pivots = r.pivots;
                rec.contractions = r.contraction_count;
                rec.time_parametric_ns = t1 - t0;
            }
            out.push_back(rec);
        }
    }
    return out;
}

double degree_check(int32_t n, int64_t m, int32_t samples, uint64_t seed) {
    if (samples < 1)
        fail(errc::invalid_argument, "need at least one sample");
    double bound = 8.0 * static_cast<double>(m) / n + 2.0 * std::log2(static_cast<double>(n));
    int32_t violations = 0;
    for (int32_t i = 0; i < samples; ++i) {
        Graph g = random_graph(n, m, 1, 1000000, trial_seed(seed, n, m, i));
        if (static_cast<double>(max_degree(g)) > bound)
            ++violations;
    }
    return static_cast<double>(violations) / samples;
}

namespace {

std::string cell(int64_t v) { return v < 0 ? std::string() : std::to_string(v); }

} // namespace

std::string emit_csv(const std::vector<TrialRecord>& records) {
    std::string out = "n,m,seed,trial,path_changes,max_degree,pivots,contractions,"
                      "time_parametric_ns,time_karp_ns\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.seed) +
               "," + std::to_string(r.trial) + "," + std::to_string(r.path_changes) + "," +
               std::to_string(r.max_degree) + "," + std::to_string(r.pivots) + "," +
               cell(r.contractions) + "," + cell(r.time_parametric_ns) + "," +
               cell(r.time_karp_ns) + "\n";
    }
    return out;
}

std::vector<TrialRecord> parse_trials_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "n,m,seed,trial,path_changes,max_degree,pivots,contractions,time_parametric_ns,"
                "time_karp_ns")
        fail(errc::parse, "bad csv header");
    std::vector<TrialRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        f.push_back(cur);
        if (f.size() != 10)
            throw ParseError(lineno, "expected 10 csv fields");
        auto num = [&](const std::string& s) -> int64_t {
            return s.empty() ? -1 : std::stoll(s);
        };
        TrialRecord r;
        r.n = static_cast<int32_t>(std::stoll(f[0]));
        r.m = std::stoll(f[1]);
        r.seed = std::stoull(f[2]);
        r.trial = static_cast<int32_t>(std::stoll(f[3]));
        r.path_changes = std::stoll(f[4]);
        r.max_degree = std::stoll(f[5]);
        r.pivots = std::stoll(f[6]);
        r.contractions = num(f[7]);
        r.time_parametric_ns = num(f[8]);
        r.time_karp_ns = num(f[9]);
        out.push_back(r);
    }
    return out;
}

std::vector<std::pair<int32_t, int64_t>> parse_points(const std::string& text) {
    std::vector<std::pair<int32_t, int64_t>> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            fail(errc::parse, "point '" + part + "' is not n:m");
        try {
            int64_t n = std::stoll(part.substr(0, colon));
            int64_t m = std::stoll(part.substr(colon + 1));
            if (n < 1 || m < 0)
                fail(errc::parse, "point '" + part + "' out of range");
            out.push_back({static_cast<int32_t>(n), m});
        } catch (const std::logic_error&) {
            fail(errc::parse, "point '" + part + "' is not n:m");
        }
    }
    if (out.empty())
        fail(errc::parse, "no points given");
    return out;
}

std::vector<std::string> trend_warnings(const std::vector<TrialRecord>& records) {
    std::map<std::pair<int32_t, int64_t>, std::pair<double, int64_t>> acc;
    for (const auto& r : records) {
        auto& [sum, cnt] = acc[{r.n, r.m}];
        sum += static_cast<double>(r.path_changes);
        ++cnt;
    }
    std::vector<std::string> out;
    for (const auto& [point, sc] : acc) {
        auto [n, m] = point;
        double per_vertex = sc.first / static_cast<double>(sc.second) / n;
        double guard = 2.0 * std::log(static_cast<double>(n));
        if (per_vertex > guard) {
            std::ostringstream os;
            os << "warning: n=" << n << " m=" << m << ": mean path changes per vertex "
               << per_vertex << " exceeds guardrail " << guard;
            out.push_back(os.str());
        }
    }
    return out;
}

} // namespace psp
