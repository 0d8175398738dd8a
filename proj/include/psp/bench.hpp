// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace psp {

// One solver run on one random graph. -1 marks fields the mode does not
// produce; they serialize as empty CSV cells.
struct TrialRecord {
    int32_t n = 0;
    int64_t m = 0;
    uint64_t seed = 0;
    int32_t trial = 0;
    int64_t path_changes = 0;
    int64_t max_degree = 0;
    int64_t pivots = 0;
    int64_t contractions = -1;
    int64_t time_parametric_ns = -1;
    int64_t time_karp_ns = -1;
};

enum class BenchMode { mmc, balance };

struct BenchConfig {
    std::vector<std::pair<int32_t, int64_t>> points; // (n, m)
    int32_t trials = 0; // 0 = default rule max(n/2, 50)
    uint64_t seed = 1;
    int64_t cost_lo = 1;
    int64_t cost_hi = 1000000;
    BenchMode mode = BenchMode::mmc;
};

// Runs the configured solver(s) over per-point trial batches of random
// graphs. mmc mode times the parametric reduction against the walk-table
// algorithm on the same graph; balance mode runs the contraction loop on
// strongly connected instances. Timed regions cover a single solver call.
std::vector<TrialRecord> run_trials(const BenchConfig& cfg);

// Fraction of `samples` random graphs whose maximum (in+out) degree exceeds
// 8m/n + 2*log2(n).
double degree_check(int32_t n, int64_t m, int32_t samples, uint64_t seed);

std::string emit_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> parse_trials_csv(const std::string& text);

// "n:m,n:m,..." -> point list
std::vector<std::pair<int32_t, int64_t>> parse_points(const std::string& text);

// Per-point guardrail: warn when mean path changes per vertex exceed
// 2*ln(n). Advisory only; returns human-readable messages.
std::vector<std::string> trend_warnings(const std::vector<TrialRecord>& records);

// Random strongly connected multigraph: a permutation cycle through all n
// vertices plus m-n random extra arcs (parallel arcs permitted, self-loops
// not). Requires m >= n. All arcs parameterized, weight 1.
Graph random_sc_graph(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi, uint64_t seed);

} // namespace psp
