// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/oracle.hpp"

namespace psp {

namespace {

struct BruteState {
    const Graph* g;
    std::vector<std::vector<int32_t>> out; // arc ids by tail
    std::vector<char> on_path;
    std::vector<int32_t> path;
    int128 cost_sum = 0;
    int64_t weight_sum = 0;
    bool found = false;
    Rational best;
    std::vector<int32_t> best_cycle;
    int32_t start = 0;

    // extends simple paths from `start` using only vertices >= start, so each
    // cycle is enumerated exactly once, rooted at its smallest vertex
    void dfs(int32_t v) {
        for (int32_t e : out[v]) {
            const auto& a = g->arcs[e];
            int32_t w = a.head;
            if (w < start)
                continue;
            if (w == start) {
                Rational mean(cost_sum + a.cost, int128(weight_sum + a.weight));
                path.push_back(e);
                if (!found || mean < best) {
                    found = true;
                    best = mean;
                    best_cycle = path;
                }
                path.pop_back();
                continue;
            }
            if (on_path[w])
                continue;
            on_path[w] = 1;
            path.push_back(e);
            cost_sum += a.cost;
            weight_sum += a.weight;
            dfs(w);
            cost_sum -= a.cost;
            weight_sum -= a.weight;
            path.pop_back();
            on_path[w] = 0;
        }
    }
};

} // namespace

std::optional<CycleResult> brute_min_mean_cycle(const Graph& g) {
    if (g.n > 10)
        fail(errc::too_large, "exhaustive cycle search limited to 10 vertices");
    BruteState st;
    st.g = &g;
    st.out.assign(g.n, {});
    for (int32_t e = 0; e < g.m(); ++e)
        st.out[g.arcs[e].tail].push_back(e);
    st.on_path.assign(g.n, 0);
    for (int32_t s = 0; s < g.n; ++s) {
        st.start = s;
        st.on_path[s] = 1;
        st.dfs(s);
        st.on_path[s] = 0;
    }
    if (!st.found)
        return std::nullopt;
    CycleResult r;
    r.mean = st.best;
    r.cycle = std::move(st.best_cycle);
    r.method = CycleMethod::brute;
    return r;
}

std::optional<CycleResult> brute_cycle(const Graph& g, bool ratio) {
    if (ratio)
        return brute_min_mean_cycle(g);
    Graph h = g;
    for (auto& a : h.arcs)
        a.weight = 1;
    return brute_min_mean_cycle(h);
}

} // namespace psp
