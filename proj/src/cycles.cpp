// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/cycles.hpp"
#include "psp/oracle.hpp"

#include <algorithm>
#include <limits>

namespace psp {

namespace {

// all arcs parameterized at the given weight policy; weight 1 = mean mode
Graph parameterized_copy(const Graph& g, bool keep_weights) {
    Graph h = g;
    for (auto& a : h.arcs) {
        a.param = true;
        if (!keep_weights)
            a.weight = 1;
    }
    return h;
}

} // namespace

ReductionSolve solve_reduction(const Graph& g, bool ratio) {
    ReductionSolve out;
    out.reduced = add_artificial_source(parameterized_copy(g, ratio));
    out.solution = solve(out.reduced);
    const Solution& sol = out.solution;
    out.run.pivots = sol.pivot_count;
    out.run.path_changes = sol.path_change_count;
    if (sol.lambda_star.is_minus_inf())
        fail(errc::invalid_argument, "internal: -inf in an all-parameterized reduction");
    if (sol.lambda_star.is_plus_inf())
        return out; // acyclic
    CycleResult r;
    r.mean = sol.lambda_star;
    r.cycle = *sol.terminal_cycle;
    r.method = CycleMethod::parametric;
    for (int32_t e : r.cycle)
        if (e >= g.m())
            fail(errc::invalid_argument, "internal: artificial arc in terminal cycle");
    out.run.result = std::move(r);
    return out;
}

namespace {

MmcRun run_reduction(const Graph& g, bool ratio) { return solve_reduction(g, ratio).run; }

} // namespace

MmcRun min_mean_cycle_parametric_run(const Graph& g) { return run_reduction(g, false); }

std::optional<CycleResult> min_mean_cycle_parametric(const Graph& g) {
    return min_mean_cycle_parametric_run(g).result;
}

MmcRun min_ratio_cycle_run(const Graph& g) {
    for (const auto& a : g.arcs)
        if (a.weight < 1)
            fail(errc::invalid_argument, "ratio mode requires weights >= 1");
    return run_reduction(g, true);
}

std::optional<CycleResult> min_ratio_cycle(const Graph& g) {
    return min_ratio_cycle_run(g).result;
}

std::optional<Rational> min_mean_cycle_karp(const Graph& g) {
    if (g.n == 0)
        return std::nullopt;
    Graph ga = add_artificial_source(g);
    const int32_t N = ga.n;
    const int64_t INF = std::numeric_limits<int64_t>::max() / 2;

    int64_t max_abs = 0;
    for (const auto& a : ga.arcs)
        max_abs = std::max(max_abs, a.cost < 0 ? -a.cost : a.cost);
    if (max_abs > 0 && max_abs > (INF - 1) / (N + 1))
        fail(errc::overflow, "cost magnitude too large for the walk table");
    if (static_cast<int64_t>(N + 1) * N > (int64_t(1) << 28))
        fail(errc::too_large, "walk table too large");

    // D[k][v] = min cost of a k-arc walk source -> v
    std::vector<int64_t> D(static_cast<size_t>(N + 1) * N, INF);
    D[ga.source] = 0;
    for (int32_t k = 1; k <= N; ++k) {
        const int64_t* prev = &D[static_cast<size_t>(k - 1) * N];
        int64_t* cur = &D[static_cast<size_t>(k) * N];
        for (const auto& a : ga.arcs) {
            if (prev[a.tail] >= INF)
                continue;
            int64_t cand = prev[a.tail] + a.cost;
            if (cand < cur[a.head])
                cur[a.head] = cand;
        }
    }

    // lambda* = min_v max_k (D_N(v) - D_k(v)) / (N - k), finite entries only
    const int64_t* top = &D[static_cast<size_t>(N) * N];
    bool found = false;
    int128 best_num = 0, best_den = 1;
    for (int32_t v = 0; v < N; ++v) {
        if (top[v] >= INF)
            continue;
        bool have = false;
        int128 w_num = 0, w_den = 1;
        for (int32_t k = 0; k < N; ++k) {
            int64_t dk = D[static_cast<size_t>(k) * N + v];
            if (dk >= INF)
                continue;
            int128 num = int128(top[v]) - int128(dk);
            int128 den = N - k;
            if (!have || num * w_den > w_num * den) {
                w_num = num;
                w_den = den;
                have = true;
            }
        }
        if (!have)
            fail(errc::invalid_argument, "internal: walk to v has no finite prefix");
        if (!found || w_num * best_den < best_num * w_den) {
            best_num = w_num;
            best_den = w_den;
            found = true;
        }
    }
    if (!found)
        return std::nullopt;
    return Rational(best_num, best_den);
}

std::pair<std::vector<int32_t>, int32_t> strongly_connected_components(const Graph& g) {
    const int32_t n = g.n;
    std::vector<int32_t> comp(n, -1), low(n, 0), num(n, -1), stack, call;
    std::vector<int32_t> out_off(n + 1, 0), out_arc(g.arcs.size());
    std::vector<char> on_stack(n, 0);
    for (const auto& a : g.arcs)
        ++out_off[a.tail + 1];
    for (int32_t v = 0; v < n; ++v)
        out_off[v + 1] += out_off[v];
    {
        std::vector<int32_t> p(out_off.begin(), out_off.end() - 1);
        for (int32_t e = 0; e < g.m(); ++e)
            out_arc[p[g.arcs[e].tail]++] = e;
    }
    int32_t counter = 0, comps = 0;
    std::vector<int32_t> iter(n, 0);
    for (int32_t s = 0; s < n; ++s) {
        if (num[s] >= 0)
            continue;
        call.push_back(s);
        while (!call.empty()) {
            int32_t v = call.back();
            if (num[v] < 0) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
                iter[v] = out_off[v];
            }
            bool descended = false;
            while (iter[v] < out_off[v + 1]) {
                int32_t w = g.arcs[out_arc[iter[v]]].head;
                ++iter[v];
                if (num[w] < 0) {
                    call.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w])
                    low[v] = std::min(low[v], num[w]);
            }
            if (descended)
                continue;
            if (low[v] == num[v]) {
                for (;;) {
                    int32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                    if (w == v)
                        break;
                }
                ++comps;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back()] = std::min(low[call.back()], low[v]);
        }
    }
    return {std::move(comp), comps};
}

std::optional<CycleResult> min_cycle_scc(const Graph& g, CycleMethod method, bool ratio) {
    if (method == CycleMethod::karp && ratio)
        fail(errc::invalid_argument, "ratio mode is not available with the walk-table method");
    auto [comp, k] = strongly_connected_components(g);
    std::vector<int32_t> size(k, 0);
    for (int32_t v = 0; v < g.n; ++v)
        ++size[comp[v]];

    std::optional<CycleResult> best;
    for (int32_t c = 0; c < k; ++c) {
        if (size[c] < 2)
            continue;
        // induced subgraph on component c
        std::vector<int32_t> vmap(g.n, -1);
        int32_t nn = 0;
        for (int32_t v = 0; v < g.n; ++v)
            if (comp[v] == c)
                vmap[v] = nn++;
        Graph sub;
        sub.n = nn;
        std::vector<int32_t> arc_origin;
        for (int32_t e = 0; e < g.m(); ++e) {
            const auto& a = g.arcs[e];
            if (comp[a.tail] != c || comp[a.head] != c)
                continue;
            Arc b = a;
            b.tail = vmap[a.tail];
            b.head = vmap[a.head];
            sub.arcs.push_back(b);
            arc_origin.push_back(e);
        }
        std::optional<CycleResult> r;
        switch (method) {
            case CycleMethod::parametric:
                r = ratio ? min_ratio_cycle(sub) : min_mean_cycle_parametric(sub);
                break;
            case CycleMethod::karp: {
                auto v = min_mean_cycle_karp(sub);
                if (v)
                    r = CycleResult{*v, {}, CycleMethod::karp};
                break;
            }
            case CycleMethod::brute:
                r = brute_cycle(sub, ratio);
                break;
        }
        if (!r)
            continue;
        for (auto& e : r->cycle)
            e = arc_origin[e];
        if (!best || r->mean < best->mean)
            best = std::move(r);
    }
    return best;
}

} // namespace psp
