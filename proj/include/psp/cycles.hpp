// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/graph.hpp"
#include "psp/parametric.hpp"
#include "psp/rational.hpp"

#include <optional>
#include <vector>

namespace psp {

enum class CycleMethod { parametric, karp, brute };

struct CycleResult {
    Rational mean; // sum of costs / sum of weights, exact
    std::vector<int32_t> cycle;
    CycleMethod method = CycleMethod::parametric;
};

// per-vertex value; reduced costs are c(e) + p[tail] - p[head]
using Potential = std::vector<Rational>;

// Appends a vertex with a zero-cost non-parameterized weight-1 arc to every
// original vertex and makes it the source. The star of new arcs is a valid
// initial tree, and no new arc can lie on a cycle. Original arc ids are
// preserved (new arcs come last).
template <class C>
BasicGraph<C> add_artificial_source(const BasicGraph<C>& g) {
    BasicGraph<C> out = g;
    out.n = g.n + 1;
    out.source = g.n;
    out.arcs.reserve(g.arcs.size() + g.n);
    for (int32_t v = 0; v < g.n; ++v) {
        BasicArc<C> a;
        a.tail = g.n;
        a.head = v;
        a.cost = C{};
        a.param = false;
        a.weight = 1;
        out.arcs.push_back(a);
    }
    return out;
}

// Distances in G_{lambda_star}, taken from the terminal tree: pi(v) =
// c(t_v) - lambda_star * pcount(t_v). Under this potential every arc of
// G_{lambda_star} has nonnegative reduced cost, zero on tree and terminal
// cycle arcs.
template <class C>
Potential shortest_path_potential(const BasicGraph<C>& g, const Solution& sol) {
    if (!sol.lambda_star.is_finite())
        fail(errc::invalid_argument, "lambda_star is not finite");
    PathTree<C> t = tree_at<C>(g, sol, sol.lambda_star);
    Potential pi(g.n);
    for (int32_t v = 0; v < g.n; ++v)
        pi[v] = CostOps<C>::to_rational(t.cost[v]) - sol.lambda_star * Rational(t.pcount[v]);
    return pi;
}

// Min-mean / min-ratio results carry the solver counters so the benchmark can
// report them without a second run.
struct MmcRun {
    std::optional<CycleResult> result; // nullopt = acyclic
    int64_t pivots = 0;
    int64_t path_changes = 0;
};

// Minimum cycle mean via the parametric reduction: all arcs parameterized at
// weight 1, artificial source, run to the terminal cycle.
MmcRun min_mean_cycle_parametric_run(const Graph& g);
std::optional<CycleResult> min_mean_cycle_parametric(const Graph& g);

// Value-only comparison oracle: dynamic program over walk lengths from an
// artificial source. Exact rational output.
std::optional<Rational> min_mean_cycle_karp(const Graph& g);

// Minimum of sum(cost)/sum(weight) over directed cycles, via the parametric
// solver with delta measured in weight units.
MmcRun min_ratio_cycle_run(const Graph& g);
std::optional<CycleResult> min_ratio_cycle(const Graph& g);

// The reduction instance behind the parametric cycle solvers, exposed so
// certification can audit the exact graph that was solved: all arcs
// parameterized (weights forced to 1 in mean mode), artificial source
// appended last. `run` carries the extracted result with input arc ids.
struct ReductionSolve {
    Graph reduced;
    Solution solution;
    MmcRun run;
};
ReductionSolve solve_reduction(const Graph& g, bool ratio);

// Strongly connected components, Tarjan order; returns component id per
// vertex, ids dense in [0, count).
std::pair<std::vector<int32_t>, int32_t> strongly_connected_components(const Graph& g);

// Splits g into SCCs, solves per component, returns the minimum. `ratio`
// selects ratio mode; karp mode returns value-only results.
std::optional<CycleResult> min_cycle_scc(const Graph& g, CycleMethod method, bool ratio);

} // namespace psp
