// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/cycles.hpp"
#include "psp/graph.hpp"
#include "psp/parametric.hpp"
#include "psp/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace psp {

// Fixed-lambda single-source shortest paths, computed independently of the
// parametric machinery. Unreachable vertices get +inf distance.
struct FixedLambdaResult {
    bool negative_cycle = false;
    std::vector<Rational> dist;  // valid when !negative_cycle
    std::vector<int32_t> cycle;  // valid when negative_cycle
};

template <class C>
FixedLambdaResult bellman_ford_at(const BasicGraph<C>& g, const Rational& lambda) {
    if (!lambda.is_finite())
        fail(errc::invalid_argument, "lambda must be finite");
    if (!g.has_source())
        fail(errc::invalid_argument, "graph has no source");
    const int32_t n = g.n;
    FixedLambdaResult out;

    // per-arc cost in G_lambda
    std::vector<Rational> rc(g.arcs.size());
    for (size_t e = 0; e < g.arcs.size(); ++e) {
        const auto& a = g.arcs[e];
        rc[e] = CostOps<C>::to_rational(a.cost);
        if (a.delta() != 0)
            rc[e] = rc[e] - lambda * Rational(a.delta());
    }

    std::vector<char> reached(n, 0);
    std::vector<Rational> dist(n);
    std::vector<int32_t> pred(n, -1);
    reached[g.source] = 1;

    int32_t last_changed = -1;
    for (int32_t round = 0; round <= n; ++round) {
        last_changed = -1;
        for (int32_t e = 0; e < g.m(); ++e) {
            const auto& a = g.arcs[e];
            if (!reached[a.tail])
                continue;
            Rational nd = dist[a.tail] + rc[e];
            if (!reached[a.head] || nd < dist[a.head]) {
                reached[a.head] = 1;
                dist[a.head] = nd;
                pred[a.head] = e;
                last_changed = a.head;
            }
        }
        if (last_changed < 0)
            break;
    }

    if (last_changed >= 0) {
        out.negative_cycle = true;
        int32_t v = last_changed;
        for (int32_t i = 0; i < n; ++i)
            v = g.arcs[pred[v]].tail;
        int32_t w = v;
        do {
            out.cycle.push_back(pred[w]);
            w = g.arcs[pred[w]].tail;
        } while (w != v);
        std::reverse(out.cycle.begin(), out.cycle.end());
        return out;
    }

    out.dist.resize(n);
    for (int32_t v = 0; v < n; ++v)
        out.dist[v] = reached[v] ? dist[v] : Rational::plus_inf();
    return out;
}

// Exhaustive simple-cycle search by DFS with an on-path mask; minimizes
// sum(cost)/sum(weight) with exact comparison. Only for desk-scale inputs.
std::optional<CycleResult> brute_min_mean_cycle(const Graph& g);

// brute_min_mean_cycle with mean/ratio dispatch: mean mode treats every
// weight as 1
std::optional<CycleResult> brute_cycle(const Graph& g, bool ratio);

struct CertReport {
    bool passed = true;
    int64_t checks = 0;
    std::vector<std::string> failures;

    void note(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
};

// Mechanizes the solution definition: the recorded tree must match the
// independent fixed-lambda distances on every interval endpoint and midpoint,
// breakpoints must be nondecreasing, and the terminal cycle must have zero
// cost at lambda_star while lambda_star + 1 exhibits a negative cycle.
template <class C>
CertReport certify_solution(const BasicGraph<C>& g, const Solution& sol) {
    CertReport rep;
    const auto& bp = sol.breakpoints;
    for (size_t i = 0; i + 1 < bp.size(); ++i)
        rep.note(bp[i] <= bp[i + 1], "breakpoints decrease at index " + std::to_string(i + 1));
    if (!bp.empty())
        rep.note(Rational::cmp(bp.back(), sol.lambda_star) <= 0,
                 "last breakpoint exceeds lambda_star");

    if (sol.lambda_star.is_minus_inf()) {
        const auto& cyc = sol.minus_inf_cycle;
        rep.note(!cyc.empty(), "lambda_star -inf without certificate cycle");
        if (!cyc.empty()) {
            int64_t dsum = 0;
            Rational csum(0);
            for (size_t i = 0; i < cyc.size(); ++i) {
                const auto& a = g.arcs[cyc[i]];
                const auto& b = g.arcs[cyc[(i + 1) % cyc.size()]];
                rep.note(a.head == b.tail, "certificate arcs do not chain");
                dsum += a.delta();
                csum = csum + CostOps<C>::to_rational(a.cost);
            }
            rep.note(dsum == 0, "certificate cycle has parameterized weight");
            rep.note(csum < Rational(0), "certificate cycle cost not negative");
        }
        return rep;
    }

    // sample lambdas: interval endpoints and midpoints, one unit inside
    // unbounded ends
    std::vector<Rational> samples;
    if (bp.empty()) {
        if (sol.lambda_star.is_finite()) {
            samples.push_back(sol.lambda_star);
            samples.push_back(sol.lambda_star - Rational(1));
        } else {
            samples.push_back(Rational(0));
            samples.push_back(Rational(1));
        }
    } else {
        samples.push_back(bp.front() - Rational(1));
        for (size_t i = 0; i < bp.size(); ++i) {
            samples.push_back(bp[i]);
            if (i + 1 < bp.size()) {
                samples.push_back((bp[i] + bp[i + 1]) / Rational(2));
            } else if (sol.lambda_star.is_finite()) {
                samples.push_back((bp[i] + sol.lambda_star) / Rational(2));
                samples.push_back(sol.lambda_star);
            } else {
                samples.push_back(bp[i] + Rational(1));
            }
        }
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    for (const Rational& lam : samples) {
        FixedLambdaResult ref = bellman_ford_at(g, lam);
        if (ref.negative_cycle) {
            rep.note(false, "negative cycle at sampled lambda " + lam.str());
            continue;
        }
        PathTree<C> t = tree_at<C>(g, sol, lam);
        bool all_eq = true;
        for (int32_t v = 0; v < g.n; ++v) {
            Rational td =
                CostOps<C>::to_rational(t.cost[v]) - lam * Rational(t.pcount[v]);
            if (td != ref.dist[v]) {
                all_eq = false;
                break;
            }
        }
        rep.note(all_eq, "tree distances differ from oracle at lambda " + lam.str());
    }

    if (sol.lambda_star.is_finite()) {
        rep.note(sol.terminal_cycle.has_value(), "finite lambda_star without terminal cycle");
        if (sol.terminal_cycle) {
            const auto& cyc = *sol.terminal_cycle;
            Rational csum(0);
            int64_t dsum = 0;
            bool chains = !cyc.empty();
            for (size_t i = 0; i < cyc.size(); ++i) {
                const auto& a = g.arcs[cyc[i]];
                const auto& b = g.arcs[cyc[(i + 1) % cyc.size()]];
                chains = chains && a.head == b.tail;
                csum = csum + CostOps<C>::to_rational(a.cost);
                dsum += a.delta();
            }
            rep.note(chains, "terminal cycle arcs do not chain");
            rep.note(dsum > 0, "terminal cycle has no parameterized weight");
            rep.note(csum == sol.lambda_star * Rational(dsum),
                     "terminal cycle not tight at lambda_star");
        }
        rep.note(!bellman_ford_at(g, sol.lambda_star).negative_cycle,
                 "negative cycle already at lambda_star");
        rep.note(bellman_ford_at(g, sol.lambda_star + Rational(1)).negative_cycle,
                 "no negative cycle beyond lambda_star");
    } else {
        rep.note(!sol.terminal_cycle.has_value(), "terminal cycle despite lambda_star = inf");
    }
    return rep;
}

} // namespace psp
