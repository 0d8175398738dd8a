// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psp/bench.hpp"
#include "psp/oracle.hpp"
#include "psp/parametric.hpp"

#include <numeric>
#include <vector>

using namespace psp;

namespace {

Graph mk(int32_t n, int32_t source, std::vector<Arc> arcs) {
    Graph g;
    g.n = n;
    g.source = source;
    g.arcs = std::move(arcs);
    return g;
}

errc thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return errc::ok;
}

} // namespace

TEST_CASE("edge keys follow the crossing formula") {
    // s->u cost 5, s->v cost 3, u->v cost 2 (all parameterized, weight 1)
    Graph g = mk(3, 0,
                 {{0, 1, 5, true, 1},
                  {0, 2, 3, true, 1},
                  {1, 2, 2, true, 1},
                  {1, 2, 2, false, 1},
                  {0, 1, 7, false, 1},
                  {1, 2, 2, true, 2}});
    // tree fixed by hand: u and v hang off the source via arcs 0 and 1
    PathTree<int64_t> t;
    t.parent_edge = {-1, 0, 1};
    t.cost = {0, 5, 3};
    t.pcount = {0, 1, 1};
    t.children = {{1, 2}, {}, {}};

    Solver<int64_t> s(g, t, Rational::minus_inf());
    // (5 + 2 - 3) / (1 + 1 - 1) = 4
    CHECK(s.edge_key(2) == Rational(4));
    // non-parameterized candidate: denominator 0 -> +inf
    CHECK(s.edge_key(3).is_plus_inf());
    // candidate into a deeper vertex: denominator negative -> +inf
    CHECK(s.edge_key(4).is_plus_inf());
    // weight-2 candidate divides by the weight difference: (5+2-3)/(1+2-1) = 2
    CHECK(s.edge_key(5) == Rational(2));
    // tree arcs have numerator and denominator both 0 -> +inf
    CHECK(s.edge_key(0).is_plus_inf());
    CHECK(s.edge_key(1).is_plus_inf());
}

TEST_CASE("parallel-edge instance pivots once") {
    Graph g = mk(2, 0, {{0, 1, 0, false, 1}, {0, 1, 4, true, 1}});
    Solution sol = solve(g);

    REQUIRE(sol.breakpoints.size() == 1);
    CHECK(sol.breakpoints[0] == Rational(4));
    CHECK(sol.lambda_star.is_plus_inf());
    CHECK(!sol.terminal_cycle.has_value());
    CHECK(sol.pivot_count == 1);
    CHECK(sol.path_change_count == 1);
    CHECK(sol.vertex_changes == std::vector<int64_t>{0, 1});

    REQUIRE(sol.parent_log[0].size() == 1);
    CHECK(sol.parent_log[0][0].edge == -1);
    REQUIRE(sol.parent_log[1].size() == 2);
    CHECK(sol.parent_log[1][0].lambda.is_minus_inf());
    CHECK(sol.parent_log[1][0].edge == 0);
    CHECK(sol.parent_log[1][1].lambda == Rational(4));
    CHECK(sol.parent_log[1][1].edge == 1);

    // boundary convention: at a breakpoint the post-pivot parent wins
    CHECK(tree_at(g, sol, Rational(0)).parent_edge[1] == 0);
    CHECK(tree_at(g, sol, Rational(4)).parent_edge[1] == 1);
    CHECK(tree_at(g, sol, Rational(100)).parent_edge[1] == 1);
    CHECK(tree_at(g, sol, Rational::minus_inf()).parent_edge[1] == 0);

    CHECK(certify_solution(g, sol).passed);
}

TEST_CASE("two-vertex cycle terminates with CycleFound") {
    Graph g = mk(2, 0, {{0, 1, 3, true, 1}, {1, 0, 5, true, 1}});

    auto init = initial_tree(g);
    REQUIRE(init.tree.has_value());
    Solver<int64_t> s(g, *init.tree, Rational::minus_inf());
    PivotOutcome o = s.pivot_once();
    CHECK(o.kind == PivotKind::cycle_found);
    CHECK(o.lambda == Rational(4)); // (3 + 5) / 2
    CHECK(o.cycle == std::vector<int32_t>{0, 1});

    Solution sol = solve(g);
    CHECK(sol.breakpoints.empty());
    CHECK(sol.lambda_star == Rational(4));
    REQUIRE(sol.terminal_cycle.has_value());
    CHECK(*sol.terminal_cycle == std::vector<int32_t>{0, 1});
    CHECK(sol.pivot_count == 0);
    CHECK(certify_solution(g, sol).passed);

    CHECK(thrown_code([&] { tree_at(g, sol, Rational(5)); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { tree_at(g, sol, Rational::plus_inf()); }) == errc::invalid_argument);
}

TEST_CASE("initial tree prefers fewer parameterized arcs") {
    Graph g = mk(2, 0, {{0, 1, 0, false, 1}, {0, 1, -10, true, 1}});
    auto init = initial_tree(g);
    REQUIRE(init.tree.has_value());
    CHECK(init.tree->parent_edge[1] == 0); // cost 0 non-param beats cost -10 param
    CHECK(init.tree->pcount[1] == 0);
    CHECK(init.tree->cost[1] == 0);

    Solution sol = solve(g);
    REQUIRE(sol.breakpoints.size() == 1);
    CHECK(sol.breakpoints[0] == Rational(-10));
    CHECK(sol.lambda_star.is_plus_inf());
    CHECK(tree_at(g, sol, Rational(-10)).parent_edge[1] == 1);
    CHECK(certify_solution(g, sol).passed);
}

TEST_CASE("all-non-parameterized graphs reduce to one shortest-path tree") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        int32_t n = 2 + static_cast<int32_t>(seed % 9);
        Graph g = random_sc_graph(n, n + static_cast<int64_t>(seed % 7), 1, 20, seed);
        for (auto& a : g.arcs)
            a.param = false;
        g.source = 0;

        Solution sol = solve(g);
        CHECK(sol.breakpoints.empty());
        CHECK(sol.pivot_count == 0);
        CHECK(sol.lambda_star.is_plus_inf());

        PathTree<int64_t> t = tree_at(g, sol, Rational(0));
        for (const Rational& lam : {Rational(0), Rational(1000)}) {
            FixedLambdaResult ref = bellman_ford_at(g, lam);
            REQUIRE(!ref.negative_cycle);
            for (int32_t v = 0; v < n; ++v)
                CHECK(Rational(t.cost[v]) == ref.dist[v]); // pcount 0 everywhere
        }
    }
}

TEST_CASE("zero-weight negative cycle certifies lambda_star = -inf") {
    Graph g = mk(3, 0,
                 {{0, 1, 0, false, 1}, {1, 2, 0, false, 1}, {2, 1, -1, false, 1}});
    auto init = initial_tree(g);
    CHECK(!init.tree.has_value());
    REQUIRE(!init.negative_cycle.empty());

    Solution sol = solve(g);
    CHECK(sol.lambda_star.is_minus_inf());
    CHECK(sol.breakpoints.empty());
    REQUIRE(!sol.minus_inf_cycle.empty());
    int64_t dsum = 0, csum = 0;
    for (size_t i = 0; i < sol.minus_inf_cycle.size(); ++i) {
        const Arc& a = g.arcs[sol.minus_inf_cycle[i]];
        const Arc& b = g.arcs[sol.minus_inf_cycle[(i + 1) % sol.minus_inf_cycle.size()]];
        CHECK(a.head == b.tail);
        dsum += a.delta();
        csum += a.cost;
    }
    CHECK(dsum == 0);
    CHECK(csum < 0);
    CHECK(certify_solution(g, sol).passed);
    CHECK(thrown_code([&] { tree_at(g, sol, Rational(0)); }) == errc::invalid_argument);
}

TEST_CASE("solver state invariants hold after every pivot") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int32_t n = 2 + static_cast<int32_t>(seed % 29);
        int64_t m = n + static_cast<int64_t>((seed * 7) % (2 * static_cast<uint64_t>(n)));
        Graph g = random_sc_graph(n, m, -20, 20, seed);
        g.source = 0;

        auto init = initial_tree(g);
        REQUIRE(init.tree.has_value()); // all arcs parameterized, so no -inf case
        Solver<int64_t> s(g, *init.tree, Rational::minus_inf());

        auto check_keys = [&] {
            for (int32_t v = 0; v < n; ++v) {
                auto [want, det] = s.recompute_vertex_key(v);
                REQUIRE(Rational::cmp(s.vertex_key(v), want) == 0);
                if (!want.is_plus_inf())
                    REQUIRE(Rational::cmp(s.edge_key(s.determining_edge(v)), want) == 0);
                (void)det;
            }
        };
        auto pcount_sum = [&] {
            const auto& pc = s.tree().pcount;
            return std::accumulate(pc.begin(), pc.end(), int64_t{0});
        };

        check_keys();
        Rational last_lambda = Rational::minus_inf();
        int64_t last_sum = pcount_sum();
        for (;;) {
            std::vector<Rational> before(n, Rational::plus_inf());
            for (int32_t v = 0; v < n; ++v)
                before[v] = s.vertex_key(v);

            PivotOutcome o = s.pivot_once();
            if (o.kind == PivotKind::no_more_pivots) {
                for (int32_t v = 0; v < n; ++v)
                    REQUIRE(s.vertex_key(v).is_plus_inf());
                break;
            }
            REQUIRE(Rational::cmp(last_lambda, o.lambda) <= 0);
            last_lambda = o.lambda;
            if (o.kind == PivotKind::cycle_found) {
                // the detected cycle chains and is tight at lambda'
                int64_t dsum = 0, csum = 0;
                for (size_t i = 0; i < o.cycle.size(); ++i) {
                    const Arc& a = g.arcs[o.cycle[i]];
                    const Arc& b = g.arcs[o.cycle[(i + 1) % o.cycle.size()]];
                    REQUIRE(a.head == b.tail);
                    dsum += a.delta();
                    csum += a.cost;
                }
                REQUIRE(dsum > 0);
                REQUIRE(Rational(csum, dsum) == o.lambda);
                break;
            }

            // pivoted: progress, key locality outside the subtree, exact keys
            int64_t now = pcount_sum();
            REQUIRE(now > last_sum);
            REQUIRE(now == last_sum + o.delta_delta * static_cast<int64_t>(o.changed.size()));
            last_sum = now;
            std::vector<char> in_changed(n, 0);
            for (int32_t w : o.changed)
                in_changed[w] = 1;
            REQUIRE(in_changed[o.vertex] == 1);
            for (int32_t v = 0; v < n; ++v)
                if (!in_changed[v])
                    REQUIRE(Rational::cmp(s.vertex_key(v), before[v]) <= 0);
            check_keys();
        }

        REQUIRE(s.pivots() <= static_cast<int64_t>(n) * (n - 1) / 2);
        int64_t changes = 0;
        for (int32_t v = 0; v < n; ++v) {
            REQUIRE(s.parent_log()[v].size() <= static_cast<size_t>(n));
            changes += s.per_vertex_changes()[v];
        }
        REQUIRE(changes == s.path_changes());
        for (size_t i = 0; i + 1 < s.breakpoints().size(); ++i)
            REQUIRE(s.breakpoints()[i] <= s.breakpoints()[i + 1]);

        if (seed % 10 == 0) {
            Solution sol = solve(g);
            CertReport rep = certify_solution(g, sol);
            if (!rep.passed)
                for (const auto& f : rep.failures)
                    MESSAGE("seed " << seed << ": " << f);
            REQUIRE(rep.passed);
        }
    }
}

TEST_CASE("dedup collapses equal consecutive breakpoints") {
    // two identical parallel pairs force two pivots at the same lambda
    Graph g = mk(3, 0,
                 {{0, 1, 0, false, 1},
                  {0, 1, 4, true, 1},
                  {0, 2, 0, false, 1},
                  {0, 2, 4, true, 1}});
    Solution plain = solve(g, false);
    REQUIRE(plain.breakpoints.size() == 2);
    CHECK(plain.breakpoints[0] == plain.breakpoints[1]);
    Solution dd = solve(g, true);
    REQUIRE(dd.breakpoints.size() == 1);
    CHECK(dd.breakpoints[0] == Rational(4));
}

TEST_CASE("solve rejects defective inputs") {
    Graph no_source = mk(2, -1, {{0, 1, 1, true, 1}});
    CHECK(thrown_code([&] { solve(no_source); }) == errc::invalid_argument);

    Graph unreachable = mk(2, 0, {});
    try {
        solve(unreachable);
        FAIL("expected unreachable_vertex");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unreachable_vertex);
        CHECK(std::string(e.what()) == "unreachable vertex 2");
    }
}
