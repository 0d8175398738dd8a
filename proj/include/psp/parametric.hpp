// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/error.hpp"
#include "psp/graph.hpp"
#include "psp/heap.hpp"
#include "psp/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace psp {

// Arithmetic shims so the solver runs both on 64-bit integer costs and on the
// exact rational costs the balance recursion produces.
template <class C>
struct CostOps;

template <>
struct CostOps<int64_t> {
    static int64_t add(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            fail(errc::overflow, "path cost overflow");
        return r;
    }
    static int64_t sub(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            fail(errc::overflow, "path cost overflow");
        return r;
    }
    // (cu + ce - cv) / dd with dd > 0; three 64-bit terms cannot overflow 128
    static Rational key(int64_t cu, int64_t ce, int64_t cv, int64_t dd) {
        int128 num = int128(cu) + int128(ce) - int128(cv);
        return Rational(num, int128(dd));
    }
    static Rational to_rational(int64_t v) { return Rational(v); }
};

template <>
struct CostOps<Rational> {
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational key(const Rational& cu, const Rational& ce, const Rational& cv, int64_t dd) {
        return (cu + ce - cv) / Rational(dd);
    }
    static const Rational& to_rational(const Rational& v) { return v; }
};

// Shortest-path tree with cumulative path cost c(t_w) and cumulative
// parameterized weight delta(t_w) per vertex.
template <class C>
struct PathTree {
    std::vector<int32_t> parent_edge; // -1 at the source
    std::vector<C> cost;
    std::vector<int64_t> pcount;
    std::vector<std::vector<int32_t>> children;

    int32_t n() const { return static_cast<int32_t>(parent_edge.size()); }
};

template <class C>
struct InitialTreeResult {
    std::optional<PathTree<C>> tree;
    // set iff !tree: a cycle with zero parameterized weight and negative cost,
    // certifying lambda* = -inf
    std::vector<int32_t> negative_cycle;
};

// Shortest-path tree of G_{-inf}: Bellman-Ford over the lexicographic cost
// (parameterized weight, cost), so paths with fewer parameterized edges always
// win. Detects the lambda* = -inf case instead of a tree.
template <class C>
InitialTreeResult<C> initial_tree(const BasicGraph<C>& g);

struct LogEntry {
    Rational lambda;
    int32_t edge; // -1 = no parent (source)
};

// Full output of a parametric run: the breakpoint sequence plus the compressed
// per-vertex parent-change log from which any intermediate tree can be
// rebuilt.
struct Solution {
    std::vector<Rational> breakpoints; // one per executed pivot, nondecreasing
    std::vector<std::vector<LogEntry>> parent_log;
    Rational lambda_star = Rational::plus_inf();
    std::optional<std::vector<int32_t>> terminal_cycle; // present iff lambda_star finite
    std::vector<int32_t> minus_inf_cycle;               // present iff lambda_star = -inf
    int64_t pivot_count = 0;
    int64_t path_change_count = 0;         // sum over pivots of subtree size
    std::vector<int64_t> vertex_changes;   // per-vertex path-change count
};

enum class PivotKind { pivoted, cycle_found, no_more_pivots };

struct PivotOutcome {
    PivotKind kind = PivotKind::no_more_pivots;
    Rational lambda;               // pivot value; meaningless for no_more_pivots
    int32_t vertex = -1;           // re-parented vertex / cycle entry vertex
    int32_t edge = -1;             // pivot arc id
    int64_t delta_delta = 0;       // pcount increase applied to each changed vertex
    std::vector<int32_t> changed;  // pivoted: all subtree vertices
    std::vector<int32_t> cycle;    // cycle_found: arc ids, tree path then pivot arc
};

// Pivot-driven parametric solver. Holds one shortest-path tree valid at
// lambda() and a heap of vertex keys giving the next crossing per vertex.
// The caller owns the graph and must keep it alive.
template <class C>
class Solver {
  public:
    Solver(const BasicGraph<C>& g, PathTree<C> tree, const Rational& lambda0)
        : g_(&g), tree_(std::move(tree)), lambda_(lambda0) {
        const int32_t n = g.n;
        if (tree_.n() != n)
            fail(errc::invalid_argument, "tree does not match graph");
        build_adjacency();
        log_.assign(n, {});
        vertex_changes_.assign(n, 0);
        for (int32_t v = 0; v < n; ++v)
            log_[v].push_back({Rational::minus_inf(), tree_.parent_edge[v]});
        handles_.assign(n, HeapHandle{});
        for (int32_t v = 0; v < n; ++v) {
            auto [key, det] = recompute_vertex_key(v);
            handles_[v] = heap_.insert(key, HeapPayload{v, det});
        }
    }

    const BasicGraph<C>& graph() const { return *g_; }
    const PathTree<C>& tree() const { return tree_; }
    const Rational& lambda() const { return lambda_; }
    int64_t pivots() const { return pivot_count_; }
    int64_t path_changes() const { return path_change_count_; }
    const std::vector<int64_t>& per_vertex_changes() const { return vertex_changes_; }
    const std::vector<std::vector<LogEntry>>& parent_log() const { return log_; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    uint64_t heap_comparisons() const { return heap_.comparisons(); }

    // current heap key of v; +inf when v has no candidate in-edge
    Rational vertex_key(int32_t v) const { return heap_.key_of(handles_[v]); }
    int32_t determining_edge(int32_t v) const { return heap_.payload_of(handles_[v]).edge; }

    // lambda at which the path through arc e overtakes the tree path to its
    // head; +inf when the candidate gains no parameterized weight
    Rational edge_key(int32_t e) const {
        const auto& a = g_->arcs[e];
        int64_t dd = tree_.pcount[a.tail] + a.delta() - tree_.pcount[a.head];
        if (dd <= 0)
            return Rational::plus_inf();
        return CostOps<C>::key(tree_.cost[a.tail], a.cost, tree_.cost[a.head], dd);
    }

    PivotOutcome pivot_once() {
        PivotOutcome out;
        Rational key;
        HeapPayload pay;
        if (!heap_.find_min(key, pay) || key.is_plus_inf()) {
            out.kind = PivotKind::no_more_pivots;
            return out;
        }
        const int32_t v = pay.vertex;
        const int32_t eid = pay.edge;
        const auto& arc = g_->arcs[eid];
        const int32_t u = arc.tail;
        out.lambda = key;
        out.vertex = v;
        out.edge = eid;

        mark_subtree(v);
        if (stamp_[u] == epoch_) {
            // pivot path closes a cycle: tree path v..u plus the pivot arc
            out.kind = PivotKind::cycle_found;
            std::vector<int32_t> path;
            for (int32_t w = u; w != v; w = g_->arcs[tree_.parent_edge[w]].tail)
                path.push_back(tree_.parent_edge[w]);
            std::reverse(path.begin(), path.end());
            path.push_back(eid);
            out.cycle = std::move(path);
            return out;
        }

        out.kind = PivotKind::pivoted;
        lambda_ = key;
        C dc = CostOps<C>::sub(CostOps<C>::add(tree_.cost[u], arc.cost), tree_.cost[v]);
        int64_t dd = tree_.pcount[u] + arc.delta() - tree_.pcount[v];
        out.delta_delta = dd;
        if (dd <= 0)
            fail(errc::invalid_argument, "internal: pivot without weight gain");

        // re-parent v
        int32_t old_parent = g_->arcs[tree_.parent_edge[v]].tail;
        auto& sibs = tree_.children[old_parent];
        sibs.erase(std::find(sibs.begin(), sibs.end(), v));
        tree_.children[u].push_back(v);
        tree_.parent_edge[v] = eid;
        log_[v].push_back({key, eid});
        breakpoints_.push_back(key);
        ++pivot_count_;

        // shift the whole subtree and recompute its keys from scratch
        out.changed.assign(subtree_.begin(), subtree_.end());
        for (int32_t w : subtree_) {
            tree_.cost[w] = CostOps<C>::add(tree_.cost[w], dc);
            tree_.pcount[w] += dd;
            ++vertex_changes_[w];
        }
        path_change_count_ += static_cast<int64_t>(subtree_.size());
        for (int32_t w : subtree_) {
            auto [k, det] = recompute_vertex_key(w);
            handles_[w] = heap_.reassign_key(handles_[w], k);
            heap_.set_edge(handles_[w], det);
        }
        // arcs leaving the subtree can only get better for their heads
        for (int32_t w : subtree_) {
            for (int32_t i = out_off_[w]; i < out_off_[w + 1]; ++i) {
                int32_t f = out_arc_[i];
                int32_t x = g_->arcs[f].head;
                if (stamp_[x] == epoch_)
                    continue;
                Rational k = edge_key(f);
                if (k < heap_.key_of(handles_[x])) {
                    heap_.decrease_key(handles_[x], k);
                    heap_.set_edge(handles_[x], f);
                }
            }
        }
        return out;
    }

    // min over in-edges, first minimizer in arc order; (+inf, -1) if none
    std::pair<Rational, int32_t> recompute_vertex_key(int32_t v) const {
        Rational best = Rational::plus_inf();
        int32_t det = -1;
        for (int32_t i = in_off_[v]; i < in_off_[v + 1]; ++i) {
            int32_t e = in_arc_[i];
            Rational k = edge_key(e);
            if (k < best) {
                best = k;
                det = e;
            }
        }
        return {best, det};
    }

  private:
    void build_adjacency() {
        const int32_t n = g_->n;
        in_off_.assign(n + 1, 0);
        out_off_.assign(n + 1, 0);
        for (const auto& a : g_->arcs) {
            ++in_off_[a.head + 1];
            ++out_off_[a.tail + 1];
        }
        for (int32_t v = 0; v < n; ++v) {
            in_off_[v + 1] += in_off_[v];
            out_off_[v + 1] += out_off_[v];
        }
        in_arc_.resize(g_->arcs.size());
        out_arc_.resize(g_->arcs.size());
        std::vector<int32_t> ip(in_off_.begin(), in_off_.end() - 1);
        std::vector<int32_t> op(out_off_.begin(), out_off_.end() - 1);
        for (int32_t e = 0; e < g_->m(); ++e) {
            in_arc_[ip[g_->arcs[e].head]++] = e;
            out_arc_[op[g_->arcs[e].tail]++] = e;
        }
        stamp_.assign(n, 0);
        epoch_ = 0;
    }

    void mark_subtree(int32_t v) {
        ++epoch_;
        subtree_.clear();
        dfs_.clear();
        dfs_.push_back(v);
        while (!dfs_.empty()) {
            int32_t w = dfs_.back();
            dfs_.pop_back();
            stamp_[w] = epoch_;
            subtree_.push_back(w);
            for (int32_t c : tree_.children[w])
                dfs_.push_back(c);
        }
    }

    const BasicGraph<C>* g_;
    PathTree<C> tree_;
    Rational lambda_;
    FibHeap heap_;
    std::vector<HeapHandle> handles_;
    std::vector<int32_t> in_off_, in_arc_, out_off_, out_arc_;
    std::vector<int32_t> stamp_;
    int32_t epoch_ = 0;
    std::vector<int32_t> subtree_, dfs_;
    std::vector<std::vector<LogEntry>> log_;
    std::vector<Rational> breakpoints_;
    std::vector<int64_t> vertex_changes_;
    int64_t pivot_count_ = 0;
    int64_t path_change_count_ = 0;
};

template <class C>
InitialTreeResult<C> initial_tree(const BasicGraph<C>& g) {
    const int32_t n = g.n;
    if (!g.has_source())
        fail(errc::invalid_argument, "graph has no source");
    InitialTreeResult<C> out;
    std::vector<char> reached(n, 0);
    std::vector<int64_t> dd(n, 0);
    std::vector<C> dc(n);
    std::vector<int32_t> pred(n, -1);
    reached[g.source] = 1;
    dc[g.source] = C{};

    int32_t last_changed = -1;
    for (int32_t round = 0; round <= n; ++round) {
        last_changed = -1;
        for (int32_t e = 0; e < g.m(); ++e) {
            const auto& a = g.arcs[e];
            if (!reached[a.tail])
                continue;
            int64_t nd = dd[a.tail] + a.delta();
            C nc = CostOps<C>::add(dc[a.tail], a.cost);
            bool better = !reached[a.head] || nd < dd[a.head] ||
                          (nd == dd[a.head] && nc < dc[a.head]);
            if (better) {
                reached[a.head] = 1;
                dd[a.head] = nd;
                dc[a.head] = nc;
                pred[a.head] = e;
                last_changed = a.head;
            }
        }
        if (last_changed < 0)
            break;
    }

    if (last_changed >= 0) {
        // an improvement in round n proves a zero-weight negative-cost cycle;
        // walk predecessors n steps to land on it, then collect it
        int32_t v = last_changed;
        for (int32_t i = 0; i < n; ++i)
            v = g.arcs[pred[v]].tail;
        std::vector<int32_t> cycle;
        int32_t w = v;
        do {
            cycle.push_back(pred[w]);
            w = g.arcs[pred[w]].tail;
        } while (w != v);
        std::reverse(cycle.begin(), cycle.end());
        out.negative_cycle = std::move(cycle);
        return out;
    }

    for (int32_t v = 0; v < n; ++v)
        if (!reached[v])
            fail(errc::unreachable_vertex, "unreachable vertex " + std::to_string(v + 1));

    PathTree<C> t;
    t.parent_edge.assign(n, -1);
    t.cost = std::move(dc);
    t.pcount = std::move(dd);
    t.children.assign(n, {});
    for (int32_t v = 0; v < n; ++v) {
        if (v == g.source)
            continue;
        t.parent_edge[v] = pred[v];
        t.children[g.arcs[pred[v]].tail].push_back(v);
    }
    out.tree = std::move(t);
    return out;
}

// Runs the pivot loop to exhaustion from the initial tree. With dedup set,
// collapses runs of equal breakpoints (degenerate ties) after the fact.
template <class C>
Solution solve(const BasicGraph<C>& g, bool dedup = false) {
    Solution sol;
    sol.parent_log.assign(g.n, {});
    sol.vertex_changes.assign(g.n, 0);
    auto init = initial_tree(g);
    if (!init.tree) {
        sol.lambda_star = Rational::minus_inf();
        sol.minus_inf_cycle = std::move(init.negative_cycle);
        return sol;
    }
    Solver<C> s(g, std::move(*init.tree), Rational::minus_inf());
    for (;;) {
        PivotOutcome o = s.pivot_once();
        if (o.kind == PivotKind::pivoted)
            continue;
        if (o.kind == PivotKind::cycle_found) {
            sol.lambda_star = o.lambda;
            sol.terminal_cycle = std::move(o.cycle);
        } else {
            sol.lambda_star = Rational::plus_inf();
        }
        break;
    }
    sol.breakpoints = s.breakpoints();
    sol.parent_log = s.parent_log();
    sol.pivot_count = s.pivots();
    sol.path_change_count = s.path_changes();
    sol.vertex_changes = s.per_vertex_changes();
    if (dedup) {
        auto last = std::unique(sol.breakpoints.begin(), sol.breakpoints.end());
        sol.breakpoints.erase(last, sol.breakpoints.end());
    }
    return sol;
}

// Rebuilds the tree valid at lambda from the compressed log. At a breakpoint
// the post-pivot parent is returned. lambda must not exceed lambda_star.
template <class C>
PathTree<C> tree_at(const BasicGraph<C>& g, const Solution& sol, const Rational& lambda) {
    if (lambda.is_plus_inf())
        fail(errc::invalid_argument, "lambda must be finite or -inf");
    if (Rational::cmp(lambda, sol.lambda_star) > 0)
        fail(errc::invalid_argument, "lambda beyond lambda_star");
    if (sol.lambda_star.is_minus_inf())
        fail(errc::invalid_argument, "no tree exists: lambda_star is -inf");
    const int32_t n = g.n;
    if (static_cast<int32_t>(sol.parent_log.size()) != n)
        fail(errc::invalid_argument, "solution does not match graph");

    PathTree<C> t;
    t.parent_edge.assign(n, -1);
    t.cost.assign(n, C{});
    t.pcount.assign(n, 0);
    t.children.assign(n, {});
    int32_t root = -1;
    for (int32_t v = 0; v < n; ++v) {
        const auto& log = sol.parent_log[v];
        // last entry with entry.lambda <= lambda
        size_t lo = 0, hi = log.size();
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            if (Rational::cmp(log[mid].lambda, lambda) <= 0)
                lo = mid;
            else
                hi = mid;
        }
        if (log.empty() || Rational::cmp(log[lo].lambda, lambda) > 0)
            fail(errc::invalid_argument, "log has no entry at lambda");
        t.parent_edge[v] = log[lo].edge;
        if (log[lo].edge < 0)
            root = v;
        else
            t.children[g.arcs[log[lo].edge].tail].push_back(v);
    }
    if (root < 0)
        fail(errc::invalid_argument, "log has no root");
    // accumulate costs top-down
    std::vector<int32_t> stack{root};
    int32_t seen = 0;
    while (!stack.empty()) {
        int32_t w = stack.back();
        stack.pop_back();
        ++seen;
        for (int32_t c : t.children[w]) {
            const auto& a = g.arcs[t.parent_edge[c]];
            t.cost[c] = CostOps<C>::add(t.cost[w], a.cost);
            t.pcount[c] = t.pcount[w] + a.delta();
            stack.push_back(c);
        }
    }
    if (seen != n)
        fail(errc::invalid_argument, "log entries do not form a tree");
    return t;
}

} // namespace psp
