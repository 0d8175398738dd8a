// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/balance.hpp"

#include <algorithm>

namespace psp {

MinBalancer::MinBalancer(const Graph& g) : n_orig_(g.n) {
    if (g.n < 1)
        fail(errc::invalid_argument, "balance requires a nonempty graph");
    cur_.n = g.n;
    cur_.source = 0; // any vertex works as the root of the evolving tree
    cur_.arcs.reserve(g.arcs.size());
    for (const auto& a : g.arcs) {
        RArc b;
        b.tail = a.tail;
        b.head = a.head;
        b.cost = Rational(a.cost);
        b.param = true; // balance parameterizes every arc at weight 1
        b.weight = 1;
        cur_.arcs.push_back(b);
    }
    map_.resize(n_orig_);
    for (int32_t v = 0; v < n_orig_; ++v)
        map_[v] = v;
    edge_origin_.resize(cur_.arcs.size());
    for (size_t e = 0; e < edge_origin_.size(); ++e)
        edge_origin_[e] = static_cast<int32_t>(e);
    total_.assign(n_orig_, Rational(0));
    offset_ = Rational(0);

    InitialTreeResult<Rational> init;
    try {
        init = initial_tree(cur_);
    } catch (const Error& e) {
        if (e.code() == errc::unreachable_vertex)
            fail(errc::not_strongly_connected, "graph is not strongly connected");
        throw;
    }
    if (!init.tree)
        fail(errc::invalid_argument, "internal: -inf with every arc parameterized");
    solver_ = std::make_unique<Solver<Rational>>(cur_, std::move(*init.tree),
                                                 Rational::minus_inf());
}

MinBalancer::~MinBalancer() = default;

BalanceEvent MinBalancer::step() {
    BalanceEvent ev;
    if (done_)
        return ev;
    if (cur_.n == 1) {
        pivots_ += solver_->pivots();
        path_changes_ += solver_->path_changes();
        done_ = true;
        return ev;
    }
    PivotOutcome o = solver_->pivot_once();
    switch (o.kind) {
        case PivotKind::pivoted:
            ev.kind = BalanceStep::pivoted;
            ev.pivot = std::move(o);
            return ev;
        case PivotKind::no_more_pivots:
            fail(errc::not_strongly_connected, "graph is not strongly connected");
        case PivotKind::cycle_found:
            break;
    }
    ev.kind = BalanceStep::contracted;
    contract(o);
    ev.pivot = std::move(o);
    return ev;
}

void MinBalancer::contract(const PivotOutcome& found) {
    const Rational& lam = found.lambda;
    const PathTree<Rational>& t = solver_->tree();

    // shortest-path potential of the current level at its lambda*
    Potential pi(cur_.n);
    for (int32_t v = 0; v < cur_.n; ++v)
        pi[v] = t.cost[v] - lam * Rational(t.pcount[v]);
    for (int32_t o = 0; o < n_orig_; ++o)
        total_[o] = total_[o] + pi[map_[o]];

    ContractionRecord rec;
    rec.lambda = offset_ + lam;
    rec.cycle.reserve(found.cycle.size());
    for (int32_t e : found.cycle)
        rec.cycle.push_back(edge_origin_[e]);
    trace_.push_back(std::move(rec));
    offset_ = offset_ + lam;

    // fold: subtract lambda* from every (parameterized, weight-1) arc and
    // apply the potential; all costs become nonnegative, tree and cycle arcs
    // exactly zero
    RGraph folded = cur_;
    for (auto& a : folded.arcs) {
        a.cost = a.cost - lam + pi[a.tail] - pi[a.head];
        if (a.cost < Rational(0))
            fail(errc::invalid_argument, "internal: negative folded cost");
    }

    Contraction<Rational> ct = contract_cycle(folded, found.cycle);

    // T/C: drop the cycle vertices, re-root their children at the merged
    // vertex; tree arcs all have folded cost zero
    std::vector<char> on_cycle(cur_.n, 0);
    for (int32_t e : found.cycle)
        on_cycle[folded.arcs[e].tail] = 1;
    const int32_t top = found.vertex; // head of the pivot arc, topmost on the cycle

    PathTree<Rational> nt;
    nt.parent_edge.assign(ct.graph.n, -1);
    nt.cost.assign(ct.graph.n, Rational(0));
    nt.pcount.assign(ct.graph.n, 0);
    nt.children.assign(ct.graph.n, {});
    auto adopt = [&](int32_t nv, int32_t old_parent_edge) {
        if (old_parent_edge < 0)
            return; // root stays root
        int32_t ne = ct.edge_image[old_parent_edge];
        if (ne < 0)
            fail(errc::invalid_argument, "internal: tree arc deleted by contraction");
        if (!(ct.graph.arcs[ne].cost == Rational(0)))
            fail(errc::invalid_argument, "internal: nonzero tree arc after fold");
        nt.parent_edge[nv] = ne;
        nt.children[ct.graph.arcs[ne].tail].push_back(nv);
    };
    for (int32_t v = 0; v < cur_.n; ++v)
        if (!on_cycle[v])
            adopt(ct.vmap[v], t.parent_edge[v]);
    adopt(ct.merged, t.parent_edge[top]);

    // recompute path weights top-down
    {
        int32_t root = ct.graph.source;
        std::vector<int32_t> stack{root};
        int32_t seen = 0;
        while (!stack.empty()) {
            int32_t w = stack.back();
            stack.pop_back();
            ++seen;
            for (int32_t c : nt.children[w]) {
                nt.pcount[c] = nt.pcount[w] + ct.graph.arcs[nt.parent_edge[c]].delta();
                stack.push_back(c);
            }
        }
        if (seen != ct.graph.n)
            fail(errc::invalid_argument, "internal: contracted tree is not spanning");
    }

    for (int32_t o = 0; o < n_orig_; ++o)
        map_[o] = ct.vmap[map_[o]];
    std::vector<int32_t> new_origin(ct.edge_origin.size());
    for (size_t e = 0; e < ct.edge_origin.size(); ++e)
        new_origin[e] = edge_origin_[ct.edge_origin[e]];
    edge_origin_ = std::move(new_origin);

    pivots_ += solver_->pivots();
    path_changes_ += solver_->path_changes();
    solver_.reset();
    cur_ = std::move(ct.graph);
    solver_ = std::make_unique<Solver<Rational>>(cur_, std::move(nt), Rational(0));
}

BalanceResult MinBalancer::take_result() {
    if (!done_)
        fail(errc::invalid_argument, "balance run not finished");
    BalanceResult r;
    r.potential.resize(n_orig_);
    for (int32_t v = 0; v < n_orig_; ++v)
        r.potential[v] = total_[v] - total_[0];
    r.trace = trace_;
    r.contraction_count = static_cast<int64_t>(trace_.size());
    r.pivots = pivots_;
    r.path_changes = path_changes_;
    return r;
}

BalanceResult min_balance(const Graph& g) {
    MinBalancer b(g);
    while (!b.done())
        b.step();
    return b.take_result();
}

} // namespace psp
