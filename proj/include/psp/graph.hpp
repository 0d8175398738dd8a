// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/error.hpp"
#include "psp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace psp {

// Directed multigraph arc. `param` marks the arc as parameterized: its cost in
// G_lambda is cost - lambda * weight. Non-parameterized arcs keep cost as-is
// (weight then only matters for ratio-mode bookkeeping, where it is still
// stored but contributes zero to delta).
template <class C>
struct BasicArc {
    int32_t tail = 0;
    int32_t head = 0;
    C cost{};
    bool param = true;
    int64_t weight = 1;

    // parameterized-weight contribution of this arc to any path containing it
    int64_t delta() const { return param ? weight : 0; }

    friend bool operator==(const BasicArc&, const BasicArc&) = default;
};

// Vertices are 0-based internally; the text format is 1-based.
// source == -1 means "no source recorded".
template <class C>
struct BasicGraph {
    int32_t n = 0;
    std::vector<BasicArc<C>> arcs;
    int32_t source = -1;

    int32_t m() const { return static_cast<int32_t>(arcs.size()); }
    bool has_source() const { return source >= 0; }

    friend bool operator==(const BasicGraph&, const BasicGraph&) = default;
};

using Arc = BasicArc<int64_t>;
using Graph = BasicGraph<int64_t>;
using RArc = BasicArc<Rational>;
using RGraph = BasicGraph<Rational>;

// old vertex id -> new vertex id, total and surjective
using VertexMap = std::vector<int32_t>;

// contract_cycle output: the contracted graph plus enough bookkeeping to carry
// trees, cycles and statistics across the contraction.
//   vmap:        old vertex -> new vertex (every cycle vertex -> merged id)
//   merged:      the new id all cycle vertices map to
//   edge_origin: new arc index -> old arc index
//   edge_image:  old arc index -> new arc index, -1 if deleted as a self-loop
template <class C>
struct Contraction {
    BasicGraph<C> graph;
    VertexMap vmap;
    int32_t merged = -1;
    std::vector<int32_t> edge_origin;
    std::vector<int32_t> edge_image;
};

// Replaces the vertices of `cycle` (arc ids forming a simple directed cycle)
// by one merged vertex, deleting arcs that become self-loops and retaining
// parallel arcs. Surviving vertices are renumbered compactly in increasing old
// id order; the merged vertex gets the last id. A recorded source on a cycle
// vertex moves to the merged vertex.
template <class C>
Contraction<C> contract_cycle(const BasicGraph<C>& g, const std::vector<int32_t>& cycle) {
    const int32_t n = g.n;
    if (cycle.empty())
        fail(errc::invalid_argument, "empty cycle");
    std::vector<char> on_cycle(n, 0);
    {
        // verify the arc ids chain head-to-tail through distinct vertices
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < cycle.size(); ++i) {
            int32_t id = cycle[i];
            if (id < 0 || id >= g.m())
                fail(errc::invalid_argument, "cycle arc id out of range");
            const auto& a = g.arcs[id];
            const auto& next = g.arcs[cycle[(i + 1) % cycle.size()]];
            if (a.head != next.tail)
                fail(errc::invalid_argument, "arc list is not a cycle");
            if (seen[a.tail])
                fail(errc::invalid_argument, "cycle revisits a vertex");
            seen[a.tail] = 1;
            on_cycle[a.tail] = 1;
        }
    }

    Contraction<C> out;
    out.vmap.assign(n, -1);
    int32_t next_id = 0;
    for (int32_t v = 0; v < n; ++v)
        if (!on_cycle[v])
            out.vmap[v] = next_id++;
    out.merged = next_id;
    for (int32_t v = 0; v < n; ++v)
        if (on_cycle[v])
            out.vmap[v] = out.merged;

    out.graph.n = next_id + 1;
    out.edge_image.assign(g.arcs.size(), -1);
    for (int32_t id = 0; id < g.m(); ++id) {
        const auto& a = g.arcs[id];
        if (on_cycle[a.tail] && on_cycle[a.head])
            continue; // self-loop after merge
        BasicArc<C> b = a;
        b.tail = out.vmap[a.tail];
        b.head = out.vmap[a.head];
        out.edge_image[id] = static_cast<int32_t>(out.graph.arcs.size());
        out.edge_origin.push_back(id);
        out.graph.arcs.push_back(b);
    }
    if (g.has_source())
        out.graph.source = out.vmap[g.source];
    return out;
}

// Text format I/O and random generation (64-bit integer costs only).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Samples m distinct ordered pairs (u,v), u != v, uniformly without
// replacement; costs are independent uniform integers in [cost_lo, cost_hi];
// every arc is parameterized with weight 1. Deterministic in `seed`.
Graph random_graph(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi, uint64_t seed);

// In+out degree of the busiest vertex; 0 for arcless graphs.
template <class C>
int64_t max_degree(const BasicGraph<C>& g) {
    std::vector<int64_t> deg(g.n, 0);
    for (const auto& a : g.arcs) {
        ++deg[a.tail];
        ++deg[a.head];
    }
    int64_t best = 0;
    for (int64_t d : deg)
        best = best < d ? d : best;
    return best;
}

} // namespace psp
