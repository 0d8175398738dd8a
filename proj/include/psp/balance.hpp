// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/cycles.hpp"
#include "psp/graph.hpp"
#include "psp/parametric.hpp"

#include <memory>
#include <vector>

namespace psp {

// Reduced-cost graph c^p(e) = c(e) + p[tail] - p[head]. Costs widen to
// Rational: potentials are generally non-integer.
template <class C>
RGraph apply_potential(const BasicGraph<C>& g, const Potential& p) {
    if (static_cast<int32_t>(p.size()) != g.n)
        fail(errc::invalid_argument, "potential size does not match graph");
    RGraph out;
    out.n = g.n;
    out.source = g.source;
    out.arcs.reserve(g.arcs.size());
    for (const auto& a : g.arcs) {
        RArc b;
        b.tail = a.tail;
        b.head = a.head;
        b.cost = CostOps<C>::to_rational(a.cost) + p[a.tail] - p[a.head];
        b.param = a.param;
        b.weight = a.weight;
        out.arcs.push_back(b);
    }
    return out;
}

struct ContractionRecord {
    Rational lambda;            // global value at this contraction, nondecreasing
    std::vector<int32_t> cycle; // arc ids of the input graph
};

struct BalanceResult {
    Potential potential; // over input vertices, normalized so potential[0] = 0
    std::vector<ContractionRecord> trace;
    int64_t contraction_count = 0;
    int64_t pivots = 0;
    int64_t path_changes = 0;
};

enum class BalanceStep { pivoted, contracted, done };

struct BalanceEvent {
    BalanceStep kind = BalanceStep::done;
    // pivoted / contracted: the solver outcome that caused the event; for
    // contracted, pivot.lambda is the local value and pivot.cycle uses
    // current-level arc ids
    PivotOutcome pivot;
};

// Contract-and-continue balance driver, exposed step by step so tests can
// observe the state between pivots and contractions. Level graphs carry
// rational costs; after the first contraction all costs are nonnegative with
// tree and cycle arcs exactly zero.
class MinBalancer {
  public:
    explicit MinBalancer(const Graph& g);
    ~MinBalancer();
    // the solver aliases cur_, so the balancer must stay put
    MinBalancer(const MinBalancer&) = delete;
    MinBalancer& operator=(const MinBalancer&) = delete;

    BalanceEvent step();

    bool done() const { return done_; }
    const RGraph& current_graph() const { return cur_; }
    const VertexMap& vertex_map() const { return map_; } // input vertex -> current
    const std::vector<int32_t>& edge_origin() const { return edge_origin_; }
    const Solver<Rational>& solver() const { return *solver_; }
    const Rational& lambda_offset() const { return offset_; }

    // valid once done(): potential over input vertices plus the trace
    BalanceResult take_result();

  private:
    void contract(const PivotOutcome& found);

    int32_t n_orig_;
    RGraph cur_;
    std::unique_ptr<Solver<Rational>> solver_;
    VertexMap map_;
    std::vector<int32_t> edge_origin_;
    Potential total_;
    Rational offset_;
    std::vector<ContractionRecord> trace_;
    int64_t pivots_ = 0;
    int64_t path_changes_ = 0;
    bool done_ = false;
};

// Runs the balance loop to completion: repeatedly finds the minimum mean
// cycle, applies the shortest-path potential, contracts, and continues on the
// rebuilt state until one vertex remains. Requires a strongly connected input.
BalanceResult min_balance(const Graph& g);

struct BalanceCheck {
    bool balanced = true;
    uint32_t subset = 0; // bitmask of the violating subset
    Rational min_in;
    Rational min_out;
};

// Exhaustive subset audit of g under potential p: every proper nonempty
// vertex subset must have equal minimum entering and leaving reduced cost.
// Exponential; refuses n > 20.
template <class C>
BalanceCheck check_balanced(const BasicGraph<C>& g, const Potential& p) {
    if (g.n > 20)
        fail(errc::too_large, "exhaustive balance check limited to 20 vertices");
    BalanceCheck out;
    if (g.n <= 1)
        return out;
    RGraph r = apply_potential(g, p);
    const uint32_t full = (1u << g.n) - 1;
    for (uint32_t s = 1; s < full; ++s) {
        Rational min_in = Rational::plus_inf();
        Rational min_out = Rational::plus_inf();
        for (const auto& a : r.arcs) {
            bool tin = (s >> a.tail) & 1;
            bool hin = (s >> a.head) & 1;
            if (!tin && hin) {
                if (a.cost < min_in)
                    min_in = a.cost;
            } else if (tin && !hin) {
                if (a.cost < min_out)
                    min_out = a.cost;
            }
        }
        if (min_in != min_out) {
            out.balanced = false;
            out.subset = s;
            out.min_in = min_in;
            out.min_out = min_out;
            return out;
        }
    }
    return out;
}

} // namespace psp
