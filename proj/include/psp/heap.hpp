// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/error.hpp"
#include "psp/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace psp {

struct HeapPayload {
    int32_t vertex = -1;
    int32_t edge = -1;
};

// Refers to one stored item; stale after the item is deleted (generation
// counters catch reuse of freed slots).
struct HeapHandle {
    int32_t idx = -1;
    uint32_t gen = 0;
    bool valid() const { return idx >= 0; }
};

// Fibonacci heap keyed by (Rational, vertex id) lexicographically, so equal
// keys resolve to the smallest vertex and every observable result is
// deterministic. insert and decrease_key are O(1) amortized, delete_min is
// O(log n) amortized; reassign_key in the increasing direction is
// delete + insert and costs O(log n).
class FibHeap {
  public:
    HeapHandle insert(const Rational& key, HeapPayload pay) {
        int32_t i = alloc();
        Node& x = nodes_[i];
        x.key = key;
        x.pay = pay;
        add_root(i);
        if (min_ < 0 || less(i, min_))
            min_ = i;
        ++count_;
        return HeapHandle{i, nodes_[i].gen};
    }

    bool empty() const { return count_ == 0; }
    size_t size() const { return count_; }

    bool find_min(Rational& key, HeapPayload& pay) const {
        if (min_ < 0)
            return false;
        key = nodes_[min_].key;
        pay = nodes_[min_].pay;
        return true;
    }

    bool delete_min(Rational& key, HeapPayload& pay) {
        if (min_ < 0)
            return false;
        key = nodes_[min_].key;
        pay = nodes_[min_].pay;
        pop_min();
        return true;
    }

    // new_key must not exceed the current key
    void decrease_key(HeapHandle h, const Rational& new_key) {
        int32_t i = check(h);
        if (nodes_[i].key < new_key)
            fail(errc::invalid_argument, "decrease_key would increase the key");
        nodes_[i].key = new_key;
        sift(i);
    }

    // Replaces the key in either direction. Increases reinsert the item, so the
    // returned handle supersedes h.
    HeapHandle reassign_key(HeapHandle h, const Rational& new_key) {
        int32_t i = check(h);
        if (!(nodes_[i].key < new_key)) {
            nodes_[i].key = new_key;
            sift(i);
            return h;
        }
        HeapPayload pay = nodes_[i].pay;
        erase(h);
        return insert(new_key, pay);
    }

    void erase(HeapHandle h) {
        int32_t i = check(h);
        nodes_[i].below_all = true;
        sift(i);
        pop_min();
    }

    const Rational& key_of(HeapHandle h) const { return nodes_[check(h)].key; }
    const HeapPayload& payload_of(HeapHandle h) const { return nodes_[check(h)].pay; }

    // updates the determining edge; the vertex (and so the ordering) is fixed
    void set_edge(HeapHandle h, int32_t edge) { nodes_[check(h)].pay.edge = edge; }

    // total key comparisons performed, for complexity reporting
    uint64_t comparisons() const { return comparisons_; }

  private:
    struct Node {
        Rational key;
        HeapPayload pay;
        int32_t parent = -1;
        int32_t child = -1;
        int32_t left = -1;
        int32_t right = -1;
        int32_t degree = 0;
        uint32_t gen = 0;
        bool mark = false;
        bool alive = false;
        bool below_all = false; // transient erase flag, sorts under everything
    };

    int32_t alloc() {
        int32_t i;
        if (free_ >= 0) {
            i = free_;
            free_ = nodes_[i].right;
        } else {
            i = static_cast<int32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        Node& x = nodes_[i];
        x.parent = x.child = -1;
        x.degree = 0;
        x.mark = false;
        x.alive = true;
        x.below_all = false;
        return i;
    }

    void release(int32_t i) {
        nodes_[i].alive = false;
        ++nodes_[i].gen;
        nodes_[i].right = free_;
        free_ = i;
    }

    int32_t check(HeapHandle h) const {
        if (h.idx < 0 || h.idx >= static_cast<int32_t>(nodes_.size()) || !nodes_[h.idx].alive ||
            nodes_[h.idx].gen != h.gen)
            fail(errc::invalid_argument, "stale heap handle");
        return h.idx;
    }

    bool less(int32_t a, int32_t b) const {
        if (nodes_[a].below_all != nodes_[b].below_all)
            return nodes_[a].below_all;
        ++comparisons_;
        int c = Rational::cmp(nodes_[a].key, nodes_[b].key);
        if (c != 0)
            return c < 0;
        return nodes_[a].pay.vertex < nodes_[b].pay.vertex;
    }

    void add_root(int32_t i) {
        Node& x = nodes_[i];
        x.parent = -1;
        x.mark = false;
        if (roots_ < 0) {
            x.left = x.right = i;
            roots_ = i;
        } else {
            x.right = roots_;
            x.left = nodes_[roots_].left;
            nodes_[nodes_[roots_].left].right = i;
            nodes_[roots_].left = i;
        }
    }

    void unlink(int32_t i) {
        Node& x = nodes_[i];
        nodes_[x.left].right = x.right;
        nodes_[x.right].left = x.left;
    }

    // moves a decreased node toward the root list, cascading cuts
    void sift(int32_t i) {
        int32_t p = nodes_[i].parent;
        if (p >= 0 && less(i, p)) {
            cut(i, p);
            cascading_cut(p);
        }
        if (less(i, min_))
            min_ = i;
    }

    void cut(int32_t i, int32_t p) {
        if (nodes_[p].child == i)
            nodes_[p].child = nodes_[i].right != i ? nodes_[i].right : -1;
        unlink(i);
        --nodes_[p].degree;
        add_root(i);
    }

    void cascading_cut(int32_t i) {
        int32_t p = nodes_[i].parent;
        while (p >= 0) {
            if (!nodes_[i].mark) {
                nodes_[i].mark = true;
                return;
            }
            cut(i, p);
            i = p;
            p = nodes_[i].parent;
        }
    }

    void pop_min() {
        int32_t z = min_;
        // promote children
        int32_t c = nodes_[z].child;
        if (c >= 0) {
            int32_t it = c;
            do {
                int32_t next = nodes_[it].right;
                add_root_detached(it);
                it = next;
            } while (it != c);
        }
        nodes_[z].child = -1;
        if (nodes_[z].right == z) {
            roots_ = -1;
        } else {
            if (roots_ == z)
                roots_ = nodes_[z].right;
            unlink(z);
        }
        release(z);
        --count_;
        consolidate();
    }

    // like add_root but for nodes detached from a child ring during pop_min
    void add_root_detached(int32_t i) { pending_.push_back(i); }

    void consolidate() {
        // gather all roots (current ring plus promoted children)
        scratch_.clear();
        if (roots_ >= 0) {
            int32_t it = roots_;
            do {
                scratch_.push_back(it);
                it = nodes_[it].right;
            } while (it != roots_);
        }
        for (int32_t i : pending_) {
            nodes_[i].parent = -1;
            nodes_[i].mark = false;
            scratch_.push_back(i);
        }
        pending_.clear();
        roots_ = -1;
        min_ = -1;
        if (scratch_.empty())
            return;

        degree_slot_.assign(96, -1);
        for (int32_t x : scratch_) {
            int32_t d = nodes_[x].degree;
            while (degree_slot_[d] >= 0) {
                int32_t y = degree_slot_[d];
                degree_slot_[d] = -1;
                if (less(y, x))
                    std::swap(x, y);
                // y becomes a child of x
                Node& cy = nodes_[y];
                cy.parent = x;
                cy.mark = false;
                if (nodes_[x].child < 0) {
                    nodes_[x].child = y;
                    cy.left = cy.right = y;
                } else {
                    int32_t c0 = nodes_[x].child;
                    cy.right = c0;
                    cy.left = nodes_[c0].left;
                    nodes_[nodes_[c0].left].right = y;
                    nodes_[c0].left = y;
                }
                ++nodes_[x].degree;
                d = nodes_[x].degree;
            }
            degree_slot_[d] = x;
        }
        for (int32_t x : degree_slot_) {
            if (x < 0)
                continue;
            add_root(x);
            if (min_ < 0 || less(x, min_))
                min_ = x;
        }
    }

    std::vector<Node> nodes_;
    std::vector<int32_t> pending_;
    std::vector<int32_t> scratch_;
    std::vector<int32_t> degree_slot_;
    int32_t roots_ = -1;
    int32_t min_ = -1;
    int32_t free_ = -1;
    size_t count_ = 0;
    mutable uint64_t comparisons_ = 0;
};

} // namespace psp
