// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psp/heap.hpp"
#include "psp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

using namespace psp;

namespace {

struct ModelItem {
    Rational key;
    int32_t vertex;
};

// linear-scan reference with the same (key, vertex) tie-break
struct NaiveHeap {
    std::vector<ModelItem> items;

    size_t find_min_index() const {
        size_t best = 0;
        for (size_t i = 1; i < items.size(); ++i) {
            int c = Rational::cmp(items[i].key, items[best].key);
            if (c < 0 || (c == 0 && items[i].vertex < items[best].vertex))
                best = i;
        }
        return best;
    }
};

Rational random_key(std::mt19937_64& gen) {
    if (draw_below(gen, 20) == 0)
        return Rational::plus_inf();
    return Rational(draw_range(gen, -100, 100), draw_range(gen, 1, 10));
}

} // namespace

TEST_CASE("basic insert and find_min") {
    FibHeap h;
    Rational k;
    HeapPayload p;
    CHECK(!h.find_min(k, p));

    h.insert(Rational(5), {1, -1});
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(5));
    CHECK(p.vertex == 1);

    h.insert(Rational::plus_inf(), {2, -1});
    h.insert(Rational(3), {3, -1});
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(3));
    CHECK(p.vertex == 3);
}

TEST_CASE("find_min breaks key ties by vertex id") {
    FibHeap h;
    h.insert(Rational(2), {7, -1});
    h.insert(Rational(7), {1, -1});
    h.insert(Rational(2), {3, -1});
    Rational k;
    HeapPayload p;
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(2));
    CHECK(p.vertex == 3);
}

TEST_CASE("decrease_key lowers and rejects increases") {
    FibHeap h;
    h.insert(Rational(5), {1, -1});
    HeapHandle h7 = h.insert(Rational(7), {2, -1});
    h.decrease_key(h7, Rational(3));
    Rational k;
    HeapPayload p;
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(3));
    CHECK(p.vertex == 2);

    h.decrease_key(h7, Rational(3)); // equal value is a no-op success
    CHECK(h.key_of(h7) == Rational(3));
    CHECK_THROWS_AS(h.decrease_key(h7, Rational(4)), Error);
}

TEST_CASE("reassign_key moves in both directions") {
    FibHeap h;
    HeapHandle h3 = h.insert(Rational(3), {1, -1});
    h.insert(Rational(5), {2, -1});
    h3 = h.reassign_key(h3, Rational(9));
    Rational k;
    HeapPayload p;
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(5));
    CHECK(p.vertex == 2);

    HeapHandle same = h.reassign_key(h3, Rational(9)); // identity keeps the handle
    CHECK(same.idx == h3.idx);
    CHECK(same.gen == h3.gen);
    CHECK(h.key_of(same) == Rational(9));
}

TEST_CASE("handles go stale after erase and after increasing reassign") {
    FibHeap h;
    HeapHandle a = h.insert(Rational(1), {1, -1});
    h.erase(a);
    CHECK_THROWS_AS(h.key_of(a), Error);
    CHECK(h.empty());

    HeapHandle b = h.insert(Rational(2), {2, -1});
    HeapHandle b2 = h.reassign_key(b, Rational(8)); // increase = erase + insert
    CHECK_THROWS_AS(h.key_of(b), Error);
    CHECK(h.key_of(b2) == Rational(8));
}

TEST_CASE("delete_min drains in sorted deterministic order") {
    FibHeap h;
    h.insert(Rational(1), {1, -1});
    h.insert(Rational(2), {2, -1});
    Rational k;
    HeapPayload p;
    REQUIRE(h.delete_min(k, p));
    CHECK(k == Rational(1));
    REQUIRE(h.delete_min(k, p));
    CHECK(k == Rational(2));
    CHECK(!h.delete_min(k, p));

    // equal keys drain by ascending vertex id
    std::mt19937_64 gen(5);
    std::vector<int32_t> ids(50);
    for (int32_t i = 0; i < 50; ++i)
        ids[i] = i;
    for (int32_t i = 49; i > 0; --i)
        std::swap(ids[i], ids[draw_below(gen, static_cast<uint64_t>(i) + 1)]);
    for (int32_t v : ids)
        h.insert(Rational(42), {v, -1});
    for (int32_t i = 0; i < 50; ++i) {
        REQUIRE(h.delete_min(k, p));
        CHECK(p.vertex == i);
    }
}

TEST_CASE("heapsort of 1e4 random keys equals the sort oracle") {
    std::mt19937_64 gen(11);
    FibHeap h;
    std::vector<ModelItem> ref;
    for (int32_t i = 0; i < 10000; ++i) {
        Rational key(draw_range(gen, -1000000, 1000000), draw_range(gen, 1, 1000));
        h.insert(key, {i, -1});
        ref.push_back({key, i});
    }
    std::sort(ref.begin(), ref.end(), [](const ModelItem& a, const ModelItem& b) {
        int c = Rational::cmp(a.key, b.key);
        return c != 0 ? c < 0 : a.vertex < b.vertex;
    });
    Rational k;
    HeapPayload p;
    for (const ModelItem& it : ref) {
        REQUIRE(h.delete_min(k, p));
        REQUIRE(k == it.key);
        REQUIRE(p.vertex == it.vertex);
    }
    CHECK(h.empty());
}

TEST_CASE("model equivalence over 1e5 random operations") {
    std::mt19937_64 gen(20260819);
    FibHeap h;
    NaiveHeap model;
    std::map<int32_t, HeapHandle> handles;
    int32_t next_vertex = 0;

    auto check_min = [&] {
        Rational k;
        HeapPayload p;
        bool got = h.find_min(k, p);
        REQUIRE(got == !model.items.empty());
        if (!got)
            return;
        const ModelItem& want = model.items[model.find_min_index()];
        REQUIRE(k == want.key);
        REQUIRE(p.vertex == want.vertex);
    };

    for (int op = 0; op < 100000; ++op) {
        uint64_t r = draw_below(gen, 100);
        if (r < 35 || model.items.empty()) {
            Rational key = random_key(gen);
            int32_t v = next_vertex++;
            handles[v] = h.insert(key, {v, -1});
            model.items.push_back({key, v});
        } else if (r < 55) {
            // decrease a random live item (no-op when already below)
            size_t i = draw_below(gen, model.items.size());
            ModelItem& it = model.items[i];
            Rational nk = random_key(gen);
            if (nk < it.key) {
                h.decrease_key(handles[it.vertex], nk);
                it.key = nk;
            }
        } else if (r < 75) {
            size_t i = draw_below(gen, model.items.size());
            ModelItem& it = model.items[i];
            Rational nk = random_key(gen);
            handles[it.vertex] = h.reassign_key(handles[it.vertex], nk);
            it.key = nk;
        } else if (r < 90) {
            Rational k;
            HeapPayload p;
            REQUIRE(h.delete_min(k, p));
            size_t i = model.find_min_index();
            REQUIRE(k == model.items[i].key);
            REQUIRE(p.vertex == model.items[i].vertex);
            handles.erase(model.items[i].vertex);
            model.items.erase(model.items.begin() + static_cast<ptrdiff_t>(i));
        } else {
            size_t i = draw_below(gen, model.items.size());
            h.erase(handles[model.items[i].vertex]);
            handles.erase(model.items[i].vertex);
            model.items.erase(model.items.begin() + static_cast<ptrdiff_t>(i));
        }
        if (op % 16 == 0)
            check_min();
        REQUIRE(h.size() == model.items.size());
    }
    check_min();
}

TEST_CASE("plus-inf keys never shadow finite ones") {
    FibHeap h;
    for (int32_t i = 0; i < 64; ++i)
        h.insert(Rational::plus_inf(), {i, -1});
    h.insert(Rational(100), {64, -1});
    Rational k;
    HeapPayload p;
    REQUIRE(h.find_min(k, p));
    CHECK(k == Rational(100));
    REQUIRE(h.delete_min(k, p));
    REQUIRE(h.find_min(k, p));
    CHECK(k.is_plus_inf()); // only infinities remain
}

TEST_CASE("comparison count stays within the amortized profile") {
    // N inserts + N delete_mins; the count should track N log2 N with a small
    // constant. This is a measurement with generous slack, not a proof.
    std::mt19937_64 gen(3);
    FibHeap h;
    const int N = 10000;
    for (int32_t i = 0; i < N; ++i)
        h.insert(Rational(draw_range(gen, -1000000, 1000000)), {i, -1});
    uint64_t after_inserts = h.comparisons();
    CHECK(after_inserts <= static_cast<uint64_t>(2 * N)); // inserts compare O(1) each

    Rational k;
    HeapPayload p;
    while (h.delete_min(k, p)) {
    }
    double per_op = static_cast<double>(h.comparisons()) / N;
    MESSAGE("comparisons per insert+delete_min pair: " << per_op);
    CHECK(per_op <= 10 * std::log2(double(N)));
}
