// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/graph.hpp"
#include "psp/rng.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace psp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int64_t parse_int(std::string_view tok, int line, const char* what) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("non-integer ") + what + " '" + std::string(tok) + "'");
    return v;
}

int32_t parse_vertex(std::string_view tok, int line, int32_t n) {
    int64_t v = parse_int(tok, line, "vertex id");
    if (v < 1 || v > n)
        throw ParseError(line, "vertex id " + std::to_string(v) + " out of range");
    return static_cast<int32_t>(v - 1);
}

} // namespace

Graph parse_graph(const std::string& text) {
    Graph g;
    bool have_header = false;
    bool have_source = false;
    int64_t want_m = 0;
    int lineno = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "psp")
                throw ParseError(lineno, "malformed header, expected 'p psp <n> <m>'");
            int64_t n = parse_int(tok[2], lineno, "vertex count");
            want_m = parse_int(tok[3], lineno, "edge count");
            if (n < 0 || want_m < 0)
                throw ParseError(lineno, "negative count in header");
            if (n > (1 << 30))
                throw ParseError(lineno, "vertex count too large");
            g.n = static_cast<int32_t>(n);
            have_header = true;
        } else if (tok[0] == "s") {
            if (!have_header)
                throw ParseError(lineno, "source line before header");
            if (have_source)
                throw ParseError(lineno, "duplicate source line");
            if (tok.size() != 2)
                throw ParseError(lineno, "malformed source line");
            g.source = parse_vertex(tok[1], lineno, g.n);
            have_source = true;
        } else if (tok[0] == "a") {
            if (!have_header)
                throw ParseError(lineno, "arc line before header");
            if (g.m() >= want_m)
                throw ParseError(lineno, "edge count mismatch: more arcs than header declares");
            if (tok.size() != 6)
                throw ParseError(lineno, "malformed arc line, expected 'a <tail> <head> <cost> <param> <weight>'");
            Arc a;
            a.tail = parse_vertex(tok[1], lineno, g.n);
            a.head = parse_vertex(tok[2], lineno, g.n);
            if (a.tail == a.head)
                throw ParseError(lineno, "self-loop not permitted");
            a.cost = parse_int(tok[3], lineno, "cost");
            int64_t p = parse_int(tok[4], lineno, "param flag");
            if (p != 0 && p != 1)
                throw ParseError(lineno, "param flag must be 0 or 1");
            a.param = p == 1;
            a.weight = parse_int(tok[5], lineno, "weight");
            if (a.weight < 1)
                throw ParseError(lineno, "weight < 1");
            g.arcs.push_back(a);
        } else {
            throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw ParseError(lineno, "missing header");
    if (g.m() != want_m)
        throw ParseError(lineno, "edge count mismatch: header declares " + std::to_string(want_m) +
                                     ", got " + std::to_string(g.m()));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::string out;
    out += "p psp " + std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    if (g.has_source())
        out += "s " + std::to_string(g.source + 1) + "\n";
    for (const auto& a : g.arcs) {
        out += "a " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) + " " +
               std::to_string(a.cost) + " " + (a.param ? "1" : "0") + " " +
               std::to_string(a.weight) + "\n";
    }
    return out;
}

Graph random_graph(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi, uint64_t seed) {
    if (n < 0)
        fail(errc::invalid_argument, "negative vertex count");
    int64_t max_m = static_cast<int64_t>(n) * (n - 1);
    if (m < 0 || m > max_m)
        fail(errc::invalid_argument, "edge count must be in [0, n(n-1)]");
    if (cost_lo > cost_hi)
        fail(errc::invalid_argument, "cost_lo > cost_hi");

    std::mt19937_64 gen(seed);
    Graph g;
    g.n = n;
    g.arcs.reserve(static_cast<size_t>(m));

    // virtual Fisher-Yates over the n(n-1) possible arcs; only touched slots
    // are materialized
    std::unordered_map<int64_t, int64_t> slot;
    auto at = [&](int64_t i) {
        auto it = slot.find(i);
        return it == slot.end() ? i : it->second;
    };
    for (int64_t i = 0; i < m; ++i) {
        int64_t j = i + static_cast<int64_t>(draw_below(gen, static_cast<uint64_t>(max_m - i)));
        int64_t pick = at(j);
        slot[j] = at(i);
        int32_t u = static_cast<int32_t>(pick / (n - 1));
        int32_t r = static_cast<int32_t>(pick % (n - 1));
        int32_t v = r + (r >= u ? 1 : 0);
        Arc a;
        a.tail = u;
        a.head = v;
        a.cost = draw_range(gen, cost_lo, cost_hi);
        a.param = true;
        a.weight = 1;
        g.arcs.push_back(a);
    }
    return g;
}

} // namespace psp
