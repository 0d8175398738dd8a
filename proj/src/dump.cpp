// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp/dump.hpp"

namespace psp {

namespace {

std::string edge_str(int32_t e) { return e < 0 ? std::string("-") : std::to_string(e + 1); }

void append_ids(std::string& out, const std::vector<int32_t>& ids) {
    for (int32_t e : ids) {
        out += ' ';
        out += std::to_string(e + 1);
    }
}

} // namespace

std::string dump_solution(const Solution& sol, bool include_log) {
    std::string out;
    for (size_t i = 0; i < sol.breakpoints.size(); ++i)
        out += std::to_string(i + 1) + " " + sol.breakpoints[i].str() + "\n";
    if (include_log) {
        for (size_t v = 0; v < sol.parent_log.size(); ++v)
            for (const LogEntry& ent : sol.parent_log[v])
                out += "v " + std::to_string(v + 1) + " " + ent.lambda.str() + " " +
                       edge_str(ent.edge) + "\n";
    }
    out += "lambda_star " + sol.lambda_star.str() + "\n";
    return out;
}

std::string dump_cycle_result(const std::optional<CycleResult>& r) {
    if (!r)
        return "lambda_star inf\n";
    std::string out = "lambda_star " + r->mean.str() + "\n";
    if (!r->cycle.empty()) {
        out += "cycle";
        append_ids(out, r->cycle);
        out += "\n";
    }
    return out;
}

std::string dump_balance(const BalanceResult& r) {
    std::string out;
    for (size_t v = 0; v < r.potential.size(); ++v)
        out += "pi " + std::to_string(v + 1) + " " + r.potential[v].str() + "\n";
    out += "contractions " + std::to_string(r.contraction_count) + "\n";
    for (const ContractionRecord& rec : r.trace) {
        out += "cycle " + rec.lambda.str();
        append_ids(out, rec.cycle);
        out += "\n";
    }
    return out;
}

std::string dump_cert_report(const CertReport& rep) {
    std::string out = std::string("certify ") + (rep.passed ? "passed" : "failed") + " " +
                      std::to_string(rep.checks) + "\n";
    for (const std::string& f : rep.failures)
        out += "failure: " + f + "\n";
    return out;
}

} // namespace psp
