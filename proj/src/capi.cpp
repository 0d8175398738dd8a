// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "psp.h"

#include "psp/balance.hpp"
#include "psp/bench.hpp"
#include "psp/cycles.hpp"
#include "psp/dump.hpp"
#include "psp/graph.hpp"
#include "psp/oracle.hpp"
#include "psp/parametric.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct psp_graph {
    psp::Graph g;
};

struct psp_solution {
    psp::Solution sol;
};

namespace {

thread_local std::string t_last_error;

psp_status to_status(psp::errc c) {
    switch (c) {
        case psp::errc::ok: return PSP_OK;
        case psp::errc::parse: return PSP_ERR_PARSE;
        case psp::errc::invalid_argument: return PSP_ERR_INVALID_ARGUMENT;
        case psp::errc::unreachable_vertex: return PSP_ERR_UNREACHABLE_VERTEX;
        case psp::errc::not_strongly_connected: return PSP_ERR_NOT_STRONGLY_CONNECTED;
        case psp::errc::too_large: return PSP_ERR_TOO_LARGE;
        case psp::errc::overflow: return PSP_ERR_OVERFLOW;
        case psp::errc::certification_failed: return PSP_ERR_CERTIFICATION_FAILED;
        case psp::errc::balance_check_failed: return PSP_ERR_BALANCE_CHECK_FAILED;
    }
    return PSP_ERR_INTERNAL;
}

template <class F>
psp_status guarded(F&& f) {
    try {
        return f();
    } catch (const psp::Error& e) {
        t_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PSP_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return PSP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

psp_status arg_error(const char* what) {
    t_last_error = what;
    return PSP_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* psp_last_error(void) { return t_last_error.c_str(); }

void psp_string_free(char* s) { std::free(s); }

psp_status psp_graph_parse(const char* text, psp_graph** out) {
    if (!text || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        auto* h = new psp_graph{psp::parse_graph(text)};
        *out = h;
        return PSP_OK;
    });
}

psp_status psp_graph_random(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi,
                            uint64_t seed, psp_graph** out) {
    if (!out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        auto* h = new psp_graph{psp::random_graph(n, m, cost_lo, cost_hi, seed)};
        *out = h;
        return PSP_OK;
    });
}

psp_status psp_graph_serialize(const psp_graph* g, char** out) {
    if (!g || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(psp::serialize_graph(g->g));
        return PSP_OK;
    });
}

void psp_graph_free(psp_graph* g) { delete g; }

int32_t psp_graph_n(const psp_graph* g) { return g ? g->g.n : 0; }

int64_t psp_graph_m(const psp_graph* g) { return g ? static_cast<int64_t>(g->g.arcs.size()) : 0; }

psp_status psp_parametric_solve(const psp_graph* g, int dedup, psp_solution** out) {
    if (!g || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        auto* h = new psp_solution{psp::solve(g->g, dedup != 0)};
        *out = h;
        return PSP_OK;
    });
}

psp_status psp_solution_dump(const psp_solution* sol, int include_log, char** out) {
    if (!sol || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(psp::dump_solution(sol->sol, include_log != 0));
        return PSP_OK;
    });
}

psp_status psp_solution_certify(const psp_graph* g, const psp_solution* sol, char** report) {
    if (!g || !sol || !report)
        return arg_error("null argument");
    *report = nullptr;
    return guarded([&] {
        psp::CertReport rep = psp::certify_solution(g->g, sol->sol);
        *report = dup_string(psp::dump_cert_report(rep));
        if (!rep.passed) {
            t_last_error = "certification failed";
            return PSP_ERR_CERTIFICATION_FAILED;
        }
        return PSP_OK;
    });
}

int64_t psp_solution_breakpoints(const psp_solution* sol) {
    return sol ? static_cast<int64_t>(sol->sol.breakpoints.size()) : 0;
}

psp_status psp_solution_lambda_star(const psp_solution* sol, char** out) {
    if (!sol || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(sol->sol.lambda_star.str());
        return PSP_OK;
    });
}

void psp_solution_free(psp_solution* sol) { delete sol; }

psp_status psp_mmc(const psp_graph* g, psp_mmc_algo algo, int ratio, int scc, int certify,
                   char** out) {
    if (!g || !out)
        return arg_error("null argument");
    *out = nullptr;
    if (algo != PSP_MMC_PARAMETRIC && algo != PSP_MMC_KARP && algo != PSP_MMC_BRUTE)
        return arg_error("unknown algorithm");
    if (certify && (algo != PSP_MMC_PARAMETRIC || scc))
        return arg_error("certification needs the plain parametric algorithm");
    if (ratio && algo == PSP_MMC_KARP)
        return arg_error("ratio mode is not available with the walk-table method");
    return guarded([&] {
        std::optional<psp::CycleResult> r;
        std::string report;
        bool cert_failed = false;
        if (scc) {
            psp::CycleMethod m = algo == PSP_MMC_PARAMETRIC ? psp::CycleMethod::parametric
                                 : algo == PSP_MMC_KARP     ? psp::CycleMethod::karp
                                                            : psp::CycleMethod::brute;
            r = psp::min_cycle_scc(g->g, m, ratio != 0);
        } else if (algo == PSP_MMC_PARAMETRIC) {
            psp::ReductionSolve rs = psp::solve_reduction(g->g, ratio != 0);
            r = std::move(rs.run.result);
            if (certify) {
                psp::CertReport rep = psp::certify_solution(rs.reduced, rs.solution);
                report = psp::dump_cert_report(rep);
                cert_failed = !rep.passed;
            }
        } else if (algo == PSP_MMC_KARP) {
            auto v = psp::min_mean_cycle_karp(g->g);
            if (v)
                r = psp::CycleResult{*v, {}, psp::CycleMethod::karp};
        } else {
            r = psp::brute_cycle(g->g, ratio != 0);
        }
        std::string text = psp::dump_cycle_result(r);
        text += report;
        *out = dup_string(text);
        if (cert_failed) {
            t_last_error = "certification failed";
            return PSP_ERR_CERTIFICATION_FAILED;
        }
        return PSP_OK;
    });
}

psp_status psp_balance(const psp_graph* g, int check, char** out) {
    if (!g || !out)
        return arg_error("null argument");
    *out = nullptr;
    return guarded([&] {
        psp::BalanceResult r = psp::min_balance(g->g);
        std::string text = psp::dump_balance(r);
        bool violated = false;
        if (check) {
            psp::BalanceCheck bc = psp::check_balanced(g->g, r.potential);
            if (bc.balanced) {
                text += "check balanced\n";
            } else {
                violated = true;
                text += "check violation in " + bc.min_in.str() + " out " + bc.min_out.str() +
                        " subset";
                for (int32_t v = 0; v < g->g.n; ++v)
                    if ((bc.subset >> v) & 1)
                        text += " " + std::to_string(v + 1);
                text += "\n";
            }
        }
        *out = dup_string(text);
        if (violated) {
            t_last_error = "balance check failed";
            return PSP_ERR_BALANCE_CHECK_FAILED;
        }
        return PSP_OK;
    });
}

psp_status psp_bench(psp_bench_mode mode, const char* points, int32_t trials, uint64_t seed,
                     char** csv, char** warnings) {
    if (!points || !csv)
        return arg_error("null argument");
    *csv = nullptr;
    if (warnings)
        *warnings = nullptr;
    if (mode != PSP_BENCH_MMC && mode != PSP_BENCH_BALANCE)
        return arg_error("unknown bench mode");
    return guarded([&] {
        psp::BenchConfig cfg;
        cfg.points = psp::parse_points(points);
        cfg.trials = trials > 0 ? trials : 0;
        cfg.seed = seed;
        cfg.mode = mode == PSP_BENCH_MMC ? psp::BenchMode::mmc : psp::BenchMode::balance;
        std::vector<psp::TrialRecord> recs = psp::run_trials(cfg);
        *csv = dup_string(psp::emit_csv(recs));
        if (warnings) {
            std::string w;
            for (const std::string& s : psp::trend_warnings(recs))
                w += s + "\n";
            *warnings = dup_string(w);
        }
        return PSP_OK;
    });
}

psp_status psp_degree_check(int32_t n, int64_t m, int32_t samples, uint64_t seed,
                            double* fraction) {
    if (!fraction)
        return arg_error("null argument");
    *fraction = 0.0;
    return guarded([&] {
        *fraction = psp::degree_check(n, m, samples, seed);
        return PSP_OK;
    });
}

} // extern "C"
