// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the C API.
// Exit codes: 0 success, 1 usage/parse/runtime error, 2 certification or
// balance-check failure.
#include "psp.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// unique_ptr-style guards for the C handles
struct GraphGuard {
    psp_graph* g = nullptr;
    ~GraphGuard() { psp_graph_free(g); }
};

struct SolutionGuard {
    psp_solution* s = nullptr;
    ~SolutionGuard() { psp_solution_free(s); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { psp_string_free(s); }
};

int exit_code(psp_status st) {
    if (st == PSP_OK)
        return 0;
    if (st == PSP_ERR_CERTIFICATION_FAILED || st == PSP_ERR_BALANCE_CHECK_FAILED)
        return 2;
    return 1;
}

// reports the failure and converts the status to a process exit code
int report(psp_status st) {
    if (st != PSP_OK)
        std::cerr << "error: " << psp_last_error() << "\n";
    return exit_code(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << text;
    return true;
}

bool load_graph(const std::string& path, GraphGuard& g) {
    std::string text;
    if (!read_file(path, text))
        return false;
    psp_status st = psp_graph_parse(text.c_str(), &g.g);
    if (st != PSP_OK) {
        std::cerr << "error: " << psp_last_error() << "\n";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametric shortest paths, minimum mean cycles, minimum balance"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    int32_t gen_n = 0;
    int64_t gen_m = 0;
    int64_t gen_lo = 1, gen_hi = 1000000;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "arc count")->required();
    gen->add_option("--cost-lo", gen_lo, "minimum cost");
    gen->add_option("--cost-hi", gen_hi, "maximum cost");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // parametric
    auto* par = app.add_subcommand("parametric", "full parametric run from a source");
    std::string par_file;
    bool par_certify = false, par_log = false;
    par->add_option("file", par_file, "graph file")->required();
    par->add_flag("--certify", par_certify, "audit against the fixed-lambda oracle");
    par->add_flag("--dump-log", par_log, "include the per-vertex parent log");

    // mmc
    auto* mmc = app.add_subcommand("mmc", "minimum mean or ratio cycle");
    std::string mmc_file, mmc_algo = "parametric";
    bool mmc_ratio = false, mmc_scc = false, mmc_certify = false;
    mmc->add_option("file", mmc_file, "graph file")->required();
    mmc->add_option("--algo", mmc_algo, "parametric | karp | brute")
        ->check(CLI::IsMember({"parametric", "karp", "brute"}));
    mmc->add_flag("--ratio", mmc_ratio, "minimize cost/weight instead of mean");
    mmc->add_flag("--scc", mmc_scc, "solve per strongly connected component");
    mmc->add_flag("--certify", mmc_certify, "audit the underlying parametric run");

    // balance
    auto* bal = app.add_subcommand("balance", "minimum balance of a strongly connected graph");
    std::string bal_file;
    bool bal_check = false;
    bal->add_option("file", bal_file, "graph file")->required();
    bal->add_flag("--check", bal_check, "exhaustive subset audit (n <= 20)");

    // bench
    auto* ben = app.add_subcommand("bench", "random-trial benchmark batches");
    std::string ben_mode, ben_points, ben_out;
    int32_t ben_trials = 0;
    uint64_t ben_seed = 1;
    ben->add_option("--mode", ben_mode, "mmc | balance")
        ->required()
        ->check(CLI::IsMember({"mmc", "balance"}));
    ben->add_option("--points", ben_points, "points as n:m,n:m,...")->required();
    ben->add_option("--trials", ben_trials, "trials per point (default max(n/2, 50))");
    ben->add_option("--seed", ben_seed, "base seed");
    ben->add_option("-o,--output", ben_out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (gen->parsed()) {
        GraphGuard g;
        psp_status st = psp_graph_random(gen_n, gen_m, gen_lo, gen_hi, gen_seed, &g.g);
        if (st != PSP_OK)
            return report(st);
        StringGuard text;
        st = psp_graph_serialize(g.g, &text.s);
        if (st != PSP_OK)
            return report(st);
        return write_output(gen_out, text.s) ? 0 : 1;
    }

    if (par->parsed()) {
        GraphGuard g;
        if (!load_graph(par_file, g))
            return 1;
        SolutionGuard sol;
        psp_status st = psp_parametric_solve(g.g, 0, &sol.s);
        if (st != PSP_OK)
            return report(st);
        StringGuard dump;
        st = psp_solution_dump(sol.s, par_log ? 1 : 0, &dump.s);
        if (st != PSP_OK)
            return report(st);
        std::cout << dump.s;
        if (par_certify) {
            StringGuard rep;
            st = psp_solution_certify(g.g, sol.s, &rep.s);
            if (rep.s)
                std::cout << rep.s;
            return exit_code(st);
        }
        return 0;
    }

    if (mmc->parsed()) {
        GraphGuard g;
        if (!load_graph(mmc_file, g))
            return 1;
        psp_mmc_algo algo = mmc_algo == "parametric" ? PSP_MMC_PARAMETRIC
                            : mmc_algo == "karp"     ? PSP_MMC_KARP
                                                     : PSP_MMC_BRUTE;
        StringGuard out;
        psp_status st = psp_mmc(g.g, algo, mmc_ratio ? 1 : 0, mmc_scc ? 1 : 0,
                                mmc_certify ? 1 : 0, &out.s);
        if (out.s)
            std::cout << out.s;
        if (st != PSP_OK && !out.s)
            return report(st);
        return exit_code(st);
    }

    if (bal->parsed()) {
        GraphGuard g;
        if (!load_graph(bal_file, g))
            return 1;
        StringGuard out;
        psp_status st = psp_balance(g.g, bal_check ? 1 : 0, &out.s);
        if (out.s)
            std::cout << out.s;
        if (st != PSP_OK && !out.s)
            return report(st);
        return exit_code(st);
    }

    // bench
    std::cerr << "note: costs drawn uniformly from [1, 1000000]; the cost "
                 "distribution is a harness convention\n";
    StringGuard csv, warn;
    psp_status st = psp_bench(ben_mode == "mmc" ? PSP_BENCH_MMC : PSP_BENCH_BALANCE,
                              ben_points.c_str(), ben_trials, ben_seed, &csv.s, &warn.s);
    if (st != PSP_OK)
        return report(st);
    if (warn.s && warn.s[0])
        std::cerr << warn.s;
    return write_output(ben_out, csv.s) ? 0 : 1;
}
