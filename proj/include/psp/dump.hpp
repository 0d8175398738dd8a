// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/balance.hpp"
#include "psp/cycles.hpp"
#include "psp/oracle.hpp"
#include "psp/parametric.hpp"

#include <optional>
#include <string>

namespace psp {

// Text renderings of solver outputs, shared by the CLI and the C API. All
// vertex and arc ids are 1-based, matching the graph file format; a missing
// parent arc renders as "-".

// One line per breakpoint "<i> <lambda>", optionally the per-vertex parent
// log as "v <vertex> <lambda> <edge>" lines, then "lambda_star <value>".
std::string dump_solution(const Solution& sol, bool include_log);

// "lambda_star <mean>" plus, when a cycle is available, "cycle <arc ids>".
// Acyclic renders as "lambda_star inf".
std::string dump_cycle_result(const std::optional<CycleResult>& r);

// "pi <vertex> <value>" per vertex, "contractions <k>", then one
// "cycle <lambda> <arc ids>" line per contraction.
std::string dump_balance(const BalanceResult& r);

// "certify passed <checks>" or "certify failed <checks>" followed by one
// "failure: <message>" line per failed check.
std::string dump_cert_report(const CertReport& rep);

} // namespace psp
