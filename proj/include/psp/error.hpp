// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace psp {

enum class errc {
    ok = 0,
    parse,
    invalid_argument,
    unreachable_vertex,
    not_strongly_connected,
    too_large,
    overflow,
    certification_failed,
    balance_check_failed,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Parse failures carry the 1-based input line.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error(errc::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace psp
