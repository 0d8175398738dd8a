// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psp/rational.hpp"
#include "psp/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>

using psp::Rational;
using big = boost::multiprecision::cpp_int;

namespace {

big to_big(psp::int128 v) {
    bool neg = v < 0;
    psp::uint128 u = neg ? psp::uint128(0) - psp::uint128(v) : psp::uint128(v);
    big r = (big(static_cast<uint64_t>(u >> 64)) << 64) | big(static_cast<uint64_t>(u));
    return neg ? big(-r) : r;
}

template <class F>
psp::errc thrown_code(F&& f) {
    try {
        f();
    } catch (const psp::Error& e) {
        return e.code();
    }
    return psp::errc::ok;
}

} // namespace

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(7) == Rational(14, 2));
    CHECK(thrown_code([] { Rational(1, 0); }) == psp::errc::invalid_argument);
}

TEST_CASE("string forms") {
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::plus_inf().str() == "inf");
    CHECK(Rational::minus_inf().str() == "-inf");
    CHECK(Rational(10, 4).str() == "5/2");
}

TEST_CASE("ordering with infinities") {
    Rational pinf = Rational::plus_inf();
    Rational minf = Rational::minus_inf();
    CHECK(minf < Rational(INT64_MIN));
    CHECK(Rational(INT64_MAX) < pinf);
    CHECK(minf < pinf);
    CHECK(Rational::cmp(pinf, pinf) == 0);
    CHECK(Rational::cmp(minf, minf) == 0);
    CHECK(pinf == Rational::plus_inf());
    CHECK(pinf != minf);
    CHECK(-pinf == minf);
    CHECK(-minf == pinf);
    CHECK(pinf.is_plus_inf());
    CHECK(!pinf.is_finite());
    CHECK(Rational(3).is_finite());
}

TEST_CASE("comparison agrees with arbitrary precision on 1e5 random pairs") {
    std::mt19937_64 gen(20260819);
    for (int i = 0; i < 100000; ++i) {
        int64_t n1 = static_cast<int64_t>(gen());
        int64_t n2 = static_cast<int64_t>(gen());
        int64_t d1 = psp::draw_range(gen, 1, INT64_MAX);
        int64_t d2 = psp::draw_range(gen, 1, INT64_MAX);
        Rational a(n1, d1), b(n2, d2);
        big lhs = big(n1) * d2;
        big rhs = big(n2) * d1;
        int want = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        REQUIRE(Rational::cmp(a, b) == want);
        REQUIRE((a == b) == (want == 0));
    }
}

TEST_CASE("arithmetic agrees with arbitrary precision") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 20000; ++i) {
        int64_t n1 = psp::draw_range(gen, -1000000000, 1000000000);
        int64_t n2 = psp::draw_range(gen, -1000000000, 1000000000);
        int64_t d1 = psp::draw_range(gen, 1, 1000000000);
        int64_t d2 = psp::draw_range(gen, 1, 1000000000);
        Rational a(n1, d1), b(n2, d2);

        Rational s = a + b;
        REQUIRE(to_big(s.num()) * (big(d1) * d2) == (big(n1) * d2 + big(n2) * d1) * to_big(s.den()));

        Rational m = a * b;
        REQUIRE(to_big(m.num()) * (big(d1) * d2) == big(n1) * n2 * to_big(m.den()));

        Rational t = a - b;
        REQUIRE(to_big(t.num()) * (big(d1) * d2) == (big(n1) * d2 - big(n2) * d1) * to_big(t.den()));

        if (n2 != 0) {
            Rational q = a / b; // q == (n1*d2) / (d1*n2), cross-multiplied
            REQUIRE(to_big(q.num()) * (big(d1) * n2) == big(n1) * d2 * to_big(q.den()));
        }
    }
}

TEST_CASE("canonical form holds after arithmetic") {
    Rational r = Rational(1, 6) + Rational(1, 3); // = 1/2
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    r = Rational(2, 3) * Rational(3, 4); // = 1/2
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    r = Rational(1, 2) / Rational(-3, 4); // = -2/3
    CHECK(r.num() == -2);
    CHECK(r.den() == 3);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational huge = Rational(INT64_MAX) * Rational(INT64_MAX); // ~2^126, still fits
    CHECK(huge.is_finite());
    Rational huge2 = huge + huge; // ~2^127 - 2^65, the last value that fits
    CHECK(huge2.is_finite());
    CHECK(thrown_code([&] { (void)(huge * Rational(4)); }) == psp::errc::overflow);
    CHECK(thrown_code([&] { (void)(huge2 + huge2); }) == psp::errc::overflow);
}

TEST_CASE("invalid operations") {
    CHECK(thrown_code([] { (void)(Rational(1) / Rational(0)); }) == psp::errc::invalid_argument);
    CHECK(thrown_code([] { (void)(Rational::plus_inf() + Rational(1)); }) ==
          psp::errc::invalid_argument);
    CHECK(thrown_code([] { (void)(Rational::minus_inf() * Rational(2)); }) ==
          psp::errc::invalid_argument);
}

TEST_CASE("to_double is a display conversion") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
    CHECK(Rational::plus_inf().to_double() > 1e308);
    CHECK(Rational::minus_inf().to_double() < -1e308);
}
