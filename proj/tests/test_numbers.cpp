#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvetop/dyadic.hpp"
#include "curvetop/interval.hpp"

using namespace curvetop;

TEST_CASE("dyadic arithmetic is exact and canonical") {
    Dyadic a(mpz_class(6), -1);  // 3
    CHECK(a.mantissa() == 3);
    CHECK(a.exponent() == 0);
    Dyadic b(mpz_class(1), -2);  // 1/4
    Dyadic s = a + b;
    CHECK(s.to_decimal() == "3.25");
    CHECK((a * b).to_decimal() == "0.75");
    CHECK((a - a).is_zero());
    CHECK(Dyadic::pow2(-3).to_decimal() == "0.125");
}

TEST_CASE("dyadic comparison") {
    Dyadic a(mpz_class(1), -1);   // 0.5
    Dyadic b(mpz_class(3), -2);   // 0.75
    CHECK(a < b);
    CHECK(-b < -a);
    CHECK(a.cmp(a) == 0);
    CHECK(Dyadic(0) < a);
    CHECK(-a < Dyadic(0));
    // same floor(log2): 5/8 vs 9/16
    CHECK(Dyadic(mpz_class(9), -4) < Dyadic(mpz_class(5), -3));
}

TEST_CASE("dyadic rounded division and sqrt brackets") {
    Dyadic lo = Dyadic::div(Dyadic(1), Dyadic(3), 30, -1);
    Dyadic hi = Dyadic::div(Dyadic(1), Dyadic(3), 30, +1);
    CHECK(lo <= hi);
    CHECK((hi - lo) <= Dyadic::pow2(-28));
    CHECK(lo * Dyadic(3) <= Dyadic(1));
    CHECK(hi * Dyadic(3) >= Dyadic(1));

    Dyadic s_lo = Dyadic::sqrt(Dyadic(2), 40, -1);
    Dyadic s_hi = Dyadic::sqrt(Dyadic(2), 40, +1);
    CHECK(s_lo * s_lo <= Dyadic(2));
    CHECK(s_hi * s_hi >= Dyadic(2));
    CHECK((s_hi - s_lo) <= Dyadic::pow2(-35));
}

TEST_CASE("interval arithmetic matches the endpoint formulas") {
    Interval a(Dyadic(0), Dyadic(1)), b(Dyadic(2), Dyadic(3));
    Interval s = interval_add(a, b);
    CHECK(s.lo == Dyadic(2));
    CHECK(s.hi == Dyadic(4));

    Interval m1 = interval_mul(Interval(Dyadic(-1), Dyadic(1)), Interval(Dyadic(-1), Dyadic(1)));
    CHECK(m1.lo == Dyadic(-1));
    CHECK(m1.hi == Dyadic(1));

    Interval m2 = interval_mul(Interval(Dyadic(1), Dyadic(2)), Interval(Dyadic(3), Dyadic(4)));
    CHECK(m2.lo == Dyadic(3));
    CHECK(m2.hi == Dyadic(8));
}

TEST_CASE("interval enclosure monotonicity under rounding") {
    Interval outer(Dyadic(mpz_class(1), -5), Dyadic(mpz_class(100001), -5));
    Interval inner(Dyadic(mpz_class(3), -5), Dyadic(mpz_class(99999), -5));
    Interval po = (outer * outer).round_out(12);
    Interval pi = (inner * inner).round_out(12);
    CHECK(po.lo <= pi.lo);
    CHECK(pi.hi <= po.hi);
}

TEST_CASE("ball magnitudes") {
    Ball b(Dyadic(3), Dyadic(4), Dyadic(mpz_class(1), -1));
    CHECK(b.mag_upper() >= Dyadic(mpz_class(11), -1));   // 5.5
    CHECK(b.mig_lower() <= Dyadic(mpz_class(9), -1));    // 4.5
    CHECK(b.mig_lower() > Dyadic(4));
    Ball p = b.mul(b, 64);
    // (3+4i)^2 = -7+24i, |.| = 25
    CHECK(p.center_mag_upper() >= Dyadic(24));
    CHECK(!p.contains_zero_possibly());
}
