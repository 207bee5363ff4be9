#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvetop/intpoly.hpp"

#include <random>

using namespace curvetop;

namespace {
IntPoly make(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}
IntPoly random_poly(std::mt19937_64& rng, int maxdeg, int maxcoef) {
    std::uniform_int_distribution<int> dd(0, maxdeg), dc(-maxcoef, maxcoef);
    int d = dd(rng);
    std::vector<mpz_class> v(d + 1);
    for (auto& c : v) c = dc(rng);
    IntPoly p(std::move(v));
    return p.is_zero() ? IntPoly(1) : p;
}
} // namespace

TEST_CASE("evaluation at rationals") {
    IntPoly f = make({-2, 0, 1});  // X^2-2
    CHECK(f.eval(mpq_class(1)) == -1);
    CHECK(f.eval(mpq_class(3, 2)) == mpq_class(1, 4));
    CHECK(IntPoly().eval(mpq_class(7)) == 0);
}

TEST_CASE("gcd conventions") {
    IntPoly a = make({-1, 0, 1});  // X^2-1
    IntPoly b = make({-1, 1});     // X-1
    CHECK(IntPoly::gcd(a, b) == b);
    CHECK(IntPoly::gcd(make({-2, 0, 1}), make({-3, 0, 1})) == IntPoly(1));
    // primitive positive-lc convention: gcd(2X^2, 4X) -> X
    CHECK(IntPoly::gcd(make({0, 0, 2}), make({0, 4})) == IntPoly::x());
}

TEST_CASE("exact division") {
    IntPoly a = make({-1, 0, 1});
    IntPoly b = make({-1, 1});
    CHECK(a.exact_div(b) == make({1, 1}));
    CHECK(IntPoly::x(3).exact_div(IntPoly::x()) == IntPoly::x(2));
    IntPoly q;
    CHECK(!make({1, 0, 1}).try_divide(b, q));
}

TEST_CASE("square-free decomposition") {
    IntPoly f = make({-1, 1}) * make({-1, 1}) * make({2, 1});  // (X-1)^2 (X+2)
    auto dec = f.square_free_decomposition();
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == make({2, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == make({-1, 1}));
    CHECK(dec[1].second == 2);

    auto dec2 = make({-2, 0, 1}).square_free_decomposition();
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].second == 1);

    auto dec3 = IntPoly::x(4).square_free_decomposition();
    REQUIRE(dec3.size() == 1);
    CHECK(dec3[0].first == IntPoly::x());
    CHECK(dec3[0].second == 4);
}

TEST_CASE("cauchy bound") {
    CHECK(make({2, -3, 1}).cauchy_bound() == 6);
    CHECK(IntPoly::x().cauchy_bound() == 1);
    CHECK(make({0, -4, 0, 2}).cauchy_bound() == 3);
}

TEST_CASE("taylor coefficients") {
    CHECK(IntPoly::x(2).taylor_coefficient(1) == make({0, 2}));
    CHECK(IntPoly::x(3).taylor_coefficient(2) == make({0, 3}));
    CHECK(IntPoly(5).taylor_coefficient(1).is_zero());
    // f(a+X) = sum f^[i](a) X^i
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        IntPoly f = random_poly(rng, 6, 50);
        mpz_class a = (long)(rng() % 11) - 5;
        IntPoly sh = f.shift(a);
        for (long i = 0; i <= f.degree(); ++i)
            CHECK(sh.coeff(i) == f.taylor_coefficient(i).eval(a));
    }
}

TEST_CASE("length, norm, magnitude") {
    IntPoly f = make({2, -3, 1});
    CHECK(f.length() == 6);
    CHECK(f.norm_sq() == 14);
    CHECK(f.magnitude_tau() >= 2);
}

TEST_CASE("gcd exact_div round trip on random inputs") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
        IntPoly f = random_poly(rng, 5, 20), g = random_poly(rng, 5, 20);
        IntPoly p = f * g;
        CHECK(p.exact_div(g) == f);
        IntPoly h = IntPoly::gcd(p, g);
        IntPoly q;
        CHECK(g.try_divide(h, q));  // gcd divides g
        CHECK(p.try_divide(h, q));
    }
}

TEST_CASE("shift and scale identities") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        IntPoly f = random_poly(rng, 5, 9);
        CHECK(f.shift1() == f.shift(mpz_class(1)));
        // scale_up then eval: 2^(ne) f(x/2^e)
        mpq_class x(3, 7);
        mpq_class lhs = f.scale_up(2).eval(x);
        mpq_class rhs = f.eval(x / 4);
        for (long i = 0; i < f.degree() * 2; ++i) rhs *= 2;  // 2^(2n)... compare via ratio instead
        mpq_class scale = 1;
        for (long i = 0; i < 2 * f.degree(); ++i) scale *= 2;
        CHECK(lhs == f.eval(x / 4) * scale);
    }
}

TEST_CASE("dyadic and interval evaluation agree with rational evaluation") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        IntPoly f = random_poly(rng, 6, 30);
        Dyadic d(mpz_class(5), -2);  // 1.25
        mpq_class exact = f.eval(mpq_class(5, 4));
        CHECK(f.eval(d).to_mpq() == exact);
        Interval iv(Dyadic(1), Dyadic(2));
        Interval r = f.eval(iv, 128);
        mpq_class at1 = f.eval(mpq_class(1)), at2 = f.eval(mpq_class(2));
        CHECK(r.lo.to_mpq() <= at1);
        CHECK(r.hi.to_mpq() >= at1);
        CHECK(r.lo.to_mpq() <= at2);
        CHECK(r.hi.to_mpq() >= at2);
    }
}
