#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvetop/subres.hpp"

#include <random>

using namespace curvetop;

namespace {
std::vector<mpz_class> zv(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}
std::vector<mpz_class> rand_coeffs(std::mt19937_64& rng, int deg, int maxcoef) {
    std::uniform_int_distribution<int> dc(-maxcoef, maxcoef);
    std::vector<mpz_class> v(deg + 1);
    for (auto& c : v) c = dc(rng);
    if (v.back() == 0) v.back() = 1;
    return v;
}
} // namespace

TEST_CASE("golden resultants") {
    // Res(X-1, X-2) = -1
    CHECK(resultant_formal(zv({-1, 1}), 1, zv({-2, 1}), 1) == -1);
    // Res(X^2-1, X^2-4) = 9
    CHECK(resultant_formal(zv({-1, 0, 1}), 2, zv({-4, 0, 1}), 2) == 9);
    // Res(X^2-2, 2X) = -8
    CHECK(resultant_formal(zv({-2, 0, 1}), 2, zv({0, 2}), 1) == -8);
    // Res(f, constant c) = c^deg f
    CHECK(resultant_formal(zv({1, 5, 7, 2}), 3, zv({3}), 0) == 27);
}

TEST_CASE("subdiscriminant structure for multiple roots") {
    // f = (X-1)^2: sr chain of (f, f') ; sDisc_0 = 0, sDisc_1 != 0
    auto f = zv({1, -2, 1});
    auto fp = zv({-2, 2});
    auto sr = subres_principal(f, 2, fp, 1);
    CHECK(sr[0] == 0);
    CHECK(sr[1] != 0);
    // f = X^2-1: Disc = Res(f,f')/lc = 4 up to sign convention |Disc| = 4
    auto d = resultant_formal(zv({-1, 0, 1}), 2, zv({0, 2}), 1);
    CHECK(abs(d) == 4);
    // f = X^2-2: |Res(f, f')| = 8
    auto d2 = resultant_formal(zv({-2, 0, 1}), 2, zv({0, 2}), 1);
    CHECK(abs(d2) == 8);
}

TEST_CASE("first nonzero subresultant index equals gcd degree") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dd(1, 3);
    for (int t = 0; t < 60; ++t) {
        auto a = rand_coeffs(rng, dd(rng), 6);
        auto b = rand_coeffs(rng, dd(rng), 6);
        auto g = rand_coeffs(rng, dd(rng), 6);
        IntPoly A = IntPoly(a) * IntPoly(g), B = IntPoly(b) * IntPoly(g);
        IntPoly G = IntPoly::gcd(A, B);
        auto sr = subres_principal(A.coeffs(), A.degree(), B.coeffs(), B.degree());
        long k = 0;
        while (k < (long)sr.size() && sr[k] == 0) ++k;
        CHECK(k == G.degree());
    }
}

TEST_CASE("bareiss matches cofactor expansion for deg <= 4") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dd(1, 4);
    for (int t = 0; t < 60; ++t) {
        int na = dd(rng), nb = dd(rng);
        auto a = rand_coeffs(rng, na, 9);
        auto b = rand_coeffs(rng, nb, 9);
        for (long k = 0; k <= std::min(na, nb); ++k) {
            auto m = subres_matrix(a, na, b, nb, k);
            CHECK(det_bareiss(m) == det_cofactor(m));
        }
    }
}

TEST_CASE("resultant product formula on linear factors") {
    // f = (X-1)(X-3), g = (X-2)(X-5): Res = prod g(root of f) = g(1)*g(3) = (1*... )
    IntPoly f = IntPoly(zv({-1, 1})) * IntPoly(zv({-3, 1}));
    IntPoly g = IntPoly(zv({-2, 1})) * IntPoly(zv({-5, 1}));
    mpz_class expected = g.eval(mpz_class(1)) * g.eval(mpz_class(3));
    CHECK(resultant_formal(f.coeffs(), 2, g.coeffs(), 2) == expected);
}

TEST_CASE("bareiss over polynomial entries matches cofactor") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<IntPoly>> m(3, std::vector<IntPoly>(3));
        for (auto& row : m)
            for (auto& e : row) e = IntPoly(rand_coeffs(rng, 2, 5));
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}
