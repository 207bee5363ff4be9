#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvetop/realroots.hpp"

#include <random>

using namespace curvetop;

namespace {
IntPoly make(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}
bool contains_value(const RootInterval& r, double v) {
    return r.lo().to_double() <= v && v <= r.hi().to_double();
}
} // namespace

TEST_CASE("isolate X^2-2") {
    auto roots = isolate_real_sqfree(make({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(contains_value(roots[0], -1.41421356));
    CHECK(contains_value(roots[1], 1.41421356));
    CHECK(roots[0].hi() <= roots[1].lo());
}

TEST_CASE("no real roots") {
    CHECK(isolate_real_sqfree(make({1, 0, 1})).empty());
}

TEST_CASE("dyadic and zero roots are found exactly or isolated") {
    // X(X-1/2 scaled): 2X^2 - X = X(2X-1)
    auto roots = isolate_real_sqfree(make({0, -1, 2}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].exact);
    CHECK(roots[0].lo().is_zero());
    CHECK(contains_value(roots[1], 0.5));
}

TEST_CASE("close roots get separated") {
    // (X-1)(X-1-2^-10) scaled to integers: (1024X-1024)(1024X-1025)
    IntPoly f = make({-1024, 1024}) * make({-1025, 1024});
    auto roots = isolate_real_sqfree(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi() <= roots[1].lo());
}

TEST_CASE("refinement reaches targets and stays isolating") {
    IntPoly f = make({-2, 0, 1});
    auto roots = isolate_real_sqfree(f);
    RootInterval r = roots[1];
    refine_below(f, r, Dyadic::pow2(-120));
    CHECK(r.width() < Dyadic::pow2(-120));
    // sqrt(2) enclosure check: lo^2 < 2 < hi^2
    CHECK(r.lo() * r.lo() < Dyadic(2));
    CHECK(r.hi() * r.hi() > Dyadic(2));
}

TEST_CASE("random products of linear factors isolate all roots") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        // distinct small rational roots p/q
        std::uniform_int_distribution<int> dp(-8, 8), dq(1, 4);
        std::set<std::pair<int, int>> used;
        IntPoly f(1);
        int n = 1 + (int)(rng() % 4);
        for (int i = 0; i < n; ++i) {
            int p = dp(rng), q = dq(rng);
            int g = std::gcd(std::abs(p), q);
            p /= g ? g : 1;
            q /= g ? g : 1;
            if (!used.insert({p, q}).second) continue;
            f = f * make({-p, q});
        }
        if (f.degree() < 1) continue;
        auto roots = isolate_real_sqfree(f);
        CHECK(roots.size() == used.size());
        for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi() <= roots[i + 1].lo());
        // each root interval must contain one of the rational roots
        for (auto& r : roots) {
            bool ok = false;
            for (auto& [p, q] : used) {
                mpq_class v(p, q);
                if (r.lo().to_mpq() <= v && v <= r.hi().to_mpq()) ok = true;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("refinement through a dyadic endpoint situation") {
    // roots at 0.5 (dyadic) and nearby: f = (2X-1)(4X-1)(8X-7)
    IntPoly f = make({-1, 2}) * make({-1, 4}) * make({-7, 8});
    auto roots = isolate_real_sqfree(f);
    REQUIRE(roots.size() == 3);
    for (auto r : roots) {
        refine_below(f, r, Dyadic::pow2(-60));
        CHECK((r.exact || r.width() < Dyadic::pow2(-60)));
    }
}
