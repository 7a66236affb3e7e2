#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "unitfrac/arith.hpp"
#include "unitfrac/enum3.hpp"

using namespace unitfrac;

namespace {

Solution sol(std::initializer_list<unsigned long> v) {
    Solution s;
    for (auto x : v) s.emplace_back(x);
    return s;
}

std::set<Solution> sols(std::initializer_list<std::initializer_list<unsigned long>> v) {
    std::set<Solution> out;
    for (auto s : v) out.insert(sol(s));
    return out;
}

}  // namespace

TEST_CASE("solve_two fixtures") {
    CHECK(solve_two(Fraction(1, 6)) ==
          sols({{7, 42}, {8, 24}, {9, 18}, {10, 15}, {12, 12}}));
    CHECK(solve_two(Fraction(1, 1)) == sols({{2, 2}}));
    CHECK(solve_two(Fraction(5, 1)).empty());
    CHECK(solve_two(Fraction(2, 4)) == sols({{3, 6}, {4, 4}}));  // reduces to 1/2
}

TEST_CASE("solve_two matches the coprime divisor-pair criterion") {
    // solutions of m/n = 1/a1 + 1/a2 with gcd(m,n) = 1 correspond to
    // unordered coprime divisor pairs {u <= v} of n with m | u + v, via
    // a = (n/v)(u+v)/m, b = (n/u)(u+v)/m
    for (unsigned long n = 1; n <= 300; ++n) {
        auto divs = divisors_u64(factor_u64(n));
        for (unsigned long m = 1; m <= 20; ++m) {
            if (gcd_u64(m, n) != 1) continue;
            std::set<Solution> expect;
            for (size_t i = 0; i < divs.size(); ++i)
                for (size_t j = i; j < divs.size(); ++j) {
                    u64 u = divs[i], v = divs[j];
                    if (gcd_u64(u, v) != 1 || (u + v) % m != 0) continue;
                    mpz_class a = mpz_class(static_cast<unsigned long>(n / v)) * ((u + v) / m);
                    mpz_class b = mpz_class(static_cast<unsigned long>(n / u)) * ((u + v) / m);
                    expect.insert({std::min(a, b), std::max(a, b)});
                }
            CHECK(solve_two(Fraction(m, n)) == expect);
        }
    }
}

TEST_CASE("worked example 4/5, pattern (1,1,5): branch Y emits both quads at y=3") {
    auto p = derive_constants(4, 5, {1, 1, 5});
    REQUIRE(p.bound == 3);
    auto quads = enumerate_branch(4, 5, p, BranchKind::Y);
    REQUIRE(quads.size() == 2);
    CHECK(std::count(quads.begin(), quads.end(), ParamQuad{1, 1, 2, 2}) == 1);
    CHECK(std::count(quads.begin(), quads.end(), ParamQuad{1, 2, 1, 2}) == 1);
}

TEST_CASE("worked example 4/5, pattern (1,1,5): branch Z recovers the same solution") {
    auto p = derive_constants(4, 5, {1, 1, 5});
    auto quads = enumerate_branch(4, 5, p, BranchKind::Z);
    std::set<Solution> found;
    for (const auto& q : quads)
        if (auto a = validate_quad(4, 5, p, q)) found.insert({(*a)[0], (*a)[1], (*a)[2]});
    CHECK(found == sols({{2, 4, 20}}));
}

TEST_CASE("validate_quad on the worked fixtures") {
    auto p = derive_constants(4, 5, {1, 1, 5});
    auto a = validate_quad(4, 5, p, ParamQuad{1, 1, 2, 2});
    REQUIRE(a.has_value());
    CHECK((*a)[0] == 2);
    CHECK((*a)[1] == 4);
    CHECK((*a)[2] == 20);
    CHECK(!validate_quad(4, 5, p, ParamQuad{1, 2, 1, 2}).has_value());  // ordering violated
    CHECK(!validate_quad(4, 5, p, ParamQuad{2, 2, 1, 1}).has_value());  // gcd(x12,x13) > 1
}

TEST_CASE("quad parameter identity for 4/5: y=3, z=3, w=11, wz = 25 + 8") {
    auto p = derive_constants(4, 5, {1, 1, 5});
    auto params = quad_parameters(4, 5, p, ParamQuad{1, 1, 2, 2});
    REQUIRE(params.has_value());
    CHECK(params->y == 3);
    CHECK(params->z == 3);
    CHECK(params->w == 11);
    // w z = (n/(n1 d13))(n/(n2 d23)) + (n m/(n3 d13 d23)) x12^2 x123
    mpz_class lhs = params->w * params->z;
    mpz_class rhs = mpz_class(5) * 5 + mpz_class(5) * 4 / 5 * 1 * 2;
    CHECK(lhs == 33);
    CHECK(lhs == rhs);
}

TEST_CASE("enumerate3 fixtures") {
    CHECK(enumerate3(Fraction(4, 3)) == sols({{1, 4, 12}, {1, 6, 6}, {2, 2, 3}}));
    CHECK(enumerate3(Fraction(4, 5)) == sols({{2, 4, 20}, {2, 5, 10}}));
    CHECK(enumerate3(Fraction(7, 1)).empty());
    CHECK(enumerate3(Fraction(1, 1)) == sols({{2, 3, 6}, {2, 4, 4}, {3, 3, 3}}));
    CHECK(enumerate3(Fraction(3, 1)) == sols({{1, 1, 1}}));
}

TEST_CASE("oracle3 fixtures") {
    CHECK(oracle3(Fraction(4, 3)) == sols({{1, 4, 12}, {1, 6, 6}, {2, 2, 3}}));
    CHECK(oracle3(Fraction(2, 1)) == sols({{1, 2, 2}}));
    CHECK(oracle3(Fraction(4, 5)) == sols({{2, 4, 20}, {2, 5, 10}}));
}

TEST_CASE("enumerate3 equals oracle3 on a small sweep, unreduced included") {
    for (u64 m = 1; m <= 6; ++m)
        for (u64 n = 2; n <= 120; ++n) {
            auto fast = enumerate3(Fraction(m, n));
            auto slow = oracle3(Fraction(m, n));
            REQUIRE_MESSAGE(fast == slow, "mismatch at m=" << m << " n=" << n);
        }
}

TEST_CASE("min_first restriction") {
    CHECK(enumerate3(Fraction(4, 3), mpz_class(2)) == sols({{2, 2, 3}}));
    CHECK(solve_two(Fraction(1, 6), mpz_class(9)) == sols({{9, 18}, {10, 15}, {12, 12}}));
}

TEST_CASE("first_solution3 returns the scan-order first") {
    auto s = first_solution3(Fraction(4, 5));
    REQUIRE(s.has_value());
    CHECK(*s == sol({2, 4, 20}));
    auto t = first_solution3(Fraction(2, 1));
    REQUIRE(t.has_value());
    CHECK(*t == sol({1, 2, 2}));
    CHECK(!first_solution3(Fraction(7, 1)).has_value());
}

TEST_CASE("first_solution3 agrees with the oracle scan on a sweep") {
    for (u64 m = 1; m <= 8; ++m)
        for (u64 n = 2; n <= 200; ++n) {
            auto got = first_solution3(Fraction(m, n));
            auto all = oracle3(Fraction(m, n));
            if (all.empty()) {
                CHECK(!got.has_value());
                continue;
            }
            REQUIRE(got.has_value());
            // scan order: smallest a1, then smallest a2
            Solution first = *all.begin();
            for (const Solution& s : all)
                if (s[0] < first[0] || (s[0] == first[0] && s[1] < first[1])) first = s;
            CHECK(*got == first);
        }
}

TEST_CASE("every solution's pattern appears among the enumerated patterns") {
    for (u64 n = 2; n <= 400; ++n) {
        for (u64 m = 1; m <= 4; ++m) {
            Fraction f(m, n);
            Fraction r = f.reduce();
            if (r.num > 3 * r.den || !fits_u64(r.den)) continue;
            u64 rn = to_u64(r.den);
            auto rpats = enumerate_patterns(factor_u64(rn));
            for (const Solution& s : oracle3(f)) {
                std::array<u64, 3> pat;
                for (int i = 0; i < 3; ++i) pat[i] = to_u64(gcd(s[i], mpz_class(rn)));
                CHECK(std::binary_search(rpats.begin(), rpats.end(), pat));
            }
        }
    }
}

TEST_CASE("emitted solutions sum exactly") {
    for (u64 n : {7ull, 24ull, 30ull, 97ull}) {
        Fraction f(4, n);
        for (const Solution& s : enumerate3(f)) {
            CHECK(std::is_sorted(s.begin(), s.end()));
            CHECK(exact_unit_sum(s, f));
        }
    }
}
