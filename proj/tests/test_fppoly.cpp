#include <doctest.h>

#include "quadform/fppoly.hpp"

using namespace quadform;
using namespace quadform::fqpoly;

TEST_CASE("poly basic arithmetic") {
    FiniteField F(5);
    auto f = from_ints(F, {1, 2, 1});   // (z+1)^2
    auto g = from_ints(F, {1, 1});      // z+1
    auto [q, r] = divrem(F, f, g);
    CHECK(equal(q, g));
    CHECK(is_zero(r));
    CHECK(equal(mul(F, g, g), f));
    CHECK(deg(derivative(F, f)) == 1);
    CHECK(eval(F, f, F.from_int(4)) == F.zero());  // (4+1)^2 = 0 mod 5
}

TEST_CASE("gcd") {
    FiniteField F(7);
    auto f = mul(F, from_ints(F, {1, 1}), from_ints(F, {2, 1}));
    auto g = mul(F, from_ints(F, {1, 1}), from_ints(F, {3, 1}));
    CHECK(equal(gcd(F, f, g), from_ints(F, {1, 1})));
}

TEST_CASE("factorization: z^2 - 1 over F_5") {
    FiniteField F(5);
    auto f = from_ints(F, {-1, 0, 1});
    auto fac = factorize(F, f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.lead == F.one());
    CHECK(equal(fac.factors[0].first, from_ints(F, {1, 1})));   // z+1
    CHECK(equal(fac.factors[1].first, from_ints(F, {-1, 1})));  // z-1 = z+4
    CHECK(fac.factors[0].second == 1);
    CHECK(fac.factors[1].second == 1);
}

TEST_CASE("factorization: z^2 + 1 irreducible over F_3") {
    FiniteField F(3);
    auto f = from_ints(F, {1, 0, 1});
    CHECK(is_irreducible(F, f));
    auto fac = factorize(F, f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].second == 1);
    CHECK(equal(fac.factors[0].first, f));
}

TEST_CASE("factorization: z^2 - 2 over F_7 splits") {
    FiniteField F(7);
    auto f = from_ints(F, {-2, 0, 1});
    auto fac = factorize(F, f);
    REQUIRE(fac.factors.size() == 2);
    // roots 3 and 4: z-4 = z+3 sorts before z-3 = z+4
    CHECK(equal(fac.factors[0].first, from_ints(F, {3, 1})));
    CHECK(equal(fac.factors[1].first, from_ints(F, {4, 1})));
}

TEST_CASE("factorization re-multiplies and certifies irreducible parts") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        FiniteField F(p);
        SplitMix64 rng(1234 + p);
        for (int trial = 0; trial < 30; ++trial) {
            // random poly of degree up to 6
            Poly f;
            int d = 1 + static_cast<int>(rng.below(6));
            for (int i = 0; i < d; ++i) f.push_back(F.from_int(static_cast<long long>(rng.below(p))));
            f.push_back(F.from_int(1 + static_cast<long long>(rng.below(p - 1))));  // nonzero lead
            trim(F, f);
            if (deg(f) < 1) continue;
            auto fac = factorize(F, f, 99 + trial);
            Poly prod = constant(F, fac.lead);
            for (auto& [q, e] : fac.factors) {
                CHECK(is_irreducible(F, q));
                CHECK(q.back() == F.one());
                for (int i = 0; i < e; ++i) prod = mul(F, prod, q);
            }
            CHECK(equal(prod, f));
        }
    }
}

TEST_CASE("factorization with multiplicities and p-th powers") {
    FiniteField F(3);
    // (z+1)^3 (z+2)^2: derivative path + p-th power path
    auto f = one(F);
    for (int i = 0; i < 3; ++i) f = mul(F, f, from_ints(F, {1, 1}));
    for (int i = 0; i < 2; ++i) f = mul(F, f, from_ints(F, {2, 1}));
    auto fac = factorize(F, f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].second + fac.factors[1].second == 5);
    // pure cube: derivative is identically zero
    auto g = one(F);
    for (int i = 0; i < 3; ++i) g = mul(F, g, from_ints(F, {1, 1}));
    CHECK(is_zero(derivative(F, g)));
    auto fac2 = factorize(F, g);
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].second == 3);
}

TEST_CASE("factorization over an extension field") {
    FiniteField F(5, {3, 0, 1});  // F_25, y^2 = 2
    // z^2 - 2 = (z - y)(z + y) over F_25
    Poly f = {F.from_int(-2 + 5), F.zero(), F.one()};
    trim(F, f);
    auto fac = factorize(F, f);
    REQUIRE(fac.factors.size() == 2);
    Poly prod = mul(F, fac.factors[0].first, fac.factors[1].first);
    CHECK(equal(prod, f));
    for (auto& [q, e] : fac.factors) CHECK(deg(q) == 1);
}

TEST_CASE("compose") {
    FiniteField F(5);
    auto f = from_ints(F, {0, 0, 1});       // z^2
    auto g = from_ints(F, {1, 1});          // z+1
    CHECK(equal(compose(F, f, g), from_ints(F, {1, 2, 1})));
}

TEST_CASE("rendering") {
    FiniteField F(5);
    CHECK(to_string(F, from_ints(F, {4, 0, 1}), "z") == "z^2+4");
    CHECK(to_string(F, zero(), "z") == "0");
}
