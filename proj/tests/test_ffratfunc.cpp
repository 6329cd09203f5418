#include <doctest.h>

#include "quadform/ffratfunc.hpp"

using namespace quadform;
using fqpoly::Poly;
using fqpoly::from_ints;

namespace {
FiniteFieldPtr f5() { return std::make_shared<FiniteField>(5); }
}

TEST_CASE("canonical form factorizes and merges") {
    auto F = f5();
    // 3 * (z^2-1) * (z+1): (z+1)^2 (z+4) * 3
    auto r = ffr_make(F, 3, {{from_ints(*F, {-1, 0, 1}), 1}, {from_ints(*F, {1, 1}), 1}});
    CHECK(r.constant == 3);
    REQUIRE(r.factors.size() == 2);
    CHECK(fqpoly::equal(r.factors[0].first, from_ints(*F, {1, 1})));
    CHECK(r.factors[0].second == 2);
    CHECK(fqpoly::equal(r.factors[1].first, from_ints(*F, {4, 1})));
    CHECK(r.factors[1].second == 1);
}

TEST_CASE("non-monic leading coefficients fold into the constant") {
    auto F = f5();
    // 2z+2 = 2 (z+1)
    auto r = ffr_from_poly(F, from_ints(*F, {2, 2}));
    CHECK(r.constant == 2);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].second == 1);
}

TEST_CASE("square test: g^2 h has the class of h") {
    auto F = f5();
    SplitMix64 rng(17);
    for (int i = 0; i < 40; ++i) {
        // random h = c * z^e1 (z+1)^e2, g = d * (z+2)^e3
        std::uint64_t c = 1 + rng.below(4), d = 1 + rng.below(4);
        auto h = ffr_make(F, c, {{from_ints(*F, {0, 1}), static_cast<int>(rng.below(3))},
                                 {from_ints(*F, {1, 1}), static_cast<int>(rng.below(3)) - 1}});
        auto g = ffr_make(F, d, {{from_ints(*F, {2, 1}), static_cast<int>(rng.below(2)) + 1}});
        auto g2h = ffr_mul(ffr_mul(g, g), h);
        CHECK(ffq_ratfunc_is_square(g2h) == ffq_ratfunc_is_square(h));
    }
}

TEST_CASE("square test examples") {
    auto F = f5();
    // (z+1)^2 * 4 : square
    CHECK(ffq_ratfunc_is_square(ffr_make(F, 4, {{from_ints(*F, {1, 1}), 2}})));
    // z * (z+1)^2 : odd exponent
    CHECK_FALSE(ffq_ratfunc_is_square(
        ffr_make(F, 1, {{from_ints(*F, {0, 1}), 1}, {from_ints(*F, {1, 1}), 2}})));
    // 2 * (z+1)^2 : nonresidue constant
    CHECK_FALSE(ffq_ratfunc_is_square(ffr_make(F, 2, {{from_ints(*F, {1, 1}), 2}})));
    // negative even exponents are fine: 4 (z+1)^-2
    CHECK(ffq_ratfunc_is_square(ffr_make(F, 4, {{from_ints(*F, {1, 1}), -2}})));
}

TEST_CASE("valuations and residues at places") {
    auto F = f5();
    // f = 2 * z^3 * (z+1)^-1
    auto f = ffr_make(F, 2, {{from_ints(*F, {0, 1}), 3}, {from_ints(*F, {1, 1}), -1}});
    FFPlace at_z{false, from_ints(*F, {0, 1})};
    FFPlace at_zp1{false, from_ints(*F, {1, 1})};
    FFPlace at_inf{true, {}};
    CHECK(ffr_valuation(f, at_z) == 3);
    CHECK(ffr_valuation(f, at_zp1) == -1);
    CHECK(ffr_valuation(f, at_inf) == -2);  // deg = 3 - 1
    // residue of unit part at z: 2 * (0+1)^-1 = 2
    CHECK(ffr_unit_residue(f, at_z).v[0] == 2);
    // at z+1 (z = -1): 2 * (-1)^3 = -2 = 3
    CHECK(ffr_unit_residue(f, at_zp1).v[0] == 3);
    // at infinity: the constant
    CHECK(ffr_unit_residue(f, at_inf).v[0] == 2);
}

TEST_CASE("residue at a degree-2 place lands in F_25") {
    auto F = f5();
    // pi = z^2+2 (irreducible mod 5: -2 = 3 is a nonresidue)
    Poly pi = from_ints(*F, {2, 0, 1});
    CHECK(fqpoly::is_irreducible(*F, pi));
    auto f = ffr_make(F, 3, {{from_ints(*F, {0, 1}), 2}});  // 3 z^2
    FFPlace v{false, pi};
    auto k = ffr_residue_field(F, v);
    CHECK(k->order() == 25);
    // z^2 = -2 mod pi: residue = 3 * (-2) = -6 = 4
    auto r = ffr_unit_residue(f, v);
    CHECK(r.v == k->from_int(4));
}

TEST_CASE("fractions round trip") {
    auto F = f5();
    auto f = ffr_make(F, 2, {{from_ints(*F, {0, 1}), 2}, {from_ints(*F, {1, 1}), -3}});
    auto [num, den] = ffr_as_fraction(f);
    auto g = ffr_from_fraction(F, num, den);
    CHECK(f == g);
}

TEST_CASE("sqrt fraction squares back") {
    auto F = f5();
    auto f = ffr_make(F, 4, {{from_ints(*F, {0, 1}), 2}, {from_ints(*F, {1, 1}), -4}});
    REQUIRE(ffq_ratfunc_is_square(f));
    auto [n, d] = ffr_sqrt_fraction(f);
    auto g = ffr_from_fraction(F, n, d);
    CHECK(ffr_mul(g, g) == f);
}

TEST_CASE("rendering") {
    auto F = f5();
    auto f = ffr_make(F, 3, {{from_ints(*F, {0, 1}), 1}, {from_ints(*F, {-1, 1}), 1}});
    CHECK(ffr_to_string(f, "t") == "-a*t*(t-1)");
    CHECK(ffr_to_string(ffr_constant(F, 2), "t") == "a");
    CHECK(ffr_to_string(ffr_constant(F, 4), "t") == "-1");
    FFPlace inf{true, {}};
    CHECK(ffplace_to_string(inf, "t", 5) == "(1/t)");
    FFPlace at{false, from_ints(*F, {4, 1})};
    CHECK(ffplace_to_string(at, "t", 5) == "(t-1)");
    FFPlace az{false, from_ints(*F, {0, 1})};
    CHECK(ffplace_to_string(az, "t", 5) == "(t)");
}

TEST_CASE("parsing") {
    auto F = f5();
    auto f = ffr_parse(F, "-a*t*(1-t)", "t");
    // -a * t * (1-t) = -2 t (1-t) = 2 t (t-1): constant 2, factors t, t-1
    CHECK(f.constant == 2);
    REQUIRE(f.factors.size() == 2);
    CHECK(ffr_to_string(f, "t") == "a*t*(t-1)");
    // z^2-1 factorizes on parse
    auto g = ffr_parse(F, "(z^2-1)", "z");
    CHECK(g.factors.size() == 2);
    // p is rejected
    CHECK_THROWS_AS(ffr_parse(F, "p*t", "t"), error);
    // semantic equality with different spellings
    CHECK(ffr_parse(F, "4*(t+4)", "t") == ffr_parse(F, "-(1)*(t-1)", "t"));
}

TEST_CASE("support") {
    auto F = f5();
    auto f = ffr_parse(F, "2*t*(t^2+2)", "t");
    auto sup = ffr_support(f, true);
    CHECK(sup.size() == 3);
    CHECK(sup.back().at_infinity);
}
