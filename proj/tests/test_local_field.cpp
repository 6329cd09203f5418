#include <doctest.h>

#include "quadform/local_field.hpp"

using namespace quadform;

namespace {

LocalFieldPtr qp(std::uint64_t p, int prec = 12) {
    LocalFieldDesc d;
    d.p = p;
    d.precision = prec;
    return LocalField::create(d);
}

LocalFieldPtr qp_unram(std::uint64_t p) {
    LocalFieldDesc d;
    d.p = p;
    d.ext = ExtKind::Unramified;
    d.def_b = 0;
    d.def_c = -static_cast<long long>(smallest_nonresidue(p));  // z^2 - a
    return LocalField::create(d);
}

LocalFieldPtr qp_eis(std::uint64_t p) {
    LocalFieldDesc d;
    d.p = p;
    d.ext = ExtKind::Eisenstein;
    d.def_b = 0;
    d.def_c = -static_cast<long long>(p);  // z^2 - p
    return LocalField::create(d);
}

}  // namespace

TEST_CASE("rational embedding and exact valuations") {
    auto K = qp(5);
    auto x = K->from_rational(Rat(Int(9765625) * 7));  // 5^10 * 7
    CHECK(x.val() == 10);
    CHECK(x.unit_residue()[0] == 2);  // 7 mod 5

    auto y = K->from_rational(Rat(1, 5));
    CHECK(y.val() == -1);
    auto z = K->from_rational(Rat(3, 4));
    CHECK(z.val() == 0);
    CHECK(z.residue()[0] == 2);  // 3 * 4^-1 = 3*4 = 12 = 2 mod 5
}

TEST_CASE("val of high powers stays exact at default precision") {
    auto K = qp(5);
    auto x = K->from_rational(Rat(Int("244140625")));  // 5^12
    CHECK(x.val() == 12);
    auto u = K->mul(x, K->from_int(3));
    CHECK(u.val() == 12);
    CHECK(u.unit_residue()[0] == 3);
}

TEST_CASE("residue of non-unit is loud") {
    auto K = qp(5);
    CHECK_THROWS_AS(K->from_int(5).residue(), error);
    try {
        K->from_int(25).residue();
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_unit);
    }
}

TEST_CASE("is_square agrees with an exhaustive mod-p^4 search") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        auto K = qp(p);
        std::uint64_t p4 = p * p * p * p;
        for (std::uint64_t u = 1; u < std::min<std::uint64_t>(p4, 300); ++u) {
            if (u % p == 0) continue;
            bool found = false;
            for (std::uint64_t x = 0; x < p4 && !found; ++x)
                if (x % p != 0 && mulmod(x, x, p4) == u % p4) found = true;
            CHECK(K->is_square(K->from_int(static_cast<long long>(u))) == found);
        }
    }
}

TEST_CASE("squares of Q_5: spec of the quadratic character") {
    auto K = qp(5);
    CHECK(K->is_square(K->from_int(4)));
    CHECK_FALSE(K->is_square(K->from_int(2)));
    CHECK_FALSE(K->is_square(K->from_int(5)));
    CHECK(K->is_square(K->from_int(-1)));   // 2^2 = 4 = -1 mod 5
    CHECK_FALSE(K->is_square(K->from_int(10)));
    CHECK(K->is_square(K->from_int(25)));
    CHECK(K->is_square(K->from_rational(Rat(1, 25))));
    CHECK_FALSE(K->is_square(K->from_rational(Rat(1, 5))));
}

TEST_CASE("sqrt is a genuine section") {
    auto K = qp(5);
    for (long long c : {4, 6, 9, 11, 14, 16, 100, 2500, -1, -4}) {
        auto x = K->from_int(c);
        if (!K->is_square(x)) continue;
        auto s = K->sqrt(x);
        REQUIRE(s.has_value());
        CHECK(K->same(K->mul(*s, *s), x));
    }
    CHECK_FALSE(K->sqrt(K->from_int(2)).has_value());
    CHECK_FALSE(K->sqrt(K->from_int(5)).has_value());
}

TEST_CASE("multiplicative structure of units mod squares") {
    auto K = qp(7);
    auto a = K->from_int(static_cast<long long>(K->nonresidue()));
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        long long c = 1 + static_cast<long long>(rng.below(1000));
        if (c % 7 == 0) continue;
        auto x = K->from_int(c);
        CHECK(K->is_square(K->mul(x, x)));
        // multiplying by a nonresidue flips the class of a unit
        CHECK(K->is_square(K->mul(a, x)) != K->is_square(x));
    }
}

TEST_CASE("catastrophic cancellation is loud, not silent") {
    auto K = qp(5);
    auto x = K->from_int(7);
    auto d = K->sub(x, K->from_int(7));
    CHECK(d.kind() != LocalElement::Kind::Regular);
    if (d.kind() == LocalElement::Kind::Indistinct) {
        CHECK_THROWS_AS(d.val(), error);
        try {
            (void)d.val();
        } catch (const error& e) {
            CHECK(e.code() == errc::precision_exhausted);
        }
    }
    // near-cancellation: difference of 1 and 1 + 5^9 keeps an exact val
    auto y = K->add(K->from_int(1), K->from_rational(Rat(Int(1953125) * 5 * 5 * 5 * 5)));
    auto e = K->sub(y, K->from_int(1));
    CHECK(e.val() == 13);
}

TEST_CASE("unramified quadratic extension") {
    auto K = qp_unram(5);  // Q_5(theta), theta^2 = 2
    CHECK(K->e() == 1);
    CHECK(K->f() == 2);
    CHECK(K->residue_field()->order() == 25);
    auto th = K->generator();
    auto th2 = K->mul(th, th);
    CHECK(th2.val() == 0);
    CHECK(th2.residue() == K->residue_field()->from_int(2));
    // 2 becomes a square upstairs
    CHECK(K->is_square(K->from_int(2)));
    // p is still not a square (odd valuation, e = 1)
    CHECK_FALSE(K->is_square(K->from_int(5)));
    // theta itself: square iff its residue is a square in F_25
    bool rs = K->residue_field()->is_square(th.residue());
    CHECK(K->is_square(th) == rs);
    auto s = K->sqrt(K->from_int(2));
    REQUIRE(s.has_value());
    CHECK(K->same(K->mul(*s, *s), K->from_int(2)));
}

TEST_CASE("eisenstein quadratic extension") {
    auto K = qp_eis(5);  // Q_5(pi), pi^2 = 5
    CHECK(K->e() == 2);
    CHECK(K->f() == 1);
    auto pi = K->generator();
    CHECK(pi.val() == 1);
    auto pi2 = K->mul(pi, pi);
    CHECK(pi2.val() == 2);
    CHECK(pi2.unit_residue()[0] == 1);  // pi^2 = 5 = pi^2 * 1
    CHECK(K->same(pi2, K->from_int(5)));
    // 5 is now a square; 2 still is not; 2*5 is not
    CHECK(K->is_square(K->from_int(5)));
    CHECK_FALSE(K->is_square(K->from_int(2)));
    CHECK_FALSE(K->is_square(K->from_int(10)));
    auto s = K->sqrt(K->from_int(5));
    REQUIRE(s.has_value());
    CHECK(K->same(K->mul(*s, *s), K->from_int(5)));
    // arithmetic in the basis: (1 + pi)(1 - pi) = 1 - 5 = -4
    auto u = K->add(K->from_int(1), pi);
    auto v = K->sub(K->from_int(1), pi);
    CHECK(K->same(K->mul(u, v), K->from_int(-4)));
    CHECK(K->is_square(K->mul(u, v)));  // -4 = (2i)^2? -1 is a square mod 5
}

TEST_CASE("eisenstein extension with a twisted uniformizer") {
    // z^2 - 10 over Q_5: the generator squares to p times a unit, so the
    // coordinate conversion of p-powers needs the unit correction
    auto K = LocalField::create({5, ExtKind::Eisenstein, 0, -10, 12});
    auto g = K->generator();
    CHECK(K->same(K->mul(g, g), K->from_int(10)));
    CHECK(K->same(K->div(K->mul(g, g), K->from_int(2)), K->from_int(5)));
    // 10 = g^2 is a square; 5 = g^2/2 has the class of 2, a nonsquare
    CHECK(K->is_square(K->from_int(10)));
    CHECK_FALSE(K->is_square(K->from_int(5)));
    CHECK_FALSE(K->is_square(K->from_int(2)));
    // from_rational respects multiplication across valuations
    for (auto [x, y] : {std::pair<Rat, Rat>{Rat(10), Rat(3, 5)},
                        {Rat(-138, 125), Rat(50)},
                        {Rat(2, 5), Rat(15)}}) {
        CHECK(K->same(K->mul(K->from_rational(x), K->from_rational(y)),
                      K->from_rational(x * y)));
    }
    auto s = K->sqrt(K->from_rational(Rat(-138, 125)));
    REQUIRE(s.has_value());
    CHECK(K->same(K->mul(*s, *s), K->from_rational(Rat(-138, 125))));
}

TEST_CASE("division round trips") {
    for (auto K : {qp(5), qp_unram(5), qp_eis(5)}) {
        auto x = K->make(Rat(7, 3), K->desc().ext == ExtKind::None ? Rat(0) : Rat(2));
        auto y = K->make(Rat(4), K->desc().ext == ExtKind::None ? Rat(0) : Rat(1, 5));
        auto q = K->div(x, y);
        CHECK(K->same(K->mul(q, y), x));
    }
}

TEST_CASE("hilbert symbol: pinned values over Q_5") {
    auto K = qp(5);
    auto h = [&](long long x, long long y) {
        return hilbert_symbol(K->from_int(x), K->from_int(y));
    };
    CHECK(h(2, 5) == -1);  // a = 2 nonresidue, (a, p) = chi(a) = -1
    CHECK(h(5, 2) == -1);
    CHECK(h(2, 2) == 1);   // units: always +1 in the tame case
    CHECK(h(5, 5) == 1);   // (p,p) = chi(-1) = +1 over Q_5
    CHECK(h(2, -2) == 1);  // (a, -a) = 1
    CHECK(h(3, -2) == 1);  // (a, 1-a) = 1 for a = 3
}

TEST_CASE("hilbert symbol: steinberg and bimultiplicativity, sampled") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        auto K = qp(p);
        SplitMix64 rng(p * 31 + 1);
        for (int i = 0; i < 60; ++i) {
            long long x = static_cast<long long>(rng.below(2000)) - 1000;
            long long y = static_cast<long long>(rng.below(2000)) - 1000;
            long long z = static_cast<long long>(rng.below(2000)) - 1000;
            if (x == 0 || y == 0 || z == 0) continue;
            auto ex = K->from_int(x), ey = K->from_int(y), ez = K->from_int(z);
            CHECK(hilbert_symbol(ex, ey) == hilbert_symbol(ey, ex));
            CHECK(hilbert_symbol(ex, K->mul(ey, ez)) ==
                  hilbert_symbol(ex, ey) * hilbert_symbol(ex, ez));
            CHECK(hilbert_symbol(ex, K->neg(ex)) == 1);
            if (x != 1) {
                auto one_minus = K->from_int(1 - x);
                CHECK(hilbert_symbol(ex, one_minus) == 1);
            }
            CHECK(hilbert_symbol(K->mul(ex, ex), ey) == 1);
        }
    }
}

TEST_CASE("hilbert symbol over extensions") {
    // Over the unramified extension p has even... no: v(p) = 1 still (e=1),
    // but the residue field is F_25 where every F_5 unit is a square.
    auto K = qp_unram(5);
    CHECK(hilbert_symbol(K->from_int(2), K->from_int(5)) == 1);  // 2 is a square now
    auto E = qp_eis(5);
    // over Q_5(sqrt 5): v(5) = 2, v(2) = 0, both "units-ish": symbol +1
    CHECK(hilbert_symbol(E->from_int(2), E->from_int(5)) == 1);
    // (2, pi) = chi(2) = -1
    CHECK(hilbert_symbol(E->from_int(2), E->generator()) == -1);
}

TEST_CASE("field validation") {
    LocalFieldDesc bad;
    bad.p = 4;
    CHECK_THROWS_AS(LocalField::create(bad), error);
    LocalFieldDesc ram;
    ram.p = 5;
    ram.ext = ExtKind::Eisenstein;
    ram.def_c = -7;  // v_5(7) = 0: not Eisenstein
    CHECK_THROWS_AS(LocalField::create(ram), error);
    LocalFieldDesc unram;
    unram.p = 5;
    unram.ext = ExtKind::Unramified;
    unram.def_c = -4;  // z^2 - 4 splits
    CHECK_THROWS_AS(LocalField::create(unram), error);
}
