#include <doctest.h>

#include "quadform/numeric.hpp"

using namespace quadform;

TEST_CASE("modular helpers") {
    CHECK(powmod(2, 10, 1000) == 24);
    // (m-1)^2 = 1 mod m exercises the 128-bit product path
    CHECK(mulmod(3037000506ULL, 3037000506ULL, 3037000507ULL) == 1);
    CHECK(invmod(3, 7) == 5);
    CHECK(mulmod(invmod(12345, 1000003), 12345, 1000003) == 1);
    CHECK_THROWS_AS(invmod(5, 25), error);
}

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(7919));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(7917));
    CHECK(is_prime_u64(2147483647ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to small bases
}

TEST_CASE("legendre against exhaustive square tables") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        std::vector<bool> sq(p, false);
        for (std::uint64_t x = 0; x < p; ++x) sq[x * x % p] = true;
        for (std::uint64_t a = 1; a < p; ++a)
            CHECK(legendre(a, p) == (sq[a] ? 1 : -1));
    }
}

TEST_CASE("smallest nonresidue") {
    CHECK(smallest_nonresidue(3) == 2);
    CHECK(smallest_nonresidue(5) == 2);
    CHECK(smallest_nonresidue(7) == 3);
    CHECK(smallest_nonresidue(11) == 2);
    CHECK(smallest_nonresidue(13) == 2);
}

TEST_CASE("padic valuations") {
    CHECK(padic_val(Int(250), Int(5)) == 3);
    CHECK(padic_val(Int(-250), Int(5)) == 3);
    CHECK(padic_val(Rat(1, 25), Int(5)) == -2);
    CHECK(padic_val(Rat(10, 3), Int(5)) == 1);
    CHECK_THROWS_AS(padic_val(Int(0), Int(5)), error);
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(Int(1)) == 1);
    CHECK(squarefree_part(Int(4)) == 1);
    CHECK(squarefree_part(Int(-4)) == -1);
    CHECK(squarefree_part(Int(18)) == 2);
    CHECK(squarefree_part(Int(360)) == 10);  // 2^3 3^2 5
    CHECK(squarefree_part(Rat(2, 3)) == 6);
    CHECK(is_rational_square(Rat(4, 9)));
    CHECK_FALSE(is_rational_square(Rat(-4, 9)));
    CHECK_FALSE(is_rational_square(Rat(2)));
    // 5^9: odd power collapses to 5
    Int big = int_pow(Int(5), 9);
    CHECK(squarefree_part(big) == 5);
}

TEST_CASE("splitmix determinism") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
}
