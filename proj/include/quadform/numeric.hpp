#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "quadform/errors.hpp"

namespace quadform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ------------------------------------------------------------------ uint64
// Modular helpers on machine words; 128-bit intermediates keep products exact
// for any modulus < 2^63.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse mod m for gcd(a, m) = 1; throws errc::non_unit otherwise.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Legendre symbol (a|p) for odd prime p: +1, -1, or 0.
int legendre(std::uint64_t a, std::uint64_t p);

// Smallest positive quadratic nonresidue mod the odd prime p.  This is the
// canonical unit written `a` throughout the library.
std::uint64_t smallest_nonresidue(std::uint64_t p);

// p^k as uint64; throws on overflow.
std::uint64_t upow(std::uint64_t p, unsigned k);

// ------------------------------------------------------------------ cpp_int

// Exponent of p in n (n != 0).
int padic_val(const Int& n, const Int& p);
int padic_val(const Rat& q, const Int& p);

Int int_pow(const Int& base, unsigned exp);

// Squarefree part of a nonzero integer (sign preserved).  Factors by trial
// division with a primality/perfect-square fallback; inputs whose cofactor
// cannot be certified make this throw errc::factorization rather than guess.
Int squarefree_part(const Int& n);

// Squarefree part of a nonzero rational: squarefree_part(num * den), which
// represents the same square class.
Int squarefree_part(const Rat& q);

// True iff q is the square of a rational.
bool is_rational_square(const Rat& q);

// Reduce a rational p-adic unit mod the odd prime p; throws errc::non_unit
// when numerator or denominator is divisible by p.
std::uint64_t rat_mod_prime(const Rat& u, std::uint64_t p);

// Is the nonzero rational a square in Q_p (p an odd prime)?
bool rat_is_qp_square(const Rat& d, std::uint64_t p);

// Exact power with signed exponent (x != 0 when e < 0).
Rat rat_pow(const Rat& x, int e);

// ------------------------------------------------------------------ rng

// splitmix64: deterministic, seedable, good enough for test-vector sampling
// and Cantor-Zassenhaus splitting.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  private:
    std::uint64_t state_;
};

}  // namespace quadform
