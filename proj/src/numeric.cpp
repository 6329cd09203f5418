#include "quadform/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace quadform {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to dodge overflow
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw error(errc::non_unit, "invmod: argument shares a factor with the modulus");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
    for (std::uint64_t a = 2; a < p; ++a) {
        if (legendre(a, p) == -1) return a;
    }
    throw error(errc::invalid_input, "smallest_nonresidue: no nonresidue (p must be an odd prime > 2)");
}

std::uint64_t upow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > UINT64_MAX / p) throw error(errc::invalid_input, "upow: overflow");
        r *= p;
    }
    return r;
}

int padic_val(const Int& n, const Int& p) {
    if (n == 0) throw error(errc::degenerate, "padic_val: zero input");
    Int m = boost::multiprecision::abs(n);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int padic_val(const Rat& q, const Int& p) {
    if (q == 0) throw error(errc::degenerate, "padic_val: zero input");
    return padic_val(boost::multiprecision::numerator(q), p) -
           padic_val(boost::multiprecision::denominator(q), p);
}

Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace {

// Trial-division bound; cofactors beyond bound^2 must be prime or square.
constexpr std::uint64_t kTrialBound = 100000;

}  // namespace

Int squarefree_part(const Int& n) {
    if (n == 0) throw error(errc::degenerate, "squarefree_part: zero input");
    Int m = boost::multiprecision::abs(n);
    Int out = (n < 0) ? -1 : 1;
    for (std::uint64_t d = 2; d <= kTrialBound && Int(d) * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e & 1) out *= d;
    }
    if (m > 1) {
        Int r = boost::multiprecision::sqrt(m);
        if (r * r == m) {
            // perfect square cofactor: contributes nothing mod squares
        } else if (m < Int(kTrialBound) * kTrialBound) {
            out *= m;  // trial-divided below the bound, so prime
        } else if (m <= Int(UINT64_MAX) && is_prime_u64(m.convert_to<std::uint64_t>())) {
            out *= m;
        } else {
            throw error(errc::factorization, "squarefree_part: cofactor not certified prime or square");
        }
    }
    return out;
}

Int squarefree_part(const Rat& q) {
    if (q == 0) throw error(errc::degenerate, "squarefree_part: zero input");
    return squarefree_part(Int(boost::multiprecision::numerator(q) *
                               boost::multiprecision::denominator(q)));
}

bool is_rational_square(const Rat& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    return squarefree_part(q) == 1;
}

std::uint64_t rat_mod_prime(const Rat& u, std::uint64_t p) {
    Int pp(p);
    Int n = boost::multiprecision::numerator(u) % pp;
    if (n < 0) n += pp;
    Int d = boost::multiprecision::denominator(u) % pp;
    if (d == 0 || n == 0)
        throw error(errc::non_unit, "rat_mod_prime: not a p-adic unit");
    return mulmod(n.convert_to<std::uint64_t>(),
                  invmod(d.convert_to<std::uint64_t>(), p), p);
}

bool rat_is_qp_square(const Rat& d, std::uint64_t p) {
    if (d == 0) throw error(errc::invalid_input, "rat_is_qp_square: zero input");
    int v = padic_val(d, Int(p));
    if (v % 2 != 0) return false;
    Rat pv(int_pow(Int(p), static_cast<unsigned>(std::abs(v))));
    Rat u = (v >= 0) ? Rat(d / pv) : Rat(d * pv);
    bool positive = u > 0;
    std::uint64_t r = rat_mod_prime(positive ? u : Rat(-u), p);
    if (!positive) r = p - r;
    return legendre(r, p) == 1;
}

Rat rat_pow(const Rat& x, int e) {
    if (e < 0) {
        if (x == 0) throw error(errc::degenerate, "rat_pow: zero to a negative power");
        return rat_pow(Rat(1 / x), -e);
    }
    Rat out = 1;
    Rat b = x;
    for (unsigned k = static_cast<unsigned>(e); k; k >>= 1) {
        if (k & 1) out *= b;
        b *= b;
    }
    return out;
}

}  // namespace quadform
