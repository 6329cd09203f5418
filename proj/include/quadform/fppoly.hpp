#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadform/finite_field.hpp"

namespace quadform::fqpoly {

// Dense univariate polynomials over a FiniteField, little-endian coefficient
// vectors with no trailing zeros (the zero polynomial is the empty vector).
using Poly = std::vector<FiniteField::Elem>;

void trim(const FiniteField& F, Poly& f);
int deg(const Poly& f);  // deg(0) = -1
bool is_zero(const Poly& f);

Poly zero();
Poly one(const FiniteField& F);
Poly constant(const FiniteField& F, const FiniteField::Elem& c);
// x^k
Poly monomial(const FiniteField& F, unsigned k);
// Build from small signed integer coefficients (little-endian).
Poly from_ints(const FiniteField& F, const std::vector<long long>& coeffs);

bool equal(const Poly& a, const Poly& b);

Poly add(const FiniteField& F, const Poly& a, const Poly& b);
Poly sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly neg(const FiniteField& F, const Poly& a);
Poly mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly scale(const FiniteField& F, const Poly& a, const FiniteField::Elem& c);
std::pair<Poly, Poly> divrem(const FiniteField& F, const Poly& a, const Poly& b);
Poly mod(const FiniteField& F, const Poly& a, const Poly& b);
// Monic gcd.
Poly gcd(const FiniteField& F, const Poly& a, const Poly& b);
Poly monic(const FiniteField& F, const Poly& a);
Poly derivative(const FiniteField& F, const Poly& a);
FiniteField::Elem eval(const FiniteField& F, const Poly& a, const FiniteField::Elem& x);
Poly pow_mod(const FiniteField& F, const Poly& base, const Int& e, const Poly& m);
// Substitute x -> g(x).
Poly compose(const FiniteField& F, const Poly& a, const Poly& g);

bool is_irreducible(const FiniteField& F, const Poly& f);

// Exact square root: returns s with s*s == f (s normalized so that its leading
// coefficient is the canonical square root of f's), or nullopt if f is not a
// perfect square.  The zero polynomial has square root zero.
std::optional<Poly> sqrt(const FiniteField& F, const Poly& f);

// Monic irreducible factors with multiplicities, deterministically ordered
// (by degree, then coefficient vectors).  Input must be nonzero; the leading
// coefficient is returned separately.
struct Factorization {
    FiniteField::Elem lead;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factorize(const FiniteField& F, const Poly& f, std::uint64_t seed = 0x715ec7ff);

std::string to_string(const FiniteField& F, const Poly& f, const std::string& var);

}  // namespace quadform::fqpoly
