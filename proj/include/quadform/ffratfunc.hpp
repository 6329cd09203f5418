#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quadform/fppoly.hpp"

namespace quadform {

// Nonzero element of F_p(z) in factored multiplicative form:
//   constant * prod factor_i ^ exp_i
// with constant in F_p^*, factors monic irreducible over the prime base
// field, pairwise distinct, canonically ordered (degree, then coefficients),
// and all exponents nonzero.  Exponents may be negative.
struct FFRatFunc {
    FiniteFieldPtr base;  // prime field F_p
    std::uint64_t constant = 1;
    std::vector<std::pair<fqpoly::Poly, int>> factors;

    bool operator==(const FFRatFunc& o) const;
};

// Canonicalizing constructor: merges duplicate factors, drops zero exponents,
// factorizes reducible inputs, sorts.  Throws errc::degenerate on zero.
FFRatFunc ffr_make(const FiniteFieldPtr& base, std::uint64_t constant,
                   std::vector<std::pair<fqpoly::Poly, int>> factors);
FFRatFunc ffr_constant(const FiniteFieldPtr& base, std::uint64_t c);
// Factor a nonzero polynomial into the canonical form.
FFRatFunc ffr_from_poly(const FiniteFieldPtr& base, const fqpoly::Poly& f);

FFRatFunc ffr_mul(const FFRatFunc& a, const FFRatFunc& b);
FFRatFunc ffr_neg(const FFRatFunc& a);
FFRatFunc ffr_inv(const FFRatFunc& a);
FFRatFunc ffr_pow(const FFRatFunc& a, int e);

// Square-class normalization: exponents mod 2, constant untouched.
FFRatFunc ffr_normalize(const FFRatFunc& a);

// Exact square test in F_p(z): all exponents even and the constant a square.
bool ffq_ratfunc_is_square(const FFRatFunc& a);

// As a fraction of coprime polynomials (numerator, denominator).
std::pair<fqpoly::Poly, fqpoly::Poly> ffr_as_fraction(const FFRatFunc& a);
FFRatFunc ffr_from_fraction(const FiniteFieldPtr& base, const fqpoly::Poly& num,
                            const fqpoly::Poly& den);

// ------------------------------------------------------------------ places
// Codimension-1 places of F_p(z): monic irreducible pi, or 1/z.
struct FFPlace {
    bool at_infinity = false;
    fqpoly::Poly pi;  // ignored when at_infinity

    bool operator==(const FFPlace& o) const {
        return at_infinity == o.at_infinity && (at_infinity || pi == o.pi);
    }
    // Finite places by (degree, coefficients); infinity last.
    bool operator<(const FFPlace& o) const {
        if (at_infinity != o.at_infinity) return !at_infinity;
        if (at_infinity) return false;
        if (pi.size() != o.pi.size()) return pi.size() < o.pi.size();
        return pi < o.pi;
    }
};

int ffr_valuation(const FFRatFunc& a, const FFPlace& v);
// Residue of a * pi^{-val} in the residue field F_p[z]/(pi) (F_p at infinity).
FqElem ffr_unit_residue(const FFRatFunc& a, const FFPlace& v);
// Residue field of a place.
FiniteFieldPtr ffr_residue_field(const FiniteFieldPtr& base, const FFPlace& v);
// Finite places in the support plus infinity if the total degree is odd or
// the caller asks for it unconditionally.
std::vector<FFPlace> ffr_support(const FFRatFunc& a, bool include_infinity);

std::string ffr_to_string(const FFRatFunc& a, const std::string& var);
// Renders with the same symmetric coefficients as ffr_to_string ("x-1", not
// "x+4"); the prime is needed to balance the representatives.
std::string ffplace_to_string(const FFPlace& v, const std::string& var, std::uint64_t p);

// Exact square root as a fraction, defined when ffq_ratfunc_is_square holds.
std::pair<fqpoly::Poly, fqpoly::Poly> ffr_sqrt_fraction(const FFRatFunc& a);

// Parse the shared term grammar (see ratfunc.hpp) over F_p(var).  The symbol
// 'a' is the canonical nonresidue; 'p' is rejected (it vanishes mod p).
FFRatFunc ffr_parse(const FiniteFieldPtr& base, const std::string& text, const std::string& var);

}  // namespace quadform
