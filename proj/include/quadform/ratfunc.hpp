#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quadform/numeric.hpp"

namespace quadform {

// Monic polynomial atom in the chart variable, degree 1 or 2, rational
// coefficients: x + c0, or x^2 + c1 x + c0.  Atoms are the multiplicative
// building blocks of factored coefficients over Q_p(t).
struct QAtom {
    int deg = 1;
    Rat c1 = 0;  // used when deg == 2
    Rat c0 = 0;

    bool operator==(const QAtom& o) const { return deg == o.deg && c1 == o.c1 && c0 == o.c0; }
    // Linear atoms sort by their root -c0 ascending, so (t) precedes (t-5).
    bool operator<(const QAtom& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (c1 != o.c1) return c1 < o.c1;
        return c0 > o.c0;
    }
    Rat eval(const Rat& t) const { return deg == 1 ? Rat(t + c0) : Rat(t * t + c1 * t + c0); }
    Rat disc() const { return c1 * c1 - 4 * c0; }  // deg 2 only
};

QAtom qatom_linear(const Rat& c0);
QAtom qatom_quadratic(const Rat& c1, const Rat& c0);

// Nonzero element of Q(t) (or of Q, when no atoms are present) in factored
// multiplicative form relative to an ambient odd prime p:
//   sign * cnum * p^p_exp * prod atom_i ^ exp_i
// with cnum a positive rational of p-adic valuation 0 and atoms pairwise
// distinct, irreducible over Q_p, canonically ordered.
struct FactoredRatFunc {
    std::uint64_t p = 5;
    int sign = 1;
    Rat cnum = 1;
    int p_exp = 0;
    std::vector<std::pair<QAtom, int>> atoms;

    bool operator==(const FactoredRatFunc& o) const {
        return p == o.p && sign == o.sign && cnum == o.cnum && p_exp == o.p_exp &&
               atoms == o.atoms;
    }
};

// Canonicalizing constructor: extracts sign and p-power from the constant,
// merges duplicate atoms, validates each atom irreducible over Q_p (degree 2:
// discriminant a nonsquare in Q_p; rational-square discriminants must be
// split by the caller), sorts.  Throws errc::degenerate on zero input.
FactoredRatFunc qrf_make(std::uint64_t p, const Rat& constant, int p_exp,
                         std::vector<std::pair<QAtom, int>> atoms);
FactoredRatFunc qrf_constant(std::uint64_t p, const Rat& c);

FactoredRatFunc qrf_mul(const FactoredRatFunc& a, const FactoredRatFunc& b);
FactoredRatFunc qrf_neg(const FactoredRatFunc& a);
FactoredRatFunc qrf_inv(const FactoredRatFunc& a);
FactoredRatFunc qrf_pow(const FactoredRatFunc& a, int e);

// Square-class normalization: exponents mod 2, constant replaced by its
// squarefree part.  The sign is preserved (no canonical sign reduction).
FactoredRatFunc qrf_normalize(const FactoredRatFunc& a);

bool qrf_is_const(const FactoredRatFunc& a);  // atom-free: element of Q_p^*

// --- exact Q_p operations on atom-free values
int qrf_qp_val(const FactoredRatFunc& a);
// residue of the unit part in F_p
std::uint64_t qrf_qp_unit_residue(const FactoredRatFunc& a);
bool qrf_qp_is_square(const FactoredRatFunc& a);
int qrf_qp_hilbert(const FactoredRatFunc& a, const FactoredRatFunc& b);

// Square test in the full field Q_p(t): every exponent even and the
// remaining constant a square in Q_p.
bool qrf_qpt_is_square(const FactoredRatFunc& a);

std::string qrf_to_string(const FactoredRatFunc& a, const std::string& var);
std::string qatom_to_string(const QAtom& m, const std::string& var);

// Exponent of the given atom (0 if absent).
int qrf_atom_exp(const FactoredRatFunc& a, const QAtom& m);
// a with the given atom's exponent set to zero.
FactoredRatFunc qrf_drop_atom(const FactoredRatFunc& a, const QAtom& m);
// a with p_exp set to zero.
FactoredRatFunc qrf_drop_p(const FactoredRatFunc& a);

// ------------------------------------------------------------------ parsing
// Grammar (shared by t-coordinate coefficients and finite-field entries):
//   term    := ['+'|'-'] factor ('*' factor)*
//   factor  := base ('^' ['-'] digits)?
//   base    := digits | 'a' | 'p' | var | '(' poly ')'
//   poly    := ['+'|'-'] mono (('+'|'-') mono)*
//   mono    := coeff ('*'? var ('^' digits)?)? | var ('^' digits)?
//   coeff   := digits ('*' ('a'|'p'))? | 'a' | 'p' | 'a'|'p' '*' digits
// 'a' is the canonical nonresidue of p; polynomial atoms must be monic with
// integer coefficients up to a sign (leading coefficients are folded into
// the constant), of degree <= 2, and are split/validated on construction.
FactoredRatFunc qrf_parse(std::uint64_t p, const std::string& text, const std::string& var);

}  // namespace quadform
