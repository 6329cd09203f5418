#pragma once

#include <string>
#include <vector>

#include "quadform/ffratfunc.hpp"
#include "quadform/finite_field.hpp"
#include "quadform/local_field.hpp"
#include "quadform/places.hpp"
#include "quadform/ratfunc.hpp"

namespace quadform {

// Diagonal quadratic forms <a_1, ..., a_n> with nonzero coefficients.  One
// concrete type per coefficient field:
//  - FqForm:    finite field F_q
//  - LocalForm: complete discretely valued field, numeric coefficients
//  - QpSymForm: Q_p with exact symbolic coefficients sign * c * p^k
//  - FFRForm:   F_p(z), factored coefficients
//  - QtForm:    Q_p(t), factored coefficients

struct FqForm {
    FiniteFieldPtr F;
    std::vector<FiniteField::Elem> coeffs;
};

struct LocalForm {
    LocalFieldPtr K;
    std::vector<LocalElement> coeffs;
};

// Coefficients must be atom-free.
struct QpSymForm {
    std::uint64_t p = 5;
    std::vector<FactoredRatFunc> coeffs;
};

struct FFRForm {
    FiniteFieldPtr F;
    std::vector<FFRatFunc> coeffs;
};

struct QtForm {
    std::uint64_t p = 5;
    std::vector<FactoredRatFunc> coeffs;
};

// Throw errc::degenerate on rank 0 or a zero/malformed coefficient.
void validate(const FqForm& q);
void validate(const LocalForm& q);
void validate(const QpSymForm& q);
void validate(const FFRForm& q);
void validate(const QtForm& q);

std::size_t rank(const FqForm& q);
std::size_t rank(const LocalForm& q);
std::size_t rank(const QpSymForm& q);
std::size_t rank(const FFRForm& q);
std::size_t rank(const QtForm& q);

// Square-class normalization of every coefficient; verdict-equivalent.
FqForm normalize(const FqForm& q);
QpSymForm normalize(const QpSymForm& q);
FFRForm normalize(const FFRForm& q);
QtForm normalize(const QtForm& q);

// Canonical rendering of the coefficient list.
std::vector<std::string> render_coeffs(const FqForm& q);
std::vector<std::string> render_coeffs(const LocalForm& q);
std::vector<std::string> render_coeffs(const QpSymForm& q);
std::vector<std::string> render_coeffs(const FFRForm& q, const std::string& var);
std::vector<std::string> render_coeffs(const QtForm& q, const std::string& var);

std::string form_to_string(const std::vector<std::string>& coeffs);

// Parse "<c1, c2, ...>" (angle brackets optional) with the shared term
// grammar per coefficient.
QtForm qt_parse_form(std::uint64_t p, const std::string& text, const std::string& var);
FFRForm ffr_parse_form(const FiniteFieldPtr& base, const std::string& text,
                       const std::string& var);

// ------------------------------------------------- residue decompositions
// Split q = q1 perp pi*q2 by valuation parity and take unit residues:
// q1 collects even-valuation entries, q2 odd-valuation entries with one
// uniformizer stripped.  Entry order is inherited from q.

template <class FormT>
struct Decomp {
    FormT q1, q2;
};

// Over a local field, residues land in the residue field.
Decomp<FqForm> springer_decompose(const LocalForm& q);
Decomp<FqForm> springer_decompose(const QpSymForm& q);

// Over F_p(z) at a place.
Decomp<FqForm> springer_decompose(const FFRForm& q, const FFPlace& v);

// Over Q_p(t) at a place of the current chart; the residue field depends on
// the place kind, so each flavor has its own entry point.
Decomp<QpSymForm> qt_springer_rat(const QtForm& q, const Place& pl);
Decomp<LocalForm> qt_springer_ext(const QtForm& q, const QAtom& m, const LocalFieldPtr& K);
Decomp<FFRForm> qt_springer_ffz(const QtForm& q, const FiniteFieldPtr& Fp);

// ------------------------------------------------- two-parameter splitting
// At the closed point cut out by (x0, p) on the model, write each coefficient
// as unit * x0^i * p^j; group by parity of (i, j) and strip both uniformizers
// completely.  Coefficients that are not monomial-times-unit at the point
// raise errc::non_normal_crossings naming the offender.
struct TwoParamDecomposition {
    std::vector<FactoredRatFunc> q1;  // (even, even)
    std::vector<FactoredRatFunc> q2;  // (odd, even)   x-part
    std::vector<FactoredRatFunc> q3;  // (even, odd)   p-part
    std::vector<FactoredRatFunc> q4;  // (odd, odd)    xp-part
};

TwoParamDecomposition two_param_decompose(const QtForm& q, const QAtom& x0);

}  // namespace quadform
