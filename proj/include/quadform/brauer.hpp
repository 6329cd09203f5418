#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadform/diagform.hpp"
#include "quadform/isotropy.hpp"
#include "quadform/report.hpp"

namespace quadform {

// ---------------------------------------------------------------- norm forms
// <1, -a, -b, ab>: the quaternion algebra (a, b) is division iff this form
// is anisotropic.
LocalForm quaternion_norm_form(const LocalFieldPtr& K, const LocalElement& a,
                               const LocalElement& b);
FFRForm quaternion_norm_form(const FiniteFieldPtr& F, const FFRatFunc& a, const FFRatFunc& b);
QpSymForm quaternion_norm_form(std::uint64_t p, const FactoredRatFunc& a,
                               const FactoredRatFunc& b);
QtForm quaternion_norm_form_qt(const FactoredRatFunc& a, const FactoredRatFunc& b);

// <-a, -b, ab, c, d, -cd>: anisotropic iff (a,b) tensor (c,d) is division.
LocalForm albert_form(const LocalFieldPtr& K, const LocalElement& a, const LocalElement& b,
                      const LocalElement& c, const LocalElement& d);
FFRForm albert_form(const FiniteFieldPtr& F, const FFRatFunc& a, const FFRatFunc& b,
                    const FFRatFunc& c, const FFRatFunc& d);
QpSymForm albert_form(std::uint64_t p, const FactoredRatFunc& a, const FactoredRatFunc& b,
                      const FactoredRatFunc& c, const FactoredRatFunc& d);
QtForm albert_form(const FactoredRatFunc& a, const FactoredRatFunc& b, const FactoredRatFunc& c,
                   const FactoredRatFunc& d);

// ------------------------------------------------------------- division test
struct DivisionCertificate {
    bool division = false;
    std::string field;
    std::string certificate;           // what settles it: a rule or a place label
    std::optional<Verdict> verdict;    // engine verdict backing the claim, if one ran
    std::optional<LocalGlobalReport> report;  // the full scan, Q_p(t) only
};

// Exact over fields where the engine decides rank-6 forms outright.
DivisionCertificate biquaternion_is_division(const LocalFieldPtr& K, const LocalElement& a,
                                             const LocalElement& b, const LocalElement& c,
                                             const LocalElement& d);
DivisionCertificate biquaternion_is_division(const FiniteFieldPtr& F, const FFRatFunc& a,
                                             const FFRatFunc& b, const FFRatFunc& c,
                                             const FFRatFunc& d, const std::string& var = "z");
DivisionCertificate biquaternion_is_division_qp(std::uint64_t p, const FactoredRatFunc& a,
                                                const FactoredRatFunc& b,
                                                const FactoredRatFunc& c,
                                                const FactoredRatFunc& d);

// Over Q_p(t) the test is one-sided: an evident hyperbolic pair refutes
// division, an anisotropic completion (bad places of the base chart plus
// auto probe charts) certifies it, and anything else throws
// errc::unsupported -- the tool does not decide global isotropy.
DivisionCertificate biquaternion_is_division(const FactoredRatFunc& a, const FactoredRatFunc& b,
                                             const FactoredRatFunc& c, const FactoredRatFunc& d);

// -------------------------------------------------------------- mod-2 symbols
// (a_1) cup ... cup (a_k), k <= 3, entries square classes of the declared
// field.  zero marks the class 0; a zero symbol carries no entries.
struct FqSymbol {
    FiniteFieldPtr F;
    std::vector<FqElem> entries;
    bool zero = false;
};

struct FfzSymbol {
    FiniteFieldPtr F;  // constant field of F_p(z)
    std::vector<FFRatFunc> entries;
    bool zero = false;
};

struct QtSymbol {
    std::uint64_t p = 5;
    std::vector<FactoredRatFunc> entries;
    bool zero = false;
};

// Residue at a place: split each entry as (uniformizer)^parity * (unit),
// expand multilinearly, apply the tame formula to every term and recombine.
// Sums that do not recombine into a single symbol throw errc::unsupported,
// as do length-1 symbols (their residue is a valuation parity, not a
// symbol) and degree-two places.
FqSymbol symbol_residue(const FfzSymbol& s, const FFPlace& v);
FfzSymbol symbol_residue_special(const QtSymbol& s);                 // at (p)
QtSymbol symbol_residue_rat(const QtSymbol& s, const Place& pl);     // deg-1 atom or 1/t

enum class Tri { No = 0, Yes = 1, Unknown = 2 };

// Nontriviality of the cup-product class.  Exact (Yes/No) for length 1
// everywhere, for length <= 3 over finite fields, for length 2 over F_p(z)
// and for length-2 constants over Q_p(t); length >= 2 otherwise is decided
// soundly: Yes needs a witness (a nontrivial residue), and the fallback is
// Unknown, never a claim of triviality.
Tri symbol_is_nontrivial(const FqSymbol& s);
Tri symbol_is_nontrivial(const FfzSymbol& s);
Tri symbol_is_nontrivial(const QtSymbol& s);

}  // namespace quadform
