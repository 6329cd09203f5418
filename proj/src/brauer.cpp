#include "quadform/brauer.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "quadform/errors.hpp"

namespace quadform {

namespace {

void check_prime(std::uint64_t p, std::uint64_t q, const char* who) {
    if (p != q) throw error(errc::invalid_input, std::string(who) + ": mismatched primes");
}

// ------------------------------------------------------- residue skeleton
// Shared combinatorics of the tame residue: split every entry of the symbol
// as (pi)^parity * (unit), expand multilinearly, push each term through
//   d(pi, u_2, ..., u_k) = (u_2 bar, ..., u_k bar)
// after rewriting repeated uniformizers with (pi, pi) = (-1, pi), and
// recombine the surviving terms.  Ops supplies the field arithmetic.
template <class Ops>
struct ResidueOut {
    bool zero = true;
    std::vector<typename Ops::Res> entries;
};

template <class Ops>
ResidueOut<Ops> residue_skeleton(Ops& ops, const std::vector<typename Ops::Elem>& entries) {
    const std::size_t k = entries.size();
    if (k == 1)
        throw error(errc::unsupported,
                    "length-1 residues are valuation parities, not symbols");
    if (k > 3) throw error(errc::unsupported, "symbols of length > 3 are not supported");

    std::vector<int> parity(k);
    std::vector<typename Ops::Res> unit(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int v = ops.val(entries[i]);
        parity[i] = ((v % 2) + 2) % 2;
        unit[i] = ops.unit_residue(entries[i]);
    }

    std::vector<std::size_t> pi_slots;
    for (std::size_t i = 0; i < k; ++i)
        if (parity[i] == 1) pi_slots.push_back(i);

    auto is_sq = [&](const typename Ops::Res& r) { return ops.is_square(r); };
    auto same_class = [&](const typename Ops::Res& x, const typename Ops::Res& y) {
        return ops.is_square(ops.mul(x, y));
    };

    // Multilinear terms: a subset S of the odd-parity slots carries pi, the
    // rest carry their units.  Terms without pi die; in a term with several,
    // all but the last pi become -1.  The last pi slot is consumed by the
    // residue map, so a term leaves a symbol of length k-1.
    std::vector<std::vector<typename Ops::Res>> syms;
    const std::size_t subsets = std::size_t(1) << pi_slots.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::vector<std::size_t> S;
        for (std::size_t b = 0; b < pi_slots.size(); ++b)
            if (mask & (std::size_t(1) << b)) S.push_back(pi_slots[b]);
        const std::size_t drop = S.back();
        std::vector<typename Ops::Res> sym;
        bool dead = false;
        for (std::size_t i = 0; i < k && !dead; ++i) {
            if (i == drop) continue;
            const bool in_S =
                std::find(S.begin(), S.end(), i) != S.end();
            typename Ops::Res e = in_S ? ops.minus_one() : unit[i];
            if (is_sq(e)) dead = true;  // a trivial slot kills the whole term
            else sym.push_back(std::move(e));
        }
        if (!dead) syms.push_back(std::move(sym));
    }

    // 2-torsion: identical symbols cancel in pairs.  Mod 2 the cup product
    // is symmetric, so length-2 symbols also cancel against their transpose.
    auto same_symbol = [&](const std::vector<typename Ops::Res>& x,
                           const std::vector<typename Ops::Res>& y) {
        bool eq = true;
        for (std::size_t s = 0; s < x.size() && eq; ++s) eq = same_class(x[s], y[s]);
        if (eq || x.size() != 2) return eq;
        return same_class(x[0], y[1]) && same_class(x[1], y[0]);
    };
    std::vector<bool> gone(syms.size(), false);
    for (std::size_t i = 0; i < syms.size(); ++i) {
        if (gone[i]) continue;
        for (std::size_t j = i + 1; j < syms.size(); ++j) {
            if (gone[j]) continue;
            if (same_symbol(syms[i], syms[j])) {
                gone[i] = gone[j] = true;
                break;
            }
        }
    }
    std::vector<std::vector<typename Ops::Res>> live;
    for (std::size_t i = 0; i < syms.size(); ++i)
        if (!gone[i]) live.push_back(std::move(syms[i]));

    ResidueOut<Ops> out;
    if (live.empty()) return out;

    if (k - 1 == 1) {
        // (x) + (y) = (xy): length-1 summands always combine
        typename Ops::Res acc = live[0][0];
        for (std::size_t i = 1; i < live.size(); ++i) acc = ops.mul(acc, live[i][0]);
        if (is_sq(acc)) return out;
        out.zero = false;
        out.entries = {acc};
        return out;
    }

    // length-2 summands combine when they share a slot, up to transposition:
    // (x,a) + (y,a) = (xy,a) and (x,a) + (a,y) = (xy,a)
    bool changed = true;
    while (changed && live.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < live.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < live.size() && !changed; ++j) {
                for (int k2 = 0; k2 < 4 && !changed; ++k2) {
                    const int slot = k2 / 2, jslot = (k2 % 2) ? 1 - slot : slot;
                    if (!same_class(live[i][slot], live[j][jslot])) continue;
                    live[i][1 - slot] = ops.mul(live[i][1 - slot], live[j][1 - jslot]);
                    live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
                    if (is_sq(live[i][1 - slot]))
                        live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                }
            }
        }
    }
    if (live.empty()) return out;
    if (live.size() > 1)
        throw error(errc::unsupported,
                    "residue is a sum of symbols this representation cannot combine");
    out.zero = false;
    out.entries = std::move(live[0]);
    return out;
}

struct FfzOps {
    using Elem = FFRatFunc;
    using Res = FqElem;
    FiniteFieldPtr Fres;
    FFPlace v;
    int val(const Elem& e) const { return ffr_valuation(e, v); }
    Res unit_residue(const Elem& e) const { return ffr_unit_residue(e, v); }
    Res minus_one() const { return {Fres, Fres->neg(Fres->one())}; }
    bool is_square(const Res& r) const { return r.F->is_square(r.v); }
    Res mul(const Res& x, const Res& y) const { return {x.F, x.F->mul(x.v, y.v)}; }
};

struct QtSpecialOps {
    using Elem = FactoredRatFunc;
    using Res = FFRatFunc;
    FiniteFieldPtr Fp;
    int val(const Elem& e) const { return qrf_place_val(e, place_special_fibre()); }
    Res unit_residue(const Elem& e) const { return qrf_place_unit_residue_ffz(e, Fp); }
    Res minus_one() const { return ffr_constant(Fp, Fp->p() - 1); }
    bool is_square(const Res& r) const { return ffq_ratfunc_is_square(r); }
    Res mul(const Res& x, const Res& y) const { return ffr_mul(x, y); }
};

struct QtRatOps {
    using Elem = FactoredRatFunc;
    using Res = FactoredRatFunc;
    std::uint64_t p;
    Place pl;
    int val(const Elem& e) const { return qrf_place_val(e, pl); }
    Res unit_residue(const Elem& e) const { return qrf_place_unit_residue_rat(e, pl); }
    Res minus_one() const { return qrf_constant(p, Rat(-1)); }
    bool is_square(const Res& r) const { return qrf_qp_is_square(r); }
    Res mul(const Res& x, const Res& y) const { return qrf_mul(x, y); }
};

// Exact zero test for a subset sum of factored functions: the sum is a
// rational function whose numerator degree is bounded by the total atom
// degree in play, so vanishing at enough sample points is conclusive.
Rat eval_qrf_at(const FactoredRatFunc& c, const Rat& t) {
    Rat acc = Rat(c.sign) * c.cnum * rat_pow(Rat(c.p), c.p_exp);
    for (const auto& [m, e] : c.atoms) acc *= rat_pow(m.eval(t), e);
    return acc;
}

bool subset_sums_to_zero(const std::vector<const FactoredRatFunc*>& T) {
    int bound = 1;
    for (const auto* c : T)
        for (const auto& [m, e] : c->atoms) bound += std::abs(e) * m.deg;
    int found = 0;
    for (Rat t(2); found <= bound; t += 1) {
        bool pole = false;
        for (const auto* c : T)
            for (const auto& [m, e] : c->atoms)
                if (e < 0 && m.eval(t) == 0) pole = true;
        if (pole) continue;
        Rat sum(0);
        for (const auto* c : T) sum += eval_qrf_at(*c, t);
        if (sum != 0) return false;
        ++found;
    }
    return true;
}

// A sub-multiset of coefficients summing to zero identically gives an
// explicit isotropy witness with entries 0/1.
bool has_subset_sum_witness(const QtForm& q) {
    const std::size_t n = q.coeffs.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // need at least two entries
        std::vector<const FactoredRatFunc*> T;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) T.push_back(&q.coeffs[i]);
        if (subset_sums_to_zero(T)) return true;
    }
    return false;
}

std::vector<Place> symbol_bad_places(const QtSymbol& s) {
    QtForm carrier{s.p, s.entries};
    return enumerate_bad_places(carrier);
}

}  // namespace

// ------------------------------------------------------------- norm forms

LocalForm quaternion_norm_form(const LocalFieldPtr& K, const LocalElement& a,
                               const LocalElement& b) {
    LocalForm q{K, {K->from_int(1), K->neg(a), K->neg(b), K->mul(a, b)}};
    validate(q);
    return q;
}

FFRForm quaternion_norm_form(const FiniteFieldPtr& F, const FFRatFunc& a, const FFRatFunc& b) {
    FFRForm q{F, {ffr_constant(F, 1), ffr_neg(a), ffr_neg(b), ffr_mul(a, b)}};
    validate(q);
    return q;
}

QpSymForm quaternion_norm_form(std::uint64_t p, const FactoredRatFunc& a,
                               const FactoredRatFunc& b) {
    check_prime(p, a.p, "quaternion_norm_form");
    check_prime(p, b.p, "quaternion_norm_form");
    QpSymForm q{p, {qrf_constant(p, 1), qrf_neg(a), qrf_neg(b), qrf_mul(a, b)}};
    validate(q);
    return q;
}

QtForm quaternion_norm_form_qt(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    check_prime(a.p, b.p, "quaternion_norm_form_qt");
    QtForm q{a.p, {qrf_constant(a.p, 1), qrf_neg(a), qrf_neg(b), qrf_mul(a, b)}};
    validate(q);
    return q;
}

LocalForm albert_form(const LocalFieldPtr& K, const LocalElement& a, const LocalElement& b,
                      const LocalElement& c, const LocalElement& d) {
    LocalForm q{K, {K->neg(a), K->neg(b), K->mul(a, b), c, d, K->neg(K->mul(c, d))}};
    validate(q);
    return q;
}

FFRForm albert_form(const FiniteFieldPtr& F, const FFRatFunc& a, const FFRatFunc& b,
                    const FFRatFunc& c, const FFRatFunc& d) {
    FFRForm q{F, {ffr_neg(a), ffr_neg(b), ffr_mul(a, b), c, d, ffr_neg(ffr_mul(c, d))}};
    validate(q);
    return q;
}

QpSymForm albert_form(std::uint64_t p, const FactoredRatFunc& a, const FactoredRatFunc& b,
                      const FactoredRatFunc& c, const FactoredRatFunc& d) {
    for (const auto* e : {&a, &b, &c, &d}) check_prime(p, e->p, "albert_form");
    QpSymForm q{p, {qrf_neg(a), qrf_neg(b), qrf_mul(a, b), c, d, qrf_neg(qrf_mul(c, d))}};
    validate(q);
    return q;
}

QtForm albert_form(const FactoredRatFunc& a, const FactoredRatFunc& b, const FactoredRatFunc& c,
                   const FactoredRatFunc& d) {
    for (const auto* e : {&b, &c, &d}) check_prime(a.p, e->p, "albert_form");
    QtForm q{a.p, {qrf_neg(a), qrf_neg(b), qrf_mul(a, b), c, d, qrf_neg(qrf_mul(c, d))}};
    validate(q);
    return q;
}

// ----------------------------------------------------------- division test

DivisionCertificate biquaternion_is_division(const LocalFieldPtr& K, const LocalElement& a,
                                             const LocalElement& b, const LocalElement& c,
                                             const LocalElement& d) {
    const Verdict v = decide_local(albert_form(K, a, b, c, d));
    DivisionCertificate out;
    out.division = !v.isotropic;
    out.field = local_field_tag(K);
    out.certificate = out.division ? "the Albert form is anisotropic"
                                   : "the Albert form is isotropic";
    out.verdict = v;
    return out;
}

DivisionCertificate biquaternion_is_division(const FiniteFieldPtr& F, const FFRatFunc& a,
                                             const FFRatFunc& b, const FFRatFunc& c,
                                             const FFRatFunc& d, const std::string& var) {
    const Verdict v = decide_ffz_global(albert_form(F, a, b, c, d), var);
    DivisionCertificate out;
    out.division = !v.isotropic;
    out.field = finite_field_tag(F) + "(" + var + ")";
    out.certificate = out.division ? "the Albert form is anisotropic"
                                   : "the Albert form is isotropic";
    out.verdict = v;
    return out;
}

DivisionCertificate biquaternion_is_division_qp(std::uint64_t p, const FactoredRatFunc& a,
                                                const FactoredRatFunc& b,
                                                const FactoredRatFunc& c,
                                                const FactoredRatFunc& d) {
    const Verdict v = decide_qp_sym(albert_form(p, a, b, c, d));
    DivisionCertificate out;
    out.division = !v.isotropic;
    out.field = "Q_" + std::to_string(p);
    out.certificate = out.division ? "the Albert form is anisotropic"
                                   : "the Albert form is isotropic";
    out.verdict = v;
    return out;
}

DivisionCertificate biquaternion_is_division(const FactoredRatFunc& a, const FactoredRatFunc& b,
                                             const FactoredRatFunc& c, const FactoredRatFunc& d) {
    const QtForm q = normalize(albert_form(a, b, c, d));
    const std::string field = "Q_" + std::to_string(q.p) + "(t)";

    // An evident hyperbolic pair <e, -e * square> refutes division outright.
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
        for (std::size_t j = i + 1; j < q.coeffs.size(); ++j) {
            if (!qrf_qpt_is_square(qrf_neg(qrf_mul(q.coeffs[i], q.coeffs[j])))) continue;
            DivisionCertificate out;
            out.division = false;
            out.field = field;
            out.certificate = "the Albert form contains the hyperbolic pair <" +
                              qrf_to_string(q.coeffs[i], "t") + ", " +
                              qrf_to_string(q.coeffs[j], "t") + ">";
            return out;
        }
    }

    LocalGlobalReport rep = local_global_report_auto(q);
    if (rep.anisotropic_certificate) {
        DivisionCertificate out;
        out.division = true;
        out.field = field;
        out.certificate = "anisotropic completion at " + rep.certificate_label;
        for (const auto& e : rep.entries)
            if (e.label == rep.certificate_label) out.verdict = e.verdict;
        for (const auto& e : rep.probes)
            if (e.label == rep.certificate_label) out.verdict = e.verdict;
        out.report = std::move(rep);
        return out;
    }
    throw error(errc::unsupported, "every checked completion is isotropic; global isotropy over " +
                                       field + " is undecided");
}

// ---------------------------------------------------------------- residues

FqSymbol symbol_residue(const FfzSymbol& s, const FFPlace& v) {
    FiniteFieldPtr Fres = ffr_residue_field(s.F, v);
    if (s.zero) return {Fres, {}, true};
    for (const auto& e : s.entries)
        if (e.base != s.F) throw error(errc::invalid_input, "symbol entry over a different field");
    FfzOps ops{Fres, v};
    auto r = residue_skeleton(ops, s.entries);
    return {Fres, std::move(r.entries), r.zero};
}

FfzSymbol symbol_residue_special(const QtSymbol& s) {
    auto Fp = std::make_shared<const FiniteField>(s.p);
    if (s.zero) return {Fp, {}, true};
    for (const auto& e : s.entries) check_prime(s.p, e.p, "symbol_residue_special");
    QtSpecialOps ops{Fp};
    auto r = residue_skeleton(ops, s.entries);
    return {Fp, std::move(r.entries), r.zero};
}

QtSymbol symbol_residue_rat(const QtSymbol& s, const Place& pl) {
    if (pl.kind == PlaceKind::SpecialFibre)
        throw error(errc::invalid_input,
                    "the special fibre has residue field F_p(z); use the special-fibre residue");
    if (pl.kind == PlaceKind::Horizontal && pl.atom.deg != 1)
        throw error(errc::unsupported,
                    "degree-two places are not supported for symbol residues");
    if (s.zero) return {s.p, {}, true};
    for (const auto& e : s.entries) check_prime(s.p, e.p, "symbol_residue_rat");
    QtRatOps ops{s.p, pl};
    auto r = residue_skeleton(ops, s.entries);
    return {s.p, std::move(r.entries), r.zero};
}

// ------------------------------------------------------------ nontriviality

Tri symbol_is_nontrivial(const FqSymbol& s) {
    if (s.zero || s.entries.empty()) return Tri::No;
    if (s.entries.size() > 3)
        throw error(errc::unsupported, "symbols of length > 3 are not supported");
    for (const auto& e : s.entries)
        if (e.F->is_zero(e.v)) throw error(errc::invalid_input, "zero entry in a symbol");
    if (s.entries.size() == 1)
        return s.entries[0].F->is_square(s.entries[0].v) ? Tri::No : Tri::Yes;
    // over a finite field every rank-3 form is isotropic, so all higher cup
    // products vanish
    return Tri::No;
}

Tri symbol_is_nontrivial(const FfzSymbol& s) {
    if (s.zero || s.entries.empty()) return Tri::No;
    if (s.entries.size() > 3)
        throw error(errc::unsupported, "symbols of length > 3 are not supported");
    for (const auto& e : s.entries)
        if (ffq_ratfunc_is_square(e)) return Tri::No;  // a square slot kills the class
    if (s.entries.size() == 1) return Tri::Yes;
    if (s.entries.size() == 2) {
        const Verdict v = decide_ffz_global(quaternion_norm_form(s.F, s.entries[0], s.entries[1]));
        return v.isotropic ? Tri::No : Tri::Yes;
    }
    // length 3: sound one-sided search through residues; every residue is a
    // length-2 symbol over a finite field, hence trivial, so no witness can
    // appear -- but the scan keeps the contract explicit.
    std::set<FFPlace> places;
    for (const auto& e : s.entries)
        for (const auto& v : ffr_support(e, true)) places.insert(v);
    for (const auto& v : places) {
        const FqSymbol r = symbol_residue(s, v);
        if (!r.zero && symbol_is_nontrivial(r) == Tri::Yes) return Tri::Yes;
    }
    return Tri::Unknown;
}

Tri symbol_is_nontrivial(const QtSymbol& s) {
    if (s.zero || s.entries.empty()) return Tri::No;
    if (s.entries.size() > 3)
        throw error(errc::unsupported, "symbols of length > 3 are not supported");
    for (const auto& e : s.entries) {
        check_prime(s.p, e.p, "symbol_is_nontrivial");
        if (qrf_qpt_is_square(e)) return Tri::No;
    }
    if (s.entries.size() == 1) return Tri::Yes;

    const bool constant = std::all_of(s.entries.begin(), s.entries.end(),
                                      [](const FactoredRatFunc& e) { return qrf_is_const(e); });
    if (s.entries.size() == 2) {
        if (constant)
            // constants restrict injectively from Q_p (specialize t to decide)
            return qrf_qp_hilbert(s.entries[0], s.entries[1]) == 1 ? Tri::No : Tri::Yes;
        // an explicit zero of the norm form settles triviality exactly
        if (has_subset_sum_witness(quaternion_norm_form_qt(s.entries[0], s.entries[1])))
            return Tri::No;
    }

    // one-sided: a nontrivial residue at some place certifies the class
    for (const auto& pl : symbol_bad_places(s)) {
        if (pl.kind == PlaceKind::Horizontal && pl.atom.deg != 1) continue;
        if (pl.kind == PlaceKind::SpecialFibre) {
            const FfzSymbol r = symbol_residue_special(s);
            if (!r.zero && symbol_is_nontrivial(r) == Tri::Yes) return Tri::Yes;
        } else {
            const QtSymbol r = symbol_residue_rat(s, pl);
            if (!r.zero && symbol_is_nontrivial(r) == Tri::Yes) return Tri::Yes;
        }
    }
    return Tri::Unknown;
}

}  // namespace quadform
