#include "quadform/curve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "quadform/errors.hpp"
#include "quadform/places.hpp"

namespace quadform {

namespace {

constexpr int kPrecision = 24;

void require(bool ok, const std::string& step) {
    if (!ok) throw error(errc::degenerate, "derivation check failed: " + step);
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

QAtom atom_x_minus(const Rat& c) { return qatom_linear(-c); }

// W = x(1-x)(x-p) = -x(x-1)(x-p) as an element of Q_p(x).
FactoredRatFunc curve_w(std::uint64_t p) {
    return qrf_make(p, Rat(-1), 0,
                    {{atom_x_minus(Rat(0)), 1},
                     {atom_x_minus(Rat(1)), 1},
                     {atom_x_minus(Rat(Int(p))), 1}});
}

Rat radicand(std::uint64_t p, const Rat& a) { return a * (1 - a) * (a - Rat(Int(p))); }

void check_odd_prime(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p))
        throw error(errc::invalid_input, "the base prime must be an odd prime");
}

// Expand u (S - u) (u - p S) as a polynomial in u and S and confirm that
// -u^3 is the only term free of S.  S stands for pi^{2n}, so every other
// term vanishes modulo the maximal ideal, for every n >= 1 at once.
bool pole_expansion_reduces(std::uint64_t p) {
    using Term = std::pair<int, int>;                   // (deg_u, deg_S)
    std::map<Term, Int> acc{{{1, 0}, Int(1)}};          // u
    const std::vector<std::map<Term, Int>> factors = {
        {{{0, 1}, Int(1)}, {{1, 0}, Int(-1)}},          // S - u
        {{{1, 0}, Int(1)}, {{0, 1}, -Int(p)}},          // u - p S
    };
    for (const auto& f : factors) {
        std::map<Term, Int> next;
        for (const auto& [t1, c1] : acc)
            for (const auto& [t2, c2] : f)
                next[{t1.first + t2.first, t1.second + t2.second}] += c1 * c2;
        acc = std::move(next);
    }
    for (const auto& [t, c] : acc) {
        if (c == 0) continue;
        if (t.second == 0 && !(t == Term{3, 0} && c == Int(-1))) return false;
    }
    return acc[{3, 0}] == Int(-1);
}

LocalFieldPtr make_qp(std::uint64_t p) {
    return LocalField::create({p, ExtKind::None, 0, 0, kPrecision});
}

CurvePoint torsion_point(std::uint64_t p, const Rat& a) {
    CurvePoint pt;
    pt.p = p;
    pt.a = a;
    pt.field = make_qp(p);
    pt.b = pt.field->zero();
    return pt;
}

int field_degree(const LocalFieldPtr& K) { return K->e() * K->f(); }

bool is_square_rat(const LocalFieldPtr& K, const Rat& x) {
    return K->is_square(K->from_rational(x));
}

}  // namespace

std::string curve_case_name(CurveCase c) {
    switch (c) {
        case CurveCase::NegVal: return "NegVal";
        case CurveCase::PosVal: return "PosVal";
        case CurveCase::UnitXVanishes: return "UnitXVanishes";
        case CurveCase::UnitResidualP: return "UnitResidualP";
        case CurveCase::ClosedPoint: return "ClosedPoint";
    }
    throw error(errc::invalid_input, "unknown curve case");
}

CurvePoint curve_point_infinity(std::uint64_t p) {
    check_odd_prime(p);
    CurvePoint pt;
    pt.p = p;
    pt.at_infinity = true;
    pt.field = make_qp(p);
    pt.b = pt.field->zero();
    return pt;
}

CurvePoint curve_point_rational(std::uint64_t p, const Rat& a) {
    check_odd_prime(p);
    const Rat r = radicand(p, a);
    if (r == 0) return torsion_point(p, a);

    const Int P(p);
    const int v = padic_val(r, P);
    const Rat unit = r / rat_pow(Rat(P), v);
    const bool unit_square = legendre(rat_mod_prime(unit, p), p) == 1;

    LocalFieldDesc desc{p, ExtKind::None, 0, 0, kPrecision};
    if (v % 2 != 0 || !unit_square) {
        // adjoin the square root of the class representative r misses
        const std::uint64_t nr = smallest_nonresidue(p);
        std::uint64_t d = 1;
        if (v % 2 == 0) d = nr;                       // unit nonsquare class
        else d = unit_square ? p : p * nr;            // odd valuation classes
        desc.ext = (v % 2 == 0) ? ExtKind::Unramified : ExtKind::Eisenstein;
        desc.def_c = -static_cast<long long>(d);
    }
    CurvePoint pt;
    pt.p = p;
    pt.a = a;
    pt.field = LocalField::create(desc);
    auto root = pt.field->sqrt(pt.field->from_rational(r));
    if (!root)
        throw error(errc::degenerate,
                    "the radicand is not a square in the constructed field");
    pt.b = *root;
    return pt;
}

bool curve_identities_hold(std::uint64_t p) {
    check_odd_prime(p);
    using Lin = std::pair<Rat, Rat>;  // c1 * x + c0
    const Lin x{1, 0}, one_minus_x{-1, 1}, x_minus_p{1, -Rat(Int(p))};
    auto add = [](const Lin& f, const Lin& g) {
        return Lin{f.first + g.first, f.second + g.second};
    };
    auto sub = [](const Lin& f, const Lin& g) {
        return Lin{f.first - g.first, f.second - g.second};
    };
    bool ok = add(x, one_minus_x) == Lin{0, 1};
    ok = ok && sub(x, x_minus_p) == Lin{0, Rat(Int(p))};
    ok = ok && add(one_minus_x, x_minus_p) == Lin{0, 1 - Rat(Int(p))};
    ok = ok && rat_is_qp_square(1 - Rat(Int(p)), p);
    ok = ok && pole_expansion_reduces(p);
    return ok;
}

bool curve_field_is_square(std::uint64_t p, const FactoredRatFunc& g) {
    check_odd_prime(p);
    if (g.p != p) throw error(errc::invalid_input, "prime mismatch in curve element");
    return qrf_qpt_is_square(g) || qrf_qpt_is_square(qrf_mul(g, curve_w(p)));
}

bool one_minus_x_square_in_F(std::uint64_t p) {
    check_odd_prime(p);
    return curve_field_is_square(p, qrf_parse(p, "(1-x)", "x"));
}

CurveOutcome one_minus_x_square_in_completion(const CurvePoint& pt) {
    check_odd_prime(pt.p);
    if (!pt.field) throw error(errc::invalid_input, "curve point carries no field");
    const std::uint64_t p = pt.p;
    const Int P(p);
    const LocalFieldPtr& K = pt.field;

    CurveOutcome out;
    out.depth = field_degree(K);

    if (pt.at_infinity) {
        out.branch = CurveCase::NegVal;
        out.point = "infinity";
        require(pole_expansion_reduces(p),
                "u(S-u)(u-pS) = -u^3 modulo the maximal ideal");
        out.trace.push_back(
            "x = u/t^2 at infinity; b^2 t^6 = u(t^2-u)(u-pt^2) = -u^3 mod t, so "
            "-u^3 and hence -u is a square in the residue field");
        // with t = x/y the unit is u = x t^2 = x^2/((1-x)(x-p)); its residue
        // at infinity is the leading-coefficient ratio -1
        auto u_fn = qrf_make(p, Rat(-1), 0,
                             {{atom_x_minus(Rat(0)), 2},
                              {atom_x_minus(Rat(1)), -1},
                              {atom_x_minus(Rat(Int(p))), -1}});
        require(qrf_place_val(u_fn, place_infinity()) == 0, "u is a unit at infinity");
        const auto res = qrf_place_unit_residue_rat(u_fn, place_infinity());
        const Rat ubar = Rat(res.sign) * res.cnum * rat_pow(Rat(P), res.p_exp);
        require(ubar == -1, "residue of x^2/((1-x)(x-p)) at infinity is -1");
        require(rat_is_qp_square(-ubar, p), "-u has residue 1, a square");
        require(rat_is_qp_square(-ubar * ubar * ubar, p), "-u^3 is a square");
        out.trace.push_back(
            "1-x = t^{-2}(t^2-u) has the class of t^2-u, whose residue -u = 1 is "
            "a square; Hensel's lemma lifts it");
        out.square = true;
        return out;
    }

    const Rat a = pt.a;
    const Rat r = radicand(p, a);
    if (!K->same(K->mul(pt.b, pt.b), K->from_rational(r)))
        throw error(errc::invalid_input, "the point does not lie on the curve");

    if (a == 0 || a == 1 || a == Rat(Int(p))) {
        if (!pt.b.is_exact_zero())
            throw error(errc::invalid_input, "two-torsion points carry b = 0");
        out.point = "(" + rat_str(a) + ", 0)";
        if (a == 0) {
            out.branch = CurveCase::PosVal;
            require(is_square_rat(K, 1), "1 is a square");
            out.trace.push_back(
                "1-x is a unit at (0,0) with residue 1, a square by Hensel's lemma");
        } else if (a == 1) {
            out.branch = CurveCase::UnitXVanishes;
            // 1-x vanishes to order two with y as uniformizer, and
            // (1-x)/y^2 = 1/(x(x-p)) has residue 1/(1-p)
            require(rat_is_qp_square(1 - Rat(P), p), "1-p = 1 mod p is a square");
            require(is_square_rat(K, 1 / (1 - Rat(P))), "1/(1-p) is a square");
            out.trace.push_back(
                "1-x = y^2/(x(x-p)) at (1,0): its class is that of 1/(1-p), a "
                "square since 1-p = 1 mod p");
        } else {
            out.branch = CurveCase::UnitResidualP;
            require(rat_is_qp_square(1 - Rat(P), p), "1-p = 1 mod p is a square");
            require(is_square_rat(K, 1 - Rat(P)), "1-p is a square in k");
            out.trace.push_back(
                "1-x is a unit at (p,0) with residue 1-p, a square since "
                "1-p = 1 mod p");
        }
        out.square = true;
        return out;
    }

    // generic closed point: b != 0, so b^2 = a(1-a)(a-p) puts 1-a and
    // a(a-p) in the same square class of k
    out.branch = CurveCase::ClosedPoint;
    out.point = "(" + rat_str(a) + ", b)";
    require(r != 0, "the radicand is nonzero away from two-torsion");
    require(!pt.b.is_exact_zero(), "b is nonzero away from two-torsion");
    const Rat transfer = a * (a - Rat(P));
    require(is_square_rat(K, 1 - a) == is_square_rat(K, transfer),
            "1-a and a(a-p) land in the same square class");
    out.trace.push_back("b^2 = a(1-a)(a-p) identifies the classes of 1-a and a(a-p)");

    const int v = (a == 0) ? 0 : padic_val(a, P);
    if (v > 0) {
        require(padic_val(1 - a, P) == 0 && rat_mod_prime(1 - a, p) == 1,
                "1-a is a unit with residue 1");
        out.trace.push_back(
            "a = 0 mod p: 1-a is a unit with residue 1, a square by Hensel's lemma");
    } else if (v == 0) {
        require(padic_val(transfer, P) == 0, "a(a-p) is a unit");
        const std::uint64_t abar = rat_mod_prime(a, p);
        require(rat_mod_prime(transfer, p) == mulmod(abar, abar, p),
                "a(a-p) has residue a^2");
        out.trace.push_back(
            "a is a unit: a(a-p) = a^2 mod p has a square residue, so it is a "
            "square in k and the class identity carries this to 1-a");
    } else {
        const Rat tail = 1 - Rat(P) / a;
        require(padic_val(Rat(P) / a, P) > 0 && rat_mod_prime(tail, p) == 1,
                "1 - p/a is a unit with residue 1");
        require(is_square_rat(K, tail), "1 - p/a is a square");
        out.trace.push_back(
            "a has a pole: a(a-p) = a^2 (1 - p/a) is a square times a unit of "
            "residue 1, so the class identity carries squareness to 1-a");
    }

    require(is_square_rat(K, 1 - a), "1-a is a square in k");
    out.square = true;
    return out;
}

std::vector<CurvePoint> sample_closed_points(std::uint64_t p, std::size_t count,
                                             std::uint64_t seed, int max_degree) {
    check_odd_prime(p);
    if (max_degree < 1 || max_degree > 2)
        throw error(errc::invalid_input, "residue fields of degree 1 or 2 only");

    std::vector<CurvePoint> pts;
    std::set<Rat> seen;
    auto offer = [&](const Rat& a) {
        if (pts.size() >= count) return;
        if (a == 0 || a == 1 || a == Rat(Int(p))) return;
        if (radicand(p, a) == 0 || !seen.insert(a).second) return;
        auto pt = curve_point_rational(p, a);
        if (field_degree(pt.field) > max_degree) return;
        pts.push_back(std::move(pt));
    };

    for (long long a = 2; a < 10 && pts.size() < std::min<std::size_t>(count, 5); ++a)
        offer(Rat(a));

    SplitMix64 rng(seed);
    auto unit = [&](std::uint64_t span) {
        std::uint64_t m = 1 + rng.below(span);
        return (m % p == 0) ? m + 1 : m;
    };
    for (std::size_t guard = 0; pts.size() < count && guard < 64 * count; ++guard) {
        switch (rng.below(4)) {
            case 0: offer(1 + Rat(Int(p)) * Rat(Int(1 + rng.below(p * p)))); break;
            case 1: offer(Rat(Int(p)) * Rat(Int(1 + rng.below(p * p)))); break;
            case 2: {
                const int j = 1 + static_cast<int>(rng.below(2));
                offer(Rat(Int(unit(p * p * p))) / rat_pow(Rat(Int(p)), 2 * j));
                break;
            }
            default: offer(Rat(Int(unit(p * p))) / Rat(Int(p))); break;
        }
    }
    if (pts.size() < count)
        throw error(errc::budget_exceeded, "could not sample enough closed points");
    return pts;
}

std::vector<CurveOutcome> curve_case_branches(std::uint64_t p,
                                              const std::vector<CurvePoint>& pts) {
    check_odd_prime(p);
    std::vector<CurveOutcome> out;
    out.push_back(one_minus_x_square_in_completion(curve_point_infinity(p)));
    for (const Rat& a : {Rat(0), Rat(1), Rat(Int(p))})
        out.push_back(one_minus_x_square_in_completion(torsion_point(p, a)));
    for (const auto& pt : pts) out.push_back(one_minus_x_square_in_completion(pt));
    return out;
}

CurveReport curve_report(std::uint64_t p, std::size_t samples, std::uint64_t seed) {
    CurveReport rep;
    rep.p = p;
    rep.identities_ok = curve_identities_hold(p);
    rep.one_minus_x_global_square = one_minus_x_square_in_F(p);
    rep.outcomes = curve_case_branches(p, sample_closed_points(p, samples, seed));
    rep.all_completions_square = true;
    std::set<CurveCase> branches;
    for (const auto& o : rep.outcomes) {
        rep.all_completions_square = rep.all_completions_square && o.square;
        branches.insert(o.branch);
    }
    rep.branches_seen = branches.size();
    return rep;
}

}  // namespace quadform
