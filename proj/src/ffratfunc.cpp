#include "quadform/ffratfunc.hpp"

#include <algorithm>

namespace quadform {

using fqpoly::Poly;

namespace {

bool factor_less(const std::pair<Poly, int>& a, const std::pair<Poly, int>& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
}

void check_base(const FiniteFieldPtr& base) {
    if (!base) throw error(errc::invalid_input, "FFRatFunc: null base field");
    if (base->degree() != 1)
        throw error(errc::unsupported,
                    "FFRatFunc: only prime base fields F_p are supported here");
}

// Render a small residue symmetrically (4 -> -1 mod 5) for readability.
long long sym(std::uint64_t c, std::uint64_t p) {
    return (c > p / 2) ? static_cast<long long>(c) - static_cast<long long>(p)
                       : static_cast<long long>(c);
}

}  // namespace

bool FFRatFunc::operator==(const FFRatFunc& o) const {
    return base->p() == o.base->p() && constant == o.constant && factors == o.factors;
}

FFRatFunc ffr_make(const FiniteFieldPtr& base, std::uint64_t constant,
                   std::vector<std::pair<Poly, int>> factors) {
    check_base(base);
    const FiniteField& F = *base;
    std::uint64_t c = constant % F.p();
    if (c == 0) throw error(errc::degenerate, "ffr_make: zero constant");
    // split anything reducible, fold leading coefficients into the constant
    std::vector<std::pair<Poly, int>> flat;
    for (auto& [f, e] : factors) {
        if (e == 0) continue;
        if (fqpoly::is_zero(f)) throw error(errc::degenerate, "ffr_make: zero factor");
        if (fqpoly::deg(f) == 0) {
            std::uint64_t cc = powmod(f[0][0], static_cast<std::uint64_t>(e >= 0 ? e : -e), F.p());
            if (e < 0) cc = invmod(cc, F.p());
            c = mulmod(c, cc, F.p());
            continue;
        }
        auto fac = fqpoly::factorize(F, f);
        std::uint64_t lead = fac.lead[0];
        if (lead != 1) {
            std::uint64_t cc = powmod(lead, static_cast<std::uint64_t>(e >= 0 ? e : -e), F.p());
            if (e < 0) cc = invmod(cc, F.p());
            c = mulmod(c, cc, F.p());
        }
        for (auto& [q, m] : fac.factors) flat.push_back({q, m * e});
    }
    std::sort(flat.begin(), flat.end(), factor_less);
    FFRatFunc out;
    out.base = base;
    out.constant = c;
    for (auto& [q, e] : flat) {
        if (!out.factors.empty() && out.factors.back().first == q)
            out.factors.back().second += e;
        else
            out.factors.push_back({q, e});
    }
    out.factors.erase(std::remove_if(out.factors.begin(), out.factors.end(),
                                     [](const auto& fe) { return fe.second == 0; }),
                      out.factors.end());
    return out;
}

FFRatFunc ffr_constant(const FiniteFieldPtr& base, std::uint64_t c) {
    return ffr_make(base, c, {});
}

FFRatFunc ffr_from_poly(const FiniteFieldPtr& base, const Poly& f) {
    if (fqpoly::is_zero(f)) throw error(errc::degenerate, "ffr_from_poly: zero polynomial");
    return ffr_make(base, 1, {{f, 1}});
}

FFRatFunc ffr_mul(const FFRatFunc& a, const FFRatFunc& b) {
    if (a.base->p() != b.base->p())
        throw error(errc::invalid_input, "ffr_mul: mismatched base fields");
    std::vector<std::pair<Poly, int>> fs = a.factors;
    fs.insert(fs.end(), b.factors.begin(), b.factors.end());
    return ffr_make(a.base, mulmod(a.constant, b.constant, a.base->p()), std::move(fs));
}

FFRatFunc ffr_neg(const FFRatFunc& a) {
    FFRatFunc out = a;
    out.constant = a.base->p() - a.constant;
    return out;
}

FFRatFunc ffr_inv(const FFRatFunc& a) {
    FFRatFunc out = a;
    out.constant = invmod(a.constant, a.base->p());
    for (auto& [q, e] : out.factors) e = -e;
    return out;
}

FFRatFunc ffr_pow(const FFRatFunc& a, int e) {
    if (e == 0) return ffr_constant(a.base, 1);
    FFRatFunc out = a;
    std::uint64_t mag = static_cast<std::uint64_t>(e >= 0 ? e : -e);
    out.constant = powmod(a.constant, mag, a.base->p());
    if (e < 0) out.constant = invmod(out.constant, a.base->p());
    for (auto& [q, m] : out.factors) m *= e;
    return out;
}

FFRatFunc ffr_normalize(const FFRatFunc& a) {
    FFRatFunc out = a;
    out.factors.erase(std::remove_if(out.factors.begin(), out.factors.end(),
                                     [](const auto& fe) { return fe.second % 2 == 0; }),
                      out.factors.end());
    for (auto& [q, e] : out.factors) e = (e % 2 + 2) % 2;  // odd -> 1
    return out;
}

bool ffq_ratfunc_is_square(const FFRatFunc& a) {
    for (auto& [q, e] : a.factors)
        if (e % 2 != 0) return false;
    return legendre(a.constant, a.base->p()) == 1;
}

std::pair<Poly, Poly> ffr_as_fraction(const FFRatFunc& a) {
    const FiniteField& F = *a.base;
    Poly num = fqpoly::constant(F, F.make({a.constant}));
    Poly den = fqpoly::one(F);
    for (auto& [q, e] : a.factors) {
        for (int i = 0; i < std::abs(e); ++i) {
            if (e > 0)
                num = fqpoly::mul(F, num, q);
            else
                den = fqpoly::mul(F, den, q);
        }
    }
    return {num, den};
}

FFRatFunc ffr_from_fraction(const FiniteFieldPtr& base, const Poly& num, const Poly& den) {
    if (fqpoly::is_zero(num) || fqpoly::is_zero(den))
        throw error(errc::degenerate, "ffr_from_fraction: zero numerator or denominator");
    FFRatFunc n = ffr_from_poly(base, num);
    FFRatFunc d = ffr_from_poly(base, den);
    return ffr_mul(n, ffr_inv(d));
}

int ffr_valuation(const FFRatFunc& a, const FFPlace& v) {
    if (v.at_infinity) {
        long long d = 0;
        for (auto& [q, e] : a.factors) d += static_cast<long long>(fqpoly::deg(q)) * e;
        return static_cast<int>(-d);
    }
    for (auto& [q, e] : a.factors)
        if (q == v.pi) return e;
    return 0;
}

FiniteFieldPtr ffr_residue_field(const FiniteFieldPtr& base, const FFPlace& v) {
    if (v.at_infinity || fqpoly::deg(v.pi) == 1) return base;
    std::vector<std::uint64_t> modulus;
    for (auto& c : v.pi) modulus.push_back(c[0]);
    return std::make_shared<FiniteField>(base->p(), modulus);
}

FqElem ffr_unit_residue(const FFRatFunc& a, const FFPlace& v) {
    const FiniteField& F = *a.base;
    if (v.at_infinity) {
        // in w = 1/z every monic factor contributes 1 at w = 0
        return {a.base, F.make({a.constant})};
    }
    FiniteFieldPtr kp = ffr_residue_field(a.base, v);
    const FiniteField& k = *kp;
    FiniteField::Elem r = k.make({a.constant});
    for (auto& [q, e] : a.factors) {
        if (q == v.pi) continue;
        // reduce q mod pi, evaluate as an element of k
        Poly rem = fqpoly::deg(v.pi) == 1
                       ? Poly{fqpoly::eval(F, q, F.neg(v.pi[0]))}  // q(-c) for pi = z + c
                       : fqpoly::mod(F, q, v.pi);
        // rem (coeffs in F_p) as an element of k
        std::vector<std::uint64_t> coords;
        for (auto& c : rem) coords.push_back(c[0]);
        FiniteField::Elem qe = k.make(coords);
        if (k.is_zero(qe))
            throw error(errc::degenerate, "ffr_unit_residue: factor vanishes at the place");
        FiniteField::Elem pw = (e >= 0) ? k.pow(qe, e) : k.pow(k.inv(qe), -e);
        r = k.mul(r, pw);
    }
    return {kp, r};
}

std::vector<FFPlace> ffr_support(const FFRatFunc& a, bool include_infinity) {
    std::vector<FFPlace> out;
    for (auto& [q, e] : a.factors) out.push_back({false, q});
    if (include_infinity) out.push_back({true, {}});
    return out;
}

namespace {

// Shared symmetric-coefficient rendering for monic factor polynomials, so
// that places and coefficient factors print identically ("x-1", not "x+4").
// Coefficients must live in the prime field.
std::string poly_body(std::uint64_t p, const Poly& q, const std::string& var) {
    auto coeff = [](const FiniteField::Elem& e) -> std::uint64_t {
        return e.empty() ? 0 : e[0];
    };
    if (fqpoly::deg(q) == 1 && coeff(q[0]) == 0) return var;
    std::string body;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (coeff(q[i]) == 0) continue;
        long long c = sym(coeff(q[i]), p);
        std::string term;
        if (i == 0) {
            term = std::to_string(c < 0 ? -c : c);
        } else {
            if (c != 1 && c != -1) term = std::to_string(c < 0 ? -c : c) + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (body.empty())
            body = (c < 0 ? "-" : "") + term;
        else
            body += (c < 0 ? "-" : "+") + term;
    }
    if (body.empty()) body = "0";
    return body;
}

}  // namespace

std::string ffr_to_string(const FFRatFunc& a, const std::string& var) {
    const std::uint64_t p = a.base->p();
    const std::uint64_t nr = smallest_nonresidue(p);
    std::string out;
    // constant: prefer 1, -1, a, -a renderings (semantic equality is what
    // fixture comparisons use; this is only for humans)
    long long cs = sym(a.constant, p);
    std::string cstr;
    if (cs == 1)
        cstr = "1";
    else if (cs == -1)
        cstr = "-1";
    else if (a.constant == nr)
        cstr = "a";
    else if (a.constant == (p - nr) % p)
        cstr = "-a";
    else
        cstr = std::to_string(cs);
    if (a.factors.empty()) return cstr;
    if (cstr != "1") out = (cstr == "-1") ? "-" : cstr + "*";

    bool first = true;
    for (auto& [q, e] : a.factors) {
        std::string fs = poly_body(p, q, var);
        if (fs != var) fs = "(" + fs + ")";
        if (e != 1) fs += "^" + std::to_string(e);
        if (!first) out += "*";
        out += fs;
        first = false;
    }
    return out;
}

std::string ffplace_to_string(const FFPlace& v, const std::string& var, std::uint64_t p) {
    if (v.at_infinity) return "(1/" + var + ")";
    return "(" + poly_body(p, v.pi, var) + ")";
}

std::pair<Poly, Poly> ffr_sqrt_fraction(const FFRatFunc& a) {
    if (!ffq_ratfunc_is_square(a))
        throw error(errc::degenerate, "ffr_sqrt_fraction: not a square");
    const FiniteField& F = *a.base;
    auto c_root = F.sqrt(F.make({a.constant}));
    Poly num = fqpoly::constant(F, *c_root);
    Poly den = fqpoly::one(F);
    for (auto& [q, e] : a.factors) {
        for (int i = 0; i < std::abs(e) / 2; ++i) {
            if (e > 0)
                num = fqpoly::mul(F, num, q);
            else
                den = fqpoly::mul(F, den, q);
        }
    }
    return {num, den};
}

}  // namespace quadform
