#include "quadform/ratfunc.hpp"

#include <algorithm>

namespace quadform {

QAtom qatom_linear(const Rat& c0) {
    QAtom m;
    m.deg = 1;
    m.c0 = c0;
    return m;
}

QAtom qatom_quadratic(const Rat& c1, const Rat& c0) {
    QAtom m;
    m.deg = 2;
    m.c1 = c1;
    m.c0 = c0;
    return m;
}

namespace {

void validate_atom(const QAtom& m, std::uint64_t p) {
    if (m.deg == 1) return;
    if (m.deg != 2) throw error(errc::invalid_input, "atom degree must be 1 or 2");
    Rat d = m.disc();
    if (d == 0) throw error(errc::degenerate, "quadratic atom is a perfect square");
    if (rat_is_qp_square(d, p)) {
        if (is_rational_square(d))
            throw error(errc::factorization,
                        "quadratic atom splits over Q: pass the two linear atoms instead");
        throw error(errc::factorization,
                    "quadratic atom is reducible over Q_p but has irrational roots; "
                    "such atoms are outside the supported input fragment");
    }
}

}  // namespace

FactoredRatFunc qrf_make(std::uint64_t p, const Rat& constant, int p_exp,
                         std::vector<std::pair<QAtom, int>> atoms) {
    if (constant == 0) throw error(errc::degenerate, "qrf_make: zero constant");
    if (!is_prime_u64(p) || p < 3)
        throw error(errc::invalid_input, "qrf_make: p must be an odd prime");
    FactoredRatFunc out;
    out.p = p;
    out.sign = constant > 0 ? 1 : -1;
    Rat mag = constant > 0 ? constant : -constant;
    int v = padic_val(mag, Int(p));
    Rat pv(int_pow(Int(p), static_cast<unsigned>(std::abs(v))));
    out.cnum = (v >= 0) ? Rat(mag / pv) : Rat(mag * pv);
    out.p_exp = p_exp + v;
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [m, e] : atoms) {
        if (e == 0) continue;
        validate_atom(m, p);
        if (!out.atoms.empty() && out.atoms.back().first == m)
            out.atoms.back().second += e;
        else
            out.atoms.push_back({m, e});
    }
    out.atoms.erase(std::remove_if(out.atoms.begin(), out.atoms.end(),
                                   [](const auto& me) { return me.second == 0; }),
                    out.atoms.end());
    return out;
}

FactoredRatFunc qrf_constant(std::uint64_t p, const Rat& c) { return qrf_make(p, c, 0, {}); }

FactoredRatFunc qrf_mul(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    if (a.p != b.p) throw error(errc::invalid_input, "qrf_mul: mismatched primes");
    std::vector<std::pair<QAtom, int>> atoms = a.atoms;
    atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
    Rat c = Rat(a.sign) * a.cnum * Rat(b.sign) * b.cnum;
    return qrf_make(a.p, c, a.p_exp + b.p_exp, std::move(atoms));
}

FactoredRatFunc qrf_neg(const FactoredRatFunc& a) {
    FactoredRatFunc out = a;
    out.sign = -a.sign;
    return out;
}

FactoredRatFunc qrf_inv(const FactoredRatFunc& a) {
    FactoredRatFunc out = a;
    out.cnum = 1 / a.cnum;
    out.p_exp = -a.p_exp;
    for (auto& [m, e] : out.atoms) e = -e;
    return out;
}

FactoredRatFunc qrf_pow(const FactoredRatFunc& a, int e) {
    if (e == 0) return qrf_constant(a.p, 1);
    FactoredRatFunc out = a;
    out.sign = (e % 2 == 0) ? 1 : a.sign;
    Rat c = 1;
    for (int i = 0; i < std::abs(e); ++i) c *= a.cnum;
    out.cnum = (e > 0) ? c : 1 / c;
    out.p_exp = a.p_exp * e;
    for (auto& [m, k] : out.atoms) k *= e;
    return out;
}

FactoredRatFunc qrf_normalize(const FactoredRatFunc& a) {
    FactoredRatFunc out = a;
    out.cnum = Rat(squarefree_part(a.cnum));
    out.p_exp = ((a.p_exp % 2) + 2) % 2;
    out.atoms.erase(std::remove_if(out.atoms.begin(), out.atoms.end(),
                                   [](const auto& me) { return me.second % 2 == 0; }),
                    out.atoms.end());
    for (auto& [m, e] : out.atoms) e = ((e % 2) + 2) % 2;
    return out;
}

bool qrf_is_const(const FactoredRatFunc& a) { return a.atoms.empty(); }

static void require_const(const FactoredRatFunc& a, const char* who) {
    if (!qrf_is_const(a))
        throw error(errc::invalid_input,
                    std::string(who) + ": value has polynomial atoms, not an element of Q_p");
}

int qrf_qp_val(const FactoredRatFunc& a) {
    require_const(a, "qrf_qp_val");
    return a.p_exp;
}

std::uint64_t qrf_qp_unit_residue(const FactoredRatFunc& a) {
    require_const(a, "qrf_qp_unit_residue");
    std::uint64_t r = rat_mod_prime(a.cnum, a.p);
    if (a.sign < 0) r = (a.p - r) % a.p;
    return r;
}

bool qrf_qp_is_square(const FactoredRatFunc& a) {
    require_const(a, "qrf_qp_is_square");
    if (a.p_exp % 2 != 0) return false;
    return legendre(qrf_qp_unit_residue(a), a.p) == 1;
}

bool qrf_qpt_is_square(const FactoredRatFunc& a) {
    const FactoredRatFunc n = qrf_normalize(a);
    if (!n.atoms.empty() || n.p_exp % 2 != 0) return false;
    return rat_is_qp_square(Rat(n.sign) * n.cnum, n.p);
}

int qrf_qp_hilbert(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    require_const(a, "qrf_qp_hilbert");
    require_const(b, "qrf_qp_hilbert");
    if (a.p != b.p) throw error(errc::invalid_input, "qrf_qp_hilbert: mismatched primes");
    int alpha = a.p_exp, beta = b.p_exp;
    int chi_u = legendre(qrf_qp_unit_residue(a), a.p);
    int chi_w = legendre(qrf_qp_unit_residue(b), b.p);
    int chi_m1 = legendre(a.p - 1, a.p);
    int out = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0)) out *= chi_m1;
    if (beta % 2 != 0) out *= chi_u;
    if (alpha % 2 != 0) out *= chi_w;
    return out;
}

std::string qatom_to_string(const QAtom& m, const std::string& var) {
    auto rat_str = [](const Rat& r) {
        Int num = boost::multiprecision::numerator(r);
        Int den = boost::multiprecision::denominator(r);
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    };
    if (m.deg == 1) {
        if (m.c0 == 0) return var;
        std::string s = "(" + var;
        s += (m.c0 > 0 ? "+" + rat_str(m.c0) : "-" + rat_str(-m.c0));
        return s + ")";
    }
    std::string s = "(" + var + "^2";
    if (m.c1 != 0) {
        Rat c = m.c1 > 0 ? m.c1 : -m.c1;
        s += (m.c1 > 0 ? "+" : "-");
        if (c != 1) s += rat_str(c) + "*";
        s += var;
    }
    if (m.c0 != 0) s += (m.c0 > 0 ? "+" + rat_str(m.c0) : "-" + rat_str(-m.c0));
    return s + ")";
}

std::string qrf_to_string(const FactoredRatFunc& a, const std::string& var) {
    std::string out = a.sign < 0 ? "-" : "";
    std::uint64_t nr = smallest_nonresidue(a.p);
    std::string cstr;
    if (a.cnum == Rat(Int(nr))) {
        cstr = "a";
    } else if (a.cnum != 1) {
        Int num = boost::multiprecision::numerator(a.cnum);
        Int den = boost::multiprecision::denominator(a.cnum);
        cstr = num.str();
        if (den != 1) cstr += "/" + den.str();
    }
    std::vector<std::string> parts;
    if (!cstr.empty()) parts.push_back(cstr);
    if (a.p_exp != 0)
        parts.push_back(a.p_exp == 1 ? "p" : "p^" + std::to_string(a.p_exp));
    for (auto& [m, e] : a.atoms) {
        std::string s = qatom_to_string(m, var);
        if (e != 1) s += "^" + std::to_string(e);
        parts.push_back(s);
    }
    if (parts.empty()) return out.empty() ? "1" : "-1";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

int qrf_atom_exp(const FactoredRatFunc& a, const QAtom& m) {
    for (auto& [q, e] : a.atoms)
        if (q == m) return e;
    return 0;
}

FactoredRatFunc qrf_drop_atom(const FactoredRatFunc& a, const QAtom& m) {
    FactoredRatFunc out = a;
    out.atoms.erase(std::remove_if(out.atoms.begin(), out.atoms.end(),
                                   [&](const auto& qe) { return qe.first == m; }),
                    out.atoms.end());
    return out;
}

FactoredRatFunc qrf_drop_p(const FactoredRatFunc& a) {
    FactoredRatFunc out = a;
    out.p_exp = 0;
    return out;
}

}  // namespace quadform
