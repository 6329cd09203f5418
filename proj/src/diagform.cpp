#include "quadform/diagform.hpp"

#include <algorithm>

namespace quadform {

namespace {

int parity(int v) { return ((v % 2) + 2) % 2; }

void need_rank(std::size_t n) {
    if (n == 0) throw error(errc::degenerate, "form has rank 0");
}

}  // namespace

void validate(const FqForm& q) {
    if (!q.F) throw error(errc::invalid_input, "form has no field");
    need_rank(q.coeffs.size());
    for (const auto& c : q.coeffs)
        if (c.size() != q.F->degree() || q.F->is_zero(c))
            throw error(errc::degenerate, "finite form has a zero coefficient");
}

void validate(const LocalForm& q) {
    if (!q.K) throw error(errc::invalid_input, "form has no field");
    need_rank(q.coeffs.size());
    for (const auto& c : q.coeffs) {
        if (c.is_exact_zero()) throw error(errc::degenerate, "local form has a zero coefficient");
        if (c.field() != q.K) throw error(errc::invalid_input, "coefficient from a different field");
    }
}

void validate(const QpSymForm& q) {
    need_rank(q.coeffs.size());
    for (const auto& c : q.coeffs) {
        if (c.p != q.p) throw error(errc::invalid_input, "coefficient with mismatched p");
        if (!c.atoms.empty())
            throw error(errc::invalid_input, "Q_p coefficients must be atom-free");
    }
}

void validate(const FFRForm& q) {
    if (!q.F) throw error(errc::invalid_input, "form has no field");
    need_rank(q.coeffs.size());
    for (const auto& c : q.coeffs)
        if (c.base != q.F) throw error(errc::invalid_input, "coefficient from a different field");
}

void validate(const QtForm& q) {
    need_rank(q.coeffs.size());
    for (const auto& c : q.coeffs)
        if (c.p != q.p) throw error(errc::invalid_input, "coefficient with mismatched p");
}

std::size_t rank(const FqForm& q) { return q.coeffs.size(); }
std::size_t rank(const LocalForm& q) { return q.coeffs.size(); }
std::size_t rank(const QpSymForm& q) { return q.coeffs.size(); }
std::size_t rank(const FFRForm& q) { return q.coeffs.size(); }
std::size_t rank(const QtForm& q) { return q.coeffs.size(); }

FqForm normalize(const FqForm& q) {
    validate(q);
    FqForm out{q.F, {}};
    out.coeffs.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs)
        out.coeffs.push_back(q.F->is_square(c) ? q.F->one() : q.F->nonresidue());
    return out;
}

QpSymForm normalize(const QpSymForm& q) {
    validate(q);
    QpSymForm out{q.p, {}};
    for (const auto& c : q.coeffs) out.coeffs.push_back(qrf_normalize(c));
    return out;
}

FFRForm normalize(const FFRForm& q) {
    validate(q);
    FFRForm out{q.F, {}};
    for (const auto& c : q.coeffs) out.coeffs.push_back(ffr_normalize(c));
    return out;
}

QtForm normalize(const QtForm& q) {
    validate(q);
    QtForm out{q.p, {}};
    for (const auto& c : q.coeffs) out.coeffs.push_back(qrf_normalize(c));
    return out;
}

std::vector<std::string> render_coeffs(const FqForm& q) {
    std::vector<std::string> out;
    out.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.push_back(q.F->to_string(c));
    return out;
}

std::vector<std::string> render_coeffs(const LocalForm& q) {
    std::vector<std::string> out;
    out.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.push_back(c.to_string());
    return out;
}

std::vector<std::string> render_coeffs(const QpSymForm& q) {
    std::vector<std::string> out;
    out.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.push_back(qrf_to_string(c, "t"));
    return out;
}

std::vector<std::string> render_coeffs(const FFRForm& q, const std::string& var) {
    std::vector<std::string> out;
    out.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.push_back(ffr_to_string(c, var));
    return out;
}

std::vector<std::string> render_coeffs(const QtForm& q, const std::string& var) {
    std::vector<std::string> out;
    out.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.push_back(qrf_to_string(c, var));
    return out;
}

std::string form_to_string(const std::vector<std::string>& coeffs) {
    std::string out = "<";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += coeffs[i];
    }
    return out + ">";
}

namespace {

std::vector<std::string> split_form_text(const std::string& text) {
    std::string s = text;
    auto l = s.find_first_not_of(" \t");
    auto r = s.find_last_not_of(" \t");
    if (l == std::string::npos) throw error(errc::invalid_input, "empty form");
    s = s.substr(l, r - l + 1);
    if (s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

QtForm qt_parse_form(std::uint64_t p, const std::string& text, const std::string& var) {
    QtForm q;
    q.p = p;
    for (const auto& part : split_form_text(text)) q.coeffs.push_back(qrf_parse(p, part, var));
    validate(q);
    return q;
}

FFRForm ffr_parse_form(const FiniteFieldPtr& base, const std::string& text,
                       const std::string& var) {
    FFRForm q;
    q.F = base;
    for (const auto& part : split_form_text(text)) q.coeffs.push_back(ffr_parse(base, part, var));
    validate(q);
    return q;
}

Decomp<FqForm> springer_decompose(const LocalForm& q) {
    validate(q);
    Decomp<FqForm> d;
    d.q1.F = q.K->residue_field();
    d.q2.F = d.q1.F;
    for (const auto& c : q.coeffs) {
        int v = c.val();  // throws errc::precision_exhausted when indistinct
        (parity(v) == 0 ? d.q1 : d.q2).coeffs.push_back(c.unit_residue());
    }
    return d;
}

Decomp<FqForm> springer_decompose(const QpSymForm& q) {
    validate(q);
    auto F = std::make_shared<const FiniteField>(q.p);
    Decomp<FqForm> d;
    d.q1.F = F;
    d.q2.F = F;
    for (const auto& c : q.coeffs) {
        auto r = F->from_int(static_cast<long long>(qrf_qp_unit_residue(c)));
        (parity(c.p_exp) == 0 ? d.q1 : d.q2).coeffs.push_back(r);
    }
    return d;
}

Decomp<FqForm> springer_decompose(const FFRForm& q, const FFPlace& v) {
    validate(q);
    Decomp<FqForm> d;
    d.q1.F = ffr_residue_field(q.F, v);
    d.q2.F = d.q1.F;
    for (const auto& c : q.coeffs) {
        FqElem r = ffr_unit_residue(c, v);
        (parity(ffr_valuation(c, v)) == 0 ? d.q1 : d.q2).coeffs.push_back(r.v);
    }
    return d;
}

Decomp<QpSymForm> qt_springer_rat(const QtForm& q, const Place& pl) {
    validate(q);
    bool ok = pl.kind == PlaceKind::Infinity ||
              (pl.kind == PlaceKind::Horizontal && pl.atom.deg == 1);
    if (!ok)
        throw error(errc::invalid_input,
                    "rational residue decomposition needs a degree-one section or infinity");
    Decomp<QpSymForm> d;
    d.q1.p = q.p;
    d.q2.p = q.p;
    for (const auto& c : q.coeffs) {
        auto r = qrf_place_unit_residue_rat(c, pl);
        (parity(qrf_place_val(c, pl)) == 0 ? d.q1 : d.q2).coeffs.push_back(std::move(r));
    }
    return d;
}

Decomp<LocalForm> qt_springer_ext(const QtForm& q, const QAtom& m, const LocalFieldPtr& K) {
    validate(q);
    Decomp<LocalForm> d;
    d.q1.K = K;
    d.q2.K = K;
    Place pl = place_horizontal(m);
    for (const auto& c : q.coeffs) {
        auto r = qrf_place_unit_residue_ext(c, m, K);
        (parity(qrf_place_val(c, pl)) == 0 ? d.q1 : d.q2).coeffs.push_back(std::move(r));
    }
    return d;
}

Decomp<FFRForm> qt_springer_ffz(const QtForm& q, const FiniteFieldPtr& Fp) {
    validate(q);
    Decomp<FFRForm> d;
    d.q1.F = Fp;
    d.q2.F = Fp;
    Place pl = place_special_fibre();
    for (const auto& c : q.coeffs) {
        // residues are only meaningful up to squares; reduce exponents mod 2
        auto r = ffr_normalize(qrf_place_unit_residue_ffz(c, Fp));
        (parity(qrf_place_val(c, pl)) == 0 ? d.q1 : d.q2).coeffs.push_back(std::move(r));
    }
    return d;
}

TwoParamDecomposition two_param_decompose(const QtForm& q, const QAtom& x0) {
    validate(q);
    if (x0.deg != 1)
        throw error(errc::invalid_input, "two-parameter split needs a linear coordinate atom");
    Rat r = -x0.c0;
    Int P(q.p);
    TwoParamDecomposition out;
    for (const auto& c : q.coeffs) {
        for (const auto& [m, e] : c.atoms) {
            if (m == x0) continue;
            Rat mr = m.eval(r);
            if (mr == 0 || padic_val(mr, P) != 0)
                throw error(errc::non_normal_crossings,
                            "coefficient " + qrf_to_string(c, "t") +
                                " is not monomial-times-unit at the point (" +
                                qatom_to_string(x0, "t") + ", p)");
        }
        FactoredRatFunc u = qrf_drop_p(qrf_drop_atom(c, x0));
        int i = parity(qrf_atom_exp(c, x0));
        int j = parity(c.p_exp);
        auto& grp = i == 0 ? (j == 0 ? out.q1 : out.q3) : (j == 0 ? out.q2 : out.q4);
        grp.push_back(std::move(u));
    }
    return out;
}

}  // namespace quadform
