#include "quadform/places.hpp"

#include <sstream>

#include "quadform/fppoly.hpp"

namespace quadform {

Place place_horizontal(const QAtom& m) {
    Place pl;
    pl.kind = PlaceKind::Horizontal;
    pl.atom = m;
    return pl;
}

Place place_infinity() {
    Place pl;
    pl.kind = PlaceKind::Infinity;
    return pl;
}

Place place_special_fibre() {
    Place pl;
    pl.kind = PlaceKind::SpecialFibre;
    return pl;
}

std::string place_to_string(const Place& pl, const std::string& var) {
    switch (pl.kind) {
        case PlaceKind::Horizontal: {
            std::string s = qatom_to_string(pl.atom, var);
            return s.front() == '(' ? s : "(" + s + ")";
        }
        case PlaceKind::Infinity:
            return "(1/" + var + ")";
        case PlaceKind::SpecialFibre:
            return "(p)";
    }
    throw error(errc::invalid_input, "place_to_string: bad kind");
}

namespace {

const char* kChartVars[] = {"t", "x", "y"};

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::string Chart::var() const {
    if (moves.size() > 2) throw error(errc::unsupported, "chart chains longer than two moves");
    return kChartVars[moves.size()];
}

std::string Chart::to_string() const {
    if (moves.empty()) return "t";
    std::string out;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (i) out += ", ";
        std::string oldv = kChartVars[i], newv = kChartVars[i + 1];
        if (moves[i].kind == ChartMove::Invert) {
            out += oldv + "=1/" + newv;
        } else if (moves[i].c == 0) {
            out += oldv + "=p*" + newv;
        } else {
            out += oldv + "=" + rat_str(moves[i].c) + "+p*" + newv;
        }
    }
    return out;
}

bool Chart::operator==(const Chart& o) const {
    if (p != o.p || moves.size() != o.moves.size()) return false;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (moves[i].kind != o.moves[i].kind) return false;
        if (moves[i].kind == ChartMove::Zoom && moves[i].c != o.moves[i].c) return false;
    }
    return true;
}

Chart chart_base(std::uint64_t p) {
    Chart ch;
    ch.p = p;
    return ch;
}

Chart chart_extend(Chart ch, ChartMove mv) {
    if (ch.moves.size() >= 2)
        throw error(errc::unsupported, "chart chains longer than two moves");
    ch.moves.push_back(mv);
    return ch;
}

FactoredRatFunc qrf_substitute(const FactoredRatFunc& f, const ChartMove& mv) {
    Rat cst = Rat(f.sign) * f.cnum;
    int p_exp = f.p_exp;
    std::vector<std::pair<QAtom, int>> atoms;
    Rat pr{Int(f.p)};
    if (mv.kind == ChartMove::Zoom) {
        // m(c + p*x) = p^deg * mhat(x), mhat monic with rational coefficients
        for (const auto& [m, e] : f.atoms) {
            if (m.deg == 1) {
                atoms.push_back({qatom_linear(Rat((mv.c + m.c0) / pr)), e});
                p_exp += e;
            } else {
                atoms.push_back({qatom_quadratic(Rat((2 * mv.c + m.c1) / pr),
                                                 Rat(m.eval(mv.c) / (pr * pr))),
                                 e});
                p_exp += 2 * e;
            }
        }
    } else {
        // m(1/x) = c0 * x^{-deg} * (reversed monic polynomial in x)
        for (const auto& [m, e] : f.atoms) {
            if (m.deg == 1 && m.c0 == 0) {
                atoms.push_back({qatom_linear(0), -e});
            } else if (m.deg == 1) {
                cst *= rat_pow(m.c0, e);
                atoms.push_back({qatom_linear(Rat(1 / m.c0)), e});
                atoms.push_back({qatom_linear(0), -e});
            } else {
                cst *= rat_pow(m.c0, e);
                atoms.push_back({qatom_quadratic(Rat(m.c1 / m.c0), Rat(1 / m.c0)), e});
                atoms.push_back({qatom_linear(0), -2 * e});
            }
        }
    }
    return qrf_make(f.p, cst, p_exp, std::move(atoms));
}

FactoredRatFunc qrf_on_chart(const Chart& ch, const FactoredRatFunc& f_base) {
    if (ch.p != f_base.p) throw error(errc::invalid_input, "chart and function disagree on p");
    FactoredRatFunc f = f_base;
    for (const auto& mv : ch.moves) f = qrf_substitute(f, mv);
    return f;
}

namespace {

// Gauss valuation of a monic atom: min over coefficient valuations, and the
// leading 1 pins it at <= 0.
int gauss_val_atom(const QAtom& m, std::uint64_t p) {
    Int P(p);
    int v = 0;
    if (m.deg == 2 && m.c1 != 0) v = std::min(v, padic_val(m.c1, P));
    if (m.c0 != 0) v = std::min(v, padic_val(m.c0, P));
    return v;
}

}  // namespace

int qrf_place_val(const FactoredRatFunc& f, const Place& pl) {
    switch (pl.kind) {
        case PlaceKind::Horizontal:
            return qrf_atom_exp(f, pl.atom);
        case PlaceKind::Infinity: {
            int d = 0;
            for (const auto& [m, e] : f.atoms) d += m.deg * e;
            return -d;
        }
        case PlaceKind::SpecialFibre: {
            int v = f.p_exp;
            for (const auto& [m, e] : f.atoms) v += e * gauss_val_atom(m, f.p);
            return v;
        }
    }
    throw error(errc::invalid_input, "qrf_place_val: bad kind");
}

FactoredRatFunc qrf_place_unit_residue_rat(const FactoredRatFunc& f, const Place& pl) {
    if (pl.kind == PlaceKind::Infinity) {
        // all atoms are monic, so the residue is the leading coefficient
        FactoredRatFunc out = f;
        out.atoms.clear();
        return out;
    }
    if (pl.kind != PlaceKind::Horizontal || pl.atom.deg != 1)
        throw error(errc::invalid_input,
                    "rational residue needs a degree-one horizontal place or infinity");
    Rat r = -pl.atom.c0;
    Rat acc = Rat(f.sign) * f.cnum;
    for (const auto& [m, e] : f.atoms) {
        if (m == pl.atom) continue;
        acc *= rat_pow(m.eval(r), e);
    }
    return qrf_make(f.p, acc, f.p_exp, {});
}

FFRatFunc qrf_place_unit_residue_ffz(const FactoredRatFunc& f, const FiniteFieldPtr& Fp) {
    if (!Fp || Fp->p() != f.p || Fp->degree() != 1)
        throw error(errc::invalid_input, "special-fibre residue lives in F_p(z)");
    Rat c = Rat(f.sign) * f.cnum;
    std::uint64_t cbar = rat_mod_prime(c, f.p);
    std::vector<std::pair<fqpoly::Poly, int>> factors;
    Int P(f.p);
    for (const auto& [m, e] : f.atoms) {
        Rat scale = rat_pow(Rat(Int(f.p)), -gauss_val_atom(m, f.p));
        std::vector<Rat> cs;
        if (m.deg == 1)
            cs = {Rat(m.c0 * scale), scale};
        else
            cs = {Rat(m.c0 * scale), Rat(m.c1 * scale), scale};
        fqpoly::Poly q;
        for (const Rat& cj : cs) {
            if (cj == 0 || padic_val(cj, P) > 0)
                q.push_back(Fp->zero());
            else
                q.push_back(Fp->from_int(static_cast<long long>(rat_mod_prime(cj, f.p))));
        }
        fqpoly::trim(*Fp, q);
        factors.push_back({std::move(q), e});
    }
    return ffr_make(Fp, cbar, std::move(factors));
}

LocalFieldPtr ext_field_for_atom(std::uint64_t p, const QAtom& m, int precision) {
    if (m.deg != 2) throw error(errc::invalid_input, "ext_field_for_atom: atom must be quadratic");
    Rat D = m.disc();
    if (D == 0 || rat_is_qp_square(D, p))
        throw error(errc::degenerate, "ext_field_for_atom: atom splits over Q_p");
    int v = padic_val(D, Int(p));
    std::uint64_t a = smallest_nonresidue(p);
    LocalFieldDesc d;
    d.p = p;
    d.precision = precision;
    d.def_b = 0;
    if (v % 2 == 0) {
        d.ext = ExtKind::Unramified;
        d.def_c = -static_cast<long long>(a);
    } else {
        Rat u = D * rat_pow(Rat(Int(p)), -v);
        bool unit_square = legendre(rat_mod_prime(u, p), p) == 1;
        d.ext = ExtKind::Eisenstein;
        d.def_c = -static_cast<long long>(unit_square ? p : p * a);
    }
    return LocalField::create(d);
}

LocalElement atom_root(const LocalFieldPtr& K, const QAtom& m) {
    auto s = K->sqrt(K->from_rational(m.disc()));
    if (!s)
        throw error(errc::degenerate, "atom_root: discriminant is not a square in this field");
    return K->div(K->add(K->from_rational(-m.c1), *s), K->from_int(2));
}

LocalElement qrf_place_unit_residue_ext(const FactoredRatFunc& f, const QAtom& mm,
                                        const LocalFieldPtr& K) {
    if (!K || K->desc().p != f.p)
        throw error(errc::invalid_input, "extension residue: field has wrong p");
    LocalElement th = atom_root(K, mm);
    LocalElement acc = K->from_rational(Rat(f.sign) * f.cnum);
    if (f.p_exp != 0)
        acc = K->mul(acc, K->pow(K->from_rational(Rat(Int(f.p))), f.p_exp));
    for (const auto& [m, e] : f.atoms) {
        if (m == mm) continue;
        LocalElement val;
        if (m.deg == 1) {
            val = K->add(th, K->from_rational(m.c0));
        } else {
            val = K->add(K->mul(th, th),
                         K->add(K->mul(K->from_rational(m.c1), th), K->from_rational(m.c0)));
        }
        acc = K->mul(acc, K->pow(val, e));
    }
    return acc;
}

std::vector<Place> qrf_support_places(const FactoredRatFunc& f) {
    std::vector<Place> out;
    out.reserve(f.atoms.size());
    for (const auto& [m, e] : f.atoms)
        if (e != 0) out.push_back(place_horizontal(m));
    return out;
}

}  // namespace quadform
