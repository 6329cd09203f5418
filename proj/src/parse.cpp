#include <cctype>
#include <map>

#include "quadform/ffratfunc.hpp"
#include "quadform/ratfunc.hpp"

// Shared recursive-descent parser for coefficient terms: signed products of
// integer constants, the symbols a and p, the chart variable, and
// parenthesized integer polynomials, all with optional integer exponents.

namespace quadform {

namespace {

struct Factor {
    enum class Kind { Integer, SymA, SymP, Poly } kind;
    Int n;                  // Integer
    std::map<unsigned, Int> poly;  // Poly: exponent -> coefficient
    int exp = 1;
};

struct Term {
    int sign = 1;
    std::vector<Factor> factors;
};

class Scanner {
  public:
    Scanner(const std::string& s, const std::string& var) : s_(s), var_(var) {
        if (var_.size() != 1 || var_ == "a" || var_ == "p")
            throw error(errc::invalid_input, "parser: variable must be a single letter != a,p");
    }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eof() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    char get() {
        skip_ws();
        if (i_ >= s_.size()) throw err("unexpected end of input");
        return s_[i_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw err(std::string("expected '") + c + "'");
    }
    Int digits() {
        skip_ws();
        std::string d;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
        if (d.empty()) throw err("expected digits");
        return Int(d);
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_var() { return peek() == var_[0]; }

    error err(const std::string& msg) {
        return error(errc::invalid_input,
                     "parse error at position " + std::to_string(i_) + ": " + msg +
                         " in \"" + s_ + "\"");
    }

  private:
    const std::string& s_;
    std::string var_;
    std::size_t i_ = 0;
};

int parse_exponent(Scanner& sc) {
    if (!sc.accept('^')) return 1;
    int sign = sc.accept('-') ? -1 : 1;
    Int d = sc.digits();
    if (d > 64) throw sc.err("exponent too large");
    return sign * d.convert_to<int>();
}

// polynomial body inside parentheses
std::map<unsigned, Int> parse_poly(Scanner& sc, const Int& a_val, const Int& p_val) {
    std::map<unsigned, Int> poly;
    bool first = true;
    for (;;) {
        int msign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            msign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        // monomial: product of digit/a/p factors and at most one var power
        Int coef = msign;
        unsigned vexp = 0;
        bool saw_any = false;
        for (;;) {
            if (sc.at_digit()) {
                coef *= sc.digits();
            } else if (sc.peek() == 'a' && !sc.at_var()) {
                sc.get();
                coef *= a_val;
            } else if (sc.peek() == 'p' && !sc.at_var()) {
                sc.get();
                coef *= p_val;
            } else if (sc.at_var()) {
                sc.get();
                unsigned e = 1;
                if (sc.peek() == '^') {
                    sc.get();
                    Int d = sc.digits();
                    if (d > 8) throw sc.err("polynomial degree too large");
                    e = d.convert_to<unsigned>();
                }
                vexp += e;
            } else {
                break;
            }
            saw_any = true;
            if (!sc.accept('*')) {
                // implicit products like "2t" are not in the grammar; a bare
                // juxtaposed token continues the loop only after '*'
                if (!(sc.at_digit() || sc.at_var() ||
                      ((sc.peek() == 'a' || sc.peek() == 'p') && !sc.at_var())))
                    break;
            }
        }
        if (!saw_any) throw sc.err("expected monomial");
        poly[vexp] += coef;
    }
    return poly;
}

Term parse_term(const std::string& text, const std::string& var, const Int& a_val,
                const Int& p_val) {
    Scanner sc(text, var);
    Term t;
    if (sc.accept('-'))
        t.sign = -1;
    else
        sc.accept('+');
    bool expect_factor = true;
    while (expect_factor) {
        Factor f;
        if (sc.at_digit()) {
            f.kind = Factor::Kind::Integer;
            f.n = sc.digits();
        } else if (sc.peek() == 'a' && !sc.at_var()) {
            sc.get();
            f.kind = Factor::Kind::SymA;
        } else if (sc.peek() == 'p' && !sc.at_var()) {
            sc.get();
            f.kind = Factor::Kind::SymP;
        } else if (sc.at_var()) {
            sc.get();
            f.kind = Factor::Kind::Poly;
            f.poly[1] = 1;
        } else if (sc.accept('(')) {
            f.kind = Factor::Kind::Poly;
            f.poly = parse_poly(sc, a_val, p_val);
            sc.expect(')');
        } else {
            throw sc.err("expected a factor");
        }
        f.exp = parse_exponent(sc);
        t.factors.push_back(std::move(f));
        expect_factor = sc.accept('*');
    }
    if (!sc.eof()) throw sc.err("trailing input");
    return t;
}

Rat rat_int_pow(const Rat& b, int e) {
    Rat r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return e >= 0 ? r : 1 / r;
}

}  // namespace

FactoredRatFunc qrf_parse(std::uint64_t p, const std::string& text, const std::string& var) {
    Int a_val(smallest_nonresidue(p));
    Term t = parse_term(text, var, a_val, Int(p));
    Rat constant = t.sign;
    std::vector<std::pair<QAtom, int>> atoms;
    for (auto& f : t.factors) {
        switch (f.kind) {
            case Factor::Kind::Integer:
                if (f.n == 0) throw error(errc::degenerate, "qrf_parse: zero factor");
                constant *= rat_int_pow(Rat(f.n), f.exp);
                break;
            case Factor::Kind::SymA:
                constant *= rat_int_pow(Rat(a_val), f.exp);
                break;
            case Factor::Kind::SymP:
                constant *= rat_int_pow(Rat(Int(p)), f.exp);
                break;
            case Factor::Kind::Poly: {
                // trim zero coefficients, find degree
                std::map<unsigned, Int> poly;
                for (auto& [e, c] : f.poly)
                    if (c != 0) poly[e] = c;
                if (poly.empty()) throw error(errc::degenerate, "qrf_parse: zero polynomial atom");
                unsigned d = poly.rbegin()->first;
                if (d == 0) {
                    constant *= rat_int_pow(Rat(poly[0]), f.exp);
                    break;
                }
                if (d > 2)
                    throw error(errc::invalid_input,
                                "qrf_parse: polynomial atoms must have degree <= 2");
                Rat lead(poly.rbegin()->second);
                constant *= rat_int_pow(lead, f.exp);
                Rat c0 = poly.count(0) ? Rat(poly[0]) / lead : Rat(0);
                if (d == 1) {
                    atoms.push_back({qatom_linear(c0), f.exp});
                } else {
                    Rat c1 = poly.count(1) ? Rat(poly[1]) / lead : Rat(0);
                    QAtom m = qatom_quadratic(c1, c0);
                    Rat disc = m.disc();
                    if (disc == 0)
                        throw error(errc::degenerate, "qrf_parse: quadratic atom is a square");
                    if (is_rational_square(disc)) {
                        // split into the two rational roots
                        Int dn = boost::multiprecision::numerator(disc);
                        Int dd = boost::multiprecision::denominator(disc);
                        Rat sq(boost::multiprecision::sqrt(dn), boost::multiprecision::sqrt(dd));
                        Rat r1 = (-c1 + sq) / 2, r2 = (-c1 - sq) / 2;
                        atoms.push_back({qatom_linear(-r1), f.exp});
                        atoms.push_back({qatom_linear(-r2), f.exp});
                    } else {
                        atoms.push_back({m, f.exp});
                    }
                }
                break;
            }
        }
    }
    return qrf_make(p, constant, 0, std::move(atoms));
}

FFRatFunc ffr_parse(const FiniteFieldPtr& base, const std::string& text, const std::string& var) {
    const FiniteField& F = *base;
    std::uint64_t p = F.p();
    Int a_val(smallest_nonresidue(p));
    Term t = parse_term(text, var, a_val, Int(p));
    std::uint64_t constant = (t.sign < 0) ? p - 1 : 1;
    std::vector<std::pair<fqpoly::Poly, int>> factors;
    auto fold_const = [&](const Int& n, int e) {
        Int r = n % Int(p);
        if (r < 0) r += Int(p);
        if (r == 0) throw error(errc::degenerate, "ffr_parse: factor vanishes mod p");
        std::uint64_t c = powmod(r.convert_to<std::uint64_t>(),
                                 static_cast<std::uint64_t>(std::abs(e)), p);
        if (e < 0) c = invmod(c, p);
        constant = mulmod(constant, c, p);
    };
    for (auto& f : t.factors) {
        switch (f.kind) {
            case Factor::Kind::Integer:
                fold_const(f.n, f.exp);
                break;
            case Factor::Kind::SymA:
                fold_const(a_val, f.exp);
                break;
            case Factor::Kind::SymP:
                throw error(errc::invalid_input,
                            "ffr_parse: the symbol p vanishes in characteristic p");
            case Factor::Kind::Poly: {
                unsigned d = f.poly.empty() ? 0 : f.poly.rbegin()->first;
                fqpoly::Poly q(d + 1, F.zero());
                for (auto& [e, c] : f.poly) {
                    Int r = c % Int(p);
                    if (r < 0) r += Int(p);
                    q[e] = F.make({r.convert_to<std::uint64_t>()});
                }
                fqpoly::trim(F, q);
                if (fqpoly::is_zero(q))
                    throw error(errc::degenerate, "ffr_parse: polynomial atom vanishes mod p");
                factors.push_back({q, f.exp});
                break;
            }
        }
    }
    return ffr_make(base, constant, std::move(factors));
}

}  // namespace quadform
