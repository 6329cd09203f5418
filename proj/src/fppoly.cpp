#include "quadform/fppoly.hpp"

#include <algorithm>

namespace quadform::fqpoly {

void trim(const FiniteField& F, Poly& f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly zero() { return {}; }

Poly one(const FiniteField& F) { return {F.one()}; }

Poly constant(const FiniteField& F, const FiniteField::Elem& c) {
    if (F.is_zero(c)) return {};
    return {c};
}

Poly monomial(const FiniteField& F, unsigned k) {
    Poly f(k + 1, F.zero());
    f[k] = F.one();
    return f;
}

Poly from_ints(const FiniteField& F, const std::vector<long long>& coeffs) {
    Poly f;
    f.reserve(coeffs.size());
    for (long long c : coeffs) f.push_back(F.from_int(c));
    trim(F, f);
    return f;
}

bool equal(const Poly& a, const Poly& b) { return a == b; }

Poly add(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(F, r);
    return r;
}

Poly sub(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(F, r);
    return r;
}

Poly neg(const FiniteField& F, const Poly& a) {
    Poly r(a.size(), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
    return r;
}

Poly mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

Poly scale(const FiniteField& F, const Poly& a, const FiniteField::Elem& c) {
    if (F.is_zero(c)) return {};
    Poly r(a.size(), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    trim(F, r);
    return r;
}

std::pair<Poly, Poly> divrem(const FiniteField& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw error(errc::degenerate, "fqpoly::divrem: division by zero");
    Poly q, r = a;
    FiniteField::Elem lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        FiniteField::Elem c = F.mul(r.back(), lead_inv);
        std::size_t shift = r.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, F.zero());
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
        trim(F, r);
    }
    trim(F, q);
    return {q, r};
}

Poly mod(const FiniteField& F, const Poly& a, const Poly& b) { return divrem(F, a, b).second; }

Poly monic(const FiniteField& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = mod(F, x, y);
        x = y;
        y = r;
    }
    return monic(F, x);
}

Poly derivative(const FiniteField& F, const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(F.mul(a[i], F.from_int(static_cast<long long>(i))));
    trim(F, r);
    return r;
}

FiniteField::Elem eval(const FiniteField& F, const Poly& a, const FiniteField::Elem& x) {
    FiniteField::Elem acc = F.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

Poly pow_mod(const FiniteField& F, const Poly& base, const Int& e, const Poly& m) {
    Poly r = one(F), b = mod(F, base, m);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mod(F, mul(F, r, b), m);
        b = mod(F, mul(F, b, b), m);
        k >>= 1;
    }
    return r;
}

Poly compose(const FiniteField& F, const Poly& a, const Poly& g) {
    Poly acc;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = mul(F, acc, g);
        acc = add(F, acc, constant(F, a[i]));
    }
    return acc;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Poly random_poly(const FiniteField& F, unsigned max_deg, SplitMix64& rng) {
    Poly f;
    Int q = F.order();
    std::uint64_t qq = q > UINT64_MAX ? UINT64_MAX : q.convert_to<std::uint64_t>();
    for (unsigned i = 0; i <= max_deg; ++i) f.push_back(F.from_index(rng.below(qq)));
    trim(F, f);
    return f;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product of
// irreducibles of degree d.
void edf(const FiniteField& F, const Poly& g, unsigned d, SplitMix64& rng,
         std::vector<Poly>& out) {
    if (deg(g) == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    Int e = (int_pow(F.order(), d) - 1) / 2;
    for (;;) {
        Poly r = random_poly(F, static_cast<unsigned>(deg(g)) - 1, rng);
        if (r.empty()) continue;
        Poly h = pow_mod(F, r, e, g);
        h = sub(F, h, one(F));
        Poly w = gcd(F, h, g);
        if (deg(w) > 0 && deg(w) < deg(g)) {
            edf(F, w, d, rng, out);
            edf(F, divrem(F, g, w).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic squarefree f; appends (factor,1).
void ddf(const FiniteField& F, Poly f, SplitMix64& rng, std::vector<Poly>& out) {
    Poly x = monomial(F, 1);
    Poly h = x;  // x^(q^d) mod f, incrementally
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(deg(f)); ++d) {
        h = pow_mod(F, h, F.order(), f);
        Poly g = gcd(F, sub(F, h, x), f);
        if (deg(g) > 0) {
            edf(F, g, d, rng, out);
            f = divrem(F, f, g).first;
            h = mod(F, h, f);
        }
    }
    if (deg(f) > 0) out.push_back(f);
}

}  // namespace

bool is_irreducible(const FiniteField& F, const Poly& f) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly g = monic(F, f);
    Poly x = monomial(F, 1);
    // Rabin: x^(q^n) = x mod f, and gcd(x^(q^(n/l)) - x, f) = 1 for prime l | n.
    Poly h = x;
    std::vector<Poly> powers(n + 1);  // x^(q^i) mod f
    powers[0] = x;
    for (int i = 1; i <= n; ++i) {
        h = pow_mod(F, h, F.order(), g);
        powers[i] = h;
    }
    if (!equal(powers[n], mod(F, x, g))) return false;
    for (unsigned l : prime_divisors(static_cast<unsigned>(n))) {
        Poly d = gcd(F, sub(F, powers[n / l], x), g);
        if (deg(d) != 0) return false;
    }
    return true;
}

std::optional<Poly> sqrt(const FiniteField& F, const Poly& f) {
    if (f.empty()) return zero();
    int n = deg(f);
    if (n % 2 != 0) return std::nullopt;
    auto lead = F.sqrt(f.back());
    if (!lead) return std::nullopt;
    int m = n / 2;
    // Top-down coefficient recursion: the z^(m+k) coefficient of s*s is
    // 2*s_m*s_k plus products of already-known higher coefficients.
    Poly s(static_cast<std::size_t>(m) + 1, F.zero());
    s[static_cast<std::size_t>(m)] = *lead;
    FiniteField::Elem half_lead_inv = F.inv(F.mul(F.from_int(2), *lead));
    for (int k = m - 1; k >= 0; --k) {
        FiniteField::Elem acc = f[static_cast<std::size_t>(m + k)];
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j <= k || j > m) continue;
            acc = F.sub(acc, F.mul(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]));
        }
        s[static_cast<std::size_t>(k)] = F.mul(acc, half_lead_inv);
    }
    trim(F, s);
    return equal(mul(F, s, s), f) ? std::optional<Poly>(s) : std::nullopt;
}

Factorization factorize(const FiniteField& F, const Poly& f, std::uint64_t seed) {
    if (f.empty()) throw error(errc::degenerate, "fqpoly::factorize: zero polynomial");
    SplitMix64 rng(seed);
    Factorization result;
    result.lead = f.back();
    Poly work = monic(F, f);

    std::vector<std::pair<Poly, int>> acc;
    // Multiplicity loop: peel squarefree layers; p-th power layers are
    // handled by taking coefficient-wise p-th roots.
    std::vector<std::pair<Poly, int>> stack{{work, 1}};
    while (!stack.empty()) {
        auto [g, mult] = stack.back();
        stack.pop_back();
        if (deg(g) <= 0) continue;
        Poly gp = derivative(F, g);
        if (is_zero(gp)) {
            // g = h(x^p); coefficient c -> c^(p^(deg-1)) is the p-th root.
            Poly h;
            Int root_exp = int_pow(Int(F.p()), F.degree() == 0 ? 0 : F.degree() - 1);
            for (std::size_t i = 0; i < g.size(); i += F.p()) {
                h.push_back(F.pow(g[i], root_exp));
            }
            // sanity: intermediate coefficients must vanish
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i % F.p() != 0 && !F.is_zero(g[i]))
                    throw error(errc::factorization, "factorize: derivative zero but not a p-th power");
            }
            trim(F, h);
            stack.push_back({h, mult * static_cast<int>(F.p())});
            continue;
        }
        Poly d = gcd(F, g, gp);
        Poly sf = divrem(F, g, d).first;  // product of factors with p∤e, each once
        std::vector<Poly> irr;
        ddf(F, sf, rng, irr);
        Poly rest = g;
        for (const Poly& q : irr) {
            int e = 0;
            for (;;) {
                auto [quo, rem] = divrem(F, rest, q);
                if (!rem.empty()) break;
                rest = quo;
                ++e;
            }
            acc.push_back({q, e * mult});
        }
        if (deg(rest) > 0) stack.push_back({rest, mult});
    }

    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    // merge duplicates (can arise from the p-th power path)
    for (auto& [q, e] : acc) {
        if (!result.factors.empty() && equal(result.factors.back().first, q))
            result.factors.back().second += e;
        else
            result.factors.push_back({q, e});
    }
    return result;
}

std::string to_string(const FiniteField& F, const Poly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (F.is_zero(f[i])) continue;
        std::string coef = F.to_string(f[i]);
        bool coef_is_one = (coef == "1");
        std::string term;
        if (i == 0) {
            term = coef;
            if (F.degree() > 1 && coef.find('+') != std::string::npos) term = "(" + coef + ")";
        } else {
            if (!coef_is_one) {
                term = (F.degree() > 1 && coef.find('+') != std::string::npos) ? "(" + coef + ")*"
                                                                               : coef + "*";
            }
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace quadform::fqpoly
