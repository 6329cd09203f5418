#include "quadform/oracle.hpp"

#include <algorithm>
#include <utility>

namespace quadform {

namespace {

// ------------------------------------------------------------------- Q_p

struct QpCtx {
    std::uint64_t p = 0;
    int max_level = 0;
    std::uint64_t pl = 0;             // p^max_level
    std::vector<std::uint64_t> pk;    // p^0 .. p^max_level
    std::vector<std::uint64_t> c;     // coefficients mod p^max_level
    std::uint64_t ops = 0;
};

constexpr std::uint64_t kQpOpBudget = 80'000'000;

std::uint64_t qp_f_mod(const QpCtx& C, const std::vector<std::uint64_t>& x) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s = addmod(s, mulmod(C.c[i], mulmod(x[i], x[i], C.pl), C.pl), C.pl);
    return s;
}

int vp_u64(std::uint64_t v, std::uint64_t p, int cap) {
    if (v == 0) return cap;
    int t = 0;
    while (t < cap && v % p == 0) {
        v /= p;
        ++t;
    }
    return t;
}

// t = min_i v_p(2 c_i x_i), capped at max_level.  Exact whenever < max_level.
int qp_gradient_val(const QpCtx& C, const std::vector<std::uint64_t>& x) {
    int t = C.max_level;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t g = mulmod(2 % C.pl, mulmod(C.c[i], x[i], C.pl), C.pl);
        t = std::min(t, vp_u64(g, C.p, C.max_level));
    }
    return t;
}

// Advance a base-p odometer; returns false after the last vector.
bool odometer_next(std::vector<std::uint64_t>& digits, std::uint64_t p) {
    for (auto& d : digits) {
        if (++d < p) return true;
        d = 0;
    }
    return false;
}

std::vector<Int> to_int_vec(const std::vector<std::uint64_t>& x) {
    std::vector<Int> r;
    r.reserve(x.size());
    for (std::uint64_t v : x) r.emplace_back(v);
    return r;
}

// ---------------------------------------------------------------- F_p(z)

using fqpoly::Poly;

struct FfzBudget {
    std::uint64_t ops = 0;
    std::uint64_t cap = 8'000'000;

    bool spend() { return ++ops <= cap; }
};

Poly poly_from_index(const FiniteField& F, std::uint64_t idx, int max_deg) {
    Poly f;
    f.reserve(static_cast<std::size_t>(max_deg) + 1);
    for (int k = 0; k <= max_deg; ++k) {
        f.push_back(F.from_int(static_cast<long long>(idx % F.p())));
        idx /= F.p();
    }
    fqpoly::trim(F, f);
    return f;
}

// Clear denominators: C_k = num_k * prod_{l != k} den_l.  The resulting
// polynomial form has exactly the same zeros as q.
std::vector<Poly> scaled_poly_coeffs(const FFRForm& q) {
    const FiniteField& F = *q.F;
    std::size_t n = q.coeffs.size();
    std::vector<Poly> num(n), den(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto fr = ffr_as_fraction(q.coeffs[i]);
        num[i] = fr.first;
        den[i] = fr.second;
    }
    std::vector<Poly> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly c = num[i];
        for (std::size_t l = 0; l < n; ++l)
            if (l != i) c = fqpoly::mul(F, c, den[l]);
        out[i] = c;
    }
    return out;
}

std::optional<std::vector<Poly>> checked(const FFRForm& q, std::vector<Poly> w) {
    if (ffz_verify_witness(q, w)) return w;
    return std::nullopt;
}

// Exact shortcut: some -c_j/c_i is a square, giving a two-coordinate zero.
std::optional<std::vector<Poly>> ffz_pair_shortcut(const FFRForm& q) {
    std::size_t n = q.coeffs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            FFRatFunc r = ffr_mul(ffr_neg(q.coeffs[j]), ffr_inv(q.coeffs[i]));
            if (!ffq_ratfunc_is_square(r)) continue;
            auto sq = ffr_sqrt_fraction(r);
            std::vector<Poly> w(n, fqpoly::zero());
            w[i] = sq.first;
            w[j] = sq.second;
            auto ok = checked(q, std::move(w));
            if (ok) return ok;
        }
    }
    return std::nullopt;
}

// Staged search for C_a X_a^2 + C_b X_b^2 + C_r X_r^2 = 0 with roles rotating:
// enumerate (X_a, X_b) of degree < stage bound, complete X_r by an exact
// polynomial square root.  `pos` maps local indices to q's coordinates.
std::optional<std::vector<Poly>> ternary_stage_search(const FFRForm& q,
                                                      const std::vector<Poly>& C,
                                                      const std::vector<std::size_t>& pos,
                                                      int max_stage, FfzBudget& budget) {
    const FiniteField& F = *q.F;
    std::size_t n = q.coeffs.size();
    for (int d = 0; d <= max_stage; ++d) {
        std::uint64_t count = upow(F.p(), static_cast<unsigned>(d) + 1);
        std::uint64_t prev = d == 0 ? 0 : upow(F.p(), static_cast<unsigned>(d));
        for (int role = 0; role < 3; ++role) {
            std::size_t a = pos[(role + 1) % 3], b = pos[(role + 2) % 3], r = pos[role];
            const Poly& Ca = C[a];
            const Poly& Cb = C[b];
            const Poly& Cr = C[r];
            for (std::uint64_t ia = 0; ia < count; ++ia) {
                Poly xa = poly_from_index(F, ia, d);
                Poly term_a = fqpoly::mul(F, Ca, fqpoly::mul(F, xa, xa));
                for (std::uint64_t ib = 0; ib < count; ++ib) {
                    if (ia == 0 && ib == 0) continue;
                    if (d > 0 && ia < prev && ib < prev) continue;  // seen at an earlier stage
                    if (!budget.spend()) return std::nullopt;
                    Poly xb = poly_from_index(F, ib, d);
                    Poly u = fqpoly::neg(
                        F, fqpoly::add(F, term_a, fqpoly::mul(F, Cb, fqpoly::mul(F, xb, xb))));
                    std::vector<Poly> w(n, fqpoly::zero());
                    if (fqpoly::is_zero(u)) {
                        w[a] = xa;
                        w[b] = xb;
                    } else {
                        auto s = fqpoly::sqrt(F, fqpoly::mul(F, u, Cr));
                        if (!s) continue;
                        w[a] = fqpoly::mul(F, xa, Cr);
                        w[b] = fqpoly::mul(F, xb, Cr);
                        w[r] = *s;
                    }
                    auto ok = checked(q, std::move(w));
                    if (ok) return ok;
                }
            }
        }
    }
    return std::nullopt;
}

// Same idea with three enumerated coordinates and one completed.
std::optional<std::vector<Poly>> quaternary_stage_search(const FFRForm& q,
                                                         const std::vector<Poly>& C,
                                                         const std::vector<std::size_t>& pos,
                                                         int max_stage, FfzBudget& budget) {
    const FiniteField& F = *q.F;
    std::size_t n = q.coeffs.size();
    for (int d = 0; d <= max_stage; ++d) {
        std::uint64_t count = upow(F.p(), static_cast<unsigned>(d) + 1);
        std::uint64_t prev = d == 0 ? 0 : upow(F.p(), static_cast<unsigned>(d));
        for (int role = 0; role < 4; ++role) {
            std::size_t a = pos[(role + 1) % 4], b = pos[(role + 2) % 4],
                        c = pos[(role + 3) % 4], r = pos[role];
            for (std::uint64_t ia = 0; ia < count; ++ia) {
                Poly xa = poly_from_index(F, ia, d);
                Poly term_a = fqpoly::mul(F, C[a], fqpoly::mul(F, xa, xa));
                for (std::uint64_t ib = 0; ib < count; ++ib) {
                    Poly xb = poly_from_index(F, ib, d);
                    Poly term_ab = fqpoly::add(
                        F, term_a, fqpoly::mul(F, C[b], fqpoly::mul(F, xb, xb)));
                    for (std::uint64_t ic = 0; ic < count; ++ic) {
                        if (ia == 0 && ib == 0 && ic == 0) continue;
                        if (d > 0 && ia < prev && ib < prev && ic < prev) continue;
                        if (!budget.spend()) return std::nullopt;
                        Poly xc = poly_from_index(F, ic, d);
                        Poly u = fqpoly::neg(
                            F, fqpoly::add(F, term_ab,
                                           fqpoly::mul(F, C[c], fqpoly::mul(F, xc, xc))));
                        std::vector<Poly> w(n, fqpoly::zero());
                        if (fqpoly::is_zero(u)) {
                            w[a] = xa;
                            w[b] = xb;
                            w[c] = xc;
                        } else {
                            auto s = fqpoly::sqrt(F, fqpoly::mul(F, u, C[r]));
                            if (!s) continue;
                            w[a] = fqpoly::mul(F, xa, C[r]);
                            w[b] = fqpoly::mul(F, xb, C[r]);
                            w[c] = fqpoly::mul(F, xc, C[r]);
                            w[r] = *s;
                        }
                        auto ok = checked(q, std::move(w));
                        if (ok) return ok;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Poly>> ffz_search_impl(const FFRForm& q, int pair_deg,
                                                 FfzBudget& budget);

// Search proper subforms and re-embed any witness.
std::optional<std::vector<Poly>> ffz_subform_search(const FFRForm& q, std::size_t size,
                                                    int pair_deg, FfzBudget& budget) {
    std::size_t n = q.coeffs.size();
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
        FFRForm sub{q.F, {}};
        for (std::size_t i : pick) sub.coeffs.push_back(q.coeffs[i]);
        auto w = ffz_search_impl(sub, pair_deg, budget);
        if (w) {
            std::vector<Poly> full(n, fqpoly::zero());
            for (std::size_t i = 0; i < size; ++i) full[pick[i]] = (*w)[i];
            auto ok = checked(q, std::move(full));
            if (ok) return ok;
        }
        // next combination
        std::size_t k = size;
        while (k > 0 && pick[k - 1] == n - size + (k - 1)) --k;
        if (k == 0) return std::nullopt;
        ++pick[k - 1];
        for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
}

std::optional<std::vector<Poly>> ffz_search_impl(const FFRForm& q, int pair_deg,
                                                 FfzBudget& budget) {
    std::size_t n = q.coeffs.size();
    if (n < 2) return std::nullopt;
    auto pair = ffz_pair_shortcut(q);
    if (pair) return pair;
    if (n == 2) return std::nullopt;

    std::vector<Poly> C = scaled_poly_coeffs(q);
    if (n == 3)
        return ternary_stage_search(q, C, {0, 1, 2}, pair_deg, budget);
    if (n == 4)
        return quaternary_stage_search(q, C, {0, 1, 2, 3}, std::min(pair_deg, 2), budget);

    auto w3 = ffz_subform_search(q, 3, std::min(pair_deg, 2), budget);
    if (w3) return w3;
    return ffz_subform_search(q, 4, 1, budget);
}

}  // namespace

// -------------------------------------------------------------------- Q_p

QpSearchResult qp_zero_search(std::uint64_t p, const std::vector<Int>& coeffs, int max_level) {
    if (p < 3 || !is_prime_u64(p))
        throw error(errc::invalid_input, "qp_zero_search: p must be an odd prime");
    if (coeffs.empty()) throw error(errc::degenerate, "qp_zero_search: empty form");
    if (coeffs.size() > 6)
        throw error(errc::budget_exceeded, "qp_zero_search: rank capped at 6");
    for (const Int& c : coeffs)
        if (c == 0) throw error(errc::degenerate, "qp_zero_search: zero coefficient");
    if (max_level < 1 || max_level > 18)
        throw error(errc::invalid_input, "qp_zero_search: bad max_level");

    QpCtx C;
    C.p = p;
    C.max_level = max_level;
    C.pk.resize(static_cast<std::size_t>(max_level) + 1);
    C.pk[0] = 1;
    for (int k = 1; k <= max_level; ++k) {
        if (C.pk[static_cast<std::size_t>(k) - 1] > (std::uint64_t{1} << 62) / p)
            throw error(errc::budget_exceeded, "qp_zero_search: p^max_level exceeds 64 bits");
        C.pk[static_cast<std::size_t>(k)] = C.pk[static_cast<std::size_t>(k) - 1] * p;
    }
    C.pl = C.pk[static_cast<std::size_t>(max_level)];
    C.c.reserve(coeffs.size());
    for (const Int& c : coeffs) {
        Int m = c % Int(C.pl);
        if (m < 0) m += Int(C.pl);
        C.c.push_back(m.convert_to<std::uint64_t>());
    }

    std::size_t n = coeffs.size();
    // Stack of (approximate zero, level); roots are the primitive solutions
    // mod p.  Children refine by one p-adic digit per coordinate.
    std::vector<std::pair<std::vector<std::uint64_t>, int>> stack;
    int deepest = 0;
    bool budget_hit = false;

    std::vector<std::uint64_t> x(n, 0);
    while (odometer_next(x, p)) {
        if (++C.ops > kQpOpBudget) return SearchBudget{"root enumeration exceeded the work cap"};
        if (qp_f_mod(C, x) % p == 0) {
            stack.emplace_back(x, 1);
            deepest = 1;
        }
    }

    while (!stack.empty()) {
        auto [node, k] = std::move(stack.back());
        stack.pop_back();
        int t = qp_gradient_val(C, node);
        if (k > 2 * t) {
            HenselWitness w{to_int_vec(node), k, t};
            return w;
        }
        if (k == max_level) {
            // An uncertified survivor at the level cap: neither certificate
            // can be issued for this branch.
            budget_hit = true;
            continue;
        }
        std::uint64_t step = C.pk[static_cast<std::size_t>(k)];
        std::uint64_t child_mod = C.pk[static_cast<std::size_t>(k) + 1];
        std::vector<std::uint64_t> e(n, 0), child(n);
        do {
            if (++C.ops > kQpOpBudget)
                return SearchBudget{"child expansion exceeded the work cap"};
            for (std::size_t i = 0; i < n; ++i) child[i] = node[i] + step * e[i];
            if (qp_f_mod(C, child) % child_mod == 0) {
                stack.emplace_back(child, k + 1);
                deepest = std::max(deepest, k + 1);
            }
        } while (odometer_next(e, p));
    }

    if (budget_hit) return SearchBudget{"approximate zeros resisted certification at the level cap"};
    return SearchExhausted{deepest + 1};
}

QpSearchResult qp_zero_search(const QpSymForm& q, int max_level) {
    validate(q);
    std::vector<Rat> vals;
    vals.reserve(q.coeffs.size());
    Int den = 1;
    for (const FactoredRatFunc& c : q.coeffs) {
        Rat v = Rat(c.sign) * c.cnum * rat_pow(Rat(Int(q.p)), c.p_exp);
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
        vals.push_back(v);
    }
    std::vector<Int> ints;
    ints.reserve(vals.size());
    for (const Rat& v : vals) ints.push_back(boost::multiprecision::numerator(Rat(v * den * den)));
    return qp_zero_search(q.p, ints, max_level);
}

bool qp_verify_witness(std::uint64_t p, const std::vector<Int>& coeffs, const HenselWitness& w) {
    if (w.x.size() != coeffs.size() || w.level < 1) return false;
    Int P(p), pl = int_pow(P, static_cast<unsigned>(w.level));
    bool primitive = false;
    Int sum = 0;
    int t = w.level;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (w.x[i] < 0 || w.x[i] >= pl) return false;
        if (w.x[i] % P != 0) primitive = true;
        sum += coeffs[i] * w.x[i] * w.x[i];
        Int g = 2 * coeffs[i] * w.x[i];
        if (g != 0) t = std::min(t, padic_val(g, P));
    }
    if (!primitive) return false;
    if (sum != 0 && padic_val(sum, P) < w.level) return false;
    return w.level > 2 * t;
}

// ---------------------------------------------------------- finite fields

std::optional<std::vector<FiniteField::Elem>> fq_zero_search(const FqForm& q) {
    validate(q);
    const FiniteField& F = *q.F;
    std::size_t n = q.coeffs.size();
    Int total = 1;
    for (std::size_t i = 0; i < n && total <= (1 << 24); ++i) total *= F.order();

    auto value_of = [&](const std::vector<FiniteField::Elem>& x) {
        FiniteField::Elem s = F.zero();
        for (std::size_t i = 0; i < n; ++i)
            s = F.add(s, F.mul(q.coeffs[i], F.mul(x[i], x[i])));
        return s;
    };

    std::uint64_t order = F.order().convert_to<std::uint64_t>();
    if (total <= (1 << 24)) {
        std::vector<std::uint64_t> idx(n, 0);
        std::vector<FiniteField::Elem> x(n, F.zero());
        while (odometer_next(idx, order)) {
            for (std::size_t i = 0; i < n; ++i) x[i] = F.from_index(idx[i]);
            if (F.is_zero(value_of(x))) return x;
        }
        return std::nullopt;
    }

    // Large state space: scan vectors supported on <= 3 coordinates.  Over a
    // finite field a zero on some triple exists whenever one exists at all.
    if (F.order() > 1024)
        throw error(errc::budget_exceeded, "fq_zero_search: field too large to scan");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<std::uint64_t> idx(3, 0);
                while (odometer_next(idx, order)) {
                    std::vector<FiniteField::Elem> x(n, F.zero());
                    x[i] = F.from_index(idx[0]);
                    x[j] = F.from_index(idx[1]);
                    x[k] = F.from_index(idx[2]);
                    if (F.is_zero(value_of(x))) return x;
                }
            }
        }
    }
    return std::nullopt;
}

bool fq_verify_witness(const FqForm& q, const std::vector<FiniteField::Elem>& x) {
    if (x.size() != q.coeffs.size()) return false;
    const FiniteField& F = *q.F;
    bool nonzero = false;
    FiniteField::Elem s = F.zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!F.is_zero(x[i])) nonzero = true;
        s = F.add(s, F.mul(q.coeffs[i], F.mul(x[i], x[i])));
    }
    return nonzero && F.is_zero(s);
}

// ---------------------------------------------------------------- F_p(z)

std::optional<std::vector<fqpoly::Poly>> ffz_zero_search(const FFRForm& q, int pair_deg) {
    validate(q);
    if (pair_deg < 0 || pair_deg > 8)
        throw error(errc::invalid_input, "ffz_zero_search: bad pair_deg");
    FfzBudget budget;
    return ffz_search_impl(q, pair_deg, budget);
}

// ------------------------------------------------------ rendered witnesses

std::optional<std::vector<std::string>> isotropy_witness_search(const FqForm& q) {
    auto w = fq_zero_search(q);
    if (!w) return std::nullopt;
    std::vector<std::string> out;
    out.reserve(w->size());
    for (const auto& e : *w) out.push_back(q.F->to_string(e));
    return out;
}

std::optional<std::vector<std::string>> isotropy_witness_search(const QpSymForm& q,
                                                                int max_level) {
    auto r = qp_zero_search(q, max_level);
    const auto* w = std::get_if<HenselWitness>(&r);
    if (!w) return std::nullopt;
    std::vector<std::string> out;
    out.reserve(w->x.size());
    for (const Int& v : w->x) out.push_back(v.str());
    return out;
}

std::optional<std::vector<std::string>> isotropy_witness_search(const FFRForm& q, int pair_deg,
                                                                const std::string& var) {
    auto w = ffz_zero_search(q, pair_deg);
    if (!w) return std::nullopt;
    std::vector<std::string> out;
    out.reserve(w->size());
    for (const Poly& f : *w) out.push_back(fqpoly::to_string(*q.F, f, var));
    return out;
}

bool ffz_verify_witness(const FFRForm& q, const std::vector<fqpoly::Poly>& x) {
    if (x.size() != q.coeffs.size()) return false;
    const FiniteField& F = *q.F;
    std::size_t n = x.size();
    bool nonzero = false;
    for (const Poly& xi : x)
        if (!fqpoly::is_zero(xi)) nonzero = true;
    if (!nonzero) return false;
    std::vector<Poly> num(n), den(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto fr = ffr_as_fraction(q.coeffs[i]);
        num[i] = fr.first;
        den[i] = fr.second;
    }
    Poly sum = fqpoly::zero();
    for (std::size_t i = 0; i < n; ++i) {
        Poly term = fqpoly::mul(F, num[i], fqpoly::mul(F, x[i], x[i]));
        for (std::size_t l = 0; l < n; ++l)
            if (l != i) term = fqpoly::mul(F, term, den[l]);
        sum = fqpoly::add(F, sum, term);
    }
    return fqpoly::is_zero(sum);
}

}  // namespace quadform
