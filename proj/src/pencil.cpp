#include "quadform/pencil.hpp"

#include "quadform/errors.hpp"

namespace quadform {

namespace {

constexpr std::uint64_t kMaxLifts = 1ull << 26;

std::uint64_t reduce(const Int& c, std::uint64_t m) {
    Int r = c % Int(m);
    if (r < 0) r += Int(m);
    return static_cast<std::uint64_t>(r);
}

// value of sum c_i x_i^2 mod m
std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, const std::vector<std::uint64_t>& x,
                       std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        acc = addmod(acc, mulmod(c[i], mulmod(x[i], x[i], m), m), m);
    return acc;
}

bool advance(std::vector<std::uint64_t>& x, std::uint64_t p) {
    for (auto& xi : x) {
        if (++xi < p) return true;
        xi = 0;
    }
    return false;
}

}  // namespace

QtForm amer_brumer_pencil(std::uint64_t p, const std::vector<Rat>& f, const std::vector<Rat>& g) {
    if (f.size() != g.size()) throw error(errc::invalid_input, "pencil forms have unequal rank");
    if (f.empty()) throw error(errc::invalid_input, "pencil forms are empty");
    QtForm q{p, {}};
    q.coeffs.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0 && g[i] == 0)
            throw error(errc::degenerate,
                        "pencil entry " + std::to_string(i + 1) + ": f and g both vanish");
        if (g[i] == 0) {
            q.coeffs.push_back(qrf_constant(p, f[i]));
        } else if (f[i] == 0) {
            q.coeffs.push_back(qrf_make(p, g[i], 0, {{qatom_linear(Rat(0)), 1}}));
        } else {
            // f_i + t*g_i = g_i * (t + f_i/g_i)
            q.coeffs.push_back(qrf_make(p, g[i], 0, {{qatom_linear(f[i] / g[i]), 1}}));
        }
    }
    validate(q);
    return q;
}

bool pencil_no_primitive_solution(std::uint64_t p, const std::vector<Int>& f,
                                  const std::vector<Int>& g, PencilScan* scan) {
    if (f.size() != g.size() || f.empty())
        throw error(errc::invalid_input, "pencil forms have unequal or zero rank");
    const std::size_t n = f.size();
    if (n > 6) throw error(errc::budget_exceeded, "primitive-solution scan limited to rank 6");
    if (p < 3 || !is_prime_u64(p)) throw error(errc::invalid_input, "p must be an odd prime");

    const std::uint64_t p2 = p * p;
    std::vector<std::uint64_t> fp(n), gp(n), f2(n), g2(n);
    for (std::size_t i = 0; i < n; ++i) {
        f2[i] = reduce(f[i], p2);
        g2[i] = reduce(g[i], p2);
        fp[i] = f2[i] % p;
        gp[i] = g2[i] % p;
    }

    PencilScan local;
    PencilScan& st = scan ? *scan : local;
    st = PencilScan{};

    // Stage 1: primitive roots of both reductions mod p.  A primitive vector
    // mod p^2 stays nonzero mod p, so its reduction must appear here.
    std::vector<std::vector<std::uint64_t>> roots;
    std::vector<std::uint64_t> x(n, 0);
    while (advance(x, p)) {  // skips the zero vector: its lifts are imprimitive
        if (eval_mod(fp, x, p) == 0 && eval_mod(gp, x, p) == 0) roots.push_back(x);
    }
    st.roots_mod_p = roots.size();

    // Stage 2: every lift x0 + p*y of a surviving root, mod p^2.
    std::uint64_t lift_count = 0;
    for (const auto& x0 : roots) {
        std::vector<std::uint64_t> y(n, 0);
        do {
            if (++lift_count > kMaxLifts)
                throw error(errc::budget_exceeded, "primitive-solution scan: too many lifts");
            std::vector<std::uint64_t> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = x0[i] + p * y[i];
            ++st.lifts_tested;
            if (eval_mod(f2, v, p2) == 0 && eval_mod(g2, v, p2) == 0) return false;
        } while (advance(y, p));
    }
    return true;
}

std::pair<std::vector<Int>, std::vector<Int>> no_point_quadric_pair(std::uint64_t p,
                                                                    std::uint64_t u, unsigned s) {
    if (p < 3 || !is_prime_u64(p)) throw error(errc::invalid_input, "p must be an odd prime");
    if (p % 4 != 1) throw error(errc::invalid_input, "the construction needs p = 1 (mod 4)");
    if (u == 0 || u % p == 0 || legendre(u % p, p) != -1)
        throw error(errc::invalid_input, "u must be a nonsquare unit mod p");
    if (s < 2) throw error(errc::invalid_input, "the construction needs s >= 2");

    const Int P(p), U(u);
    std::vector<Int> f = {Int(1), U, P, U * int_pow(P, 2 * s), int_pow(P, 2 * s - 2)};
    std::vector<Int> g = {int_pow(P, 4 * s + 1), int_pow(P, 4 * s), U * int_pow(P, 2 * s), Int(1),
                          P};
    return {f, g};
}

}  // namespace quadform
