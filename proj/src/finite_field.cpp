#include "quadform/finite_field.hpp"

#include <algorithm>

namespace quadform {

FiniteField::FiniteField(std::uint64_t p) : p_(p), deg_(1), modulus_{0, 1} {
    if (p < 3 || p >= (1ULL << 31) || !is_prime_u64(p))
        throw error(errc::invalid_input, "FiniteField: p must be an odd prime < 2^31");
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime_u64(p))
        throw error(errc::invalid_input, "FiniteField: p must be an odd prime < 2^31");
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw error(errc::invalid_input, "FiniteField: modulus must be monic of degree >= 1");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1)
        throw error(errc::invalid_input, "FiniteField: modulus must be monic");
    deg_ = static_cast<unsigned>(modulus_.size() - 1);
}

Int FiniteField::order() const { return int_pow(Int(p_), deg_); }

FiniteField::Elem FiniteField::one() const {
    Elem e(deg_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elem FiniteField::from_int(long long n) const {
    Elem e(deg_, 0);
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    e[0] = static_cast<std::uint64_t>(r);
    return e;
}

FiniteField::Elem FiniteField::make(const std::vector<std::uint64_t>& coeffs) const {
    // Reduce mod modulus by repeated leading-term elimination.
    std::vector<std::uint64_t> c(coeffs);
    for (auto& x : c) x %= p_;
    while (c.size() > deg_) {
        std::uint64_t lead = c.back();
        std::size_t k = c.size() - 1 - deg_;  // c[k + deg_] is the leading term
        if (lead != 0) {
            for (unsigned i = 0; i < deg_; ++i)
                c[k + i] = submod(c[k + i], mulmod(lead, modulus_[i], p_), p_);
        }
        c.pop_back();
    }
    c.resize(deg_, 0);
    return c;
}

bool FiniteField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t x) { return x == 0; });
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = addmod(a[i], b[i], p_);
    return r;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = submod(a[i], b[i], p_);
    return r;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    if (deg_ == 1) return Elem{mulmod(a[0], b[0], p_)};
    std::vector<std::uint64_t> prod(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j)
            prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], p_), p_);
    }
    return make(prod);
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
    if (is_zero(a)) throw error(errc::non_unit, "FiniteField::inv: zero element");
    if (deg_ == 1) return Elem{invmod(a[0], p_)};
    // Extended Euclid in F_p[y] between a (as poly) and the modulus.
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    std::vector<std::uint64_t> r0 = modulus_, r1(a);
    trim(r1);
    std::vector<std::uint64_t> t0, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<std::uint64_t> q;
        std::vector<std::uint64_t> rem = r0;
        std::uint64_t lead_inv = invmod(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t coef = mulmod(rem.back(), lead_inv, p_);
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = coef;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = submod(rem[shift + i], mulmod(coef, r1[i], p_), p_);
            trim(rem);
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        std::vector<std::uint64_t> qt(q.size() + t1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = addmod(qt[i + j], mulmod(q[i], t1[j], p_), p_);
        }
        trim(qt);
        std::vector<std::uint64_t> tn(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) tn[i] = submod(tn[i], qt[i], p_);
        trim(tn);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = tn;
    }
    // r0 = gcd, constant (modulus irreducible)
    if (r0.size() != 1)
        throw error(errc::non_unit, "FiniteField::inv: modulus not coprime to element");
    std::uint64_t scale = invmod(r0[0], p_);
    for (auto& c : t0) c = mulmod(c, scale, p_);
    t0.resize(deg_, 0);
    return t0;
}

FiniteField::Elem FiniteField::pow(const Elem& a, const Int& e) const {
    Elem r = one(), base = a;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool FiniteField::is_square(const Elem& a) const {
    if (is_zero(a)) return true;
    Elem c = pow(a, (order() - 1) / 2);
    return c == one();
}

FiniteField::Elem FiniteField::nonresidue() const {
    for (std::uint64_t idx = 1;; ++idx) {
        Elem cand = from_index(idx);
        if (!is_zero(cand) && !is_square(cand)) return cand;
    }
}

std::optional<FiniteField::Elem> FiniteField::sqrt(const Elem& a) const {
    if (is_zero(a)) return zero();
    if (!is_square(a)) return std::nullopt;
    Int q = order();
    if (q % 4 == 3) {
        Elem r = pow(a, (q + 1) / 4);
        return r;
    }
    // Tonelli-Shanks: q - 1 = 2^s * t with t odd
    Int t = q - 1;
    int s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    Elem z = pow(nonresidue(), t);
    Elem m = pow(a, (t + 1) / 2);  // candidate root
    Elem c = pow(a, t);
    int r = s;
    while (!(c == one())) {
        Elem d = c;
        int i = 0;
        while (!(d == one())) {
            d = mul(d, d);
            ++i;
        }
        Elem b = z;
        for (int j = 0; j < r - i - 1; ++j) b = mul(b, b);
        m = mul(m, b);
        z = mul(b, b);
        c = mul(c, z);
        r = i;
    }
    return m;
}

FiniteField::Elem FiniteField::from_index(std::uint64_t idx) const {
    Elem e(deg_, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        e[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::string FiniteField::to_string(const Elem& a, const std::string& var) const {
    if (is_zero(a)) return "0";
    std::string out;
    for (unsigned i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        std::string term;
        if (i == 0) {
            term = std::to_string(a[i]);
        } else {
            if (a[i] != 1) term = std::to_string(a[i]) + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace quadform
