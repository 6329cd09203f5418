#include "quadform/local_field.hpp"

#include <sstream>

namespace quadform {

namespace {

// Inverse of a mod m (m a prime power here); throws if not a unit.
Int int_invmod(const Int& a, const Int& m) {
    Int t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        Int q = r / newr;
        Int tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw error(errc::non_unit, "int_invmod: not invertible");
    if (t < 0) t += m;
    return t;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

int int_padic_val_capped(const Int& n, const Int& p, int cap) {
    if (n == 0) return cap;
    Int m = n;
    int v = 0;
    while (v < cap && m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------- element

int LocalElement::val() const {
    switch (kind_) {
        case Kind::Regular: return val_;
        case Kind::ExactZero:
            throw error(errc::degenerate, "LocalElement::val: exact zero has no valuation");
        case Kind::Indistinct:
            throw error(errc::precision_exhausted,
                        "LocalElement::val: element indistinct from zero (v >= " +
                            std::to_string(val_) + "); raise the precision");
    }
    return 0;
}

int LocalElement::zero_bound() const {
    if (kind_ != Kind::Indistinct)
        throw error(errc::degenerate, "LocalElement::zero_bound: element is not indistinct");
    return val_;
}

FiniteField::Elem LocalElement::unit_residue() const {
    if (kind_ == Kind::ExactZero)
        throw error(errc::degenerate, "LocalElement::unit_residue: exact zero");
    if (kind_ == Kind::Indistinct)
        throw error(errc::precision_exhausted,
                    "LocalElement::unit_residue: element indistinct from zero");
    const FiniteField& k = *K_->residue_field();
    Int p(K_->p());
    if (k.degree() == 1) {
        return {mod_pos(u0_, p).convert_to<std::uint64_t>()};
    }
    return {mod_pos(u0_, p).convert_to<std::uint64_t>(), mod_pos(u1_, p).convert_to<std::uint64_t>()};
}

FiniteField::Elem LocalElement::residue() const {
    if (kind_ == Kind::Regular && val_ != 0)
        throw error(errc::non_unit, "LocalElement::residue: nonzero valuation " +
                                        std::to_string(val_) + "; residue is defined for units");
    if (kind_ == Kind::ExactZero)
        throw error(errc::non_unit, "LocalElement::residue: exact zero is not a unit");
    return unit_residue();
}

std::string LocalElement::to_string() const {
    switch (kind_) {
        case Kind::ExactZero: return "0";
        case Kind::Indistinct: return "O(pi^" + std::to_string(val_) + ")";
        default: break;
    }
    std::ostringstream os;
    if (val_ != 0) os << "pi^" << val_ << "*";
    os << "(" << u0_.str();
    if (u1_ != 0) os << "+" << u1_.str() << "*g";
    os << ")+O(pi^" << (val_ + rel_prec_) << ")";
    return os.str();
}

// ---------------------------------------------------------------- field

LocalField::LocalField(const LocalFieldDesc& d) : desc_(d) {
    if (!is_prime_u64(d.p) || d.p < 3)
        throw error(errc::invalid_input, "LocalField: p must be an odd prime");
    if (d.precision < 2 || d.precision > 256)
        throw error(errc::invalid_input, "LocalField: precision out of range [2,256]");
    nonres_ = smallest_nonresidue(d.p);
    storage_ = d.precision + 6;
    pS_ = int_pow(Int(d.p), static_cast<unsigned>(storage_));
    B_ = d.def_b;
    C_ = d.def_c;
    switch (d.ext) {
        case ExtKind::None:
            e_ = 1;
            f_ = 1;
            B_ = C_ = 0;
            kres_ = std::make_shared<FiniteField>(d.p);
            break;
        case ExtKind::Unramified: {
            e_ = 1;
            f_ = 2;
            // z^2 + Bz + C irreducible mod p iff disc = B^2 - 4C is a nonresidue.
            Int disc = B_ * B_ - 4 * C_;
            Int dm = mod_pos(disc, Int(d.p));
            if (dm == 0 || legendre(dm.convert_to<std::uint64_t>(), d.p) != -1)
                throw error(errc::invalid_input,
                            "LocalField: defining polynomial is not irreducible mod p");
            kres_ = std::make_shared<FiniteField>(
                d.p, std::vector<std::uint64_t>{mod_pos(C_, Int(d.p)).convert_to<std::uint64_t>(),
                                                mod_pos(B_, Int(d.p)).convert_to<std::uint64_t>(), 1});
            break;
        }
        case ExtKind::Eisenstein: {
            e_ = 2;
            f_ = 1;
            if (B_ != 0 && padic_val(B_, Int(d.p)) < 1)
                throw error(errc::invalid_input, "LocalField: Eisenstein needs p | b");
            if (C_ == 0 || padic_val(C_, Int(d.p)) != 1)
                throw error(errc::invalid_input, "LocalField: Eisenstein needs v_p(c) = 1");
            kres_ = std::make_shared<FiniteField>(d.p);
            break;
        }
    }
}

LocalFieldPtr LocalField::create(const LocalFieldDesc& d) {
    return LocalFieldPtr(new LocalField(d));
}

LocalElement LocalField::regular(int val, Int u0, Int u1, int rel) const {
    LocalElement x;
    x.K_ = shared_from_this();
    if (rel < 1) {
        x.kind_ = LocalElement::Kind::Indistinct;
        x.val_ = val;  // v(x) >= val is all we can certify
        return x;
    }
    x.kind_ = LocalElement::Kind::Regular;
    x.val_ = val;
    x.u0_ = mod_pos(u0, pS_);
    x.u1_ = mod_pos(u1, pS_);
    x.rel_prec_ = std::min(rel, e_ * storage_);
    return x;
}

LocalElement LocalField::zero() const {
    LocalElement x;
    x.K_ = shared_from_this();
    x.kind_ = LocalElement::Kind::ExactZero;
    return x;
}

LocalElement LocalField::from_rational(const Rat& q) const {
    if (q == 0) return zero();
    Int p(desc_.p);
    int vp = padic_val(q, p);
    Rat u = q / Rat(int_pow(p, static_cast<unsigned>(vp >= 0 ? vp : 0)));
    if (vp < 0) u = q * Rat(int_pow(p, static_cast<unsigned>(-vp)));
    Int num = boost::multiprecision::numerator(u);
    Int den = boost::multiprecision::denominator(u);
    Int u0 = mod_pos(num, pS_) * int_invmod(den, pS_) % pS_;
    if (e_ == 2 && vp != 0) {
        // g^2 = -C = p*m with m a unit: p^vp = g^(2 vp) * m^(-vp), so the
        // unit correction m^(-vp) folds into the coordinate.
        Int m = mod_pos(-C_ / p, pS_);
        Int base = (vp > 0) ? int_invmod(m, pS_) : m;
        for (int i = 0; i < (vp > 0 ? vp : -vp); ++i) u0 = u0 * base % pS_;
    }
    return regular(e_ * vp, u0, 0, e_ * storage_);
}

LocalElement LocalField::uniformizer() const {
    if (e_ == 1) return from_rational(Rat(Int(desc_.p)));
    return regular(1, 1, 0, e_ * storage_);
}

LocalElement LocalField::generator() const {
    switch (desc_.ext) {
        case ExtKind::None:
            throw error(errc::invalid_input, "LocalField::generator: base field has no generator");
        case ExtKind::Unramified: return regular(0, 0, 1, e_ * storage_);
        case ExtKind::Eisenstein: return regular(1, 1, 0, e_ * storage_);
    }
    throw error(errc::invalid_input, "LocalField::generator: bad extension kind");
}

LocalElement LocalField::make(const Rat& c0, const Rat& c1) const {
    if (c1 != 0 && desc_.ext == ExtKind::None)
        throw error(errc::invalid_input, "LocalField::make: generator coordinate over Q_p");
    LocalElement x = from_rational(c0);
    if (c1 == 0) return x;
    return add(x, mul(from_rational(c1), generator()));
}

LocalElement LocalField::lift(const FiniteField::Elem& r) const {
    const FiniteField& k = *kres_;
    if (k.is_zero(r)) return zero();
    // A nonzero residue lifts coordinate-wise to a unit.
    Int u0 = r[0];
    Int u1 = (k.degree() == 2) ? Int(r[1]) : Int(0);
    return regular(0, u0, u1, e_ * storage_);
}

int LocalField::coord_val(const Int& w0, const Int& w1) const {
    Int p(desc_.p);
    if (e_ == 1 && f_ == 1) return int_padic_val_capped(mod_pos(w0, pS_), p, storage_);
    if (e_ == 1) {
        int v0 = int_padic_val_capped(mod_pos(w0, pS_), p, storage_);
        int v1 = int_padic_val_capped(mod_pos(w1, pS_), p, storage_);
        return std::min(v0, v1);
    }
    // Eisenstein: v_pi(w0 + w1 pi) = min(2 v_p(w0), 2 v_p(w1) + 1)
    int v0 = int_padic_val_capped(mod_pos(w0, pS_), p, storage_);
    int v1 = int_padic_val_capped(mod_pos(w1, pS_), p, storage_);
    return std::min(2 * v0, 2 * v1 + 1);
}

void LocalField::coord_div_pi(Int& w0, Int& w1, int k) const {
    Int p(desc_.p);
    if (e_ == 1) {
        Int pk = int_pow(p, static_cast<unsigned>(k));
        if (w0 % pk != 0 || (f_ == 2 && w1 % pk != 0))
            throw error(errc::precision_exhausted, "coord_div_pi: not divisible");
        w0 /= pk;
        w1 /= pk;
        return;
    }
    // one pi-division: (x0 + x1 pi)/pi = y0 + y1 pi with
    //   y1 = -x0 / C,  y0 = x1 + B y1     (C = unit * p)
    Int cu = C_ / p;  // v_p(C) = 1
    Int cu_inv = int_invmod(cu, pS_);
    for (int i = 0; i < k; ++i) {
        if (w0 % p != 0) throw error(errc::precision_exhausted, "coord_div_pi: not divisible");
        Int y1 = mod_pos(-(w0 / p) * cu_inv, pS_);
        Int y0 = mod_pos(w1 + B_ * y1, pS_);
        w0 = y0;
        w1 = y1;
    }
}

void LocalField::coord_mul(const Int& x0, const Int& x1, const Int& y0, const Int& y1,
                           Int& z0, Int& z1) const {
    // (x0 + x1 g)(y0 + y1 g), g^2 = -B g - C
    Int cross = x1 * y1;
    z0 = mod_pos(x0 * y0 - C_ * cross, pS_);
    z1 = mod_pos(x0 * y1 + x1 * y0 - B_ * cross, pS_);
}

LocalElement LocalField::neg(const LocalElement& x) const {
    if (x.kind_ != LocalElement::Kind::Regular) return x;
    return regular(x.val_, -x.u0_, -x.u1_, x.rel_prec_);
}

LocalElement LocalField::add(const LocalElement& x, const LocalElement& y) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero) return y;
    if (y.kind_ == K::ExactZero) return x;
    if (x.kind_ == K::Indistinct && y.kind_ == K::Indistinct) {
        LocalElement z;
        z.K_ = shared_from_this();
        z.kind_ = K::Indistinct;
        z.val_ = std::min(x.val_, y.val_);
        return z;
    }
    if (x.kind_ == K::Indistinct || y.kind_ == K::Indistinct) {
        const LocalElement& reg = (x.kind_ == K::Regular) ? x : y;
        const LocalElement& ind = (x.kind_ == K::Regular) ? y : x;
        if (reg.val_ < ind.val_) {
            // value dominated by the regular part
            return regular(reg.val_, reg.u0_, reg.u1_,
                           std::min(reg.rel_prec_, ind.val_ - reg.val_));
        }
        LocalElement z;
        z.K_ = shared_from_this();
        z.kind_ = K::Indistinct;
        z.val_ = ind.val_;
        return z;
    }
    const LocalElement& lo = (x.val_ <= y.val_) ? x : y;
    const LocalElement& hi = (x.val_ <= y.val_) ? y : x;
    int d = hi.val_ - lo.val_;
    // shift hi's unit by pi^d: for e=1 multiply by p^d; for e=2 apply the
    // pi-multiplication map d times.
    Int h0 = hi.u0_, h1 = hi.u1_;
    if (e_ == 1) {
        Int pd = int_pow(Int(desc_.p), static_cast<unsigned>(std::min(d, storage_)));
        h0 = mod_pos(h0 * pd, pS_);
        h1 = mod_pos(h1 * pd, pS_);
    } else {
        for (int i = 0; i < std::min(d, e_ * storage_); ++i) {
            // pi * (a + b pi) = -C b + (a - B b) pi
            Int n0 = mod_pos(-C_ * h1, pS_);
            Int n1 = mod_pos(h0 - B_ * h1, pS_);
            h0 = n0;
            h1 = n1;
        }
    }
    Int w0 = mod_pos(lo.u0_ + h0, pS_);
    Int w1 = mod_pos(lo.u1_ + h1, pS_);
    int m = std::min(lo.rel_prec_, d + hi.rel_prec_);  // certified digits of w
    int d0 = coord_val(w0, w1);
    if (d0 >= m) {
        LocalElement z;
        z.K_ = shared_from_this();
        z.kind_ = K::Indistinct;
        z.val_ = lo.val_ + m;
        return z;
    }
    coord_div_pi(w0, w1, d0);
    return regular(lo.val_ + d0, w0, w1, m - d0);
}

LocalElement LocalField::sub(const LocalElement& x, const LocalElement& y) const {
    return add(x, neg(y));
}

LocalElement LocalField::mul(const LocalElement& x, const LocalElement& y) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero || y.kind_ == K::ExactZero) return zero();
    if (x.kind_ == K::Indistinct || y.kind_ == K::Indistinct) {
        // val_ is an exact valuation or a lower bound; the sum is a bound.
        LocalElement z;
        z.K_ = shared_from_this();
        z.kind_ = K::Indistinct;
        z.val_ = x.val_ + y.val_;
        return z;
    }
    Int z0, z1;
    coord_mul(x.u0_, x.u1_, y.u0_, y.u1_, z0, z1);
    int v = coord_val(z0, z1);  // 0 for e=1; may be 0 only... units multiply to units
    coord_div_pi(z0, z1, v);
    return regular(x.val_ + y.val_ + v, z0, z1, std::min(x.rel_prec_, y.rel_prec_));
}

LocalElement LocalField::inv(const LocalElement& x) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero)
        throw error(errc::degenerate, "LocalField::inv: division by exact zero");
    if (x.kind_ == K::Indistinct)
        throw error(errc::precision_exhausted,
                    "LocalField::inv: divisor indistinct from zero; raise the precision");
    // (u0 + u1 g)^-1 via the 2x2 system; for f=e=1 it is a plain inverse.
    if (desc_.ext == ExtKind::None) {
        return regular(-x.val_, int_invmod(x.u0_, pS_), 0, x.rel_prec_);
    }
    Int det = x.u0_ * (x.u0_ - B_ * x.u1_) + C_ * x.u1_ * x.u1_;
    Int det_inv = int_invmod(mod_pos(det, pS_), pS_);
    Int i0 = mod_pos((x.u0_ - B_ * x.u1_) * det_inv, pS_);
    Int i1 = mod_pos(-x.u1_ * det_inv, pS_);
    return regular(-x.val_, i0, i1, x.rel_prec_);
}

LocalElement LocalField::div(const LocalElement& x, const LocalElement& y) const {
    return mul(x, inv(y));
}

LocalElement LocalField::pow(const LocalElement& x, int n) const {
    if (n < 0) return inv(pow(x, -n));
    LocalElement r = from_int(1);
    LocalElement b = x;
    unsigned k = static_cast<unsigned>(n);
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

LocalElement LocalField::shift(const LocalElement& x, int k) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero) return x;
    LocalElement z = x;
    z.val_ += k;
    return z;
}

bool LocalField::is_square(const LocalElement& x) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero) return true;
    if (x.kind_ == K::Indistinct)
        throw error(errc::precision_exhausted,
                    "LocalField::is_square: element indistinct from zero; raise the precision");
    if (x.val_ % 2 != 0) return false;
    return kres_->is_square(x.unit_residue());
}

std::optional<LocalElement> LocalField::sqrt(const LocalElement& x) const {
    using K = LocalElement::Kind;
    if (x.kind_ == K::ExactZero) return zero();
    if (x.kind_ == K::Indistinct)
        throw error(errc::precision_exhausted, "LocalField::sqrt: element indistinct from zero");
    if (!is_square(x)) return std::nullopt;
    auto r0 = kres_->sqrt(x.unit_residue());
    if (!r0) return std::nullopt;
    // Newton: s <- (s + u/s)/2 on the unit part, then reattach pi^(val/2).
    LocalElement u = regular(0, x.u0_, x.u1_, e_ * storage_);
    LocalElement s = lift(*r0);
    LocalElement half = inv(from_int(2));
    int steps = 1;
    while ((1 << steps) < e_ * storage_ + 2) ++steps;
    for (int i = 0; i <= steps; ++i) s = mul(half, add(s, div(u, s)));
    LocalElement out = shift(s, x.val_ / 2);
    // restore the caller-visible precision of the input
    out.rel_prec_ = std::min(out.rel_prec_, x.rel_prec_);
    return out;
}

bool LocalField::same(const LocalElement& x, const LocalElement& y) const {
    LocalElement d = sub(x, y);
    return d.kind_ != LocalElement::Kind::Regular;
}

int hilbert_symbol(const LocalElement& x, const LocalElement& y) {
    if (x.kind() != LocalElement::Kind::Regular || y.kind() != LocalElement::Kind::Regular)
        throw error(errc::degenerate, "hilbert_symbol: arguments must be certified nonzero");
    if (x.field().get() != y.field().get())
        throw error(errc::invalid_input, "hilbert_symbol: arguments from different fields");
    const LocalField& K = *x.field();
    const FiniteField& k = *K.residue_field();
    int alpha = x.val(), beta = y.val();
    // (x, y) = chi((-1)^(alpha beta) * u^beta * w^alpha), the tame formula.
    FiniteField::Elem u = x.unit_residue(), w = y.unit_residue();
    FiniteField::Elem r = k.one();
    if ((static_cast<long long>(alpha) * beta) % 2 != 0) r = k.neg(r);
    auto pow_signed = [&](const FiniteField::Elem& b, int n) {
        if (n >= 0) return k.pow(b, n);
        return k.pow(k.inv(b), -n);
    };
    r = k.mul(r, pow_signed(u, beta));
    r = k.mul(r, pow_signed(w, alpha));
    return k.is_square(r) ? 1 : -1;
}

}  // namespace quadform
