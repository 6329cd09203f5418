#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "quadform/finite_field.hpp"
#include "quadform/numeric.hpp"

namespace quadform {

enum class ExtKind { None, Unramified, Eisenstein };

// Description of a complete discretely valued field with odd residue
// characteristic: Q_p itself, or a quadratic extension Q_p[z]/(z^2 + b z + c).
//  - Unramified: z^2 + b z + c irreducible mod p (e = 1, f = 2)
//  - Eisenstein: v_p(b) >= 1 and v_p(c) = 1 (e = 2, f = 1)
// `precision` is the default relative precision of elements, counted in
// uniformizer digits.
struct LocalFieldDesc {
    std::uint64_t p = 5;
    ExtKind ext = ExtKind::None;
    long long def_b = 0;
    long long def_c = 0;
    int precision = 12;
};

class LocalField;
using LocalFieldPtr = std::shared_ptr<const LocalField>;

// One element of a LocalField.  Regular elements are pi^val * unit with the
// unit known to `rel_prec` uniformizer digits; catastrophic cancellation
// demotes an element to a pure lower bound on its valuation ("indistinct
// from zero"), and exact zeros are tracked separately.  Asking an indistinct
// element for its valuation or residue throws errc::precision_exhausted:
// precision failures are loud, never silent.
class LocalElement {
  public:
    enum class Kind { ExactZero, Indistinct, Regular };

    // A default element is an exact zero with no field attached.
    LocalElement() = default;

    Kind kind() const { return kind_; }
    const LocalFieldPtr& field() const { return K_; }

    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    // Exact uniformizer valuation; throws unless Regular.
    int val() const;
    // For Indistinct elements: the certified lower bound v(x) >= bound.
    int zero_bound() const;
    int rel_prec() const { return rel_prec_; }

    // Residue of the unit part in the residue field (requires val() == 0;
    // elements of nonzero valuation throw errc::non_unit).
    FiniteField::Elem residue() const;
    // Residue of the unit part regardless of valuation.
    FiniteField::Elem unit_residue() const;

    std::string to_string() const;

    // Unit coordinates with respect to the generator (u0 + u1*g), reduced to
    // the storage modulus.  Exposed for serialization.
    const Int& u0() const { return u0_; }
    const Int& u1() const { return u1_; }

  private:
    friend class LocalField;

    LocalFieldPtr K_;
    Kind kind_ = Kind::ExactZero;
    int val_ = 0;       // Regular: exact valuation; Indistinct: lower bound
    Int u0_, u1_;       // unit coordinates mod p^storage_digits
    int rel_prec_ = 0;  // certified uniformizer digits of the unit part
};

class LocalField : public std::enable_shared_from_this<LocalField> {
  public:
    static LocalFieldPtr create(const LocalFieldDesc& d);

    const LocalFieldDesc& desc() const { return desc_; }
    std::uint64_t p() const { return desc_.p; }
    int e() const { return e_; }
    int f() const { return f_; }
    int precision() const { return desc_.precision; }
    // Smallest positive quadratic nonresidue mod p: the canonical unit `a`.
    std::uint64_t nonresidue() const { return nonres_; }

    const FiniteFieldPtr& residue_field() const { return kres_; }

    // ----- element constructors
    LocalElement zero() const;
    LocalElement from_rational(const Rat& x) const;
    LocalElement from_int(long long n) const { return from_rational(Rat(n)); }
    // c0 + c1 * g where g is the extension generator (c1 must be 0 for Q_p).
    LocalElement make(const Rat& c0, const Rat& c1) const;
    LocalElement uniformizer() const;
    LocalElement generator() const;  // root of the defining polynomial
    // Lift of a residue-field element (coordinate-wise, valuation 0 unless 0).
    LocalElement lift(const FiniteField::Elem& r) const;

    // ----- arithmetic
    LocalElement add(const LocalElement& x, const LocalElement& y) const;
    LocalElement sub(const LocalElement& x, const LocalElement& y) const;
    LocalElement neg(const LocalElement& x) const;
    LocalElement mul(const LocalElement& x, const LocalElement& y) const;
    LocalElement inv(const LocalElement& x) const;
    LocalElement div(const LocalElement& x, const LocalElement& y) const;
    LocalElement pow(const LocalElement& x, int n) const;
    // Multiply by an exact power of the uniformizer.
    LocalElement shift(const LocalElement& x, int k) const;

    // ----- predicates
    // Exact square test (valuation parity + residue character; Hensel makes
    // the residue test exact for odd p).
    bool is_square(const LocalElement& x) const;
    std::optional<LocalElement> sqrt(const LocalElement& x) const;
    // x and y agree to the available precision.
    bool same(const LocalElement& x, const LocalElement& y) const;

    int storage_digits() const { return storage_; }

  private:
    explicit LocalField(const LocalFieldDesc& d);

    LocalElement regular(int val, Int u0, Int u1, int rel) const;
    // pi-adic valuation of a coordinate pair, capped at e*storage_.
    int coord_val(const Int& w0, const Int& w1) const;
    // Divide coordinates by pi^k (requires pi^k | w to storage depth).
    void coord_div_pi(Int& w0, Int& w1, int k) const;
    // Multiply coordinate pairs: (x0 + x1 g)(y0 + y1 g) mod (g^2 + B g + C).
    void coord_mul(const Int& x0, const Int& x1, const Int& y0, const Int& y1,
                   Int& z0, Int& z1) const;

    LocalFieldDesc desc_;
    int e_ = 1, f_ = 1;
    std::uint64_t nonres_;
    int storage_;   // p-digit storage depth
    Int pS_;        // p^storage_
    Int B_, C_;     // defining polynomial z^2 + B z + C (0 for Q_p)
    FiniteFieldPtr kres_;
};

// Tame Hilbert symbol (x, y) over the element's field; +1 or -1.
int hilbert_symbol(const LocalElement& x, const LocalElement& y);

}  // namespace quadform
