#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quadform/numeric.hpp"

namespace quadform {

// F_{p^f} presented as F_p[y]/(m(y)) for a monic irreducible m of degree f.
// Elements are little-endian coefficient vectors of length f.  The prime
// field is the degree-1 case with m(y) = y.
//
// All arithmetic is exact; p must be an odd prime below 2^31 so products of
// coefficients fit comfortably in 64 bits.
class FiniteField {
  public:
    using Elem = std::vector<std::uint64_t>;

    explicit FiniteField(std::uint64_t p);
    FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return deg_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    Int order() const;  // p^degree

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    Elem from_int(long long n) const;
    // Reduce an arbitrary coefficient vector (poly in the generator) mod (p, m).
    Elem make(const std::vector<std::uint64_t>& coeffs) const;

    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws errc::non_unit on zero
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, const Int& e) const;  // e >= 0

    // Quadratic character: true for zero and for nonzero squares.
    bool is_square(const Elem& a) const;
    // Tonelli-Shanks; nullopt iff a is a nonsquare.
    std::optional<Elem> sqrt(const Elem& a) const;

    // Some deterministic nonsquare (used by sqrt and by witness builders).
    Elem nonresidue() const;

    // Index <-> element bijection for deterministic enumeration, index < p^deg.
    Elem from_index(std::uint64_t idx) const;

    std::string to_string(const Elem& a, const std::string& var = "y") const;

  private:
    std::uint64_t p_;
    unsigned deg_;
    std::vector<std::uint64_t> modulus_;  // monic, length deg_+1
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

// An element bundled with its field, for heterogeneous containers
// (diagonal-form coefficients, symbol entries).
struct FqElem {
    FiniteFieldPtr F;
    FiniteField::Elem v;

    bool operator==(const FqElem& o) const {
        return F->p() == o.F->p() && F->degree() == o.F->degree() && v == o.v;
    }
};

}  // namespace quadform
