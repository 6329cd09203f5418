#pragma once

#include <string>
#include <vector>

#include "quadform/ffratfunc.hpp"
#include "quadform/local_field.hpp"
#include "quadform/ratfunc.hpp"

namespace quadform {

// Codimension-one points of the standard model of the projective line over
// Z_p, restricted to one affine chart:
//  - Horizontal: the closure of a closed point of the generic fibre, cut out
//    by a monic irreducible polynomial in the chart coordinate;
//  - Infinity: the section at infinity of the chart;
//  - SpecialFibre: the fibre over p.
enum class PlaceKind { Horizontal, Infinity, SpecialFibre };

struct Place {
    PlaceKind kind = PlaceKind::Horizontal;
    QAtom atom;  // meaningful only for Horizontal

    bool operator==(const Place& o) const {
        if (kind != o.kind) return false;
        return kind != PlaceKind::Horizontal || atom == o.atom;
    }
    bool operator<(const Place& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return kind == PlaceKind::Horizontal && atom < o.atom;
    }
};

Place place_horizontal(const QAtom& m);
Place place_infinity();
Place place_special_fibre();
std::string place_to_string(const Place& pl, const std::string& var);

// An elementary coordinate change of the chart:
//   Zoom(c):  old = c + p * new   (pass to the residue disc of c mod p)
//   Invert:   old = 1 / new       (bring the section at infinity to 0)
struct ChartMove {
    enum Kind { Zoom, Invert };
    Kind kind = Zoom;
    Rat c = 0;
};

// A chart of the model, reached from the base coordinate by at most two
// elementary moves.  Tracks display names: t, then x, then y.
struct Chart {
    std::uint64_t p = 5;
    std::vector<ChartMove> moves;

    std::string var() const;
    std::string to_string() const;
    bool operator==(const Chart& o) const;
};

Chart chart_base(std::uint64_t p);
Chart chart_extend(Chart ch, ChartMove mv);

// Rewrite a factored function of the old chart coordinate in terms of the new
// one.  Exact: monic atoms stay monic, with the extracted content folded into
// the constant and the power of p.
FactoredRatFunc qrf_substitute(const FactoredRatFunc& f, const ChartMove& mv);
FactoredRatFunc qrf_on_chart(const Chart& ch, const FactoredRatFunc& f_base);

// Valuation of f at a place of the chart.  At the special fibre this is the
// Gauss valuation, which can be negative when atom coefficients have p in a
// denominator.
int qrf_place_val(const FactoredRatFunc& f, const Place& pl);

// Unit residue f * pi^{-v} mod the place, in the residue field of the place.
//
// Degree-one horizontal places and the place at infinity have residue field
// Q_p and the residue is an exact rational, returned atom-free.
FactoredRatFunc qrf_place_unit_residue_rat(const FactoredRatFunc& f, const Place& pl);

// The special fibre has residue field F_p(z); z is the reduction of the chart
// coordinate.
FFRatFunc qrf_place_unit_residue_ffz(const FactoredRatFunc& f, const FiniteFieldPtr& Fp);

// A degree-two horizontal place has residue field the quadratic extension
// Q_p(theta), theta a root of the atom.  ext_field_for_atom picks the
// canonical defining equation (z^2 - a, z^2 - p or z^2 - p*a according to the
// square class of the discriminant) and atom_root computes theta in it.
LocalFieldPtr ext_field_for_atom(std::uint64_t p, const QAtom& m, int precision = 12);
LocalElement atom_root(const LocalFieldPtr& K, const QAtom& m);
LocalElement qrf_place_unit_residue_ext(const FactoredRatFunc& f, const QAtom& m,
                                        const LocalFieldPtr& K);

// Horizontal places in the support of f, in canonical order.
std::vector<Place> qrf_support_places(const FactoredRatFunc& f);

}  // namespace quadform
