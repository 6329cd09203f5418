#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quadform/diagform.hpp"

namespace quadform {

// The diagonal pencil <f_1 + t*g_1, ..., f_n + t*g_n> over Q_p(t) attached
// to two diagonal forms f, g of equal rank over Q.  Entries with g_i = 0
// stay constant, entries with f_i = 0 become g_i*t, and a position where
// both vanish is rejected.
QtForm amer_brumer_pencil(std::uint64_t p, const std::vector<Rat>& f, const std::vector<Rat>& g);

struct PencilScan {
    std::uint64_t roots_mod_p = 0;   // primitive common zeros of (f, g) mod p
    std::uint64_t lifts_tested = 0;  // candidate lifts examined mod p^2
};

// Exhaustive check that the system f = g = 0 has no primitive solution in
// (Z/p^2)^n.  Vectors that are not zero mod p are filtered mod p first;
// only the survivors are lifted.  Rank is capped at 6 (errc::budget_exceeded
// beyond), and a pathological lift count aborts the same way.
bool pencil_no_primitive_solution(std::uint64_t p, const std::vector<Int>& f,
                                  const std::vector<Int>& g, PencilScan* scan = nullptr);

// The pinned five-variable pair
//   f = <1, u, p, u*p^{2s}, p^{2s-2}>,   g = <p^{4s+1}, p^{4s}, u*p^{2s}, 1, p>
// whose common zero locus is a smooth complete intersection without
// Q_p-points.  Requires p ≡ 1 (mod 4), u a nonsquare unit mod p, s >= 2.
std::pair<std::vector<Int>, std::vector<Int>> no_point_quadric_pair(std::uint64_t p,
                                                                    std::uint64_t u, unsigned s);

}  // namespace quadform
