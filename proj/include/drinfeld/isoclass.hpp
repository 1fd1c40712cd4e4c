#pragma once

// L-isomorphism classes of rank-2 modules with fixed γ: orbits of (g, Δ)
// under the twist (g, Δ) ↦ (u^{q−1}g, u^{q²−1}Δ), u ∈ L^*.

#include <cstdint>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

struct IsoClassRep {
    Elem g{};
    Elem delta{};
    std::uint64_t orbit_size = 0;
    /// Stabilizer of (g, Δ) in L^*, i.e. #Aut_L(Φ).
    std::uint64_t automorphisms = 0;
};

/// (g, Δ) pairs ordered by g, then Δ, each under FieldTower::lex_less.
bool pair_less(const FieldTower& F, Elem g1, Elem d1, Elem g2, Elem d2);

/// Every orbit on L × L^*, represented by its pair_less-smallest member, in pair_less order.
std::vector<IsoClassRep> iso_classes(const FieldTower& F);

/// Twist of (g, Δ) by u ∈ L^*.
std::pair<Elem, Elem> twist(const FieldTower& F, Elem g, Elem delta, Elem u);

}  // namespace drinfeld
