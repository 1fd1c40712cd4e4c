#pragma once

// Rank-2 Drinfeld F_q[T]-modules Φ_T = γ(T) + g·τ + Δ·τ² over L.

#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/field.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/upoly.hpp"

namespace drinfeld {

/// The root of P in L with the lexicographically smallest coordinate vector.
/// Throws ValidationError unless P is monic irreducible with deg P | n.
Elem residue_root(const FieldTower& F, const UPoly& P);

/// An immutable rank-2 module. Φ_{T^k} is cached for k ≤ n at construction.
class DrinfeldModule {
public:
    /// Throws ValidationError on Δ = 0, a P that is not monic irreducible, deg P ∤ n,
    /// or a tower mismatch.
    DrinfeldModule(TowerPtr tower, UPoly P, Elem g, Elem delta);
    /// As above with γ(T) supplied (must be a root of P); skips the root search.
    DrinfeldModule(TowerPtr tower, UPoly P, Elem gammaT, Elem g, Elem delta);

    [[nodiscard]] const TowerPtr& tower() const { return tower_; }
    [[nodiscard]] const FieldTower* field() const { return tower_.get(); }
    [[nodiscard]] const UPoly& P() const { return P_; }
    [[nodiscard]] int d() const { return P_.deg(); }
    [[nodiscard]] int m() const { return tower_->n() / d(); }
    [[nodiscard]] int n() const { return tower_->n(); }
    [[nodiscard]] Elem gammaT() const { return gammaT_; }
    [[nodiscard]] Elem g() const { return g_; }
    [[nodiscard]] Elem delta() const { return delta_; }

    [[nodiscard]] const OrePoly& phi_T() const { return powers_[1]; }
    /// Φ_a; additive and multiplicative in a, constant term γ(a), τ-degree 2·deg a.
    [[nodiscard]] OrePoly phi(const UPoly& a) const;
    /// Monic generator Φ_I of the left ideal generated by {Φ_a : a ∈ I}.
    [[nodiscard]] OrePoly phi_ideal(const MonicIdeal& I) const;
    /// Φ_I for I = (a, b) computed as the right gcd of Φ_a and Φ_b.
    [[nodiscard]] OrePoly phi_ideal(const UPoly& a, const UPoly& b) const;

    /// h = ht(Φ_P)/d ∈ {1, 2}. Throws TheoryViolation if d ∤ ht(Φ_P).
    [[nodiscard]] int height() const;
    [[nodiscard]] bool is_supersingular() const { return height() == 2; }

    /// The unique a with Φ_a = f, when one exists (f of even τ-degree).
    [[nodiscard]] std::optional<UPoly> phi_preimage(const OrePoly& f) const;
    /// Smallest k ≤ k_max with τ^{nk} ∈ Φ(A), if any.
    [[nodiscard]] std::optional<int> frobenius_power_in_A(int k_max) const;

private:
    void init();

    TowerPtr tower_;
    UPoly P_;
    Elem gammaT_{}, g_{}, delta_{};
    std::vector<OrePoly> powers_;  // Φ_{T^k}, k = 0..max(n, 1)
};

/// Invariant factors of the A-module Φ[Q] of Q-torsion points over an algebraic closure.
struct TorsionStructure {
    UPoly Q;
    /// Nonunit invariant factors, monic, each dividing the next.
    std::vector<UPoly> factors;
    /// F_q-dimension of Φ[Q].
    int dimension = 0;
    /// Degree k of the extension F_{q^{nk}} ⊇ L in which all roots of Φ_Q were found.
    int extension_degree = 0;
};

/// Φ[Q] computed as the F_q-kernel of Φ_Q over successive extensions of L.
/// Throws ResourceLimitError when no extension of degree ≤ search_bound
/// (over L) contains every root, or when the extension exceeds the field bound.
TorsionStructure torsion_structure(const DrinfeldModule& phi, const MonicIdeal& Q, int search_bound);

}  // namespace drinfeld
