#pragma once

// The A-module L^Φ ≅ A/(i1) ⊕ A/(i2), its consistency criteria, the
// ρ-torsion containment test and the realization search.

#include <optional>
#include <string>

#include "drinfeld/charpoly.hpp"
#include "drinfeld/linalg.hpp"
#include "drinfeld/module.hpp"

namespace drinfeld {

struct InvariantFactors {
    UPoly i1;  // monic
    UPoly i2;  // monic, i2 | i1
    [[nodiscard]] bool cyclic() const { return i2.is_one(); }
    /// gcd(i1, i2), equal to i2 under the divisibility convention.
    [[nodiscard]] UPoly i() const { return gcd(i1, i2); }
    bool operator==(const InvariantFactors& o) const { return i1 == o.i1 && i2 == o.i2; }
};

/// Matrix of x ↦ Φ_T(x) on L in the basis 1, y, ..., y^{n-1}; column j is the image of y^j.
FqMatrix action_matrix(const DrinfeldModule& phi);

/// Nonunit invariant factors of T·Id − action_matrix(Φ), padded with 1.
/// Throws TheoryViolation if there are more than two.
InvariantFactors structure(const DrinfeldModule& phi);

struct CriteriaReport {
    bool i2_divides_i1 = false;
    bool product_is_chi = false;
    bool i2_divides_c_minus_2 = false;
    bool i_sq_divides_chi = false;
    /// The c − 2 clause only binds ordinary modules.
    bool ordinary = false;
    [[nodiscard]] bool all_ok() const {
        return i2_divides_i1 && product_is_chi && i_sq_divides_chi && (!ordinary || i2_divides_c_minus_2);
    }
};

CriteriaReport check_criteria(const DrinfeldModule& phi, const InvariantFactors& inv, const CharPoly& cp);

/// Φ[ρ] ⊆ L, tested as Φ_ρ right-dividing τ^n − 1.
/// Throws ValidationError unless ρ is monic irreducible and ρ ≠ P.
bool rho_torsion_contained(const DrinfeldModule& phi, const UPoly& rho);

/// (F − 1)/ρ is an endomorphism: the exact right quotient of τ^n − 1 by Φ_ρ
/// exists and commutes with Φ_T. Requires ρ² | P_Φ(1), ρ | c − 2 and ρ ≠ P
/// (ValidationError otherwise).
bool order_contained(const DrinfeldModule& phi, const UPoly& rho, const CharPoly& cp);

enum class NotRealizable { None, DegreeMismatch, Divisibility, NoAdmissibleClass, NoWitness };

const char* to_string(NotRealizable r);

struct RealizeResult {
    std::optional<DrinfeldModule> witness;
    std::optional<CharPoly> isogeny_class;
    NotRealizable reason = NotRealizable::None;
    std::string detail;
    [[nodiscard]] bool realized() const { return witness.has_value(); }
};

/// Searches ordinary Weil candidates (c, μ) in (poly_less c, μ) order and, within
/// each, iso-class representatives in (g, Δ) order; returns the first module with
/// structure (i1, i2). Throws ValidationError if i1 or i2 is not monic.
RealizeResult realize(const TowerPtr& tower, const UPoly& P, const UPoly& i1, const UPoly& i2);

/// The Weil candidates realize() would scan for a given structure, in scan order.
std::vector<CharPoly> admissible_classes(const FieldTower* F, const UPoly& P, int m, const UPoly& i1, const UPoly& i2);

}  // namespace drinfeld
