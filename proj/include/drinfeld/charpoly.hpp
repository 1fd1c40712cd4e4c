#pragma once

// Characteristic polynomial P_Φ(X) = X² − cX + μP^m of the Frobenius F = τ^n.

#include <optional>
#include <vector>

#include "drinfeld/module.hpp"
#include "drinfeld/upoly.hpp"

namespace drinfeld {

struct CharPoly {
    UPoly c;
    Elem mu{};  // in F_q^*
    UPoly P;
    int m = 0;

    /// μ·P^m = P_Φ(0).
    [[nodiscard]] UPoly constant_term() const;
    /// P_Φ(1) = 1 − c + μP^m.
    [[nodiscard]] UPoly value_at_one() const;
    bool operator==(const CharPoly& o) const { return c == o.c && mu == o.mu && P == o.P && m == o.m; }
};

/// Solves τ^{2n} − Φ_c τ^n + Φ_{μP^m} = 0 for (c, μ) as one F_q-linear system,
/// deg c ≤ n/2. When F = Φ_a lies in Φ(A) the system has a line of solutions and
/// the result is (X − a)². Throws TheoryViolation on any other failure.
CharPoly char_poly(const DrinfeldModule& phi);

/// τ^{2n} − Φ_c τ^n + Φ_{μP^m}; zero for the true characteristic polynomial.
OrePoly annihilation_residual(const DrinfeldModule& phi, const CharPoly& cp);

/// Monic generator of (P_Φ(1)). Throws TheoryViolation when P_Φ(1) = 0.
UPoly euler_poincare(const CharPoly& cp);

/// c² − 4μP^m.
UPoly discriminant(const CharPoly& cp);

/// For odd q: deg D odd, or deg D even with a non-square leading coefficient.
/// Always false for even q and for D = 0.
bool is_imaginary(const UPoly& D);

/// deg c ≤ n/2, the rank-2 degree bound on the trace.
bool hasse_weil_ok(const CharPoly& cp);

/// Same tower data, P and m; throws ValidationError otherwise.
bool is_isogenous(const DrinfeldModule& a, const DrinfeldModule& b);

/// Minimal polynomial of F over A as coefficients low to high in X:
/// {−a, 1} when τ^n = Φ_a, else {μP^m, −c, 1}.
std::vector<UPoly> minimal_poly_of_F(const DrinfeldModule& phi, const CharPoly& cp);

}  // namespace drinfeld
