#include "drinfeld/charpoly.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

UPoly CharPoly::constant_term() const { return pow(P, static_cast<unsigned>(m)).scale(mu); }

UPoly CharPoly::value_at_one() const { return UPoly::one(P.field()) - c + constant_term(); }

CharPoly char_poly(const DrinfeldModule& phi) {
    const FieldTower& F = *phi.tower();
    const FieldTower* Fp = phi.field();
    const int n = phi.n();
    const int kc = n / 2;  // deg c ≤ kc
    const auto N = static_cast<std::size_t>(n);
    const std::size_t top = 2 * N;  // τ-degrees 0..2n
    const std::size_t rows = (top + 1) * N;
    const std::size_t unknowns = static_cast<std::size_t>(kc) + 2;  // c_0..c_kc, μ

    // Column j < kc+1: coordinates of −Φ_{T^j}·τ^n; last column: Φ_{P^m}. RHS: −τ^{2n}.
    FqMatrix A(rows, unknowns);
    auto fill = [&](std::size_t col, const OrePoly& f) {
        for (std::size_t t = 0; t <= top; ++t) {
            const auto co = F.coords(f.coeff(t));
            for (std::size_t r = 0; r < N; ++r) A.at(t * N + r, col) = Elem{static_cast<std::uint32_t>(co[r])};
        }
    };
    const OrePoly tau_n = OrePoly::tau_power(Fp, n);
    for (int j = 0; j <= kc; ++j)
        fill(static_cast<std::size_t>(j), -(phi.phi(UPoly::monomial(Fp, FieldTower::one(), j)) * tau_n));
    const UPoly Pm = pow(phi.P(), static_cast<unsigned>(phi.m()));
    fill(unknowns - 1, phi.phi(Pm));

    std::vector<Elem> b(rows, FieldTower::zero());
    const auto lead = F.coords(FieldTower::one());
    for (std::size_t r = 0; r < N; ++r) b[top * N + r] = F.neg(Elem{static_cast<std::uint32_t>(lead[r])});

    auto sol = solve(F, std::move(A), std::move(b));
    if (sol.kind == LinearSolution::Kind::Inconsistent)
        throw TheoryViolation("Frobenius satisfies no quadratic relation of the expected shape");
    CharPoly cp;
    cp.P = phi.P();
    cp.m = phi.m();
    if (sol.kind == LinearSolution::Kind::Underdetermined) {
        // A second relation forces F = Φ_a with a ∈ A, and then P_Φ = (X − a)².
        const auto a = phi.phi_preimage(tau_n);
        if (!a) throw TheoryViolation("Frobenius relation is not unique although F lies outside A");
        cp.c = a->scale(F.times(FieldTower::one(), 2));
        const UPoly a2 = *a * *a;
        cp.mu = F.div(a2.lc(), Pm.lc());
        if (!(Pm.scale(cp.mu) == a2)) throw TheoryViolation("F = Phi_a but a^2 is not a unit multiple of P^m");
        return cp;
    }
    cp.mu = sol.x.back();
    if (cp.mu.code == 0) throw TheoryViolation("Frobenius norm coefficient mu vanished");
    sol.x.pop_back();
    cp.c = UPoly(Fp, std::move(sol.x));
    return cp;
}

OrePoly annihilation_residual(const DrinfeldModule& phi, const CharPoly& cp) {
    const FieldTower* F = phi.field();
    return OrePoly::tau_power(F, 2 * phi.n()) - phi.phi(cp.c) * OrePoly::tau_power(F, phi.n()) +
           phi.phi(cp.constant_term());
}

UPoly euler_poincare(const CharPoly& cp) {
    const UPoly v = cp.value_at_one();
    if (v.is_zero()) throw TheoryViolation("P_Phi(1) vanished");
    return monic(v);
}

UPoly discriminant(const CharPoly& cp) {
    const FieldTower* F = cp.P.field();
    return cp.c * cp.c - cp.constant_term().scale(F->times(FieldTower::one(), 4));
}

bool is_imaginary(const UPoly& D) {
    if (D.is_zero()) return false;
    const FieldTower& F = *D.field();
    if (F.q() % 2 == 0) return false;
    if (D.deg() % 2 != 0) return true;
    return !F.is_base_square(D.lc());
}

bool hasse_weil_ok(const CharPoly& cp) { return 2 * cp.c.deg() <= cp.m * cp.P.deg(); }

bool is_isogenous(const DrinfeldModule& a, const DrinfeldModule& b) {
    if (!a.field()->same_as(*b.field()) || !(a.P() == b.P()) || a.m() != b.m())
        throw ValidationError("isogeny test needs modules over the same base data");
    return char_poly(a) == char_poly(b);
}

std::vector<UPoly> minimal_poly_of_F(const DrinfeldModule& phi, const CharPoly& cp) {
    const FieldTower* F = phi.field();
    if (phi.n() % 2 == 0) {
        if (auto a = phi.phi_preimage(OrePoly::tau_power(F, phi.n()))) return {-*a, UPoly::one(F)};
    }
    return {cp.constant_term(), -cp.c, UPoly::one(F)};
}

}  // namespace drinfeld
