#include "drinfeld/structure.hpp"

#include <map>

#include "drinfeld/errors.hpp"
#include "drinfeld/isoclass.hpp"
#include "drinfeld/snf.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

FqMatrix action_matrix(const DrinfeldModule& phi) {
    const FieldTower& F = *phi.tower();
    const auto n = static_cast<std::size_t>(F.n());
    FqMatrix M(n, n);
    std::uint32_t basis = 1;
    for (std::size_t j = 0; j < n; ++j, basis *= static_cast<std::uint32_t>(F.q())) {
        const auto co = F.coords(phi.phi_T().apply(Elem{basis}));
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = Elem{static_cast<std::uint32_t>(co[i])};
    }
    return M;
}

InvariantFactors structure(const DrinfeldModule& phi) {
    const FieldTower* F = phi.field();
    std::vector<UPoly> nonunit;
    for (auto& f : invariant_factors(PolyMatrix::characteristic(F, action_matrix(phi))))
        if (!f.is_one()) nonunit.push_back(f);
    if (nonunit.size() > 2)
        throw TheoryViolation("L^Phi has " + std::to_string(nonunit.size()) + " nonunit invariant factors");
    InvariantFactors inv{UPoly::one(F), UPoly::one(F)};
    if (!nonunit.empty()) inv.i1 = nonunit.back();
    if (nonunit.size() == 2) inv.i2 = nonunit.front();
    return inv;
}

CriteriaReport check_criteria(const DrinfeldModule& phi, const InvariantFactors& inv, const CharPoly& cp) {
    const FieldTower* F = phi.field();
    const UPoly chi = euler_poincare(cp);
    const UPoly i = inv.i();
    CriteriaReport r;
    r.i2_divides_i1 = divides(inv.i2, inv.i1);
    r.product_is_chi = monic(inv.i1 * inv.i2) == chi;
    r.i2_divides_c_minus_2 = divides(inv.i2, cp.c - UPoly::constant(F, F->times(FieldTower::one(), 2)));
    r.i_sq_divides_chi = divides(i * i, chi);
    r.ordinary = !phi.is_supersingular();
    return r;
}

namespace {

void require_prime_away_from_P(const DrinfeldModule& phi, const UPoly& rho) {
    if (!rho.is_monic() || !is_irreducible(rho)) throw ValidationError("rho must be monic irreducible");
    if (rho == phi.P()) throw ValidationError("rho must differ from the characteristic P");
}

OrePoly frobenius_minus_one(const DrinfeldModule& phi) {
    const FieldTower* F = phi.field();
    return OrePoly::tau_power(F, phi.n()) - OrePoly::one(F);
}

}  // namespace

bool rho_torsion_contained(const DrinfeldModule& phi, const UPoly& rho) {
    require_prime_away_from_P(phi, rho);
    return right_divides(phi.phi(rho), frobenius_minus_one(phi));
}

bool order_contained(const DrinfeldModule& phi, const UPoly& rho, const CharPoly& cp) {
    require_prime_away_from_P(phi, rho);
    const FieldTower* F = phi.field();
    if (!divides(rho * rho, cp.value_at_one())) throw ValidationError("order test needs rho^2 | P_Phi(1)");
    if (!divides(rho, cp.c - UPoly::constant(F, F->times(FieldTower::one(), 2))))
        throw ValidationError("order test needs rho | c - 2");
    auto [quot, rem] = right_divmod(frobenius_minus_one(phi), phi.phi(rho));
    if (!rem.is_zero()) return false;
    return quot * phi.phi_T() == phi.phi_T() * quot;
}

const char* to_string(NotRealizable r) {
    switch (r) {
        case NotRealizable::None: return "none";
        case NotRealizable::DegreeMismatch: return "degree";
        case NotRealizable::Divisibility: return "divisibility";
        case NotRealizable::NoAdmissibleClass: return "no_admissible_class";
        case NotRealizable::NoWitness: return "no_witness";
    }
    return "unknown";
}

std::vector<CharPoly> admissible_classes(const FieldTower* F, const UPoly& P, int m, const UPoly& i1, const UPoly& i2) {
    const int n = m * P.deg();
    const UPoly chi = monic(i1 * i2);
    const UPoly two = UPoly::constant(F, F->times(FieldTower::one(), 2));
    const UPoly Pm = pow(P, static_cast<unsigned>(m));
    std::vector<CharPoly> out;
    for (const auto& c : polys_up_to(F, n / 2)) {
        if (divides(P, c)) continue;  // ordinary
        if (!divides(i2, c - two)) continue;
        for (std::uint32_t mu = 1; mu < static_cast<std::uint32_t>(F->q()); ++mu) {
            CharPoly cp{c, Elem{mu}, P, m};
            if (!(monic(cp.value_at_one()) == chi)) continue;
            if (F->q() % 2 == 1 && !is_imaginary(discriminant(cp))) continue;
            out.push_back(std::move(cp));
        }
    }
    return out;
}

RealizeResult realize(const TowerPtr& tower, const UPoly& P, const UPoly& i1, const UPoly& i2) {
    if (!i1.is_monic() || !i2.is_monic()) throw ValidationError("i1 and i2 must be monic");
    const FieldTower* F = tower.get();
    const int n = F->n();
    RealizeResult res;
    if (i1.deg() + i2.deg() != n) {
        res.reason = NotRealizable::DegreeMismatch;
        res.detail = "deg(i1*i2) = " + std::to_string(i1.deg() + i2.deg()) + " but n = " + std::to_string(n);
        return res;
    }
    if (!divides(i2, i1)) {
        res.reason = NotRealizable::Divisibility;
        res.detail = format_upoly(i2) + " does not divide " + format_upoly(i1);
        return res;
    }
    const Elem gamma = residue_root(*F, P);
    const int m = n / P.deg();
    const auto candidates = admissible_classes(F, P, m, i1, i2);
    if (candidates.empty()) {
        res.reason = NotRealizable::NoAdmissibleClass;
        res.detail = "no ordinary Weil polynomial with the required chi and trace";
        return res;
    }

    const InvariantFactors want{i1, i2};
    const auto reps = iso_classes(*F);
    std::vector<std::optional<CharPoly>> cps(reps.size());
    for (const auto& cand : candidates) {
        for (std::size_t k = 0; k < reps.size(); ++k) {
            DrinfeldModule phi(tower, P, gamma, reps[k].g, reps[k].delta);
            if (!cps[k]) cps[k] = char_poly(phi);
            if (!(*cps[k] == cand)) continue;
            if (structure(phi) == want) {
                res.witness = std::move(phi);
                res.isogeny_class = cand;
                return res;
            }
        }
    }
    res.reason = NotRealizable::NoWitness;
    res.detail = std::to_string(candidates.size()) + " admissible classes, none with the requested structure";
    return res;
}

}  // namespace drinfeld
