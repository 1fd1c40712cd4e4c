#include "drinfeld/module.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/linalg.hpp"
#include "drinfeld/snf.hpp"

namespace drinfeld {

Elem residue_root(const FieldTower& F, const UPoly& P) {
    if (!P.is_monic() || P.deg() < 1) throw ValidationError("the characteristic P must be monic of positive degree");
    if (F.n() % P.deg() != 0)
        throw ValidationError("deg P = " + std::to_string(P.deg()) + " does not divide n = " + std::to_string(F.n()));
    if (!is_irreducible(P)) throw ValidationError("the characteristic P is reducible");
    for (Elem x : F.elements_lex())
        if (P.eval(x).code == 0) return x;
    throw TheoryViolation("irreducible P of degree dividing n has no root in L");
}

DrinfeldModule::DrinfeldModule(TowerPtr tower, UPoly P, Elem g, Elem delta)
    : tower_(std::move(tower)), P_(std::move(P)), g_(g), delta_(delta) {
    if (P_.field() == nullptr || !P_.field()->same_as(*tower_)) throw ValidationError("P is defined over a different field");
    gammaT_ = residue_root(*tower_, P_);
    init();
}

DrinfeldModule::DrinfeldModule(TowerPtr tower, UPoly P, Elem gammaT, Elem g, Elem delta)
    : tower_(std::move(tower)), P_(std::move(P)), gammaT_(gammaT), g_(g), delta_(delta) {
    if (P_.field() == nullptr || !P_.field()->same_as(*tower_)) throw ValidationError("P is defined over a different field");
    if (!P_.is_monic() || P_.deg() < 1 || tower_->n() % P_.deg() != 0)
        throw ValidationError("the characteristic P must be monic with deg P | n");
    if (P_.eval(gammaT_).code != 0) throw ValidationError("gamma(T) is not a root of P");
    init();
}

void DrinfeldModule::init() {
    const FieldTower& F = *tower_;
    if (delta_.code == 0) throw ValidationError("delta must be nonzero");
    if (g_.code >= F.order() || delta_.code >= F.order()) throw ValidationError("coefficient outside L");
    const FieldTower* Fp = tower_.get();
    powers_.reserve(static_cast<std::size_t>(std::max(n(), 1)) + 1);
    powers_.push_back(OrePoly::one(Fp));
    powers_.emplace_back(Fp, std::vector<Elem>{gammaT_, g_, delta_});
    for (int k = 2; k <= n(); ++k) powers_.push_back(powers_.back() * powers_[1]);
}

OrePoly DrinfeldModule::phi(const UPoly& a) const {
    const FieldTower* F = field();
    if (a.is_zero()) return OrePoly::zero(F);
    const int top = static_cast<int>(powers_.size()) - 1;
    if (a.deg() <= top) {
        OrePoly acc = OrePoly::zero(F);
        for (int k = 0; k <= a.deg(); ++k) {
            const Elem c = a.coeffs()[static_cast<std::size_t>(k)];
            if (c.code != 0) acc = acc + powers_[static_cast<std::size_t>(k)].scale_left(c);
        }
        return acc;
    }
    OrePoly acc = OrePoly::zero(F);
    for (int k = a.deg(); k >= 0; --k)
        acc = acc * powers_[1] + OrePoly::constant(F, a.coeffs()[static_cast<std::size_t>(k)]);
    return acc;
}

OrePoly DrinfeldModule::phi_ideal(const MonicIdeal& I) const { return monic(phi(I.generator())); }

OrePoly DrinfeldModule::phi_ideal(const UPoly& a, const UPoly& b) const {
    if (a.is_zero() && b.is_zero()) throw ValidationError("the zero ideal has no torsion generator");
    return right_gcd(phi(a), phi(b));
}

int DrinfeldModule::height() const {
    const int ht = phi(P_).height();
    if (ht % d() != 0)
        throw TheoryViolation("ht(Phi_P) = " + std::to_string(ht) + " is not a multiple of deg P = " + std::to_string(d()));
    const int h = ht / d();
    if (h < 1 || h > 2) throw TheoryViolation("height " + std::to_string(h) + " outside [1, 2]");
    return h;
}

std::optional<UPoly> DrinfeldModule::phi_preimage(const OrePoly& f) const {
    const FieldTower& F = *tower_;
    if (f.is_zero()) return UPoly::zero(field());
    if (f.deg() % 2 != 0) return std::nullopt;
    const int k = f.deg() / 2;
    const auto N = static_cast<std::size_t>(F.n());
    const auto rows = static_cast<std::size_t>(f.deg() + 1) * N;
    FqMatrix A(rows, static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        const OrePoly pj = phi(UPoly::monomial(field(), FieldTower::one(), j));
        for (int t = 0; t <= f.deg(); ++t) {
            const auto co = F.coords(pj.coeff(static_cast<std::size_t>(t)));
            for (std::size_t r = 0; r < N; ++r)
                A.at(static_cast<std::size_t>(t) * N + r, static_cast<std::size_t>(j)) =
                    Elem{static_cast<std::uint32_t>(co[r])};
        }
    }
    std::vector<Elem> b(rows);
    for (int t = 0; t <= f.deg(); ++t) {
        const auto co = F.coords(f.coeff(static_cast<std::size_t>(t)));
        for (std::size_t r = 0; r < N; ++r)
            b[static_cast<std::size_t>(t) * N + r] = Elem{static_cast<std::uint32_t>(co[r])};
    }
    auto sol = solve(F, std::move(A), std::move(b));
    if (sol.kind == LinearSolution::Kind::Underdetermined) throw TheoryViolation("Phi is not injective on A");
    if (sol.kind != LinearSolution::Kind::Unique) return std::nullopt;
    UPoly a(field(), std::move(sol.x));
    if (!(phi(a) == f)) throw TheoryViolation("preimage solve returned a wrong polynomial");
    return a;
}

std::optional<int> DrinfeldModule::frobenius_power_in_A(int k_max) const {
    for (int k = 1; k <= k_max; ++k) {
        if ((n() * k) % 2 != 0) continue;
        if (phi_preimage(OrePoly::tau_power(field(), n() * k))) return k;
    }
    return std::nullopt;
}

TorsionStructure torsion_structure(const DrinfeldModule& phi, const MonicIdeal& Q, int search_bound) {
    const FieldTower& L = *phi.tower();
    TorsionStructure out;
    out.Q = Q.generator();
    const OrePoly phiQ = phi.phi(Q.generator());
    const int target = phiQ.deg() - phiQ.height();
    if (target == 0) {
        out.extension_degree = 1;
        return out;
    }
    for (int k = 1; k <= search_bound; ++k) {
        const TowerPtr E = k == 1 ? phi.tower() : FieldTower::build(L.p(), L.s(), L.n() * k);
        const FieldEmbedding emb(phi.tower(), E);
        const auto N = static_cast<std::size_t>(E->n());
        const auto q = static_cast<std::uint32_t>(E->q());

        FqMatrix A(N, N);
        std::uint32_t basis_code = 1;
        for (std::size_t i = 0; i < N; ++i, basis_code *= q) {
            const auto co = E->coords(phiQ.apply(Elem{basis_code}, emb));
            for (std::size_t r = 0; r < N; ++r) A.at(r, i) = Elem{static_cast<std::uint32_t>(co[r])};
        }
        const auto ker = nullspace(*E, A);
        if (static_cast<int>(ker.size()) > target) throw TheoryViolation("torsion kernel larger than its separable degree");
        if (static_cast<int>(ker.size()) < target) continue;

        // Action of Φ_T on the kernel, in the kernel basis.
        const std::size_t r = ker.size();
        FqMatrix V(N, r);
        std::vector<Elem> vecs;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<int> co(N);
            for (std::size_t t = 0; t < N; ++t) {
                V.at(t, j) = ker[j][t];
                co[t] = static_cast<int>(ker[j][t].code);
            }
            vecs.push_back(E->from_coords(co));
        }
        FqMatrix M(r, r);
        for (std::size_t j = 0; j < r; ++j) {
            const auto co = E->coords(phi.phi_T().apply(vecs[j], emb));
            std::vector<Elem> b(N);
            for (std::size_t t = 0; t < N; ++t) b[t] = Elem{static_cast<std::uint32_t>(co[t])};
            const auto sol = solve(*E, V, b);
            if (sol.kind != LinearSolution::Kind::Unique) throw TheoryViolation("torsion points not stable under Phi_T");
            for (std::size_t i = 0; i < r; ++i) M.at(i, j) = sol.x[i];
        }
        for (auto& f : invariant_factors(PolyMatrix::characteristic(phi.field(), M)))
            if (!f.is_one()) out.factors.push_back(f);
        out.dimension = static_cast<int>(r);
        out.extension_degree = k;
        return out;
    }
    throw ResourceLimitError("Phi_Q does not split within an extension of degree " + std::to_string(search_bound));
}

}  // namespace drinfeld
