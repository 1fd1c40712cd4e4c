#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {

UPoly P_(const TowerPtr& F, const char* s) { return parse_upoly(F.get(), s); }

}  // namespace

TEST_CASE("Smith form of small matrices") {
    const auto F = FieldTower::build(3, 1, 1);
    const UPoly T = UPoly::T(F.get()), one = UPoly::one(F.get()), zero = UPoly::zero(F.get());
    PolyMatrix a(F.get(), 2, 2);
    a.at(0, 0) = T;
    a.at(1, 1) = T * T;
    auto fa = invariant_factors(a);
    CHECK(fa[0] == T);
    CHECK(fa[1] == T * T);
    PolyMatrix b(F.get(), 2, 2);
    b.at(0, 0) = T;
    b.at(0, 1) = one;
    b.at(1, 1) = T;
    auto fb = invariant_factors(b);
    CHECK(fb[0] == one);
    CHECK(fb[1] == T * T);
    PolyMatrix z(F.get(), 2, 2);
    z.at(1, 0) = T + one;
    auto fz = invariant_factors(z);
    CHECK(fz[0] == T + one);
    CHECK(fz[1] == zero);
}

TEST_CASE("Smith form: U M V = D, unimodular transforms, determinantal divisors") {
    const auto F = FieldTower::build(3, 1, 1);
    std::mt19937 rng(123);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 3;
        const PolyMatrix M = oracle::random_poly_matrix(F.get(), n, 2, rng);
        const SmithForm sf = smith_normal_form(M);
        CHECK(sf.U * M * sf.V == sf.D);
        CHECK(sf.U.determinant().deg() == 0);
        CHECK(sf.V.determinant().deg() == 0);
        CHECK(sf.diagonal == oracle::determinantal_factors(M));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(sf.D.at(i, j).is_zero());
        for (std::size_t k = 1; k < n; ++k) CHECK(divides(sf.diagonal[k - 1], sf.diagonal[k]));
    }
}

TEST_CASE("action matrix represents Phi_T") {
    const auto F = FieldTower::build(3, 1, 2);
    const DrinfeldModule phi(F, P_(F, "T^2+1"), Elem{4}, Elem{5});
    const FqMatrix M = action_matrix(phi);
    for (Elem x : F->elements_lex()) {
        const auto cx = F->coords(x);
        std::vector<int> y(2, 0);
        for (std::size_t i = 0; i < 2; ++i) {
            Elem acc = FieldTower::zero();
            for (std::size_t j = 0; j < 2; ++j)
                acc = F->add(acc, F->mul(M.at(i, j), Elem{static_cast<std::uint32_t>(cx[j])}));
            y[i] = static_cast<int>(acc.code);
        }
        CHECK(F->from_coords(y) == phi.phi_T().apply(x));
    }
    const auto G = FieldTower::build(3, 1, 1);
    const FqMatrix m1 = action_matrix(DrinfeldModule(G, P_(G, "T"), Elem{1}, Elem{1}));
    CHECK(m1.at(0, 0) == Elem{2});
}

TEST_CASE("structure agrees with the point-scan oracle") {
    for (auto [p, s, n] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {3, 1, 2}, {2, 1, 2}, {2, 1, 3}, {2, 2, 1}}) {
        const auto F = FieldTower::build(p, s, n);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            const UPoly P = monic_irreducibles(F.get(), d).front();
            for (const auto& rep : iso_classes(*F)) {
                const DrinfeldModule phi(F, P, rep.g, rep.delta);
                const InvariantFactors inv = structure(phi);
                CHECK(inv == oracle::point_scan_structure(phi));
                const CharPoly cp = char_poly(phi);
                CHECK(check_criteria(phi, inv, cp).all_ok());
            }
        }
    }
}

TEST_CASE("structure at q = 3, n = 1") {
    const auto F = FieldTower::build(3, 1, 1);
    const DrinfeldModule phi(F, P_(F, "T"), Elem{1}, Elem{1});
    const InvariantFactors inv = structure(phi);
    CHECK(format_upoly(inv.i1) == "T+1");
    CHECK(inv.i2.is_one());
    CHECK(inv.cyclic());
    for (const auto& rep : iso_classes(*F)) CHECK(structure(DrinfeldModule(F, P_(F, "T"), rep.g, rep.delta)).cyclic());
}

TEST_CASE("non-cyclic instance at q = 3, d = 2") {
    const auto F = FieldTower::build(3, 1, 2);
    const UPoly P = P_(F, "T^2+1");
    int noncyclic = 0;
    for (const auto& rep : iso_classes(*F)) {
        const DrinfeldModule phi(F, P, rep.g, rep.delta);
        const InvariantFactors inv = structure(phi);
        if (inv.cyclic()) continue;
        ++noncyclic;
        const CharPoly cp = char_poly(phi);
        const CriteriaReport cr = check_criteria(phi, inv, cp);
        CHECK(cr.i2_divides_c_minus_2);
        CHECK(cr.all_ok());
        for (const auto& [rho, e] : factor(inv.i2)) {
            CHECK(rho_torsion_contained(phi, rho));
            CHECK(order_contained(phi, rho, cp));
        }
    }
    CHECK(noncyclic == 3);
}

TEST_CASE("q = 3, d = 1, m = 2: non-cyclic classes are exactly two supersingular ones") {
    const auto F = FieldTower::build(3, 1, 2);
    int noncyclic = 0;
    for (const auto& rep : iso_classes(*F)) {
        const DrinfeldModule phi(F, P_(F, "T"), rep.g, rep.delta);
        const InvariantFactors inv = structure(phi);
        if (inv.cyclic()) continue;
        ++noncyclic;
        CHECK(phi.height() == 2);
        CHECK(inv.i1 == inv.i2);
        CHECK(rho_torsion_contained(phi, inv.i2));
    }
    CHECK(noncyclic == 2);
    const DrinfeldModule phi(F, P_(F, "T"), Elem{0}, Elem{1});
    CHECK(structure(phi) == InvariantFactors{P_(F, "T+2"), P_(F, "T+2")});
}

TEST_CASE("rho containment matches rho | i2 everywhere") {
    for (auto [p, d, m] : std::vector<std::tuple<int, int, int>>{{3, 2, 1}, {3, 1, 2}, {3, 1, 3}, {2, 1, 3}, {5, 1, 2}}) {
        const auto F = FieldTower::build(p, 1, d * m);
        const UPoly P = monic_irreducibles(F.get(), d).front();
        for (const auto& rep : iso_classes(*F)) {
            const DrinfeldModule phi(F, P, rep.g, rep.delta);
            const InvariantFactors inv = structure(phi);
            const CharPoly cp = char_poly(phi);
            for (const auto& [rho, e] : factor(euler_poincare(cp))) {
                if (rho == P) continue;
                const bool contained = rho_torsion_contained(phi, rho);
                CHECK(contained == divides(rho, inv.i2));
                const UPoly two = UPoly::constant(F.get(), F->times(FieldTower::one(), 2));
                if (divides(rho * rho, cp.value_at_one()) && divides(rho, cp.c - two)) {
                    const bool oc = order_contained(phi, rho, cp);
                    CHECK(oc == contained);
                    if (oc) CHECK_FALSE(inv.cyclic());
                }
            }
        }
    }
}

TEST_CASE("rho preconditions") {
    const auto F = FieldTower::build(3, 1, 1);
    const DrinfeldModule phi(F, P_(F, "T"), Elem{1}, Elem{1});
    CHECK_THROWS_AS(rho_torsion_contained(phi, P_(F, "T")), ValidationError);
    CHECK_THROWS_AS(rho_torsion_contained(phi, P_(F, "T^2+2")), ValidationError);
    CHECK_THROWS_AS(order_contained(phi, P_(F, "T+1"), char_poly(phi)), ValidationError);
    CHECK_FALSE(rho_torsion_contained(phi, P_(F, "T+1")));
}

TEST_CASE("realize") {
    const auto F = FieldTower::build(3, 1, 1);
    const UPoly P = P_(F, "T");
    const RealizeResult ok = realize(F, P, P_(F, "T+1"), P_(F, "1"));
    REQUIRE(ok.realized());
    CHECK(ok.witness->g() == Elem{1});
    CHECK(ok.witness->delta() == Elem{1});
    CHECK(structure(*ok.witness) == InvariantFactors{P_(F, "T+1"), P_(F, "1")});

    CHECK(realize(F, P, P_(F, "T+1"), P_(F, "T+1")).reason == NotRealizable::DegreeMismatch);
    const auto G = FieldTower::build(3, 1, 2);
    CHECK(realize(G, P_(G, "T"), P_(G, "T+1"), P_(G, "T+2")).reason == NotRealizable::Divisibility);
    // T + 1 squared: needs c = 2 mod (T+1) and chi = (T+1)^2; no such ordinary Weil class over F_9 with P = T.
    const RealizeResult sq = realize(G, P_(G, "T"), P_(G, "T+1"), P_(G, "T+1"));
    CHECK_FALSE(sq.realized());
    CHECK(sq.reason != NotRealizable::None);
    CHECK(realize(F, P, P_(F, "T"), P_(F, "1")).realized());
    CHECK(realize(F, P, P_(F, "T+2"), P_(F, "1")).realized());
    CHECK_THROWS_AS(realize(F, P, P_(F, "2*T"), P_(F, "1")), ValidationError);
    CHECK(std::string(to_string(NotRealizable::Divisibility)) == "divisibility");
}
