#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/report.hpp"
#include "drinfeld/text.hpp"

using namespace drinfeld;

namespace {

CensusReport census(int p, int s, int d, int m, int jobs = 1) {
    CensusOptions o;
    o.jobs = jobs;
    return run_census(p, s, d, m, std::nullopt, o);
}

const FormulaCheck& formula(const CensusReport& r, const std::string& name) {
    for (const auto& f : r.formulas)
        if (f.name == name) return f;
    throw std::runtime_error("no formula " + name);
}

}  // namespace

TEST_CASE("twist orbits partition L x L^*") {
    for (auto [p, s, n] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {2, 1, 3}}) {
        const auto F = FieldTower::build(p, s, n);
        const auto reps = iso_classes(*F);
        std::uint64_t total = 0;
        for (const auto& r : reps) {
            total += r.orbit_size;
            CHECK(r.orbit_size * r.automorphisms == F->order() - 1);
            // The representative is the least member of its orbit.
            for (Elem u : F->elements_lex()) {
                if (u.code == 0) continue;
                const auto [g, d] = twist(*F, r.g, r.delta, u);
                CHECK_FALSE(pair_less(*F, g, d, r.g, r.delta));
            }
        }
        CHECK(total == std::uint64_t(F->order()) * (F->order() - 1));
        const auto ctx = make_context(F, monic_irreducibles(F.get(), 1).front());
        // Slots with Δ = 0 are not modules and stay unassigned.
        for (std::size_t i = 0; i < ctx.class_of.size(); ++i)
            CHECK((ctx.class_of[i] < reps.size()) == (i % F->order() != 0));
    }
}

TEST_CASE("q = 3, n = 1 has singleton orbits") {
    const auto F = FieldTower::build(3, 1, 1);
    const auto reps = iso_classes(*F);
    CHECK(reps.size() == 6);
    for (const auto& r : reps) CHECK(r.orbit_size == 1);
}

TEST_CASE("census q = 3, d = m = 1") {
    const CensusReport r = census(3, 1, 1, 1);
    CHECK(r.classes.size() == 6);
    CHECK(r.supersingular_classes == 2);
    CHECK(r.ordinary_isogeny == 4);
    REQUIRE(r.stats.C);
    CHECK(*r.stats.C == Rational(1));
    CHECK(*r.stats.C0 == Rational(1));
    CHECK(*r.stats.N == Rational(0));
    CHECK(r.hurwitz_ran);
    CHECK(r.sweep.modules == 6);
    CHECK(r.sweep.annihilation_failures + r.sweep.invariance_failures + r.sweep.rho_failures == 0);
    for (const auto& g : r.isogeny) {
        if (!g.ordinary) continue;
        REQUIRE(g.hurwitz_disc);
        CHECK(g.hurwitz_disc->value == g.W);
    }
}

TEST_CASE("census q = 3, d = 1, m = 2") {
    const CensusReport r = census(3, 1, 1, 2);
    CHECK(r.classes.size() == 24);
    CHECK(r.supersingular_classes == 8);
    CHECK(r.ordinary_classes == 16);
    CHECK(r.cyclic_ordinary_classes == 16);
    CHECK(r.ordinary_isogeny == 10);
    CHECK(r.sweep.modules == 72);
    CHECK(r.sweep.annihilation_failures == 0);
    CHECK(r.sweep.invariance_failures == 0);
    CHECK(r.sweep.rho_failures == 0);
    CHECK(*formula(r, "isomorphism_classes_total").match);
    CHECK(*formula(r, "supersingular_classes").match);
}

TEST_CASE("census q = 3, d = 2, m = 1") {
    const CensusReport r = census(3, 1, 2, 1);
    CHECK(r.classes.size() == 24);
    CHECK(r.supersingular_classes == 2);
    CHECK(r.ordinary_classes == 22);
    CHECK(r.cyclic_ordinary_classes == 19);
    CHECK(r.ordinary_isogeny == 14);
    CHECK(r.cyclic_ordinary_isogeny == 11);
    CHECK(*r.stats.C0 == Rational(11, 14));
    CHECK(*r.stats.C == Rational(19, 22));
    const auto& iso = formula(r, "ordinary_isogeny_classes");
    CHECK_FALSE(iso.expected);
    CHECK(iso.expected_note.find("formula_undefined") == 0);
    CHECK(*formula(r, "ordinary_isogeny_classes_in_text").expected == Rational(4));
}

TEST_CASE("statistics are complementary and exact") {
    for (auto [p, s, d, m] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 1, 3}, {2, 2, 1, 2}, {5, 1, 1, 2}, {3, 1, 3, 1}}) {
        CensusOptions o;
        o.hurwitz = HurwitzMode::Off;
        const CensusReport r = run_census(p, s, d, m, std::nullopt, o);
        REQUIRE(r.stats.C);
        CHECK(*r.stats.C + *r.stats.N == Rational(1));
        CHECK(*r.stats.C0 + *r.stats.N0 == Rational(1));
        std::size_t members = 0;
        for (const auto& g : r.isogeny) members += g.members.size();
        CHECK(members == r.classes.size());
        for (const auto& c : r.classes) {
            CHECK(c.annihilation_ok);
            CHECK(c.criteria.all_ok());
            CHECK(c.supersingular == c.supersingular_by_trace);
            for (const auto& rc : c.rho_checks) CHECK(rc.consistent());
        }
    }
}

TEST_CASE("serial and parallel kernels agree") {
    for (auto [p, s, d, m] : std::vector<std::tuple<int, int, int, int>>{{3, 1, 1, 2}, {2, 1, 1, 3}, {3, 1, 2, 1}}) {
        const auto F = FieldTower::build(p, s, d * m);
        const auto ctx = make_context(F, monic_irreducibles(F.get(), d).front());
        const auto serial = analyze_classes_serial(ctx);
        const auto parallel = analyze_classes_parallel(ctx, 4);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].cp == parallel[i].cp);
            CHECK(serial[i].inv == parallel[i].inv);
            CHECK(serial[i].weight == parallel[i].weight);
        }
        CHECK(sweep_modules_serial(ctx, serial) == sweep_modules_parallel(ctx, serial, 4));
        CensusOptions a, b;
        b.jobs = 3;
        CHECK(dump(census_json(run_census(F, ctx.P, a))) == dump(census_json(run_census(F, ctx.P, b))));
    }
}

TEST_CASE("closed forms") {
    auto get = [](const std::vector<FormulaCheck>& v, const std::string& name) {
        for (const auto& f : v)
            if (f.name == name) return f;
        throw std::runtime_error(name);
    };
    const auto a = closed_form_counts(3, 1, 2);
    CHECK(*get(a, "isomorphism_classes_total").expected == Rational(24));
    CHECK(*get(a, "supersingular_classes").expected == Rational(8));
    CHECK(*get(a, "ordinary_isogeny_classes").expected == Rational(6));
    const auto b = closed_form_counts(3, 1, 1);
    CHECK(*get(b, "isomorphism_classes_total").expected == Rational(6));
    CHECK(*get(b, "supersingular_classes").expected == Rational(2));
    const auto c = closed_form_counts(5, 1, 3);
    CHECK(*get(c, "ordinary_isogeny_classes").expected == Rational(4 * (25 - 5 + 1)));
    CHECK(*closed_form_C0(3, 2, 1) == Rational(1, 4));
    CHECK(*closed_form_C0(5, 2, 1) == Rational(5, 6));
    CHECK(*closed_form_C0(3, 1, 2) == Rational(1, 2));
    CHECK(*closed_form_C0(5, 1, 2) == Rational(8, 9));
    CHECK_FALSE(closed_form_C0(3, 1, 3));
    CHECK_FALSE(closed_form_C0(2, 2, 1));
    CHECK_FALSE(closed_form_C0(2, 1, 2));
    CHECK(*closed_form_C0(4, 2, 1) == Rational(7, 10));
}

TEST_CASE("trend probe") {
    const auto rows = trend_probe({{3, 1}, {5, 1}}, 1, 1, CensusOptions{});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].q == 3);
    CHECK(rows[1].q == 5);
    CHECK(*rows[1].C == Rational(1));
}

TEST_CASE("census input checks") {
    CHECK_THROWS_AS(census(3, 1, 1, 7), ResourceLimitError);
    CHECK_THROWS_AS(run_census(3, 1, 2, 1, std::string("T"), CensusOptions{}), ValidationError);
    CHECK_THROWS_AS(run_census(3, 1, 2, 1, std::string("T^2+T"), CensusOptions{}), ValidationError);
    CHECK_THROWS_AS(census(3, 1, 0, 1), ValidationError);
}

TEST_CASE("report serialization") {
    const CensusReport r = census(3, 1, 1, 2);
    const Json j = census_json(r);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["totals"]["iso_classes"] == 24);
    CHECK(j["statistics"]["C"]["num"] == "1");
    CHECK(j["iso_classes"].size() == 24);
    const std::string csv = census_csv(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);
    // Every printed polynomial re-parses.
    for (const auto& c : j["iso_classes"]) {
        for (const char* key : {"c", "chi", "disc"}) {
            const std::string s = c[key].get<std::string>();
            CHECK(format_upoly(parse_upoly(r.tower.get(), s)) == s);
        }
        const std::string g = c["g"].get<std::string>();
        CHECK(format_elem(*r.tower, parse_elem(*r.tower, g)) == g);
    }
}
