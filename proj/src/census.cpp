#include "drinfeld/census.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include <omp.h>

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

ModuleSweep& ModuleSweep::operator+=(const ModuleSweep& o) {
    modules += o.modules;
    annihilation_failures += o.annihilation_failures;
    invariance_failures += o.invariance_failures;
    rho_failures += o.rho_failures;
    return *this;
}

CensusContext make_context(TowerPtr tower, const UPoly& P) {
    CensusContext ctx;
    ctx.tower = std::move(tower);
    ctx.P = P;
    ctx.gammaT = residue_root(*ctx.tower, P);
    ctx.reps = iso_classes(*ctx.tower);

    const FieldTower& F = *ctx.tower;
    const std::uint64_t Q = F.order();
    const auto q = static_cast<std::uint64_t>(F.q());
    const Elem a = F.exp(q - 1), b = F.exp(q * q - 1);
    ctx.class_of.assign(Q * Q, UINT32_MAX);
    for (std::uint32_t k = 0; k < ctx.reps.size(); ++k) {
        Elem x = ctx.reps[k].g, y = ctx.reps[k].delta;
        do {
            ctx.class_of[x.code * Q + y.code] = k;
            x = F.mul(x, a);
            y = F.mul(y, b);
        } while (x != ctx.reps[k].g || y != ctx.reps[k].delta);
    }
    return ctx;
}

namespace {

UPoly constant_two(const FieldTower* F) { return UPoly::constant(F, F->times(FieldTower::one(), 2)); }

// a ≡ u·b (mod f) for some u ∈ F_q^*.
bool unit_multiple_mod(const UPoly& a, const UPoly& b, const UPoly& f) {
    const UPoly ra = a % f, rb = b % f;
    if (ra.is_zero() || rb.is_zero()) return ra.is_zero() && rb.is_zero();
    return monic(ra) == monic(rb) && ra.deg() == rb.deg() && ra.scale(ra.field()->inv(ra.lc())) == rb.scale(rb.field()->inv(rb.lc()));
}

}  // namespace

ClassRecord analyze_class(const CensusContext& ctx, const IsoClassRep& rep) {
    const FieldTower* F = ctx.tower.get();
    DrinfeldModule phi(ctx.tower, ctx.P, ctx.gammaT, rep.g, rep.delta);
    ClassRecord r;
    r.g = rep.g;
    r.delta = rep.delta;
    r.orbit_size = rep.orbit_size;
    r.automorphisms = rep.automorphisms;
    r.weight = Rational(F->q() - 1, static_cast<std::int64_t>(rep.automorphisms));
    r.height = phi.height();
    r.supersingular = r.height == 2;
    r.cp = char_poly(phi);
    r.annihilation_ok = annihilation_residual(phi, r.cp).is_zero();
    r.supersingular_by_trace = divides(ctx.P, r.cp.c);
    r.frobenius_power = phi.frobenius_power_in_A(2);
    r.chi = euler_poincare(r.cp);
    r.disc = discriminant(r.cp);
    r.imaginary = is_imaginary(r.disc);
    r.hasse_weil_ok = hasse_weil_ok(r.cp);
    r.min_poly_degree = static_cast<int>(minimal_poly_of_F(phi, r.cp).size()) - 1;
    r.inv = structure(phi);
    r.criteria = check_criteria(phi, r.inv, r.cp);

    const UPoly chi_raw = r.cp.value_at_one();
    const UPoly c_minus_2 = r.cp.c - constant_two(F);
    for (const auto& [rho, mult] : factor(r.chi)) {
        if (rho == ctx.P) continue;
        RhoCheck rc;
        rc.rho = rho;
        rc.right_division = rho_torsion_contained(phi, rho);
        rc.divides_i2 = divides(rho, r.inv.i2);
        if (divides(rho * rho, chi_raw) && divides(rho, c_minus_2)) rc.order_contained = order_contained(phi, rho, r.cp);
        r.rho_checks.push_back(std::move(rc));
    }

    const UPoly det = -(r.cp.c - UPoly::one(F)) - r.inv.i1 * r.inv.i2;
    r.probe_det_ok = unit_multiple_mod(det, r.cp.constant_term(), r.chi);
    r.probe_trace_ok = ((c_minus_2 - r.cp.c) % r.chi).is_zero();
    return r;
}

std::vector<ClassRecord> analyze_classes_serial(const CensusContext& ctx) {
    std::vector<ClassRecord> out;
    out.reserve(ctx.reps.size());
    for (const auto& rep : ctx.reps) out.push_back(analyze_class(ctx, rep));
    return out;
}

namespace {

// Runs body(i) for i in [0, count) on `jobs` threads; the first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(census_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

ModuleSweep sweep_delta(const CensusContext& ctx, const std::vector<ClassRecord>& classes, Elem delta) {
    const FieldTower& F = *ctx.tower;
    ModuleSweep s;
    for (Elem g : F.elements_lex()) {
        const ClassRecord& cls = classes[ctx.class_of[g.code * F.order() + delta.code]];
        DrinfeldModule phi(ctx.tower, ctx.P, ctx.gammaT, g, delta);
        ++s.modules;
        if (!annihilation_residual(phi, cls.cp).is_zero()) ++s.annihilation_failures;
        if (!(structure(phi) == cls.inv)) ++s.invariance_failures;
        for (const auto& rc : cls.rho_checks)
            if (rho_torsion_contained(phi, rc.rho) != rc.divides_i2) ++s.rho_failures;
    }
    return s;
}

std::vector<Elem> nonzero_elements(const FieldTower& F) {
    std::vector<Elem> v;
    for (Elem x : F.elements_lex())
        if (x.code != 0) v.push_back(x);
    return v;
}

}  // namespace

std::vector<ClassRecord> analyze_classes_parallel(const CensusContext& ctx, int jobs) {
    std::vector<ClassRecord> out(ctx.reps.size());
    parallel_for(ctx.reps.size(), jobs, [&](std::size_t i) { out[i] = analyze_class(ctx, ctx.reps[i]); });
    return out;
}

ModuleSweep sweep_modules_serial(const CensusContext& ctx, const std::vector<ClassRecord>& classes) {
    ModuleSweep total;
    for (Elem delta : nonzero_elements(*ctx.tower)) total += sweep_delta(ctx, classes, delta);
    return total;
}

ModuleSweep sweep_modules_parallel(const CensusContext& ctx, const std::vector<ClassRecord>& classes, int jobs) {
    const auto deltas = nonzero_elements(*ctx.tower);
    std::vector<ModuleSweep> partial(deltas.size());
    parallel_for(deltas.size(), jobs, [&](std::size_t i) { partial[i] = sweep_delta(ctx, classes, deltas[i]); });
    ModuleSweep total;
    for (const auto& p : partial) total += p;
    return total;
}

std::optional<Rational> closed_form_C0(int q, int d, int m) {
    const std::int64_t Q = q;
    if (d == 1 && m == 1) return Rational(1);
    // Both denominators vanish at q = 2.
    if (Q * (Q - 1) == 2) return std::nullopt;
    if (d == 2 && m == 1) return Rational(Q * (Q - 1) - 5, Q * (Q - 1) - 2);
    if (d == 1 && m == 2) return Rational((Q - 1) * Q - 4, (Q - 1) * Q - 2);
    return std::nullopt;
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::vector<FormulaCheck> closed_form_counts(int q, int d, int m) {
    const std::int64_t Q = q;
    const int n = d * m;
    std::vector<FormulaCheck> out;
    const std::int64_t total = n % 2 ? (Q - 1) * ipow(Q, n) : ipow(Q, n + 1) - ipow(Q, n) + Q * Q - Q;
    const std::int64_t ss = ipow(Q, std::gcd(2, n)) - 1;
    out.push_back({"isomorphism_classes_total", Rational(total), "", {}, {}, ""});
    out.push_back({"supersingular_classes", Rational(ss), "", {}, {}, ""});
    out.push_back({"ordinary_classes", Rational(total - ss), "", {}, {}, ""});

    FormulaCheck iso{"ordinary_isogeny_classes", {}, "", {}, {}, ""};
    if ((m - 2) * d < 0) {
        iso.expected_note = "formula_undefined: negative exponent";
    } else if (m % 2 == 1 && d % 2 == 1) {
        iso.expected = Rational((Q - 1) * (ipow(Q, floor_div(m * d, 2) + 1) - ipow(Q, floor_div((m - 2) * d, 2) + 1) + 1));
    } else {
        iso.expected = Rational(Q - 1) *
                       (Rational(Q - 1, 2) * Rational(ipow(Q, m * d / 2)) - Rational(ipow(Q, (m - 2) * d / 2)) + Rational(1));
        if (q % 2 == 0) iso.caveat = "q_even_caveat";
    }
    out.push_back(iso);
    if (d == 2 && m == 1) {
        FormulaCheck alt{"ordinary_isogeny_classes_in_text", Rational(Q - 1) * (Rational(Q - 1, 2) * Rational(Q) - Rational(1)),
                         "substitute value stated for this case", {}, {}, ""};
        if (q % 2 == 0) alt.caveat = "q_even_caveat";
        out.push_back(alt);
    }
    FormulaCheck c0{"C0", closed_form_C0(q, d, m), "", {}, {}, ""};
    if (!c0.expected)
        c0.expected_note = q == 2 && d * m == 2 ? "formula_undefined: zero denominator" : "no closed form stated";
    if (q % 2 == 0 && !(d == 1 && m == 1)) c0.caveat = "q_even_caveat";
    out.push_back(c0);
    FormulaCheck c{"C", d == 1 && m == 1 ? std::optional<Rational>(Rational(1)) : std::nullopt, "", {}, {}, ""};
    if (!c.expected) c.expected_note = "no closed form stated";
    out.push_back(c);
    return out;
}

namespace {

struct KeyLess {
    bool operator()(const CharPoly& a, const CharPoly& b) const {
        if (!(a.c == b.c)) return poly_less(a.c, b.c);
        return a.mu < b.mu;
    }
};

bool inv_less(const InvariantFactors& a, const InvariantFactors& b) {
    if (!(a.i1 == b.i1)) return poly_less(a.i1, b.i1);
    return poly_less(a.i2, b.i2);
}

void set_observed(std::vector<FormulaCheck>& fs, const std::string& name, std::optional<Rational> v) {
    for (auto& f : fs)
        if (f.name == name) {
            f.observed = v;
            if (f.expected && v) f.match = *f.expected == *v;
        }
}

void add_count_check(std::vector<FormulaCheck>& fs, std::string name, std::int64_t expected, std::int64_t observed,
                     std::string note, std::string caveat) {
    FormulaCheck f{std::move(name), Rational(expected), std::move(note), Rational(observed), expected == observed,
                   std::move(caveat)};
    fs.push_back(std::move(f));
}

}  // namespace

CensusReport run_census(TowerPtr tower, const UPoly& P, const CensusOptions& opt) {
    if (tower->order() > kMaxCensusOrder)
        throw ResourceLimitError("census needs |L| <= " + std::to_string(kMaxCensusOrder) + ", got " +
                                 std::to_string(tower->order()));
    const CensusContext ctx = make_context(tower, P);
    const FieldTower* F = ctx.tower.get();
    const int jobs = std::max(1, opt.jobs);

    CensusReport rep;
    rep.tower = ctx.tower;
    rep.p = F->p();
    rep.s = F->s();
    rep.q = F->q();
    rep.d = P.deg();
    rep.n = F->n();
    rep.m = rep.n / rep.d;
    rep.P = P;
    rep.gammaT = ctx.gammaT;
    rep.base_min_poly = F->base_min_poly();
    rep.top_min_poly = F->top_min_poly();
    rep.q_even_caveat = rep.q % 2 == 0;
    rep.modules = static_cast<std::uint64_t>(F->order()) * (F->order() - 1);

    rep.classes = jobs > 1 ? analyze_classes_parallel(ctx, jobs) : analyze_classes_serial(ctx);
    if (opt.sweep_modules)
        rep.sweep = jobs > 1 ? sweep_modules_parallel(ctx, rep.classes, jobs) : sweep_modules_serial(ctx, rep.classes);

    std::map<CharPoly, IsogenyRecord, KeyLess> groups;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        const ClassRecord& c = rep.classes[i];
        auto [it, inserted] = groups.try_emplace(c.cp);
        IsogenyRecord& g = it->second;
        if (inserted) {
            g.key = c.cp;
            g.ordinary = !c.supersingular;
        } else if (g.ordinary == c.supersingular) {
            throw TheoryViolation("isogenous modules with different heights");
        }
        g.members.push_back(i);
        g.W += c.weight;
        if (!c.inv.cyclic()) g.all_cyclic = false;
        if (c.supersingular) {
            ++rep.supersingular_classes;
        } else {
            ++rep.ordinary_classes;
            if (c.inv.cyclic()) ++rep.cyclic_ordinary_classes;
        }
    }
    for (auto& [key, g] : groups) {
        std::vector<std::pair<InvariantFactors, std::int64_t>> st;
        for (auto i : g.members) {
            const auto& inv = rep.classes[i].inv;
            auto it = std::find_if(st.begin(), st.end(), [&](const auto& e) { return e.first == inv; });
            if (it == st.end()) st.emplace_back(inv, 1);
            else ++it->second;
        }
        std::sort(st.begin(), st.end(), [](const auto& a, const auto& b) { return inv_less(a.first, b.first); });
        g.structures = std::move(st);
        if (g.ordinary) {
            const UPoly chi_raw = key.value_at_one();
            const UPoly c_minus_2 = key.c - constant_two(F);
            for (const auto& l : monic_square_divisors(chi_raw)) {
                if (!divides(l, c_minus_2)) continue;
                LevelRecord lv;
                lv.l = l;
                for (auto i : g.members) {
                    const ClassRecord& c = rep.classes[i];
                    if (divides(l, c.inv.i2)) {
                        lv.weighted_divisible += c.weight;
                        ++lv.count_divisible;
                    }
                    if (c.inv.i2 == l) {
                        lv.weighted_exact += c.weight;
                        ++lv.count_exact;
                    }
                }
                g.levels.push_back(std::move(lv));
            }
            ++rep.ordinary_isogeny;
            if (g.all_cyclic) ++rep.cyclic_ordinary_isogeny;
        } else {
            ++rep.supersingular_isogeny;
        }
        rep.isogeny.push_back(std::move(g));
    }

    const bool want_hurwitz = rep.q % 2 == 1 && (opt.hurwitz == HurwitzMode::On ||
                                                  (opt.hurwitz == HurwitzMode::Auto && rep.n <= 2));
    if (want_hurwitz) {
        rep.hurwitz_ran = true;
        auto task = [&](std::size_t k) {
            IsogenyRecord& g = rep.isogeny[k];
            if (!g.ordinary) return;
            const UPoly D = discriminant(g.key);
            if (!is_imaginary(D)) throw TheoryViolation("ordinary isogeny class with a real discriminant");
            g.hurwitz_disc = hurwitz_H(D);
            for (auto& lv : g.levels) lv.hurwitz = hurwitz_H(exact_div(D, lv.l * lv.l));
        };
        if (jobs > 1) parallel_for(rep.isogeny.size(), jobs, task);
        else for (std::size_t k = 0; k < rep.isogeny.size(); ++k) task(k);
    }

    if (rep.ordinary_classes > 0) {
        rep.stats.C = Rational(static_cast<std::int64_t>(rep.cyclic_ordinary_classes),
                               static_cast<std::int64_t>(rep.ordinary_classes));
        rep.stats.N = Rational(1) - *rep.stats.C;
    }
    if (rep.ordinary_isogeny > 0) {
        rep.stats.C0 = Rational(static_cast<std::int64_t>(rep.cyclic_ordinary_isogeny),
                                static_cast<std::int64_t>(rep.ordinary_isogeny));
        rep.stats.N0 = Rational(1) - *rep.stats.C0;
    }

    rep.formulas = closed_form_counts(rep.q, rep.d, rep.m);
    set_observed(rep.formulas, "isomorphism_classes_total", Rational(static_cast<std::int64_t>(rep.classes.size())));
    set_observed(rep.formulas, "supersingular_classes", Rational(static_cast<std::int64_t>(rep.supersingular_classes)));
    set_observed(rep.formulas, "ordinary_classes", Rational(static_cast<std::int64_t>(rep.ordinary_classes)));
    set_observed(rep.formulas, "ordinary_isogeny_classes", Rational(static_cast<std::int64_t>(rep.ordinary_isogeny)));
    set_observed(rep.formulas, "ordinary_isogeny_classes_in_text", Rational(static_cast<std::int64_t>(rep.ordinary_isogeny)));
    set_observed(rep.formulas, "C0", rep.stats.C0);
    set_observed(rep.formulas, "C", rep.stats.C);

    std::int64_t aut_ok = 0, w_ok = 0;
    for (const auto& c : rep.classes)
        if (!c.supersingular && c.automorphisms == static_cast<std::uint64_t>(rep.q - 1)) ++aut_ok;
    for (const auto& g : rep.isogeny)
        if (g.ordinary && g.W == Rational(static_cast<std::int64_t>(g.members.size()))) ++w_ok;
    add_count_check(rep.formulas, "ordinary_automorphisms_q_minus_1", static_cast<std::int64_t>(rep.ordinary_classes),
                    aut_ok, "ordinary classes with #Aut = q - 1", "");
    add_count_check(rep.formulas, "weight_equals_class_count", static_cast<std::int64_t>(rep.ordinary_isogeny), w_ok,
                    "ordinary isogeny classes with W equal to their iso-class count", "");
    if (rep.hurwitz_ran) {
        std::int64_t disc_ok = 0, levels = 0, lv_ok = 0, lv_exact_ok = 0, positive = 0;
        for (const auto& g : rep.isogeny) {
            if (!g.ordinary) continue;
            if (g.hurwitz_disc && g.hurwitz_disc->value == g.W) ++disc_ok;
            for (const auto& lv : g.levels) {
                ++levels;
                if (lv.hurwitz && lv.hurwitz->value == lv.weighted_divisible) ++lv_ok;
                if (lv.hurwitz && lv.hurwitz->value == lv.weighted_exact) ++lv_exact_ok;
                if (lv.count_exact >= 1) ++positive;
            }
        }
        add_count_check(rep.formulas, "hurwitz_discriminant_equals_W", static_cast<std::int64_t>(rep.ordinary_isogeny),
                        disc_ok, "ordinary isogeny classes with H(D) = W", "");
        add_count_check(rep.formulas, "hurwitz_level_equals_divisible_count", levels, lv_ok,
                        "levels l with H(D/l^2) = weighted count of members with l | i2", "");
        add_count_check(rep.formulas, "hurwitz_level_equals_exact_count", levels, lv_exact_ok,
                        "levels l with H(D/l^2) = weighted count of members with i2 = l", "");
        add_count_check(rep.formulas, "level_structure_occurs", levels, positive,
                        "levels l with at least one member of structure i2 = l", "");
    }
    return rep;
}

CensusReport run_census(int p, int s, int d, int m, const std::optional<std::string>& P_text, const CensusOptions& opt) {
    if (d < 1 || m < 1) throw ValidationError("d and m must be positive");
    const TowerPtr tower = FieldTower::build(p, s, d * m);
    UPoly P;
    if (P_text) {
        P = parse_upoly(tower.get(), *P_text);
        if (P.deg() != d)
            throw ValidationError("deg P = " + std::to_string(P.deg()) + " differs from d = " + std::to_string(d));
    } else {
        const auto irr = monic_irreducibles(tower.get(), d);
        P = irr.front();
    }
    return run_census(tower, P, opt);
}

std::vector<TrendRow> trend_probe(const std::vector<std::pair<int, int>>& ps_list, int d, int m, const CensusOptions& opt) {
    std::vector<TrendRow> rows;
    for (auto [p, s] : ps_list) {
        CensusOptions o = opt;
        o.hurwitz = HurwitzMode::Off;
        o.sweep_modules = false;
        const CensusReport r = run_census(p, s, d, m, std::nullopt, o);
        rows.push_back({r.q, r.stats.C, r.stats.C0, closed_form_C0(r.q, d, m)});
    }
    return rows;
}

}  // namespace drinfeld
