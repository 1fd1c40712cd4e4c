#include "drinfeld/report.hpp"

#include <sstream>

#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

std::string fmt(const UPoly& f) { return format_upoly(f); }

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json opt_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : Json(nullptr); }

Json inv_json(const InvariantFactors& inv) {
    Json j;
    j["i1"] = fmt(inv.i1);
    j["i2"] = fmt(inv.i2);
    j["cyclic"] = inv.cyclic();
    return j;
}

Json criteria_json(const CriteriaReport& cr) {
    Json j;
    j["i2_divides_i1"] = cr.i2_divides_i1;
    j["product_is_chi"] = cr.product_is_chi;
    j["i2_divides_c_minus_2"] = cr.i2_divides_c_minus_2;
    j["i_sq_divides_chi"] = cr.i_sq_divides_chi;
    j["all_ok"] = cr.all_ok();
    return j;
}

Json hurwitz_json(const Hurwitz& h) {
    Json j;
    j["value"] = rational_json(h.value);
    j["stabilized"] = h.stabilized();
    Json terms = Json::array();
    for (const auto& t : h.terms) {
        Json tj;
        tj["l"] = fmt(t.l);
        tj["h"] = t.h.h;
        tj["units"] = t.units;
        tj["bound"] = t.h.bound;
        tj["stabilized"] = t.h.stabilized;
        tj["ideals"] = t.h.ideals;
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json class_json(const FieldTower& F, const ClassRecord& c) {
    Json j;
    j["g"] = format_elem(F, c.g);
    j["delta"] = format_elem(F, c.delta);
    j["orbit_size"] = c.orbit_size;
    j["automorphisms"] = c.automorphisms;
    j["weight"] = rational_json(c.weight);
    j["height"] = c.height;
    j["supersingular"] = c.supersingular;
    j["supersingular_by_trace"] = c.supersingular_by_trace;
    j["frobenius_power_in_A"] = c.frobenius_power ? Json(*c.frobenius_power) : Json(nullptr);
    j["c"] = fmt(c.cp.c);
    j["mu"] = format_elem(F, c.cp.mu);
    j["chi"] = fmt(c.chi);
    j["disc"] = fmt(c.disc);
    j["imaginary"] = c.imaginary;
    j["hasse_weil_ok"] = c.hasse_weil_ok;
    j["annihilation_ok"] = c.annihilation_ok;
    j["minimal_poly_degree"] = c.min_poly_degree;
    j["structure"] = inv_json(c.inv);
    j["criteria"] = criteria_json(c.criteria);
    Json rho = Json::array();
    for (const auto& r : c.rho_checks) {
        Json rj;
        rj["rho"] = fmt(r.rho);
        rj["right_division"] = r.right_division;
        rj["divides_i2"] = r.divides_i2;
        rj["order_contained"] = r.order_contained ? Json(*r.order_contained) : Json(nullptr);
        rj["consistent"] = r.consistent();
        rho.push_back(std::move(rj));
    }
    j["rho_checks"] = std::move(rho);
    j["probe"] = {{"det_ok", c.probe_det_ok}, {"trace_ok", c.probe_trace_ok}};
    return j;
}

Json isogeny_json(const FieldTower& F, const IsogenyRecord& g) {
    Json j;
    j["c"] = fmt(g.key.c);
    j["mu"] = format_elem(F, g.key.mu);
    j["ordinary"] = g.ordinary;
    j["members"] = g.members;
    j["W"] = rational_json(g.W);
    j["all_cyclic"] = g.all_cyclic;
    Json st = Json::array();
    for (const auto& [inv, count] : g.structures) {
        Json sj = inv_json(inv);
        sj["count"] = count;
        st.push_back(std::move(sj));
    }
    j["structures"] = std::move(st);
    Json lv = Json::array();
    for (const auto& l : g.levels) {
        Json lj;
        lj["l"] = fmt(l.l);
        lj["weighted_divisible"] = rational_json(l.weighted_divisible);
        lj["weighted_exact"] = rational_json(l.weighted_exact);
        lj["count_divisible"] = l.count_divisible;
        lj["count_exact"] = l.count_exact;
        lj["hurwitz"] = l.hurwitz ? hurwitz_json(*l.hurwitz) : Json(nullptr);
        lv.push_back(std::move(lj));
    }
    j["levels"] = std::move(lv);
    j["hurwitz_disc"] = g.hurwitz_disc ? hurwitz_json(*g.hurwitz_disc) : Json(nullptr);
    return j;
}

}  // namespace

Json rational_json(const Rational& r) {
    Json j;
    j["num"] = std::to_string(r.numerator());
    j["den"] = std::to_string(r.denominator());
    return j;
}

Json charpoly_json(const DrinfeldModule& phi, const CharPoly& cp) {
    const FieldTower& F = *phi.field();
    Json j;
    j["c"] = fmt(cp.c);
    j["mu"] = format_elem(F, cp.mu);
    j["P"] = fmt(cp.P);
    j["m"] = cp.m;
    j["disc"] = fmt(discriminant(cp));
    j["chi"] = fmt(euler_poincare(cp));
    const int h = phi.height();
    j["ordinary"] = h == 1;
    j["supersingular"] = h == 2;
    j["height"] = h;
    j["hasse_weil_ok"] = hasse_weil_ok(cp);
    j["minimal_poly_degree"] = static_cast<int>(minimal_poly_of_F(phi, cp).size()) - 1;
    if (F.q() % 2 == 0) j["q_even_caveat"] = true;
    return j;
}

Json structure_json(const InvariantFactors& inv, const CriteriaReport& cr) {
    Json j = inv_json(inv);
    j["criteria"] = criteria_json(cr);
    return j;
}

Json realize_json(const FieldTower& F, const UPoly& i1, const UPoly& i2, const RealizeResult& r) {
    Json j;
    j["i1"] = fmt(i1);
    j["i2"] = fmt(i2);
    j["realized"] = r.realized();
    if (r.realized()) {
        j["g"] = format_elem(F, r.witness->g());
        j["delta"] = format_elem(F, r.witness->delta());
        j["c"] = fmt(r.isogeny_class->c);
        j["mu"] = format_elem(F, r.isogeny_class->mu);
    } else {
        j["reason"] = to_string(r.reason);
        j["detail"] = r.detail;
    }
    return j;
}

Json census_json(const CensusReport& r) {
    const FieldTower& F = *r.tower;
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["params"] = {{"p", r.p}, {"s", r.s}, {"q", r.q}, {"d", r.d}, {"m", r.m}, {"n", r.n}, {"P", fmt(r.P)},
                   {"gammaT", format_elem(F, r.gammaT)}, {"base_min_poly", r.base_min_poly},
                   {"top_min_poly", r.top_min_poly}};
    j["q_even_caveat"] = r.q_even_caveat;
    j["hurwitz_ran"] = r.hurwitz_ran;
    j["totals"] = {{"modules", r.modules},
                   {"iso_classes", r.classes.size()},
                   {"ordinary_classes", r.ordinary_classes},
                   {"supersingular_classes", r.supersingular_classes},
                   {"cyclic_ordinary_classes", r.cyclic_ordinary_classes},
                   {"isogeny_classes", r.isogeny.size()},
                   {"ordinary_isogeny_classes", r.ordinary_isogeny},
                   {"supersingular_isogeny_classes", r.supersingular_isogeny},
                   {"cyclic_ordinary_isogeny_classes", r.cyclic_ordinary_isogeny}};
    j["sweep"] = {{"modules", r.sweep.modules},
                  {"annihilation_failures", r.sweep.annihilation_failures},
                  {"invariance_failures", r.sweep.invariance_failures},
                  {"rho_failures", r.sweep.rho_failures}};
    j["statistics"] = {{"C", opt_rational(r.stats.C)},
                       {"C0", opt_rational(r.stats.C0)},
                       {"N", opt_rational(r.stats.N)},
                       {"N0", opt_rational(r.stats.N0)}};
    Json fs = Json::array();
    for (const auto& f : r.formulas) {
        Json fj;
        fj["name"] = f.name;
        fj["expected"] = opt_rational(f.expected);
        fj["expected_note"] = f.expected_note;
        fj["observed"] = opt_rational(f.observed);
        fj["match"] = f.match ? Json(*f.match) : Json(nullptr);
        fj["caveat"] = f.caveat;
        fs.push_back(std::move(fj));
    }
    j["formula_comparison"] = std::move(fs);
    Json iso = Json::array();
    for (const auto& g : r.isogeny) iso.push_back(isogeny_json(F, g));
    j["isogeny_classes"] = std::move(iso);
    Json cls = Json::array();
    for (const auto& c : r.classes) cls.push_back(class_json(F, c));
    j["iso_classes"] = std::move(cls);
    return j;
}

Json trend_json(const std::vector<TrendRow>& rows, int d, int m) {
    Json j;
    j["d"] = d;
    j["m"] = m;
    Json arr = Json::array();
    for (const auto& row : rows)
        arr.push_back({{"q", row.q}, {"C", opt_rational(row.C)}, {"C0", opt_rational(row.C0)},
                       {"C0_closed_form", opt_rational(row.C0_closed_form)}});
    j["rows"] = std::move(arr);
    return j;
}

std::string census_csv(const CensusReport& r) {
    const FieldTower& F = *r.tower;
    std::ostringstream os;
    os << "g,delta,orbit_size,automorphisms,weight,height,supersingular,c,mu,chi,disc,i1,i2,cyclic,criteria_ok\n";
    for (const auto& c : r.classes) {
        os << '"' << format_elem(F, c.g) << "\",\"" << format_elem(F, c.delta) << "\"," << c.orbit_size << ','
           << c.automorphisms << ',' << rational_text(c.weight) << ',' << c.height << ','
           << (c.supersingular ? "true" : "false") << ',' << fmt(c.cp.c) << ",\"" << format_elem(F, c.cp.mu) << "\","
           << fmt(c.chi) << ',' << fmt(c.disc) << ',' << fmt(c.inv.i1) << ',' << fmt(c.inv.i2) << ','
           << (c.inv.cyclic() ? "true" : "false") << ',' << (c.criteria.all_ok() ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string census_text(const CensusReport& r) {
    std::ostringstream os;
    os << "census q=" << r.q << " d=" << r.d << " m=" << r.m << " P=" << fmt(r.P) << '\n';
    os << "  iso-classes " << r.classes.size() << " (ordinary " << r.ordinary_classes << ", supersingular "
       << r.supersingular_classes << ", cyclic ordinary " << r.cyclic_ordinary_classes << ")\n";
    os << "  isogeny classes " << r.isogeny.size() << " (ordinary " << r.ordinary_isogeny << ", cyclic ordinary "
       << r.cyclic_ordinary_isogeny << ")\n";
    auto stat = [&](const char* name, const std::optional<Rational>& v) {
        os << "  " << name << " = " << (v ? rational_text(*v) : std::string("undefined")) << '\n';
    };
    stat("C", r.stats.C);
    stat("C0", r.stats.C0);
    stat("N", r.stats.N);
    stat("N0", r.stats.N0);
    for (const auto& f : r.formulas) {
        os << "  " << f.name << ": expected " << (f.expected ? rational_text(*f.expected) : f.expected_note)
           << ", observed " << (f.observed ? rational_text(*f.observed) : std::string("-"));
        if (f.match) os << (*f.match ? "  [match]" : "  [MISMATCH]");
        if (!f.caveat.empty()) os << "  (" << f.caveat << ')';
        os << '\n';
    }
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace drinfeld
