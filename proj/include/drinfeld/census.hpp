#pragma once

// Exhaustive census of rank-2 modules over L for a fixed characteristic P.
//
// Iso-classes are twist orbits on L × L^*. Each class representative is
// analysed once (char poly, height, structure, criteria, ρ-containment); the
// analysis kernel exists as a serial reference loop and an OpenMP loop that
// writes results by slot, so both produce identical vectors. A second sweep
// revisits every individual module, partitioned by Δ, and checks that the
// annihilation identity and the structure agree with its class representative.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/charpoly.hpp"
#include "drinfeld/hurwitz.hpp"
#include "drinfeld/isoclass.hpp"
#include "drinfeld/structure.hpp"

namespace drinfeld {

/// Largest |L| a census accepts; the class table has |L|² slots.
inline constexpr std::uint64_t kMaxCensusOrder = 1024;

enum class HurwitzMode { Auto, On, Off };

struct CensusOptions {
    /// Worker threads for the analysis kernels; 1 selects the serial reference loops.
    int jobs = 1;
    /// Auto runs class-number checks for odd q and n ≤ 2.
    HurwitzMode hurwitz = HurwitzMode::Auto;
    /// Revisit every module, not only class representatives.
    bool sweep_modules = true;
};

struct RhoCheck {
    UPoly rho;
    bool right_division = false;  // Φ_ρ right-divides τ^n − 1
    bool divides_i2 = false;
    std::optional<bool> order_contained;  // set when ρ² | P_Φ(1) and ρ | c − 2
    [[nodiscard]] bool consistent() const {
        return right_division == divides_i2 && (!order_contained || *order_contained == right_division);
    }
};

struct ClassRecord {
    Elem g{}, delta{};
    std::uint64_t orbit_size = 0;
    std::uint64_t automorphisms = 0;
    Rational weight{0};  // (q − 1)/#Aut
    int height = 0;
    bool supersingular = false;
    bool supersingular_by_trace = false;  // P | c
    std::optional<int> frobenius_power;   // least k ≤ 2 with τ^{nk} ∈ Φ(A)
    CharPoly cp;
    UPoly chi, disc;
    bool imaginary = false;
    bool hasse_weil_ok = false;
    bool annihilation_ok = false;
    int min_poly_degree = 0;
    InvariantFactors inv;
    CriteriaReport criteria;
    std::vector<RhoCheck> rho_checks;
    // Determinant and trace of [[c−1, i1], [i2, −1]] modulo χ, against μP^m (up to a unit) and c.
    bool probe_det_ok = false;
    bool probe_trace_ok = false;
};

struct LevelRecord {
    UPoly l;  // monic, l² | P_Φ(1), l | c − 2
    Rational weighted_divisible{0};  // Σ Weigh over members with l | i2
    Rational weighted_exact{0};      // Σ Weigh over members with i2 = l
    std::int64_t count_divisible = 0;
    std::int64_t count_exact = 0;
    std::optional<Hurwitz> hurwitz;  // H(D / l²)
};

struct IsogenyRecord {
    CharPoly key;
    bool ordinary = false;
    std::vector<std::size_t> members;  // indices into CensusReport::classes
    Rational W{0};
    bool all_cyclic = true;
    /// Occurring (i1, i2) with multiplicity.
    std::vector<std::pair<InvariantFactors, std::int64_t>> structures;
    std::vector<LevelRecord> levels;
    std::optional<Hurwitz> hurwitz_disc;  // H(D), compared with W
};

struct ModuleSweep {
    std::uint64_t modules = 0;
    std::uint64_t annihilation_failures = 0;
    std::uint64_t invariance_failures = 0;
    std::uint64_t rho_failures = 0;
    ModuleSweep& operator+=(const ModuleSweep& o);
    bool operator==(const ModuleSweep& o) const = default;
};

struct FormulaCheck {
    std::string name;
    std::optional<Rational> expected;  // closed form; empty when undefined
    std::string expected_note;         // e.g. "formula_undefined"
    std::optional<Rational> observed;
    std::optional<bool> match;
    std::string caveat;
};

struct Statistics {
    std::optional<Rational> C, C0, N, N0;
};

struct CensusReport {
    int p = 0, s = 0, q = 0, d = 0, m = 0, n = 0;
    UPoly P;
    Elem gammaT{};
    std::vector<int> base_min_poly, top_min_poly;
    bool q_even_caveat = false;
    bool hurwitz_ran = false;

    std::vector<ClassRecord> classes;
    std::vector<IsogenyRecord> isogeny;
    ModuleSweep sweep;
    std::uint64_t modules = 0;
    std::uint64_t ordinary_classes = 0, supersingular_classes = 0, cyclic_ordinary_classes = 0;
    std::uint64_t ordinary_isogeny = 0, supersingular_isogeny = 0, cyclic_ordinary_isogeny = 0;
    Statistics stats;
    std::vector<FormulaCheck> formulas;

    TowerPtr tower;  // keeps P and every record's polynomials valid
};

/// Everything a census kernel needs; immutable and shared by all workers.
struct CensusContext {
    TowerPtr tower;
    UPoly P;
    Elem gammaT{};
    std::vector<IsoClassRep> reps;
    std::vector<std::uint32_t> class_of;  // pair index g·|L| + Δ → class
};

CensusContext make_context(TowerPtr tower, const UPoly& P);

ClassRecord analyze_class(const CensusContext& ctx, const IsoClassRep& rep);
/// Reference loop.
std::vector<ClassRecord> analyze_classes_serial(const CensusContext& ctx);
/// OpenMP loop with `jobs` threads; identical output to the serial loop.
std::vector<ClassRecord> analyze_classes_parallel(const CensusContext& ctx, int jobs);

ModuleSweep sweep_modules_serial(const CensusContext& ctx, const std::vector<ClassRecord>& classes);
/// Partitioned by Δ, partial sweeps merged by addition.
ModuleSweep sweep_modules_parallel(const CensusContext& ctx, const std::vector<ClassRecord>& classes, int jobs);

CensusReport run_census(TowerPtr tower, const UPoly& P, const CensusOptions& opt);
/// Builds the tower for n = d·m and takes P as given, or the first monic irreducible of degree d.
CensusReport run_census(int p, int s, int d, int m, const std::optional<std::string>& P_text,
                        const CensusOptions& opt);

/// Closed-form counts for (q, d, m); `observed` left empty.
std::vector<FormulaCheck> closed_form_counts(int q, int d, int m);
/// Closed forms for the proportions; empty when none is stated for (d, m).
std::optional<Rational> closed_form_C0(int q, int d, int m);

struct TrendRow {
    int q = 0;
    std::optional<Rational> C, C0;
    std::optional<Rational> C0_closed_form;
};

/// C and C₀ across q for fixed (d, m); report only.
std::vector<TrendRow> trend_probe(const std::vector<std::pair<int, int>>& ps_list, int d, int m,
                                  const CensusOptions& opt);

}  // namespace drinfeld
