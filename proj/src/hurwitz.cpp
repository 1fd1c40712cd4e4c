#include "drinfeld/hurwitz.hpp"

#include "drinfeld/charpoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

// x + y·√D as the pair (x, y).
struct Quad {
    UPoly x, y;
};

Quad mul(const UPoly& D, const Quad& a, const Quad& b) {
    return {a.x * b.x + a.y * b.y * D, a.x * b.y + a.y * b.x};
}

struct Hnf {
    UPoly alpha, beta, gamma;
};

// Hermite basis (α, 0), (β, γ) of the A-lattice spanned by v; α, γ monic, deg β < deg α.
Hnf hermite(std::vector<Quad> v) {
    for (;;) {
        std::size_t p = v.size();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].y.is_zero() && (p == v.size() || v[k].y.deg() < v[p].y.deg())) p = k;
        if (p == v.size()) throw TheoryViolation("ideal lattice is not of full rank");
        bool done = true;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k == p || v[k].y.is_zero()) continue;
            const UPoly q = divmod(v[k].y, v[p].y).quot;
            v[k].x = v[k].x - q * v[p].x;
            v[k].y = v[k].y - q * v[p].y;
            if (!v[k].y.is_zero()) done = false;
        }
        if (!done) continue;
        const FieldTower* F = v[p].y.field();
        UPoly alpha = UPoly::zero(F);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k != p) alpha = gcd(alpha, v[k].x);
        if (alpha.is_zero()) throw TheoryViolation("ideal lattice is not of full rank");
        const Elem inv = F->inv(v[p].y.lc());
        return {alpha, v[p].x.scale(inv) % alpha, v[p].y.scale(inv)};
    }
}

std::vector<UPoly> bounded(const FieldTower* F, int d) {
    if (d < 0) return {UPoly::zero(F)};
    return polys_up_to(F, d);
}

struct Ideal {
    UPoly a, b;
};

bool equivalent(const UPoly& D, const Ideal& I, const Ideal& J) {
    const FieldTower* F = D.field();
    const UPoly one = UPoly::one(F), zero = UPoly::zero(F);
    const Quad gi[2] = {{I.a, zero}, {I.b, one}};
    const Quad gj[2] = {{J.a, zero}, {J.b, -one}};  // conjugate of J
    std::vector<Quad> gens;
    for (const auto& x : gi)
        for (const auto& y : gj) gens.push_back(mul(D, x, y));
    const Hnf h = hermite(std::move(gens));
    return is_principal(D, h.alpha, h.beta, h.gamma);
}

}  // namespace

bool is_principal(const UPoly& D, const UPoly& alpha, const UPoly& beta, const UPoly& gamma) {
    const FieldTower* F = D.field();
    const int e = alpha.deg() + gamma.deg();
    const UPoly target = monic(alpha * gamma);
    // D imaginary: deg(x² − D y²) = max(2 deg x, deg D + 2 deg y) with no cancellation.
    const int x_max = e / 2;
    const int y_max = e - D.deg() < 0 ? -1 : (e - D.deg()) / 2;
    const int t_max = y_max < 0 ? -1 : y_max - gamma.deg();
    for (const auto& t : bounded(F, t_max)) {
        const UPoly y = t * gamma;
        const UPoly r = (t * beta) % alpha;
        for (const auto& s : bounded(F, x_max - alpha.deg())) {
            const UPoly x = s * alpha + r;
            if (x.deg() > x_max || (x.is_zero() && y.is_zero())) continue;
            const UPoly N = x * x - D * y * y;
            if (N.deg() == e && monic(N) == target) return true;
        }
    }
    return false;
}

ClassNumber class_number(const UPoly& D) {
    const FieldTower* F = D.field();
    if (F->q() % 2 == 0) throw ValidationError("class numbers are implemented for odd q only");
    if (!is_imaginary(D)) throw ValidationError("discriminant " + format_upoly(D) + " is not imaginary");
    const int base = D.deg() / 2 + 1;
    const int top = 2 * base;

    std::vector<Ideal> reps;
    std::int64_t at_base = 0, ideals = 0;
    for (int da = 0; da <= top; ++da) {
        for (const auto& a : monic_polys(F, da)) {
            for (const auto& b : bounded(F, da - 1)) {
                const auto [q, r] = divmod(b * b - D, a);
                if (!r.is_zero()) continue;
                if (!gcd(gcd(a, b), q).is_one()) continue;
                ++ideals;
                const Ideal I{a, b};
                bool found = false;
                for (const auto& R : reps)
                    if (equivalent(D, I, R)) {
                        found = true;
                        break;
                    }
                if (!found) reps.push_back(I);
            }
        }
        if (da == base) at_base = static_cast<std::int64_t>(reps.size());
    }
    ClassNumber out;
    out.h = static_cast<std::int64_t>(reps.size());
    out.bound = top;
    out.stabilized = at_base == out.h;
    out.ideals = ideals;
    return out;
}

Hurwitz hurwitz_H(const UPoly& D) {
    const FieldTower* F = D.field();
    if (F->q() % 2 == 0) throw ValidationError("Hurwitz class numbers are implemented for odd q only");
    if (!is_imaginary(D)) throw ValidationError("discriminant " + format_upoly(D) + " is not imaginary");
    const std::int64_t q = F->q();
    Hurwitz H;
    for (const auto& l : monic_square_divisors(D)) {
        const UPoly Dl = exact_div(D, l * l);
        HurwitzTerm term{l, class_number(Dl), Dl.deg() == 0 ? q * q - 1 : q - 1};
        if (!term.h.stabilized)
            throw ResourceLimitError("class count for " + format_upoly(Dl) + " did not stabilize at bound " +
                                     std::to_string(term.h.bound));
        H.value += Rational(term.h.h * (q - 1), term.units);
        H.terms.push_back(std::move(term));
    }
    return H;
}

}  // namespace drinfeld
