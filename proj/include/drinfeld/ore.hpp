#pragma once

// The twisted polynomial ring L{τ}, τ·λ = λ^q·τ.
//
// Coefficients are stored low to high by τ-degree with no trailing zero. An
// Ore polynomial f = Σ l_k τ^k acts on any field containing L as the additive
// polynomial x ↦ Σ l_k x^{q^k}.

#include <string>
#include <vector>

#include "drinfeld/degree.hpp"
#include "drinfeld/field.hpp"

namespace drinfeld {

class OrePoly {
public:
    OrePoly() = default;
    OrePoly(const FieldTower* F, std::vector<Elem> coeffs);

    static OrePoly zero(const FieldTower* F) { return OrePoly(F, {}); }
    static OrePoly constant(const FieldTower* F, Elem c) { return OrePoly(F, {c}); }
    static OrePoly one(const FieldTower* F) { return constant(F, FieldTower::one()); }
    /// c·τ^k.
    static OrePoly monomial(const FieldTower* F, Elem c, int k);
    static OrePoly tau_power(const FieldTower* F, int k) { return monomial(F, FieldTower::one(), k); }

    [[nodiscard]] const FieldTower* field() const { return F_; }
    [[nodiscard]] const std::vector<Elem>& coeffs() const { return c_; }
    [[nodiscard]] Degree degree() const { return Degree::of_size(c_.size()); }
    [[nodiscard]] int deg() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldTower::zero(); }
    [[nodiscard]] Elem lc() const { return c_.empty() ? FieldTower::zero() : c_.back(); }

    [[nodiscard]] OrePoly operator+(const OrePoly& o) const;
    [[nodiscard]] OrePoly operator-(const OrePoly& o) const;
    [[nodiscard]] OrePoly operator-() const;
    /// Twisted product: (a τ^i)(b τ^j) = a b^{q^i} τ^{i+j}.
    [[nodiscard]] OrePoly operator*(const OrePoly& o) const;
    /// λ·f (left multiplication by a constant).
    [[nodiscard]] OrePoly scale_left(Elem lambda) const;

    /// Least k with a nonzero coefficient of τ^k. Throws Error on zero.
    [[nodiscard]] int height() const;
    /// Value of the additive polynomial at x ∈ L.
    [[nodiscard]] Elem apply(Elem x) const;
    /// Value at x in a larger field, coefficients transported through `e`.
    [[nodiscard]] Elem apply(Elem x, const FieldEmbedding& e) const;

    bool operator==(const OrePoly& o) const { return c_ == o.c_; }

private:
    void trim();

    const FieldTower* F_ = nullptr;
    std::vector<Elem> c_;
};

struct OreDivMod {
    OrePoly quot;
    OrePoly rem;
};

/// The unique (quot, rem) with f = quot·g + rem and deg rem < deg g. Throws Error if g = 0.
OreDivMod right_divmod(const OrePoly& f, const OrePoly& g);
/// True when g right-divides f (f = h·g).
bool right_divides(const OrePoly& g, const OrePoly& f);
/// λ·f with λ = lc(f)^{-1}; zero stays zero.
OrePoly monic(const OrePoly& f);
/// Monic generator of L{τ}f + L{τ}g. Throws Error when both are zero.
OrePoly right_gcd(const OrePoly& f, const OrePoly& g);

/// "a_k*t^k+...+a_0" with bracketed L-elements.
std::string format_ore(const OrePoly& f);

}  // namespace drinfeld
