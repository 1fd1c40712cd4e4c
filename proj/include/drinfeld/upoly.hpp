#pragma once

// Dense univariate polynomials over F_q: the ring A = F_q[T].
//
// Coefficients are Elem codes below q taken from a FieldTower, which must
// outlive every polynomial referring to it. The coefficient vector never has
// a trailing zero, so the zero polynomial is the empty vector.

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "drinfeld/degree.hpp"
#include "drinfeld/field.hpp"

namespace drinfeld {

class UPoly {
public:
    UPoly() = default;
    /// Trims trailing zeros. Throws ValidationError if a coefficient is outside F_q.
    UPoly(const FieldTower* F, std::vector<Elem> coeffs);

    static UPoly zero(const FieldTower* F) { return UPoly(F, {}); }
    static UPoly constant(const FieldTower* F, Elem c) { return UPoly(F, {c}); }
    static UPoly one(const FieldTower* F) { return constant(F, FieldTower::one()); }
    /// c·T^k.
    static UPoly monomial(const FieldTower* F, Elem c, int k);
    static UPoly T(const FieldTower* F) { return monomial(F, FieldTower::one(), 1); }
    /// Coefficients as F_q integer encodings, low to high.
    static UPoly from_ints(const FieldTower* F, const std::vector<int>& c);

    [[nodiscard]] const FieldTower* field() const { return F_; }
    [[nodiscard]] const std::vector<Elem>& coeffs() const { return c_; }
    [[nodiscard]] Degree degree() const { return Degree::of_size(c_.size()); }
    /// Degree as an int with -1 standing for the zero polynomial.
    [[nodiscard]] int deg() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == FieldTower::one(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == FieldTower::one(); }
    [[nodiscard]] Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldTower::zero(); }
    /// Leading coefficient; zero for the zero polynomial.
    [[nodiscard]] Elem lc() const { return c_.empty() ? FieldTower::zero() : c_.back(); }

    [[nodiscard]] UPoly operator+(const UPoly& o) const;
    [[nodiscard]] UPoly operator-(const UPoly& o) const;
    [[nodiscard]] UPoly operator-() const;
    [[nodiscard]] UPoly operator*(const UPoly& o) const;
    [[nodiscard]] UPoly scale(Elem a) const;
    /// f(x) for x in L (Horner).
    [[nodiscard]] Elem eval(Elem x) const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

private:
    void trim();

    const FieldTower* F_ = nullptr;
    std::vector<Elem> c_;
};

struct UDivMod {
    UPoly quot;
    UPoly rem;
};

/// Euclidean division; throws Error when g is zero.
UDivMod divmod(const UPoly& f, const UPoly& g);
UPoly operator%(const UPoly& f, const UPoly& g);
/// Monic multiple of f; zero stays zero.
UPoly monic(const UPoly& f);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& f, const UPoly& g);
/// True when a divides b (0 divides only 0).
bool divides(const UPoly& a, const UPoly& b);
/// Exact quotient b / a; throws Error when a does not divide b.
UPoly exact_div(const UPoly& b, const UPoly& a);
UPoly pow(const UPoly& f, unsigned k);

/// Order used wherever the library enumerates polynomials: degree first,
/// then coefficient vectors compared from the constant term up (codes as integers).
bool poly_less(const UPoly& a, const UPoly& b);

/// All monic polynomials of degree exactly d, in poly_less order.
std::vector<UPoly> monic_polys(const FieldTower* F, int d);
/// Every polynomial of degree ≤ d (including zero), in poly_less order.
std::vector<UPoly> polys_up_to(const FieldTower* F, int d);
bool is_irreducible(const UPoly& f);
/// Monic irreducibles of degree d in poly_less order.
std::vector<UPoly> monic_irreducibles(const FieldTower* F, int d);
/// Gauss necklace count of monic irreducibles of degree d over F_q.
long long necklace_count(long long q, int d);
/// Distinct monic irreducible factors with multiplicities, in poly_less order.
std::vector<std::pair<UPoly, int>> factor(const UPoly& f);
/// Monic l with l² | f, in poly_less order (always contains 1 for f ≠ 0).
std::vector<UPoly> monic_square_divisors(const UPoly& f);

std::ostream& operator<<(std::ostream& os, const UPoly& f);

/// A nonzero ideal of A, stored through its monic generator.
class MonicIdeal {
public:
    /// Throws ValidationError on the zero polynomial.
    explicit MonicIdeal(const UPoly& generator);
    static MonicIdeal unit(const FieldTower* F) { return MonicIdeal(UPoly::one(F)); }

    [[nodiscard]] const UPoly& generator() const { return gen_; }
    [[nodiscard]] bool is_unit() const { return gen_.is_one(); }
    [[nodiscard]] int degree() const { return gen_.deg(); }
    [[nodiscard]] MonicIdeal operator*(const MonicIdeal& o) const { return MonicIdeal(gen_ * o.gen_); }
    /// I ⊇ J, i.e. the generator of I divides that of J.
    [[nodiscard]] bool contains(const MonicIdeal& J) const { return divides(gen_, J.gen_); }
    /// I + J.
    [[nodiscard]] MonicIdeal sum(const MonicIdeal& o) const { return MonicIdeal(gcd(gen_, o.gen_)); }
    bool operator==(const MonicIdeal& o) const { return gen_ == o.gen_; }

private:
    UPoly gen_;
};

}  // namespace drinfeld
