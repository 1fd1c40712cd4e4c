#pragma once

// Class numbers of imaginary quadratic A-orders O_D = A[√D] (q odd) by
// explicit ideal enumeration, and the weighted Hurwitz class number
//   H(D) = Σ_{monic l, l² | D} h(D/l²) · (q−1)/#O_{D/l²}^*.

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "drinfeld/upoly.hpp"

namespace drinfeld {

using Rational = boost::rational<std::int64_t>;

struct ClassNumber {
    std::int64_t h = 0;
    /// deg a bound of the enumeration that produced h.
    int bound = 0;
    /// Class count at the base bound and at twice the base bound agree.
    bool stabilized = false;
    /// Invertible primitive ideals examined at the largest bound.
    std::int64_t ideals = 0;
};

/// Picard number of A[√D]. Ideals (a, b + √D) with a monic, deg b < deg a,
/// a | b² − D and gcd(a, b, (b² − D)/a) = 1 are enumerated for deg a ≤ B and
/// deg a ≤ 2B, B = ⌊deg D / 2⌋ + 1; I ~ J iff I·J̄ has a generator, found by a
/// degree-bounded search. Throws ValidationError on even q or non-imaginary D.
ClassNumber class_number(const UPoly& D);

/// True iff the lattice ideal with HNF basis (α, 0), (β, γ) of A[√D] is principal.
bool is_principal(const UPoly& D, const UPoly& alpha, const UPoly& beta, const UPoly& gamma);

struct HurwitzTerm {
    UPoly l;
    ClassNumber h;
    std::int64_t units = 0;  // #O^*
};

struct Hurwitz {
    Rational value{0};
    std::vector<HurwitzTerm> terms;
    [[nodiscard]] bool stabilized() const {
        for (const auto& t : terms)
            if (!t.h.stabilized) return false;
        return true;
    }
};

/// Throws ValidationError (even q, non-imaginary D) or ResourceLimitError
/// when some class count does not stabilize.
Hurwitz hurwitz_H(const UPoly& D);

}  // namespace drinfeld
