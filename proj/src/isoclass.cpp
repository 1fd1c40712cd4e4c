#include "drinfeld/isoclass.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

bool pair_less(const FieldTower& F, Elem g1, Elem d1, Elem g2, Elem d2) {
    if (g1 != g2) return F.lex_less(g1, g2);
    return F.lex_less(d1, d2);
}

std::pair<Elem, Elem> twist(const FieldTower& F, Elem g, Elem delta, Elem u) {
    const auto q = static_cast<std::uint64_t>(F.q());
    return {F.mul(F.pow(u, q - 1), g), F.mul(F.pow(u, q * q - 1), delta)};
}

std::vector<IsoClassRep> iso_classes(const FieldTower& F) {
    const std::uint64_t Q = F.order();
    const std::uint64_t units = Q - 1;
    const auto q = static_cast<std::uint64_t>(F.q());
    const Elem a = F.exp(q - 1);          // image of the generator on g
    const Elem b = F.exp(q * q - 1);      // image of the generator on Δ
    std::vector<bool> seen(Q * Q, false);
    std::vector<IsoClassRep> out;

    // Pairs are visited in pair_less order, so the first unseen pair of an orbit is its minimum.
    for (Elem g : F.elements_lex()) {
        for (Elem delta : F.elements_lex()) {
            if (delta.code == 0) continue;
            if (seen[g.code * Q + delta.code]) continue;
            std::uint64_t size = 0;
            Elem x = g, y = delta;
            do {
                seen[x.code * Q + y.code] = true;
                ++size;
                x = F.mul(x, a);
                y = F.mul(y, b);
            } while (x != g || y != delta);
            if (units % size != 0) throw TheoryViolation("orbit size does not divide |L^*|");
            out.push_back({g, delta, size, units / size});
        }
    }
    return out;
}

}  // namespace drinfeld
