#include "drinfeld/ore.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

OrePoly::OrePoly(const FieldTower* F, std::vector<Elem> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

void OrePoly::trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

OrePoly OrePoly::monomial(const FieldTower* F, Elem c, int k) {
    if (c.code == 0) return zero(F);
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, FieldTower::zero());
    v.back() = c;
    return OrePoly(F, std::move(v));
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    const FieldTower* F = F_ ? F_ : o.F_;
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F->add(coeff(i), o.coeff(i));
    return OrePoly(F, std::move(v));
}

OrePoly OrePoly::operator-() const {
    OrePoly r = *this;
    for (auto& e : r.c_) e = F_->neg(e);
    return r;
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::operator*(const OrePoly& o) const {
    const FieldTower* F = F_ ? F_ : o.F_;
    if (c_.empty() || o.c_.empty()) return zero(F);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, FieldTower::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].code == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].code == 0) continue;
            v[i + j] = F->add(v[i + j], F->mul(c_[i], F->frob(o.c_[j], i)));
        }
    }
    return OrePoly(F, std::move(v));
}

OrePoly OrePoly::scale_left(Elem lambda) const {
    std::vector<Elem> v = c_;
    for (auto& e : v) e = F_->mul(lambda, e);
    return OrePoly(F_, std::move(v));
}

int OrePoly::height() const {
    if (c_.empty()) throw Error("height of the zero Ore polynomial");
    int k = 0;
    while (c_[static_cast<std::size_t>(k)].code == 0) ++k;
    return k;
}

Elem OrePoly::apply(Elem x) const {
    Elem acc = FieldTower::zero();
    Elem xk = x;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc = F_->add(acc, F_->mul(c_[k], xk));
        xk = F_->frob(xk, 1);
    }
    return acc;
}

Elem OrePoly::apply(Elem x, const FieldEmbedding& e) const {
    const FieldTower& T = *e.target();
    Elem acc = FieldTower::zero();
    Elem xk = x;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc = T.add(acc, T.mul(e(c_[k]), xk));
        xk = T.frob(xk, 1);
    }
    return acc;
}

OreDivMod right_divmod(const OrePoly& f, const OrePoly& g) {
    if (g.is_zero()) throw Error("Ore right division by zero");
    const FieldTower* F = g.field();
    std::vector<Elem> rem = f.coeffs();
    const int dg = g.deg();
    if (f.deg() < dg) return {OrePoly::zero(F), f};
    std::vector<Elem> quot(static_cast<std::size_t>(f.deg() - dg) + 1, FieldTower::zero());
    for (int top = f.deg(); top >= dg; --top) {
        const Elem lead = rem[static_cast<std::size_t>(top)];
        if (lead.code == 0) continue;
        const auto k = static_cast<std::size_t>(top - dg);
        // a·τ^k·g has leading coefficient a·lc(g)^{q^k}.
        const Elem a = F->div(lead, F->frob(g.lc(), k));
        quot[k] = a;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(dg); ++i)
            rem[k + i] = F->sub(rem[k + i], F->mul(a, F->frob(g.coeffs()[i], k)));
    }
    return {OrePoly(F, std::move(quot)), OrePoly(F, std::move(rem))};
}

bool right_divides(const OrePoly& g, const OrePoly& f) {
    if (g.is_zero()) return f.is_zero();
    return right_divmod(f, g).rem.is_zero();
}

OrePoly monic(const OrePoly& f) {
    if (f.is_zero()) return f;
    return f.scale_left(f.field()->inv(f.lc()));
}

OrePoly right_gcd(const OrePoly& f, const OrePoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("right gcd of two zero polynomials");
    OrePoly a = f, b = g;
    while (!b.is_zero()) {
        OrePoly r = right_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::string format_ore(const OrePoly& f) {
    if (f.is_zero()) return "0";
    const FieldTower& F = *f.field();
    std::ostringstream os;
    bool first = true;
    for (int k = f.deg(); k >= 0; --k) {
        const Elem c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c.code == 0) continue;
        if (!first) os << '+';
        first = false;
        os << format_elem(F, c);
        if (k >= 1) os << "*t";
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

}  // namespace drinfeld
