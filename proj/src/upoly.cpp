#include "drinfeld/upoly.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

UPoly::UPoly(const FieldTower* F, std::vector<Elem> coeffs) : F_(F), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (!F_->in_base_field(e))
            throw ValidationError("polynomial coefficient outside F_q");
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

UPoly UPoly::monomial(const FieldTower* F, Elem c, int k) {
    if (c.code == 0) return zero(F);
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, FieldTower::zero());
    v.back() = c;
    return UPoly(F, std::move(v));
}

UPoly UPoly::from_ints(const FieldTower* F, const std::vector<int>& c) {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (int x : c) v.push_back(F->base_elem(x));
    return UPoly(F, std::move(v));
}

UPoly UPoly::operator+(const UPoly& o) const {
    const FieldTower* F = F_ ? F_ : o.F_;
    UPoly r;
    r.F_ = F;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& e : r.c_) e = F_->neg(e);
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    const FieldTower* F = F_ ? F_ : o.F_;
    UPoly r;
    r.F_ = F;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldTower::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].code == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F->add(r.c_[i + j], F->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

UPoly UPoly::scale(Elem a) const {
    UPoly r = *this;
    for (auto& e : r.c_) e = F_->mul(e, a);
    r.trim();
    return r;
}

Elem UPoly::eval(Elem x) const {
    Elem acc = FieldTower::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
    return acc;
}

UDivMod divmod(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    const FieldTower* F = g.field();
    std::vector<Elem> rem = f.coeffs();
    const int dg = g.deg();
    if (f.deg() < dg) return {UPoly::zero(F), f};
    std::vector<Elem> quot(static_cast<std::size_t>(f.deg() - dg) + 1, FieldTower::zero());
    const Elem lc_inv = F->inv(g.lc());
    for (int k = f.deg(); k >= dg; --k) {
        const Elem lead = rem[static_cast<std::size_t>(k)];
        if (lead.code == 0) continue;
        const Elem factor = F->mul(lead, lc_inv);
        const auto shift = static_cast<std::size_t>(k - dg);
        quot[shift] = factor;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(dg); ++i)
            rem[shift + i] = F->sub(rem[shift + i], F->mul(factor, g.coeffs()[i]));
    }
    return {UPoly(F, std::move(quot)), UPoly(F, std::move(rem))};
}

UPoly operator%(const UPoly& f, const UPoly& g) { return divmod(f, g).rem; }

UPoly monic(const UPoly& f) {
    if (f.is_zero()) return f;
    return f.scale(f.field()->inv(f.lc()));
}

UPoly gcd(const UPoly& f, const UPoly& g) {
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

bool divides(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

UPoly exact_div(const UPoly& b, const UPoly& a) {
    auto [q, r] = divmod(b, a);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UPoly pow(const UPoly& f, unsigned k) {
    UPoly r = UPoly::one(f.field());
    for (unsigned i = 0; i < k; ++i) r = r * f;
    return r;
}

bool poly_less(const UPoly& a, const UPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

namespace {

// Polynomials of degree < d with coefficient digit 0 most significant, so that
// the counter order is the lexicographic order of coefficient vectors.
std::vector<std::vector<Elem>> tails(const FieldTower* F, int d) {
    const auto q = static_cast<std::uint64_t>(F->q());
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    std::vector<std::vector<Elem>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Elem> v(static_cast<std::size_t>(d));
        std::uint64_t t = idx;
        for (int i = d; i-- > 0;) {
            v[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(t % q)};
            t /= q;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<UPoly> monic_polys(const FieldTower* F, int d) {
    std::vector<UPoly> out;
    if (d < 0) return out;
    for (auto& v : tails(F, d)) {
        v.push_back(FieldTower::one());
        out.emplace_back(F, std::move(v));
    }
    return out;
}

std::vector<UPoly> polys_up_to(const FieldTower* F, int d) {
    std::vector<UPoly> out{UPoly::zero(F)};
    for (int k = 0; k <= d; ++k) {
        for (Elem lead = Elem{1}; lead.code < static_cast<std::uint32_t>(F->q()); ++lead.code) {
            for (auto& v : tails(F, k)) {
                v.push_back(lead);
                out.emplace_back(F, std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

bool is_irreducible(const UPoly& f) {
    const int d = f.deg();
    if (d < 1) return false;
    for (int k = 1; 2 * k <= d; ++k)
        for (const auto& g : monic_polys(f.field(), k))
            if (divides(g, f)) return false;
    return true;
}

std::vector<UPoly> monic_irreducibles(const FieldTower* F, int d) {
    std::vector<UPoly> out;
    for (auto& f : monic_polys(F, d))
        if (is_irreducible(f)) out.push_back(std::move(f));
    return out;
}

long long necklace_count(long long q, int d) {
    auto mobius = [](int k) {
        int result = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                result = -result;
            }
        }
        if (k > 1) result = -result;
        return result;
    };
    long long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long qp = 1;
        for (int i = 0; i < d / e; ++i) qp *= q;
        total += mobius(e) * qp;
    }
    return total / d;
}

std::vector<std::pair<UPoly, int>> factor(const UPoly& f) {
    if (f.is_zero()) throw Error("factor of the zero polynomial");
    std::vector<std::pair<UPoly, int>> out;
    UPoly rest = monic(f);
    for (int k = 1; 2 * k <= rest.deg(); ++k) {
        for (const auto& g : monic_polys(f.field(), k)) {
            int mult = 0;
            while (rest.deg() >= k && divides(g, rest)) {
                rest = exact_div(rest, g);
                ++mult;
            }
            if (mult > 0) out.emplace_back(g, mult);
        }
    }
    if (rest.deg() >= 1) {
        bool merged = false;
        for (auto& [g, mult] : out)
            if (g == rest) {
                ++mult;
                merged = true;
            }
        if (!merged) out.emplace_back(rest, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::vector<UPoly> monic_square_divisors(const UPoly& f) {
    std::vector<UPoly> out{UPoly::one(f.field())};
    for (const auto& [g, mult] : factor(f)) {
        std::vector<UPoly> next;
        for (const auto& l : out) {
            UPoly cur = l;
            for (int e = 0; 2 * e <= mult; ++e) {
                next.push_back(cur);
                cur = cur * g;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::ostream& operator<<(std::ostream& os, const UPoly& f) { return os << format_upoly(f); }

MonicIdeal::MonicIdeal(const UPoly& generator) : gen_(monic(generator)) {
    if (gen_.is_zero()) throw ValidationError("the zero ideal is not supported");
}

}  // namespace drinfeld
