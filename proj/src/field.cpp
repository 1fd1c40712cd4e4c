#include "drinfeld/field.hpp"

#include <algorithm>
#include <numeric>

#include "drinfeld/errors.hpp"

namespace drinfeld {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace detail {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomial helpers over one TableField, used only while building towers.
void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeffs poly_mod(const TableField& F, Coeffs a, const Coeffs& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lc_inv = F.inv(m.back());
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint32_t factor = F.mul(a.back(), lc_inv);
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = F.add(a[shift + i], F.neg(F.mul(factor, m[i])));
        trim(a);
    }
    return a;
}

bool is_irreducible(const TableField& F, const Coeffs& f) {
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    // Trial division by every monic polynomial of degree 1..k/2.
    const std::uint32_t r = F.size();
    for (std::size_t dg = 1; dg <= k / 2; ++dg) {
        Coeffs g(dg + 1, 0);
        g[dg] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= r;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<std::uint32_t>(t % r);
                t /= r;
            }
            if (poly_mod(F, f, g).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest (constant term first) monic irreducible of degree k.
Coeffs smallest_irreducible(const TableField& F, std::size_t k) {
    const std::uint32_t r = F.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= r;
    Coeffs f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // Digit 0 is the most significant so that idx order is lex order.
        std::uint64_t t = idx;
        for (std::size_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(t % r);
            t /= r;
        }
        if (is_irreducible(F, f)) return f;
    }
    throw TheoryViolation("no irreducible polynomial found");
}

}  // namespace

std::uint32_t TableField::digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t result = 0, place = 1;
    while (a != 0 || b != 0) {
        result += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return result;
}

std::uint32_t TableField::inv(std::uint32_t a) const {
    if (a == 0) throw Error("inverse of zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

void TableField::build_tables(std::uint32_t, const std::vector<std::uint32_t>& powers) {
    const std::uint32_t m = size_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(m), 0);
    log_.assign(size_, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        exp_[i] = exp_[i + m] = powers[i];
        log_[powers[i]] = i;
    }
    neg_.assign(size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a) {
        std::uint32_t r = 0, place = 1, t = a;
        while (t != 0) {
            r += ((p_ - t % p_) % p_) * place;
            t /= p_;
            place *= p_;
        }
        neg_[a] = r;
    }
    if (size_ <= 1024) {
        add_.resize(static_cast<std::size_t>(size_) * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b)
                add_[a * size_ + b] = static_cast<std::uint16_t>(p_ == 2 ? (a ^ b) : digit_add(a, b));
    }
}

TableField TableField::prime(std::uint32_t p) {
    TableField F;
    F.p_ = p;
    F.size_ = p;
    if (p == 2) {
        F.build_tables(1, {1});
        return F;
    }
    for (std::uint32_t g = 2; g < p; ++g) {
        std::vector<std::uint32_t> powers{1};
        std::uint64_t x = g;
        while (x != 1) {
            powers.push_back(static_cast<std::uint32_t>(x));
            x = x * g % p;
        }
        if (powers.size() == p - 1) {
            F.build_tables(g, powers);
            return F;
        }
    }
    throw TheoryViolation("no primitive root");
}

TableField TableField::extension(const TableField& C, const std::vector<std::uint32_t>& modulus) {
    const std::size_t k = modulus.size() - 1;
    const std::uint32_t r = C.size();
    std::uint32_t size = 1;
    for (std::size_t i = 0; i < k; ++i) size *= r;

    auto to_coeffs = [&](std::uint32_t code) {
        Coeffs c(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = code % r;
            code /= r;
        }
        return c;
    };
    auto from_coeffs = [&](const Coeffs& c) {
        std::uint32_t code = 0;
        for (std::size_t i = c.size(); i-- > 0;) code = code * r + c[i];
        return code;
    };
    auto mul = [&](std::uint32_t a, std::uint32_t b) {
        const Coeffs ca = to_coeffs(a), cb = to_coeffs(b);
        Coeffs prod(2 * k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                prod[i + j] = C.add(prod[i + j], C.mul(ca[i], cb[j]));
        Coeffs red = poly_mod(C, prod, modulus);
        red.resize(k, 0);
        return from_coeffs(red);
    };

    TableField F;
    F.p_ = C.characteristic();
    F.size_ = size;
    if (size == 2) {
        F.build_tables(1, {1});
        return F;
    }
    for (std::uint32_t g = 2; g < size; ++g) {
        std::vector<std::uint32_t> powers{1};
        std::uint32_t x = g;
        bool primitive = true;
        while (x != 1) {
            powers.push_back(x);
            if (powers.size() > size - 1) {
                primitive = false;
                break;
            }
            x = mul(x, g);
        }
        if (primitive && powers.size() == size - 1) {
            F.build_tables(g, powers);
            return F;
        }
    }
    throw TheoryViolation("no primitive element");
}

}  // namespace detail

std::shared_ptr<const FieldTower> FieldTower::build(int p, int s, int n) {
    if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
    if (s < 1 || n < 1) throw ValidationError("extension degrees must be positive");
    long long order = 1;
    for (int i = 0; i < s * n; ++i) {
        order *= p;
        if (order > kMaxOrder)
            throw ResourceLimitError("field of order " + std::to_string(p) + "^" +
                                     std::to_string(s * n) + " exceeds the enumeration bound " +
                                     std::to_string(kMaxOrder));
    }

    std::shared_ptr<FieldTower> T(new FieldTower());
    T->p_ = p;
    T->s_ = s;
    T->n_ = n;

    const auto Fp = detail::TableField::prime(static_cast<std::uint32_t>(p));
    const auto base_mod = detail::smallest_irreducible(Fp, static_cast<std::size_t>(s));
    T->base_ = detail::TableField::extension(Fp, base_mod);
    T->q_ = static_cast<int>(T->base_.size());
    const auto top_mod = detail::smallest_irreducible(T->base_, static_cast<std::size_t>(n));
    T->top_ = detail::TableField::extension(T->base_, top_mod);

    T->base_min_poly_.assign(base_mod.begin(), base_mod.end());
    T->top_min_poly_.assign(top_mod.begin(), top_mod.end());

    const std::uint64_t m = T->top_.size() - 1;
    T->qpow_.resize(static_cast<std::size_t>(n));
    std::uint64_t acc = 1 % std::max<std::uint64_t>(m, 1);
    for (int k = 0; k < n; ++k) {
        T->qpow_[static_cast<std::size_t>(k)] = m == 0 ? 0 : acc;
        acc = m == 0 ? 0 : acc * static_cast<std::uint64_t>(T->q_) % m;
    }

    T->lex_.resize(T->top_.size());
    for (std::uint32_t c = 0; c < T->top_.size(); ++c) T->lex_[c] = Elem{c};
    const FieldTower& ref = *T;
    std::sort(T->lex_.begin(), T->lex_.end(),
              [&ref](Elem a, Elem b) { return ref.lex_less(a, b); });
    return T;
}

Elem FieldTower::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    const std::uint64_t m = order() - 1;
    return Elem{top_.exp((static_cast<std::uint64_t>(top_.log(a.code)) * (e % m)) % m)};
}

Elem FieldTower::times(Elem a, long long k) const {
    k %= p_;
    if (k < 0) k += p_;
    Elem r = zero();
    for (long long i = 0; i < k; ++i) r = add(r, a);
    return r;
}

Elem FieldTower::base_elem(long long c) const {
    if (c < 0 || c >= q_)
        throw ValidationError("F_q element encoding " + std::to_string(c) + " outside [0, " +
                              std::to_string(q_) + ")");
    return Elem{static_cast<std::uint32_t>(c)};
}

std::vector<int> FieldTower::coords(Elem a) const {
    std::vector<int> c(static_cast<std::size_t>(n_), 0);
    std::uint32_t t = a.code;
    for (auto& ci : c) {
        ci = static_cast<int>(t % static_cast<std::uint32_t>(q_));
        t /= static_cast<std::uint32_t>(q_);
    }
    return c;
}

Elem FieldTower::from_coords(std::span<const int> c) const {
    if (c.size() != static_cast<std::size_t>(n_))
        throw ValidationError("expected " + std::to_string(n_) + " coordinates, got " +
                              std::to_string(c.size()));
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] < 0 || c[i] >= q_)
            throw ValidationError("coordinate " + std::to_string(c[i]) + " outside [0, " +
                                  std::to_string(q_) + ")");
        code = code * static_cast<std::uint32_t>(q_) + static_cast<std::uint32_t>(c[i]);
    }
    return Elem{code};
}

bool FieldTower::lex_less(Elem a, Elem b) const {
    std::uint32_t x = a.code, y = b.code;
    const auto q = static_cast<std::uint32_t>(q_);
    for (int i = 0; i < n_; ++i) {
        const std::uint32_t dx = x % q, dy = y % q;
        if (dx != dy) return dx < dy;
        x /= q;
        y /= q;
    }
    return false;
}

std::uint32_t FieldTower::log(Elem a) const {
    if (a.code == 0) throw Error("discrete log of zero");
    return top_.log(a.code);
}

bool FieldTower::is_base_square(Elem a) const {
    if (a.code == 0 || !in_base_field(a)) throw Error("square test needs a nonzero F_q element");
    if (q_ % 2 == 0) return true;
    // F_q^* = <ω^k>, k = (|L|-1)/(q-1); a = ω^{k·j} is a square in F_q iff j is even.
    const std::uint32_t k = (order() - 1) / static_cast<std::uint32_t>(q_ - 1);
    return (log(a) / k) % 2 == 0;
}

FieldEmbedding::FieldEmbedding(TowerPtr source, TowerPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
    const FieldTower& S = *source_;
    const FieldTower& T = *target_;
    if (S.p() != T.p() || S.s() != T.s() || T.n() % S.n() != 0)
        throw ValidationError("no embedding between the given towers");

    // Lex-smallest root of the source modulus in the target.
    const auto& f = S.top_min_poly();
    auto eval = [&](Elem x) {
        Elem acc = FieldTower::zero();
        for (std::size_t i = f.size(); i-- > 0;)
            acc = T.add(T.mul(acc, x), Elem{static_cast<std::uint32_t>(f[i])});
        return acc;
    };
    Elem beta{};
    bool found = false;
    for (Elem x : T.elements_lex()) {
        if (eval(x).code == 0) {
            beta = x;
            found = true;
            break;
        }
    }
    if (!found) throw TheoryViolation("modulus has no root in the target field");

    image_.resize(S.order());
    std::vector<Elem> beta_pow(static_cast<std::size_t>(S.n()));
    beta_pow[0] = FieldTower::one();
    for (std::size_t i = 1; i < beta_pow.size(); ++i) beta_pow[i] = T.mul(beta_pow[i - 1], beta);
    for (std::uint32_t c = 0; c < S.order(); ++c) {
        const auto co = S.coords(Elem{c});
        Elem acc = FieldTower::zero();
        for (std::size_t i = 0; i < co.size(); ++i)
            acc = T.add(acc, T.mul(Elem{static_cast<std::uint32_t>(co[i])}, beta_pow[i]));
        image_[c] = acc;
    }
}

}  // namespace drinfeld
