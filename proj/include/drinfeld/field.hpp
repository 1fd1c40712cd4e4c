#pragma once

// Exact arithmetic in the tower F_p ⊂ F_q ⊂ L = F_{q^n}.
//
// Every element of L is stored as an integer code. Writing an element as
// Σ c_i y^i with c_i ∈ F_q (y a root of the top modulus) and each c_i as
// Σ e_j x^j with e_j ∈ F_p (x a root of the base modulus), the code is
// Σ_i c_i q^i with c_i = Σ_j e_j p^j. Consequently
//   * the codes of F_q inside L are exactly 0..q-1, and
//   * the code of an F_q element is its base-p digit encoding, which is the
//     serialized integer form used throughout the CLI and reports.
//
// Multiplication runs through discrete log tables, addition through a full
// table when |L| ≤ 1024 and base-p digit arithmetic otherwise. Towers are
// immutable once built and can be shared freely between threads.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace drinfeld {

struct Elem {
    std::uint32_t code = 0;
    constexpr auto operator<=>(const Elem&) const = default;
};

namespace detail {

// One level of the tower: a finite field of `size` elements with codes in
// [0, size) whose base-p digits are the coordinates over F_p.
class TableField {
public:
    TableField() = default;
    static TableField prime(std::uint32_t p);
    // Extension of `coeff` by a monic irreducible modulus given low->high as coeff codes.
    static TableField extension(const TableField& coeff, const std::vector<std::uint32_t>& modulus);

    [[nodiscard]] std::uint32_t size() const { return size_; }
    [[nodiscard]] std::uint32_t characteristic() const { return p_; }

    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_.empty()) return add_[a * size_ + b];
        return p_ == 2 ? (a ^ b) : digit_add(a, b);
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
    [[nodiscard]] std::uint32_t log(std::uint32_t a) const { return log_[a]; }
    [[nodiscard]] std::uint32_t exp(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }

private:
    std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;
    void build_tables(std::uint32_t generator,
                      const std::vector<std::uint32_t>& powers);

    std::uint32_t p_ = 0;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> exp_;  // length 2(size-1): exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_;  // size*size when size ≤ 1024
};

}  // namespace detail

/// Canonical tower F_p ⊂ F_q ⊂ L with q = p^s and [L : F_q] = n. Both moduli are
/// the lexicographically smallest monic irreducibles of their degree, coefficient
/// vectors compared from the constant term up.
class FieldTower {
public:
    /// Largest supported |L| = q^n; exhaustive enumeration never needs more.
    static constexpr std::uint32_t kMaxOrder = 65536;

    /// Throws ValidationError for non-prime p or non-positive degrees,
    /// ResourceLimitError when p^{s·n} > kMaxOrder.
    static std::shared_ptr<const FieldTower> build(int p, int s, int n);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int s() const { return s_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] std::uint32_t order() const { return top_.size(); }

    /// Monic modulus of F_q over F_p, coefficients in F_p, low to high.
    [[nodiscard]] const std::vector<int>& base_min_poly() const { return base_min_poly_; }
    /// Monic modulus of L over F_q, coefficients as F_q codes, low to high.
    [[nodiscard]] const std::vector<int>& top_min_poly() const { return top_min_poly_; }

    static constexpr Elem zero() { return Elem{0}; }
    static constexpr Elem one() { return Elem{1}; }

    [[nodiscard]] Elem add(Elem a, Elem b) const { return Elem{top_.add(a.code, b.code)}; }
    [[nodiscard]] Elem neg(Elem a) const { return Elem{top_.neg(a.code)}; }
    [[nodiscard]] Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    [[nodiscard]] Elem mul(Elem a, Elem b) const { return Elem{top_.mul(a.code, b.code)}; }
    /// Throws Error on zero.
    [[nodiscard]] Elem inv(Elem a) const { return Elem{top_.inv(a.code)}; }
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    [[nodiscard]] Elem pow(Elem a, std::uint64_t e) const;
    /// a^{q^k}; the q-power Frobenius iterated k times (k may be any non-negative integer).
    [[nodiscard]] Elem frob(Elem a, std::uint64_t k) const {
        if (a.code == 0) return a;
        const std::uint64_t m = order() - 1;
        return Elem{top_.exp((static_cast<std::uint64_t>(top_.log(a.code)) * qpow_[k % n_]) % m)};
    }

    /// Integer multiple k·a (k reduced mod p).
    [[nodiscard]] Elem times(Elem a, long long k) const;

    [[nodiscard]] bool in_base_field(Elem a) const { return a.code < static_cast<std::uint32_t>(q_); }
    /// The F_q element with integer encoding c ∈ [0, q). Throws ValidationError otherwise.
    [[nodiscard]] Elem base_elem(long long c) const;

    /// Coordinates over F_q (integer encodings), length n.
    [[nodiscard]] std::vector<int> coords(Elem a) const;
    /// Inverse of coords(); throws ValidationError on bad length or digit.
    [[nodiscard]] Elem from_coords(std::span<const int> c) const;

    /// Lexicographic order on coordinate vectors, constant coordinate first.
    [[nodiscard]] bool lex_less(Elem a, Elem b) const;
    /// All elements of L sorted by lex_less.
    [[nodiscard]] const std::vector<Elem>& elements_lex() const { return lex_; }

    /// Generator of L^* whose powers index the log tables.
    [[nodiscard]] Elem primitive() const { return Elem{top_.exp(1)}; }
    [[nodiscard]] std::uint32_t log(Elem a) const;
    [[nodiscard]] Elem exp(std::uint64_t k) const { return Elem{top_.exp(k)}; }

    /// Square test in F_q^* (a must lie in F_q and be nonzero) for odd q.
    [[nodiscard]] bool is_base_square(Elem a) const;

    /// True when both towers are built from identical parameters.
    [[nodiscard]] bool same_as(const FieldTower& o) const {
        return p_ == o.p_ && s_ == o.s_ && n_ == o.n_;
    }

private:
    FieldTower() = default;

    int p_ = 0, s_ = 0, n_ = 0, q_ = 0;
    std::vector<int> base_min_poly_;
    std::vector<int> top_min_poly_;
    detail::TableField base_;
    detail::TableField top_;
    std::vector<std::uint64_t> qpow_;  // q^k mod (|L|-1), k < n
    std::vector<Elem> lex_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// An F_q-algebra embedding of a smaller canonical tower into a larger one
/// over the same F_q. The generator of the source maps to the lex-smallest
/// root of its modulus in the target.
class FieldEmbedding {
public:
    /// Throws ValidationError unless p, s agree and source.n | target.n.
    FieldEmbedding(TowerPtr source, TowerPtr target);

    [[nodiscard]] Elem operator()(Elem a) const { return image_[a.code]; }
    [[nodiscard]] const TowerPtr& source() const { return source_; }
    [[nodiscard]] const TowerPtr& target() const { return target_; }

private:
    TowerPtr source_;
    TowerPtr target_;
    std::vector<Elem> image_;
};

/// Deterministic primality test for the small integers used as characteristics.
bool is_prime(long long p);

}  // namespace drinfeld
