#include "drinfeld/text.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    long long integer() {
        skip_ws();
        long long v = 0;
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin || v < 0) fail("expected a non-negative integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("cannot parse '" + std::string(s_) + "' at offset " +
                              std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Elem coefficient(const FieldTower& F, long long v, const Cursor& cur) {
    if (F.s() == 1) return F.base_elem(v % F.p());
    if (v >= F.q()) cur.fail("coefficient " + std::to_string(v) + " is not an F_q encoding");
    return F.base_elem(v);
}

}  // namespace

UPoly parse_upoly(const FieldTower* F, std::string_view text) {
    Cursor cur(text);
    if (cur.at_end()) cur.fail("empty polynomial");
    std::map<int, Elem> acc;
    bool first = true;
    while (!cur.at_end()) {
        bool negative = false;
        if (cur.accept('+')) {
        } else if (cur.accept('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        Elem c = FieldTower::one();
        bool have_coeff = false;
        if (cur.peek_digit()) {
            c = coefficient(*F, cur.integer(), cur);
            have_coeff = true;
        }
        int k = 0;
        if (have_coeff) cur.accept('*');
        if (cur.accept('T')) {
            k = 1;
            if (cur.accept('^')) {
                const long long e = cur.integer();
                if (e > 1'000'000) cur.fail("exponent too large");
                k = static_cast<int>(e);
            }
        } else if (!have_coeff) {
            cur.fail("expected a coefficient or T");
        }
        if (negative) c = F->neg(c);
        auto [it, inserted] = acc.emplace(k, c);
        if (!inserted) it->second = F->add(it->second, c);
    }
    std::vector<Elem> v(acc.empty() ? 0 : static_cast<std::size_t>(acc.rbegin()->first) + 1, FieldTower::zero());
    for (auto [k, c] : acc) v[static_cast<std::size_t>(k)] = c;
    return UPoly(F, std::move(v));
}

std::string format_upoly(const UPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.deg(); k >= 0; --k) {
        const Elem c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c.code == 0) continue;
        if (!first) os << '+';
        first = false;
        if (k == 0) {
            os << c.code;
            continue;
        }
        if (c.code != 1) os << c.code << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

Elem parse_elem(const FieldTower& F, std::string_view text) {
    Cursor cur(text);
    if (cur.accept('[')) {
        std::vector<int> coords;
        do {
            const long long v = cur.integer();
            if (v >= F.q()) cur.fail("coordinate " + std::to_string(v) + " outside [0, q)");
            coords.push_back(static_cast<int>(v));
        } while (cur.accept(','));
        cur.expect(']');
        if (!cur.at_end()) cur.fail("trailing characters");
        return F.from_coords(coords);
    }
    const long long v = cur.integer();
    if (!cur.at_end()) cur.fail("trailing characters");
    if (v >= F.q()) cur.fail("bare integer " + std::to_string(v) + " is not an F_q encoding");
    return F.base_elem(v);
}

std::string format_elem(const FieldTower& F, Elem a) {
    std::ostringstream os;
    os << '[';
    const auto c = F.coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

}  // namespace drinfeld
