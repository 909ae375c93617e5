#pragma once

// Exact polynomials over the integers: univariate `unipoly` in x and sparse
// bivariate `bipoly` in (x, y). Coefficients are arbitrary precision; no
// floating point appears anywhere.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mzeta/error.hpp"

namespace mzeta {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

namespace detail {

inline rational rational_pow(const rational& base, int e) {
    rational r = 1;
    rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline void append_term(std::string& out, const integer& c, const std::string& monomial) {
    const bool negative = c < 0;
    const integer mag = negative ? integer(-c) : c;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
        out += mag.str();
    } else {
        if (mag != 1) out += mag.str() + "*";
        out += monomial;
    }
}

inline std::string power(const char* var, int e) {
    if (e == 0) return {};
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

} // namespace detail

/// Dense polynomial in x, coefficient k multiplying x^k. No trailing zeros;
/// the zero polynomial has no coefficients.
class unipoly {
public:
    unipoly() = default;
    explicit unipoly(std::vector<integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    unipoly(std::initializer_list<int> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

    static unipoly constant(integer v) { return unipoly(std::vector<integer>{std::move(v)}); }
    static unipoly monomial(int degree, integer coeff = 1) {
        std::vector<integer> c(degree + 1);
        c[degree] = std::move(coeff);
        return unipoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<integer>& coefficients() const noexcept { return c_; }
    integer operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : integer(0); }

    integer evaluate(const integer& x) const {
        integer r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    bool is_palindromic() const {
        return std::equal(c_.begin(), c_.begin() + c_.size() / 2, c_.rbegin());
    }

    unipoly& operator+=(const unipoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    unipoly& operator-=(const unipoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend unipoly operator+(unipoly a, const unipoly& b) { return a += b; }
    friend unipoly operator-(unipoly a, const unipoly& b) { return a -= b; }
    friend unipoly operator*(const unipoly& a, const unipoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<integer> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return unipoly(std::move(r));
    }

    /// Multiply by x^shift.
    unipoly shifted(int shift) const {
        if (is_zero()) return {};
        std::vector<integer> r(shift, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return unipoly(std::move(r));
    }

    /// Exact quotient by a divisor with unit leading coefficient, or nullopt
    /// if the remainder is nonzero.
    std::optional<unipoly> divide_exact(const unipoly& d) const {
        if (d.is_zero()) throw invalid_input("division by the zero polynomial");
        if (is_zero()) return unipoly{};
        if (degree() < d.degree()) return std::nullopt;
        std::vector<integer> rem = c_;
        std::vector<integer> q(degree() - d.degree() + 1);
        const integer& lead = d.c_.back();
        for (int k = degree() - d.degree(); k >= 0; --k) {
            const integer& top = rem[k + d.degree()];
            if (top == 0) continue;
            if (top % lead != 0) return std::nullopt;
            q[k] = top / lead;
            for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q[k] * d.c_[j];
        }
        if (std::any_of(rem.begin(), rem.end(), [](const integer& v) { return v != 0; })) return std::nullopt;
        return unipoly(std::move(q));
    }

    friend bool operator==(const unipoly&, const unipoly&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) detail::append_term(s, c_[k], detail::power("x", static_cast<int>(k)));
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<integer> c_;
};

/// Exponent pair of x^x_deg y^y_deg. Ordered by (y_deg, x_deg).
struct monomial {
    int x_deg = 0;
    int y_deg = 0;

    friend bool operator==(const monomial&, const monomial&) = default;
    friend std::strong_ordering operator<=>(const monomial& a, const monomial& b) {
        if (auto c = a.y_deg <=> b.y_deg; c != 0) return c;
        return a.x_deg <=> b.x_deg;
    }
};

/// Sparse polynomial in x and y with exponents >= 0. Zero coefficients are
/// never stored, so equal polynomials have equal term maps.
class bipoly {
public:
    using term_map = std::map<monomial, integer>;

    bipoly() = default;

    static bipoly constant(integer c) {
        bipoly p;
        p.add_term({0, 0}, std::move(c));
        return p;
    }
    static bipoly term(int x_deg, int y_deg, integer c = 1) {
        bipoly p;
        p.add_term({x_deg, y_deg}, std::move(c));
        return p;
    }
    /// Embed a polynomial in x into y-degree `y_deg`.
    static bipoly from_x(const unipoly& u, int y_deg = 0) {
        bipoly p;
        for (int k = 0; k <= u.degree(); ++k) p.add_term({k, y_deg}, u[k]);
        return p;
    }

    void add_term(monomial m, const integer& c) {
        if (m.x_deg < 0 || m.y_deg < 0) throw invalid_input("negative exponent in bipoly");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    integer coefficient(int x_deg, int y_deg) const {
        auto it = terms_.find({x_deg, y_deg});
        return it == terms_.end() ? integer(0) : it->second;
    }

    /// Coefficient of y^k as a polynomial in x.
    unipoly y_coefficient(int k) const {
        std::vector<integer> c;
        for (auto it = terms_.lower_bound({0, k}); it != terms_.end() && it->first.y_deg == k; ++it) {
            if (static_cast<int>(c.size()) <= it->first.x_deg) c.resize(it->first.x_deg + 1);
            c[it->first.x_deg] = it->second;
        }
        return unipoly(std::move(c));
    }

    int x_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg);
        return d;
    }
    int y_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.y_deg; }
    int x_min_degree() const {
        int d = terms_.empty() ? -1 : terms_.begin()->first.x_deg;
        for (const auto& [m, c] : terms_) d = std::min(d, m.x_deg);
        return d;
    }
    int y_min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.y_deg; }

    /// Leading term under the (y, x) lexicographic order.
    std::pair<monomial, integer> leading_term() const {
        if (terms_.empty()) throw invalid_input("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    integer evaluate(const integer& x, const integer& y) const {
        integer r = 0;
        for (const auto& [m, c] : terms_) r += c * pow(x, m.x_deg) * pow(y, m.y_deg);
        return r;
    }

    rational evaluate(const rational& x, const rational& y) const {
        rational r = 0;
        for (const auto& [m, c] : terms_)
            r += rational(c) * detail::rational_pow(x, m.x_deg) * detail::rational_pow(y, m.y_deg);
        return r;
    }

    /// Multiply by x^dx y^dy.
    bipoly shifted(int dx, int dy) const {
        bipoly r;
        for (const auto& [m, c] : terms_) r.add_term({m.x_deg + dx, m.y_deg + dy}, c);
        return r;
    }

    /// x^{deg_x} y^{deg_y} f(1/x, 1/y).
    bipoly reversed() const {
        const int dx = x_degree();
        const int dy = y_degree();
        bipoly r;
        for (const auto& [m, c] : terms_) r.add_term({dx - m.x_deg, dy - m.y_deg}, c);
        return r;
    }

    bipoly operator-() const {
        bipoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    bipoly& operator+=(const bipoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    bipoly& operator-=(const bipoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend bipoly operator+(bipoly a, const bipoly& b) { return a += b; }
    friend bipoly operator-(bipoly a, const bipoly& b) { return a -= b; }
    friend bipoly operator*(const bipoly& a, const bipoly& b) {
        bipoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x_deg + mb.x_deg, ma.y_deg + mb.y_deg}, ca * cb);
        return r;
    }
    friend bipoly operator*(const integer& k, const bipoly& p) {
        bipoly r;
        for (const auto& [m, c] : p.terms_) r.add_term(m, k * c);
        return r;
    }

    friend bool operator==(const bipoly&, const bipoly&) = default;

    /// "1 + x*y + x^2*y": terms in (y, x) order, unit coefficients and unit
    /// exponents omitted.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string mono = detail::power("x", m.x_deg);
            std::string ypart = detail::power("y", m.y_deg);
            if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
            detail::append_term(s, c, mono);
        }
        return s;
    }

private:
    term_map terms_;
};

/// Exact division f = g * h over Z[x, y]; nullopt when g does not divide f.
/// Runs the division algorithm under the (y, x) lexicographic order; since
/// the quotient over Q is unique, a non-integral step or a leftover
/// remainder proves indivisibility over Z.
inline std::optional<bipoly> divide_exact(const bipoly& f, const bipoly& g) {
    if (g.is_zero()) throw invalid_input("division by the zero polynomial");
    if (f.is_zero()) return bipoly{};
    if (f.x_degree() < g.x_degree() || f.y_degree() < g.y_degree()) return std::nullopt;
    const auto [g_lead, g_coeff] = g.leading_term();
    bipoly remainder = f;
    bipoly quotient;
    while (!remainder.is_zero()) {
        const auto [r_lead, r_coeff] = remainder.leading_term();
        const int dx = r_lead.x_deg - g_lead.x_deg;
        const int dy = r_lead.y_deg - g_lead.y_deg;
        if (dx < 0 || dy < 0 || r_coeff % g_coeff != 0) return std::nullopt;
        const integer q = r_coeff / g_coeff;
        quotient.add_term({dx, dy}, q);
        remainder -= q * g.shifted(dx, dy);
    }
    return quotient;
}

} // namespace mzeta
