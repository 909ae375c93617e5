#pragma once

// Signed (B_n) and even-signed (D_n) permutations, stored by window
// sigma(1) ... sigma(n). The negative half sigma(-i) = -sigma(i) is never
// built; every statistic here reads only the window.

#include <cstdlib>
#include <vector>

#include "mzeta/perm_core.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

namespace detail {
struct signed_access;
}

class signed_permutation {
public:
    explicit signed_permutation(std::vector<int> window) : window_(std::move(window)) {
        const int n = static_cast<int>(window_.size());
        if (n < 1 || n > max_size) throw invalid_input("signed permutation size out of range");
        std::vector<char> seen(n + 1, 0);
        for (int v : window_) {
            int a = std::abs(v);
            if (a < 1 || a > n || seen[a]) throw invalid_input("window is not a signed permutation of [n]");
            seen[a] = 1;
        }
    }

    int size() const noexcept { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    std::span<const int> window() const noexcept { return window_; }

    /// Membership in D_n: an even number of negative entries.
    bool is_even() const {
        int neg = 0;
        for (int v : window_) neg += v < 0;
        return neg % 2 == 0;
    }

    /// |sigma| = |sigma(1)| ... |sigma(n)| in S_n.
    permutation absolute() const {
        std::vector<int> a;
        a.reserve(window_.size());
        for (int v : window_) a.push_back(std::abs(v));
        return permutation(std::move(a));
    }

    std::string to_string() const { return detail::join(window_, ","); }

    friend bool operator==(const signed_permutation&, const signed_permutation&) = default;

private:
    friend struct detail::signed_access;
    std::vector<int> window_;
};

namespace detail {
struct signed_access {
    static std::vector<int>& window(signed_permutation& s) { return s.window_; }
};
} // namespace detail

/// des and maj of the window read as an integer sequence.
struct type_a_pair {
    int des = 0;
    int maj = 0;
};

inline type_a_pair type_a_stats(const signed_permutation& s) {
    return {des(s.window()), maj(s.window())};
}

struct b_statistics {
    int neg = 0;
    int ndes = 0;
    int nmaj = 0;
    int fdes = 0;
    int fmaj = 0;

    friend bool operator==(const b_statistics&, const b_statistics&) = default;
};

inline int neg(const signed_permutation& s) {
    int c = 0;
    for (int v : s.window()) c += v < 0;
    return c;
}

namespace detail {

inline int negative_sum(const signed_permutation& s) {
    int sum = 0;
    for (int v : s.window())
        if (v < 0) sum += v;
    return sum;
}

inline int exc_of_absolute(const signed_permutation& s) {
    int c = 0;
    for (int i = 1; i <= s.size(); ++i) c += std::abs(s(i)) > i;
    return c;
}

inline int denh_of_absolute(const signed_permutation& s) {
    std::vector<int> a, id;
    a.reserve(s.size());
    id.reserve(s.size());
    for (int i = 1; i <= s.size(); ++i) {
        a.push_back(std::abs(s(i)));
        id.push_back(i);
    }
    return denh_against(a, id);
}

} // namespace detail

inline b_statistics b_stats(const signed_permutation& s) {
    const auto a = type_a_stats(s);
    b_statistics b;
    b.neg = neg(s);
    b.ndes = a.des + b.neg;
    b.nmaj = a.maj - detail::negative_sum(s);
    b.fdes = 2 * a.des + (s(1) < 0 ? 1 : 0);
    b.fmaj = 2 * a.maj + b.neg;
    return b;
}

/// exc(|sigma|) + neg(sigma).
inline int excabs(const signed_permutation& s) { return detail::exc_of_absolute(s) + neg(s); }

/// denh(|sigma|) minus the sum of the negative entries.
inline int nden(const signed_permutation& s) {
    return detail::denh_of_absolute(s) - detail::negative_sum(s);
}

/// Pairs i < j with sigma(i) + sigma(j) < 0. Defined on all of B_n.
inline int nsp(const signed_permutation& s) {
    int c = 0;
    auto w = s.window();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] + w[j] < 0;
    return c;
}

/// Positions with sigma(i) < -1.
inline std::vector<int> dneg_set(const signed_permutation& s) {
    std::vector<int> d;
    for (int i = 1; i <= s.size(); ++i)
        if (s(i) < -1) d.push_back(i);
    return d;
}

struct d_statistics {
    int dneg = 0;
    int ddes = 0;
    int dmaj = 0;
    int dexc = 0;
    int nsp = 0;
    int dden = 0;

    friend bool operator==(const d_statistics&, const d_statistics&) = default;
};

/// Type D statistics. dden is evaluated as denh(|sigma|) + nsp(sigma) and,
/// independently, as denh(|sigma|) - sum_{DNeg} sigma(i) - dneg(sigma); a
/// disagreement throws consistency_error.
inline d_statistics d_stats(const signed_permutation& s) {
    if (!s.is_even()) throw invalid_input("type D statistics need an even number of negative entries");
    const auto a = type_a_stats(s);
    int dneg_sum = 0;
    d_statistics d;
    for (int i : dneg_set(s)) {
        ++d.dneg;
        dneg_sum += s(i);
    }
    const int denh_abs = detail::denh_of_absolute(s);
    d.ddes = a.des + d.dneg;
    d.dmaj = a.maj - dneg_sum - d.dneg;
    d.dexc = detail::exc_of_absolute(s) + d.dneg;
    d.nsp = nsp(s);
    d.dden = denh_abs + d.nsp;
    if (d.dden != denh_abs - dneg_sum - d.dneg)
        throw consistency_error("dden forms disagree on " + s.to_string());
    return d;
}

namespace detail {

// Lexicographic DFS over windows under -n < ... < -1 < 1 < ... < n.
template <class F>
void for_each_signed_impl(int n, bool even_only, F& visit) {
    if (n < 1 || n > max_size) throw invalid_input("n out of range");
    std::vector<int> start(n);
    for (int i = 0; i < n; ++i) start[i] = i + 1;
    signed_permutation s(std::move(start));
    auto& w = signed_access::window(s);
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self, int pos, int negatives) -> bool {
        if (pos == n) {
            if (even_only && negatives % 2 != 0) return true;
            return visit_continue(visit, std::as_const(s));
        }
        for (int k = -n; k <= n; ++k) {
            if (k == 0 || used[std::abs(k)]) continue;
            used[std::abs(k)] = 1;
            w[pos] = k;
            bool go_on = self(self, pos + 1, negatives + (k < 0));
            used[std::abs(k)] = 0;
            if (!go_on) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
}

inline std::uint64_t factorial_saturating(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f = saturating_mul(f, static_cast<std::uint64_t>(k));
    return f;
}

inline std::uint64_t pow2_saturating(int n) {
    return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n);
}

} // namespace detail

/// |B_n| = 2^n n!.
inline std::uint64_t hyperoctahedral_order(int n) {
    return detail::saturating_mul(detail::pow2_saturating(n), detail::factorial_saturating(n));
}

/// |D_n| = 2^(n-1) n!.
inline std::uint64_t even_signed_order(int n) {
    return detail::saturating_mul(detail::pow2_saturating(n - 1), detail::factorial_saturating(n));
}

template <class F>
void for_each_signed(int n, F&& visit) {
    detail::for_each_signed_impl(n, false, visit);
}

template <class F>
void for_each_even_signed(int n, F&& visit) {
    detail::for_each_signed_impl(n, true, visit);
}

inline std::vector<signed_permutation> enumerate_signed(int n, std::uint64_t budget = default_budget) {
    check_budget(hyperoctahedral_order(n), budget, "B_" + std::to_string(n));
    std::vector<signed_permutation> out;
    for_each_signed(n, [&](const signed_permutation& s) { out.push_back(s); });
    return out;
}

inline std::vector<signed_permutation> enumerate_even_signed(int n, std::uint64_t budget = default_budget) {
    check_budget(even_signed_order(n), budget, "D_" + std::to_string(n));
    std::vector<signed_permutation> out;
    for_each_even_signed(n, [&](const signed_permutation& s) { out.push_back(s); });
    return out;
}

} // namespace mzeta
