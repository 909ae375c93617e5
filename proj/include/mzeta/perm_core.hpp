#pragma once

// Type A statistics on words and permutations: Des/des/maj, inv/imv,
// Exc/exc, exceeding and non-exceeding subwords, Han's Denert statistic
// denh, and standardisation.
//
// Generic functions take any random-access range of integers, read as
// w_1 ... w_n. Positions in returned sets are 1-based.

#include <ranges>
#include <vector>

#include "mzeta/types.hpp"

namespace mzeta {

template <class R>
concept letter_range = std::ranges::random_access_range<R> &&
                       std::convertible_to<std::ranges::range_value_t<R>, int>;

/// {i in [n-1] : w_i > w_{i+1}}.
template <letter_range R>
std::vector<int> descent_set(const R& w) {
    std::vector<int> d;
    const auto n = std::ranges::size(w);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

template <letter_range R>
int des(const R& w) {
    int d = 0;
    const auto n = std::ranges::size(w);
    for (std::size_t i = 0; i + 1 < n; ++i) d += w[i] > w[i + 1];
    return d;
}

template <letter_range R>
int maj(const R& w) {
    int m = 0;
    const auto n = std::ranges::size(w);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
    return m;
}

/// Pairs i < j with w_i > w_j.
template <letter_range R>
int inv(const R& w) {
    int c = 0;
    const auto n = std::ranges::size(w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c += w[i] > w[j];
    return c;
}

/// Pairs i < j with w_i >= w_j.
template <letter_range R>
int imv(const R& w) {
    int c = 0;
    const auto n = std::ranges::size(w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c += w[i] >= w[j];
    return c;
}

inline int des(const word& w) { return des(w.letters()); }
inline int maj(const word& w) { return maj(w.letters()); }
inline std::vector<int> descent_set(const word& w) { return descent_set(w.letters()); }
inline int des(const permutation& p) { return des(p.one_line()); }
inline int maj(const permutation& p) { return maj(p.one_line()); }
inline std::vector<int> descent_set(const permutation& p) { return descent_set(p.one_line()); }

namespace detail {

// Excedance flag at 0-based index i of w against a trivial word.
inline bool exceeds(std::span<const int> w, std::span<const int> trivial, std::size_t i) {
    return w[i] > trivial[i];
}

inline std::vector<int> exc_positions(std::span<const int> w, std::span<const int> trivial) {
    std::vector<int> e;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (exceeds(w, trivial, i)) e.push_back(static_cast<int>(i) + 1);
    return e;
}

// Single pass over pairs; no subwords are built.
inline int denh_against(std::span<const int> w, std::span<const int> trivial) {
    const std::size_t n = w.size();
    int total = 0;
    bool exc[max_size];
    for (std::size_t i = 0; i < n; ++i) {
        exc[i] = exceeds(w, trivial, i);
        if (exc[i]) total += static_cast<int>(i) + 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (exc[i] != exc[j]) continue;
            total += exc[i] ? (w[i] >= w[j]) : (w[i] > w[j]);
        }
    return total;
}

struct split_subwords {
    std::vector<int> exceeding;
    std::vector<int> non_exceeding;
};

inline split_subwords split_by_excedance(std::span<const int> w, std::span<const int> trivial) {
    split_subwords s;
    for (std::size_t i = 0; i < w.size(); ++i)
        (exceeds(w, trivial, i) ? s.exceeding : s.non_exceeding).push_back(w[i]);
    return s;
}

inline std::vector<int> identity_line(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
    return v;
}

} // namespace detail

/// Positions where w is strictly above the trivial word.
inline std::vector<int> exc_set(const word& w) {
    return detail::exc_positions(w.letters(), w.shape().block_table());
}

inline int exc(const word& w) {
    auto t = w.shape().block_table();
    auto l = w.letters();
    int c = 0;
    for (std::size_t i = 0; i < l.size(); ++i) c += l[i] > t[i];
    return c;
}

/// Letters of w at excedance positions, in order.
inline std::vector<int> exceeding_subword(const word& w) {
    return detail::split_by_excedance(w.letters(), w.shape().block_table()).exceeding;
}

/// Letters of w at the remaining positions, in order.
inline std::vector<int> nonexceeding_subword(const word& w) {
    return detail::split_by_excedance(w.letters(), w.shape().block_table()).non_exceeding;
}

/// The three summands of denh: sum of excedance positions, imv(E(w)),
/// inv(N(w)).
struct denh_parts {
    int excedance_sum = 0;
    int exceeding_imv = 0;
    int nonexceeding_inv = 0;

    int total() const { return excedance_sum + exceeding_imv + nonexceeding_inv; }
};

inline denh_parts denh_decomposition(const word& w) {
    auto t = w.shape().block_table();
    auto split = detail::split_by_excedance(w.letters(), t);
    denh_parts p;
    for (int i : detail::exc_positions(w.letters(), t)) p.excedance_sum += i;
    p.exceeding_imv = imv(split.exceeding);
    p.nonexceeding_inv = inv(split.non_exceeding);
    return p;
}

/// Han's Denert statistic on multiset permutations.
inline int denh(const word& w) {
    return detail::denh_against(w.letters(), w.shape().block_table());
}

// On S_n the trivial word is the identity, so excedances are sigma(i) > i.
inline std::vector<int> exc_set(const permutation& p) {
    return detail::exc_positions(p.one_line(), detail::identity_line(p.size()));
}
inline int exc(const permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i) c += p(i) > i;
    return c;
}
inline int denh(const permutation& p) {
    return detail::denh_against(p.one_line(), detail::identity_line(p.size()));
}

/// Replace the copies of letter k, left to right, by the consecutive
/// integers eta_1 + ... + eta_{k-1} + 1, ..., eta_1 + ... + eta_k.
inline permutation standardize(const word& w) {
    const auto& shape = w.shape();
    std::vector<int> next(shape.length() + 1);
    int offset = 0;
    for (int k = 1; k <= shape.length(); ++k) {
        next[k] = offset + 1;
        offset += shape.part(k);
    }
    std::vector<int> out;
    out.reserve(w.size());
    for (int a : w.letters()) out.push_back(next[a]++);
    return permutation(std::move(out));
}

} // namespace mzeta
