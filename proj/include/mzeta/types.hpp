#pragma once

// Compositions, multiset permutations (words) and permutations.
//
// Positions and letters are 1-based in every public accessor. Internally
// letters live in 0-based vectors; `letters()` / `one_line()` expose those
// vectors as spans, so span index k holds position k + 1.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mzeta/error.hpp"

namespace mzeta {

/// Largest supported n. Every statistic in the library is bounded by
/// roughly 2n^2, so this keeps all of them comfortably inside `int`.
inline constexpr int max_size = 1024;

/// Default cap on the number of objects a single enumeration may visit.
inline constexpr std::uint64_t default_budget = 10'000'000;

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Visitors may return void (visit everything) or bool (false stops).
template <class F, class... Args>
bool visit_continue(F& f, Args&&... args) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, Args...>, void>) {
        f(std::forward<Args>(args)...);
        return true;
    } else {
        return static_cast<bool>(f(std::forward<Args>(args)...));
    }
}

inline std::string join(std::span<const int> xs, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += sep;
        s += std::to_string(xs[k]);
    }
    return s;
}

// Mutable access for enumerators that reuse one object.
struct access;

} // namespace detail

/// An ordered list of positive parts (eta_1, ..., eta_r) summing to n.
class composition {
public:
    explicit composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw invalid_input("composition must have at least one part");
        long long total = 0;
        for (int p : parts_) {
            if (p < 1) throw invalid_input("composition parts must be positive");
            total += p;
            if (total > max_size) throw invalid_input("composition too large");
        }
        n_ = static_cast<int>(total);
        block_.reserve(n_);
        for (int k = 0; k < length(); ++k)
            block_.insert(block_.end(), parts_[k], k + 1);
    }

    /// The rectangle (m^r).
    static composition rectangle(int r, int m) {
        if (r < 1 || m < 1) throw invalid_input("rectangle needs r, m >= 1");
        return composition(std::vector<int>(r, m));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    int part(int k) const { return parts_.at(k - 1); }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Block containing position i (1-based), i.e. the letter of the
    /// trivial word at i.
    int block_of(int i) const {
        if (i < 1 || i > n_) throw invalid_input("position out of range");
        return block_[i - 1];
    }
    std::span<const int> block_table() const noexcept { return block_; }

    /// {eta_1, eta_1 + eta_2, ..., eta_1 + ... + eta_{r-1}}.
    std::vector<int> descent_set() const {
        std::vector<int> d;
        int s = 0;
        for (int k = 0; k + 1 < length(); ++k) d.push_back(s += parts_[k]);
        return d;
    }

    bool is_rectangle() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [&](int p) { return p == parts_.front(); });
    }

    /// n! / prod eta_k!, saturating at UINT64_MAX.
    std::uint64_t multinomial() const {
        std::uint64_t result = 1;
        int placed = 0;
        for (int p : parts_) {
            // binom(placed + p, p), built so every intermediate is an integer.
            std::uint64_t b = 1;
            for (int k = 1; k <= p; ++k) {
                const std::uint64_t g = std::gcd(b, static_cast<std::uint64_t>(k));
                b = detail::saturating_mul(b / g, static_cast<std::uint64_t>(placed + k) / (k / g));
                if (b == std::numeric_limits<std::uint64_t>::max()) return b;
            }
            result = detail::saturating_mul(result, b);
            placed += p;
        }
        return result;
    }

    std::string to_string() const { return detail::join(parts_, ","); }

    friend bool operator==(const composition& a, const composition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> block_;
    int n_ = 0;
};

/// All 2^(n-1) compositions of n, ordered lexicographically by parts.
inline std::vector<composition> compositions_of(int n) {
    if (n < 1 || n > 30) throw invalid_input("compositions_of: n out of range");
    std::vector<composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// A permutation of [n] in one-line form, with its inverse cached.
class permutation {
public:
    explicit permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
        const int n = static_cast<int>(image_.size());
        if (n < 1 || n > max_size) throw invalid_input("permutation size out of range");
        inverse_.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            int v = image_[i];
            if (v < 1 || v > n || inverse_[v - 1] != 0)
                throw invalid_input("not a permutation of [n]");
            inverse_[v - 1] = i + 1;
        }
    }

    static permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i - 1]; }
    int inverse_at(int j) const { return inverse_[j - 1]; }
    std::span<const int> one_line() const noexcept { return image_; }
    std::span<const int> inverse_line() const noexcept { return inverse_; }

    permutation inverse() const {
        permutation p;
        p.image_ = inverse_;
        p.inverse_ = image_;
        return p;
    }

    std::string to_string() const { return detail::join(image_, ","); }

    friend bool operator==(const permutation& a, const permutation& b) { return a.image_ == b.image_; }
    friend auto operator<=>(const permutation& a, const permutation& b) { return a.image_ <=> b.image_; }

private:
    permutation() = default;

    friend struct detail::access;

    std::vector<int> image_;
    std::vector<int> inverse_;
};

/// A multiset permutation: a rearrangement of the trivial word
/// 1^{eta_1} 2^{eta_2} ... r^{eta_r}.
class word {
public:
    word(composition shape, std::vector<int> letters)
        : shape_(std::move(shape)), letters_(std::move(letters)) {
        if (static_cast<int>(letters_.size()) != shape_.size())
            throw invalid_input("word length does not match composition");
        std::vector<int> count(shape_.length() + 1, 0);
        for (int a : letters_) {
            if (a < 1 || a > shape_.length()) throw invalid_input("letter out of range");
            ++count[a];
        }
        for (int k = 1; k <= shape_.length(); ++k)
            if (count[k] != shape_.part(k))
                throw invalid_input("letter multiplicities do not match composition");
    }

    static word trivial(const composition& shape) {
        auto t = shape.block_table();
        return word(shape, std::vector<int>(t.begin(), t.end()), unchecked{});
    }

    const composition& shape() const noexcept { return shape_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }
    int at(int i) const { return letters_[i - 1]; }
    std::span<const int> letters() const noexcept { return letters_; }

    /// Digits run together when every letter is a single digit, otherwise
    /// comma separated.
    std::string to_string() const {
        if (shape_.length() <= 9) {
            std::string s;
            for (int a : letters_) s += static_cast<char>('0' + a);
            return s;
        }
        return detail::join(letters_, ",");
    }

    friend bool operator==(const word& a, const word& b) {
        return a.shape_ == b.shape_ && a.letters_ == b.letters_;
    }

private:
    struct unchecked {};
    word(composition shape, std::vector<int> letters, unchecked)
        : shape_(std::move(shape)), letters_(std::move(letters)) {}

    friend struct detail::access;

    composition shape_;
    std::vector<int> letters_;
};

namespace detail {

struct access {
    static std::vector<int>& letters(word& w) { return w.letters_; }
    static std::vector<int>& image(permutation& p) { return p.image_; }
    static std::vector<int>& inverse(permutation& p) { return p.inverse_; }
    static void sync_inverse(permutation& p) {
        for (std::size_t i = 0; i < p.image_.size(); ++i) p.inverse_[p.image_[i] - 1] = static_cast<int>(i) + 1;
    }
};

} // namespace detail

/// Visit every word of S_eta exactly once in lexicographic order. The
/// visitor receives a reference to a single reused word object.
template <class F>
void for_each_word(const composition& shape, F&& visit) {
    word w = word::trivial(shape);
    do {
        if (!detail::visit_continue(visit, std::as_const(w))) return;
        auto& letters = detail::access::letters(w);
        if (!std::next_permutation(letters.begin(), letters.end())) return;
    } while (true);
}

template <class F>
void for_each_permutation_of_size(int n, F&& visit) {
    permutation p = permutation::identity(n);
    auto& image = detail::access::image(p);
    do {
        detail::access::sync_inverse(p);
        if (!detail::visit_continue(visit, std::as_const(p))) return;
    } while (std::next_permutation(image.begin(), image.end()));
}

inline void check_budget(std::uint64_t size, std::uint64_t budget, const std::string& what) {
    if (size > budget)
        throw budget_exceeded(what + " has " +
                              (size == std::numeric_limits<std::uint64_t>::max()
                                   ? std::string("too many")
                                   : std::to_string(size)) +
                              " elements, budget is " + std::to_string(budget));
}

/// Materialized S_eta in lexicographic order.
inline std::vector<word> enumerate_words(const composition& shape,
                                         std::uint64_t budget = default_budget) {
    check_budget(shape.multinomial(), budget, "S_eta for eta=(" + shape.to_string() + ")");
    std::vector<word> out;
    out.reserve(shape.multinomial());
    for_each_word(shape, [&](const word& w) { out.push_back(w); });
    return out;
}

} // namespace mzeta
