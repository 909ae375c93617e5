#pragma once

// Denert's statistics on eta-admissible permutations.
//
// A permutation sigma is drawn as the n x n grid whose cell (i, j) holds a
// one exactly when j = sigma(i). The block map sends a row or column index
// to the part of eta containing it; [<=] is the set of cells whose row
// block is at most their column block and [>] its complement.
//
// Every set below is materialized as explicit cells so that individual
// classifications can be checked, not just their sizes.

#include <compare>
#include <utility>
#include <vector>

#include "mzeta/perm_core.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

struct cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const cell&, const cell&) = default;
};

/// A set of grid cells, kept sorted row-major.
class grid_cell_set {
public:
    grid_cell_set() = default;
    explicit grid_cell_set(std::vector<cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    int size() const noexcept { return static_cast<int>(cells_.size()); }
    bool empty() const noexcept { return cells_.empty(); }
    bool contains(cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    const std::vector<cell>& cells() const noexcept { return cells_; }

    friend bool operator==(const grid_cell_set&, const grid_cell_set&) = default;

private:
    std::vector<cell> cells_;
};

/// The composition together with its block map.
class block_context {
public:
    explicit block_context(composition shape) : shape_(std::move(shape)) {}

    const composition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }
    int blocks() const noexcept { return shape_.length(); }

    int block_index(int i) const { return shape_.block_of(i); }

    /// (i, j) in [<=].
    bool weakly_below(int i, int j) const { return block(i) <= block(j); }
    /// (i, j) in [>].
    bool strictly_above(int i, int j) const { return block(i) > block(j); }

    // Unchecked lookup for hot loops; 1 <= i <= n.
    int block(int i) const { return shape_.block_table()[i - 1]; }

private:
    composition shape_;
};

namespace detail {

inline void require_same_size(const block_context& ctx, const permutation& p) {
    if (p.size() != ctx.size()) throw invalid_input("permutation size does not match composition");
}

} // namespace detail

/// pi_eta(sigma(1)) ... pi_eta(sigma(n)).
inline word project(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    std::vector<int> letters;
    letters.reserve(p.size());
    for (int v : p.one_line()) letters.push_back(ctx.block(v));
    return word(ctx.shape(), std::move(letters));
}

/// Des(sigma) is contained in Des(eta), i.e. sigma increases along every
/// block of positions.
inline bool is_admissible(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1) && ctx.block(i) == ctx.block(i + 1)) return false;
    return true;
}

/// Visit every eta-admissible permutation exactly once, in lexicographic
/// order of one-line notation. Values are assigned block by block, each
/// block receiving an increasing run.
template <class F>
void for_each_admissible(const block_context& ctx, F&& visit) {
    const int n = ctx.size();
    permutation p = permutation::identity(n);
    auto& image = detail::access::image(p);
    std::vector<char> used(n + 2, 0);

    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) {
            detail::access::sync_inverse(p);
            return detail::visit_continue(visit, std::as_const(p));
        }
        const int i = pos + 1;
        const bool starts_block = i == 1 || ctx.block(i - 1) != ctx.block(i);
        int remaining_in_block = 0;
        for (int k = i + 1; k <= n && ctx.block(k) == ctx.block(i); ++k) ++remaining_in_block;
        const int lo = starts_block ? 1 : image[pos - 1] + 1;
        int free_above = 0;
        for (int v = lo; v <= n; ++v) free_above += !used[v];
        for (int v = lo; v <= n; ++v) {
            if (used[v]) continue;
            --free_above;  // values strictly above v still unused
            if (free_above < remaining_in_block) break;
            used[v] = 1;
            image[pos] = v;
            bool go_on = self(self, pos + 1);
            used[v] = 0;
            if (!go_on) return false;
        }
        return true;
    };
    rec(rec, 0);
}

inline std::vector<permutation> enumerate_admissible(const block_context& ctx,
                                                     std::uint64_t budget = default_budget) {
    check_budget(ctx.shape().multinomial(), budget,
                 "S^eta for eta=(" + ctx.shape().to_string() + ")");
    std::vector<permutation> out;
    for_each_admissible(ctx, [&](const permutation& p) { out.push_back(p); });
    return out;
}

/// w -> (std(w))^{-1}.
inline permutation word_to_admissible(const word& w) { return standardize(w).inverse(); }

/// sigma -> pi_eta(sigma^{-1}); rejects non-admissible sigma.
inline word admissible_to_word(const block_context& ctx, const permutation& p) {
    if (!is_admissible(ctx, p)) throw invalid_input("permutation is not eta-admissible");
    return project(ctx, p.inverse());
}

/// I_sigma as grid cells: the ones (i, sigma(i)) lying in [>].
inline grid_cell_set i_cells(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    std::vector<cell> c;
    for (int i = 1; i <= p.size(); ++i)
        if (ctx.strictly_above(i, p(i))) c.push_back({i, p(i)});
    return grid_cell_set(std::move(c));
}

/// I_sigma as the sorted column indices j = sigma(i) of those cells; equals
/// Exc(pi_eta(sigma^{-1})).
inline std::vector<int> i_set(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    std::vector<int> cols;
    for (int j = 1; j <= p.size(); ++j)
        if (ctx.block(p.inverse_at(j)) > ctx.block(j)) cols.push_back(j);
    return cols;
}

inline int iexc(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    int c = 0;
    for (int i = 1; i <= p.size(); ++i) c += ctx.block(i) > ctx.block(p(i));
    return c;
}

namespace detail {

inline bool in_n_plus(const block_context& ctx, const permutation& p, int i, int j) {
    return ctx.block(i) <= ctx.block(j) && p(i) < j && p.inverse_at(j) < i;
}

inline bool in_n_minus(const block_context& ctx, const permutation& p, int i, int j) {
    return ctx.block(i) > ctx.block(j) && p(i) < j && p.inverse_at(j) > i;
}

template <class Pred>
grid_cell_set scan_grid(int n, Pred pred) {
    std::vector<cell> c;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (pred(i, j)) c.push_back({i, j});
    return grid_cell_set(std::move(c));
}

template <class Pred>
int count_grid(int n, Pred pred) {
    int c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) c += pred(i, j);
    return c;
}

inline void require_row_in_lower_region(const block_context& ctx, const permutation& p, int row) {
    if (row < 1 || row > p.size()) throw invalid_input("row out of range");
    if (!ctx.strictly_above(row, p(row)))
        throw invalid_input("row's one does not lie in [>]");
}

} // namespace detail

/// N+ = [<=] cap {(i, j) : sigma(i) < j, sigma^{-1}(j) < i}.
inline grid_cell_set n_plus_set(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    return detail::scan_grid(p.size(), [&](int i, int j) { return detail::in_n_plus(ctx, p, i, j); });
}

/// N- = [>] cap {(i, j) : sigma(i) < j, sigma^{-1}(j) > i}.
inline grid_cell_set n_minus_set(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    return detail::scan_grid(p.size(), [&](int i, int j) { return detail::in_n_minus(ctx, p, i, j); });
}

inline int n_plus_count(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    return detail::count_grid(p.size(), [&](int i, int j) { return detail::in_n_plus(ctx, p, i, j); });
}

inline int n_minus_count(const block_context& ctx, const permutation& p) {
    detail::require_same_size(ctx, p);
    return detail::count_grid(p.size(), [&](int i, int j) { return detail::in_n_minus(ctx, p, i, j); });
}

/// N+ split by where the row's one sits: (N+[<=], N+[>]).
inline std::pair<grid_cell_set, grid_cell_set> n_plus_split(const block_context& ctx,
                                                            const permutation& p) {
    detail::require_same_size(ctx, p);
    auto weak = detail::scan_grid(p.size(), [&](int i, int j) {
        return detail::in_n_plus(ctx, p, i, j) && ctx.weakly_below(i, p(i));
    });
    auto strict = detail::scan_grid(p.size(), [&](int i, int j) {
        return detail::in_n_plus(ctx, p, i, j) && ctx.strictly_above(i, p(i));
    });
    return {std::move(weak), std::move(strict)};
}

/// U_sigma(l): ones (i, sigma(i)) with l <= pi(i) and pi(sigma(i)) < l.
inline grid_cell_set u_set(const block_context& ctx, const permutation& p, int l) {
    detail::require_same_size(ctx, p);
    if (l < 2 || l > ctx.blocks()) throw invalid_input("block index l out of range [2, r]");
    std::vector<cell> c;
    for (int i = 1; i <= p.size(); ++i)
        if (l <= ctx.block(i) && ctx.block(p(i)) < l) c.push_back({i, p(i)});
    return grid_cell_set(std::move(c));
}

/// U^{-1}_sigma(l): ones (i, sigma(i)) with pi(i) < l <= pi(sigma(i)).
inline grid_cell_set u_inv_set(const block_context& ctx, const permutation& p, int l) {
    detail::require_same_size(ctx, p);
    if (l < 2 || l > ctx.blocks()) throw invalid_input("block index l out of range [2, r]");
    std::vector<cell> c;
    for (int i = 1; i <= p.size(); ++i)
        if (ctx.block(i) < l && l <= ctx.block(p(i))) c.push_back({i, p(i)});
    return grid_cell_set(std::move(c));
}

/// (M=(j0), M>(j0)) for a row j0 whose one lies in [>]. Both are subsets of
/// row j0: cells (j0, sigma(i)) with sigma(i) < sigma(j0) and
/// pi(sigma(i)) < pi(i), where i < j0 shares j0's block (M=) or i > j0 lies
/// in a strictly later block (M>).
inline std::pair<grid_cell_set, grid_cell_set> m_sets(const block_context& ctx,
                                                      const permutation& p, int j0) {
    detail::require_same_size(ctx, p);
    detail::require_row_in_lower_region(ctx, p, j0);
    std::vector<cell> equal, greater;
    for (int i = 1; i <= p.size(); ++i) {
        if (!(p(i) < p(j0)) || !(ctx.block(p(i)) < ctx.block(i))) continue;
        if (i < j0 && ctx.block(i) == ctx.block(j0)) equal.push_back({j0, p(i)});
        if (i > j0 && ctx.block(j0) < ctx.block(i)) greater.push_back({j0, p(i)});
    }
    return {grid_cell_set(std::move(equal)), grid_cell_set(std::move(greater))};
}

/// Row j0 of N-.
inline grid_cell_set n_minus_row(const block_context& ctx, const permutation& p, int j0) {
    detail::require_same_size(ctx, p);
    detail::require_row_in_lower_region(ctx, p, j0);
    std::vector<cell> c;
    for (int col = 1; col <= p.size(); ++col)
        if (detail::in_n_minus(ctx, p, j0, col)) c.push_back({j0, col});
    return grid_cell_set(std::move(c));
}

/// Row j0 of N+[>].
inline grid_cell_set n_plus_lower_row(const block_context& ctx, const permutation& p, int j0) {
    detail::require_same_size(ctx, p);
    detail::require_row_in_lower_region(ctx, p, j0);
    std::vector<cell> c;
    for (int col = 1; col <= p.size(); ++col)
        if (detail::in_n_plus(ctx, p, j0, col)) c.push_back({j0, col});
    return grid_cell_set(std::move(c));
}

/// Terms of den: sum over I_sigma, |N+|, |N-|, iexc.
struct den_parts {
    int i_sum = 0;
    int n_plus = 0;
    int n_minus = 0;
    int iexc = 0;

    int total() const { return i_sum + n_plus - n_minus - iexc; }
};

inline den_parts den_decomposition(const block_context& ctx, const permutation& p) {
    if (!is_admissible(ctx, p)) throw invalid_input("den is only defined on eta-admissible permutations");
    den_parts d;
    for (int i = 1; i <= p.size(); ++i)
        if (ctx.block(i) > ctx.block(p(i))) {
            d.i_sum += p(i);
            ++d.iexc;
        }
    d.n_plus = n_plus_count(ctx, p);
    d.n_minus = n_minus_count(ctx, p);
    return d;
}

/// Denert's statistic; rejects non-admissible input.
inline int den(const block_context& ctx, const permutation& p) {
    return den_decomposition(ctx, p).total();
}

} // namespace mzeta
