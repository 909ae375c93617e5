#pragma once

// Joint distributions as bivariate polynomials, the genus zeta numerator
//
//     W_eta(x, y) = sum_{sigma in S^eta} x^den y^iexc / prod_{j=0}^{n-1} (1 - x^j y),
//
// and the identities checked on it: the Hadamard-product formula, the
// reciprocity dichotomy for rectangles, and the unitary-factor conjecture.
// Rational functions stay in factored form; nothing is ever put over an
// expanded common denominator.

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzeta/admissible.hpp"
#include "mzeta/bipoly.hpp"
#include "mzeta/perm_core.hpp"
#include "mzeta/signed.hpp"
#include "mzeta/types.hpp"

namespace mzeta {

// ---------------------------------------------------------------------------
// Joint distributions

enum class statistic {
    maj, des, inv, imv, exc, denh,          // words, and type A data
    den, iexc,                              // admissible permutations
    neg, ndes, nmaj, fdes, fmaj, excabs, nden, nsp,  // B_n
    dneg, ddes, dmaj, dexc, dden            // D_n
};

inline constexpr std::array<std::pair<statistic, std::string_view>, 21> statistic_names{{
    {statistic::maj, "maj"},   {statistic::des, "des"},       {statistic::inv, "inv"},
    {statistic::imv, "imv"},   {statistic::exc, "exc"},       {statistic::denh, "denh"},
    {statistic::den, "den"},   {statistic::iexc, "iexc"},     {statistic::neg, "neg"},
    {statistic::ndes, "ndes"}, {statistic::nmaj, "nmaj"},     {statistic::fdes, "fdes"},
    {statistic::fmaj, "fmaj"}, {statistic::excabs, "excabs"}, {statistic::nden, "nden"},
    {statistic::nsp, "nsp"},   {statistic::dneg, "dneg"},     {statistic::ddes, "ddes"},
    {statistic::dmaj, "dmaj"}, {statistic::dexc, "dexc"},     {statistic::dden, "dden"},
}};

inline std::string_view to_string(statistic s) {
    for (const auto& [k, name] : statistic_names)
        if (k == s) return name;
    return "?";
}

inline statistic parse_statistic(std::string_view name) {
    for (const auto& [k, n] : statistic_names)
        if (n == name) return k;
    throw invalid_input("unknown statistic '" + std::string(name) + "'");
}

enum class domain_kind { words, admissible, hyperoctahedral, even_signed };

/// A finite set of combinatorial objects to sum over.
struct domain {
    domain_kind kind;
    std::optional<composition> shape;  // words / admissible
    int n = 0;                         // signed domains

    static domain words(composition c) { return {domain_kind::words, std::move(c), 0}; }
    static domain admissible(composition c) { return {domain_kind::admissible, std::move(c), 0}; }
    static domain hyperoctahedral(int n) { return {domain_kind::hyperoctahedral, std::nullopt, n}; }
    static domain even_signed(int n) { return {domain_kind::even_signed, std::nullopt, n}; }

    std::uint64_t cardinality() const {
        switch (kind) {
            case domain_kind::words:
            case domain_kind::admissible: return shape->multinomial();
            case domain_kind::hyperoctahedral: return hyperoctahedral_order(n);
            case domain_kind::even_signed: return even_signed_order(n);
        }
        return 0;
    }

    std::string describe() const {
        switch (kind) {
            case domain_kind::words: return "S_eta, eta=(" + shape->to_string() + ")";
            case domain_kind::admissible: return "S^eta, eta=(" + shape->to_string() + ")";
            case domain_kind::hyperoctahedral: return "B_" + std::to_string(n);
            case domain_kind::even_signed: return "D_" + std::to_string(n);
        }
        return {};
    }
};

namespace detail {

[[noreturn]] inline void unsupported(statistic s, const char* where) {
    throw invalid_input("statistic '" + std::string(to_string(s)) + "' is not defined on " + where);
}

inline int word_statistic(statistic s, const word& w) {
    switch (s) {
        case statistic::maj: return maj(w);
        case statistic::des: return des(w);
        case statistic::inv: return inv(w.letters());
        case statistic::imv: return imv(w.letters());
        case statistic::exc: return exc(w);
        case statistic::denh: return denh(w);
        default: unsupported(s, "multiset permutations");
    }
}

inline int admissible_statistic(statistic s, const block_context& ctx, const permutation& p) {
    switch (s) {
        case statistic::den: return den(ctx, p);
        case statistic::iexc: return iexc(ctx, p);
        case statistic::maj: return maj(p);
        case statistic::des: return des(p);
        case statistic::inv: return inv(p.one_line());
        default: unsupported(s, "admissible permutations");
    }
}

inline int signed_statistic(statistic s, const signed_permutation& w, bool type_d) {
    switch (s) {
        case statistic::des: return des(w.window());
        case statistic::maj: return maj(w.window());
        case statistic::neg: return neg(w);
        case statistic::ndes: return b_stats(w).ndes;
        case statistic::nmaj: return b_stats(w).nmaj;
        case statistic::fdes: return b_stats(w).fdes;
        case statistic::fmaj: return b_stats(w).fmaj;
        case statistic::excabs: return excabs(w);
        case statistic::nden: return nden(w);
        case statistic::nsp: return nsp(w);
        default: break;
    }
    if (!type_d) unsupported(s, "signed permutations");
    const auto d = d_stats(w);
    switch (s) {
        case statistic::dneg: return d.dneg;
        case statistic::ddes: return d.ddes;
        case statistic::dmaj: return d.dmaj;
        case statistic::dexc: return d.dexc;
        case statistic::dden: return d.dden;
        default: unsupported(s, "even-signed permutations");
    }
}

struct distribution_counter {
    std::map<monomial, std::uint64_t> counts;

    void add(int a, int b) { ++counts[{a, b}]; }

    bipoly to_bipoly() const {
        bipoly p;
        for (const auto& [m, c] : counts) p.add_term(m, integer(c));
        return p;
    }
};

} // namespace detail

/// sum over the domain of x^{first} y^{second}.
inline bipoly joint_distribution(const domain& dom, statistic first, statistic second,
                                 std::uint64_t budget = default_budget) {
    check_budget(dom.cardinality(), budget, dom.describe());
    detail::distribution_counter acc;
    switch (dom.kind) {
        case domain_kind::words:
            for_each_word(*dom.shape, [&](const word& w) {
                acc.add(detail::word_statistic(first, w), detail::word_statistic(second, w));
            });
            break;
        case domain_kind::admissible: {
            block_context ctx(*dom.shape);
            for_each_admissible(ctx, [&](const permutation& p) {
                acc.add(detail::admissible_statistic(first, ctx, p),
                        detail::admissible_statistic(second, ctx, p));
            });
            break;
        }
        case domain_kind::hyperoctahedral:
            for_each_signed(dom.n, [&](const signed_permutation& s) {
                acc.add(detail::signed_statistic(first, s, false), detail::signed_statistic(second, s, false));
            });
            break;
        case domain_kind::even_signed:
            for_each_even_signed(dom.n, [&](const signed_permutation& s) {
                acc.add(detail::signed_statistic(first, s, true), detail::signed_statistic(second, s, true));
            });
            break;
    }
    return acc.to_bipoly();
}

// ---------------------------------------------------------------------------
// Gaussian binomials and y-series

/// [top choose bottom]_x, zero when bottom is outside [0, top].
inline unipoly gaussian_binomial(int top, int bottom) {
    if (top < 0) throw invalid_input("gaussian_binomial: negative top");
    if (bottom < 0 || bottom > top) return {};
    // Row-by-row q-Pascal: [m, k] = [m-1, k-1] + x^k [m-1, k].
    std::vector<unipoly> row{unipoly::constant(1)};
    for (int m = 1; m <= top; ++m) {
        std::vector<unipoly> next(m + 1);
        next[0] = unipoly::constant(1);
        next[m] = unipoly::constant(1);
        for (int k = 1; k < m; ++k) next[k] = row[k - 1] + row[k].shifted(k);
        row = std::move(next);
    }
    return row[bottom];
}

/// Truncated power series in y with polynomial-in-x coefficients.
using y_series = std::vector<unipoly>;

namespace detail {

// s <- s / (1 - x^j y), truncated to s.size() terms.
inline void divide_by_geometric_factor(y_series& s, int j) {
    for (std::size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1].shifted(j);
}

// s <- s * (1 - x^j y), truncated.
inline void multiply_by_linear_factor(y_series& s, int j) {
    for (std::size_t k = s.size(); k-- > 1;) s[k] -= s[k - 1].shifted(j);
}

inline y_series series_of(const bipoly& p, int terms) {
    y_series s(terms);
    for (int k = 0; k < terms; ++k) s[k] = p.y_coefficient(k);
    return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// The genus zeta numerator

/// sum_{sigma in S^eta} x^den y^iexc.
inline bipoly w_numerator_admissible(const composition& shape, std::uint64_t budget = default_budget) {
    return joint_distribution(domain::admissible(shape), statistic::den, statistic::iexc, budget);
}

/// sum_{w in S_eta} x^maj y^des.
inline bipoly w_numerator_words(const composition& shape, std::uint64_t budget = default_budget) {
    return joint_distribution(domain::words(shape), statistic::maj, statistic::des, budget);
}

/// Numerator of W_eta. Computed over S^eta from (den, iexc) and over S_eta
/// from (maj, des); the two must agree or consistency_error is thrown.
inline bipoly w_numerator(const composition& shape, std::uint64_t budget = default_budget) {
    bipoly via_den = w_numerator_admissible(shape, budget);
    bipoly via_maj = w_numerator_words(shape, budget);
    if (via_den != via_maj)
        throw consistency_error("(den, iexc) and (maj, des) numerators differ for eta=(" +
                                shape.to_string() + ")");
    return via_den;
}

/// W_eta in factored form: numerator over prod_{j in denominator} (1 - x^j y).
struct rational_w {
    bipoly numerator;
    std::vector<int> denominator_exponents;

    static rational_w of(const composition& shape, std::uint64_t budget = default_budget) {
        std::vector<int> js(shape.size());
        std::iota(js.begin(), js.end(), 0);
        return {w_numerator(shape, budget), std::move(js)};
    }

    /// First `terms` coefficients of the y-expansion.
    y_series series(int terms) const {
        y_series s = detail::series_of(numerator, terms);
        for (int j : denominator_exponents) detail::divide_by_geometric_factor(s, j);
        return s;
    }

    /// Exact value at (x, y); throws invalid_input at a pole.
    rational evaluate(const rational& x, const rational& y) const {
        rational den = 1;
        for (int j : denominator_exponents) {
            rational f = 1 - detail::rational_pow(x, j) * y;
            if (f == 0) throw invalid_input("evaluation point is a pole: 1 - x^" + std::to_string(j) + " y = 0");
            den *= f;
        }
        return numerator.evaluate(x, y) / den;
    }
};

/// sum_k prod_i [eta_i + k choose k]_x y^k: the y-Hadamard product of the
/// expansions of prod_{0 <= j <= eta_i} 1 / (1 - x^j y).
inline y_series hadamard_series(const composition& shape, int terms) {
    y_series s(terms);
    for (int k = 0; k < terms; ++k) {
        unipoly c = unipoly::constant(1);
        for (int part : shape.parts()) c = c * gaussian_binomial(part + k, k);
        s[k] = std::move(c);
    }
    return s;
}

struct hadamard_mismatch {
    int y_degree;
    unipoly numerator_side;
    unipoly hadamard_side;
};

struct hadamard_result {
    bool holds = false;
    int depth = 0;  // y-degrees 0..depth were compared
    std::optional<hadamard_mismatch> witness;
};

/// Compare the numerator of W_eta with prod_{j=0}^{n} (1 - x^j y) times the
/// Hadamard series, coefficient by coefficient for y^0 .. y^{n+1}.
inline hadamard_result hadamard_check(const composition& shape, const bipoly& numerator) {
    const int n = shape.size();
    const int depth = n + 1;
    y_series rhs = hadamard_series(shape, depth + 1);
    for (int j = 0; j <= n; ++j) detail::multiply_by_linear_factor(rhs, j);
    hadamard_result r{true, depth, std::nullopt};
    for (int k = 0; k <= depth; ++k) {
        unipoly lhs = numerator.y_coefficient(k);
        if (lhs != rhs[k]) {
            r.holds = false;
            r.witness = hadamard_mismatch{k, std::move(lhs), rhs[k]};
            break;
        }
    }
    return r;
}

inline hadamard_result hadamard_check(const composition& shape, std::uint64_t budget = default_budget) {
    return hadamard_check(shape, w_numerator(shape, budget));
}

// ---------------------------------------------------------------------------
// Reciprocity

struct reciprocity_result {
    bool holds = false;
    int sign = 0;        // epsilon
    int x_exponent = 0;  // a
    int y_exponent = 0;  // b

    friend bool operator==(const reciprocity_result&, const reciprocity_result&) = default;
};

/// Decide whether W(1/x, 1/y) = sign x^a y^b W(x, y) for some sign and
/// integers a, b. With D = prod_{j<n} (1 - x^j y),
/// D(1/x, 1/y) = (-1)^n x^{-n(n-1)/2} y^{-n} D(x, y), so the question reduces
/// to the numerator N being self-reciprocal up to a signed monomial.
inline reciprocity_result reciprocity_check(const bipoly& numerator, int n) {
    if (numerator.is_zero()) throw invalid_input("reciprocity of the zero polynomial");
    // N(1/x, 1/y) = x^{-dx} y^{-dy} R(x, y) with R = reversed().
    const bipoly reversed = numerator.reversed();
    const int shift_x = reversed.x_min_degree() - numerator.x_min_degree();
    const int shift_y = reversed.y_min_degree() - numerator.y_min_degree();
    // Compare R / x^{min} y^{min} against N / x^{min} y^{min}.
    const bipoly r0 = reversed.shifted(-reversed.x_min_degree(), -reversed.y_min_degree());
    const bipoly n0 = numerator.shifted(-numerator.x_min_degree(), -numerator.y_min_degree());
    int sign = 0;
    if (r0 == n0) sign = 1;
    else if (r0 == -n0) sign = -1;
    if (sign == 0) return {};
    // N(1/x,1/y) = sign x^{shift_x - dx} y^{shift_y - dy} N(x, y).
    const int nx = shift_x - numerator.x_degree();
    const int ny = shift_y - numerator.y_degree();
    const int den_sign = n % 2 == 0 ? 1 : -1;
    return {true, sign * den_sign, nx + n * (n - 1) / 2, ny + n};
}

inline reciprocity_result reciprocity_check(const composition& shape, std::uint64_t budget = default_budget) {
    return reciprocity_check(w_numerator(shape, budget), shape.size());
}

/// The exponents predicted for a rectangle (m^r):
/// ((-1)^{rm}, rm(m-1)/2, m).
inline reciprocity_result rectangle_reciprocity(int r, int m) {
    return {true, (r * m) % 2 == 0 ? 1 : -1, r * m * (m - 1) / 2, m};
}

// ---------------------------------------------------------------------------
// Evaluation

/// W_eta(q, t) as an exact rational; at t = q^{-ns} this is the genus zeta
/// function of the hereditary order with local invariant eta.
inline rational zeta_eval(const composition& shape, const rational& q, const rational& t,
                          std::uint64_t budget = default_budget) {
    return rational_w::of(shape, budget).evaluate(q, t);
}

// ---------------------------------------------------------------------------
// Unitary factors

namespace detail {

inline int mobius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
    }
    return m > 1 ? -result : result;
}

} // namespace detail

/// The d-th cyclotomic polynomial, prod_{e | d} (x^e - 1)^{mu(d/e)}.
inline unipoly cyclotomic(int d) {
    if (d < 1) throw invalid_input("cyclotomic index must be positive");
    unipoly num = unipoly::constant(1);
    unipoly den = unipoly::constant(1);
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = detail::mobius(d / e);
        if (mu == 0) continue;
        unipoly f = unipoly::monomial(e) - unipoly::constant(1);
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
    }
    return *num.divide_exact(den);
}

/// F(x^a y^b).
inline bipoly compose_monomial(const unipoly& f, int a, int b) {
    bipoly p;
    for (int k = 0; k <= f.degree(); ++k) p.add_term({a * k, b * k}, f[k]);
    return p;
}

struct scan_bounds {
    int max_a = 1;
    int max_b = 1;
    int max_d = 2;

    /// max_a = n, max_b = n, max_d = 2 n^2.
    static scan_bounds defaults_for(int n) { return {n, n, 2 * n * n}; }
};

struct unitary_factor {
    int d = 0;  // Phi_d
    int a = 0;  // x exponent of the inner monomial
    int b = 0;  // y exponent of the inner monomial
    bipoly factor;
};

/// Every Phi_d(x^a y^b) within bounds that divides f exactly. Directions are
/// (1, 0) and (a, b) with 0 <= a <= max_a, 1 <= b <= max_b; d runs over
/// 1..max_d. An empty result only means no cyclotomic candidate within
/// bounds divides f.
inline std::vector<unitary_factor> unitary_factor_scan(const bipoly& f, const scan_bounds& bounds) {
    if (f.is_zero()) throw invalid_input("unitary factor scan of the zero polynomial");
    if (bounds.max_a < 0 || bounds.max_b < 1 || bounds.max_d < 1) throw invalid_input("scan bounds must be positive");
    std::vector<std::pair<int, int>> directions{{1, 0}};
    for (int a = 0; a <= bounds.max_a; ++a)
        for (int b = 1; b <= bounds.max_b; ++b) directions.emplace_back(a, b);

    const int fx = f.x_degree();
    const int fy = f.y_degree();
    std::vector<std::optional<unipoly>> phi(bounds.max_d + 1);
    std::vector<unitary_factor> found;
    for (int d = 1; d <= bounds.max_d; ++d) {
        for (auto [a, b] : directions) {
            // phi(d) >= 1, so the candidate's degrees are a*phi(d), b*phi(d).
            if (!phi[d]) phi[d] = cyclotomic(d);
            const int deg = phi[d]->degree();
            if (a * deg > fx || b * deg > fy) continue;
            bipoly candidate = compose_monomial(*phi[d], a, b);
            if (divide_exact(f, candidate)) found.push_back({d, a, b, std::move(candidate)});
        }
    }
    return found;
}

// ---------------------------------------------------------------------------
// Conjecture report

enum class conjecture_verdict { consistent, counterexample };

struct conjecture_report {
    composition shape;
    bool rectangle = false;
    int rows = 0;     // r
    int width = 0;    // m, when a rectangle
    bool qualifies = false;  // rectangle with r even and m odd
    std::optional<int> probe_exponent{};  // n/2 when n is even
    bool divisible = false;  // (1 + x^{n/2} y) divides the numerator
    bipoly numerator{};
    std::optional<bipoly> residual{};  // f_0 when divisible
    std::vector<unitary_factor> factors{};  // scan of f_0 if divisible, else of the numerator
    scan_bounds bounds{};
    conjecture_verdict verdict = conjecture_verdict::consistent;
};

/// Qualifying rectangles must be divisible by (1 + x^{rm/2} y) with a
/// residual free of detectable unitary factors; every other composition
/// must show no unitary factor at all within the scan bounds.
inline conjecture_report make_conjecture_report(const composition& shape, const scan_bounds& bounds,
                                                std::uint64_t budget = default_budget) {
    conjecture_report rep{.shape = shape};
    rep.bounds = bounds;
    rep.rectangle = shape.is_rectangle();
    rep.rows = shape.length();
    rep.width = rep.rectangle ? shape.part(1) : 0;
    rep.qualifies = rep.rectangle && rep.rows % 2 == 0 && rep.width % 2 == 1;
    rep.numerator = w_numerator(shape, budget);
    const int n = shape.size();
    if (n % 2 == 0) {
        rep.probe_exponent = n / 2;
        bipoly probe = bipoly::constant(1) + bipoly::term(n / 2, 1);
        if (auto q = divide_exact(rep.numerator, probe)) {
            rep.divisible = true;
            rep.residual = std::move(*q);
        }
    }
    const bipoly& scanned = rep.divisible ? *rep.residual : rep.numerator;
    if (!(scanned.x_degree() == 0 && scanned.y_degree() == 0)) rep.factors = unitary_factor_scan(scanned, bounds);
    const bool ok = rep.qualifies == rep.divisible && rep.factors.empty();
    rep.verdict = ok ? conjecture_verdict::consistent : conjecture_verdict::counterexample;
    return rep;
}

inline conjecture_report make_conjecture_report(const composition& shape, std::uint64_t budget = default_budget) {
    return make_conjecture_report(shape, scan_bounds::defaults_for(shape.size()), budget);
}

} // namespace mzeta
