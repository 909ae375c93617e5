#pragma once

// Exhaustive checks of the equidistribution theorems, the lemma-level
// identities behind den, the Hadamard identity and the reciprocity
// dichotomy. Each check returns a report; the first counterexample, if any,
// is kept together with both sides of the failing identity.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzeta/admissible.hpp"
#include "mzeta/perm_core.hpp"
#include "mzeta/polyzeta.hpp"
#include "mzeta/signed.hpp"

namespace mzeta {

enum class check_kind {
    euler_mahonian_a,
    euler_mahonian_den,
    lemma42,
    lemma43,
    b_equidistribution,
    d_equidistribution,
    hadamard,
    reciprocity,
};

inline constexpr std::array<std::pair<check_kind, std::string_view>, 8> check_names{{
    {check_kind::euler_mahonian_a, "euler-mahonian-a"},
    {check_kind::euler_mahonian_den, "euler-mahonian-den"},
    {check_kind::lemma42, "lemma42"},
    {check_kind::lemma43, "lemma43"},
    {check_kind::b_equidistribution, "b-equidistribution"},
    {check_kind::d_equidistribution, "d-equidistribution"},
    {check_kind::hadamard, "hadamard"},
    {check_kind::reciprocity, "reciprocity"},
}};

inline std::string_view to_string(check_kind k) {
    for (const auto& [c, name] : check_names)
        if (c == k) return name;
    return "?";
}

inline check_kind parse_check(std::string_view name) {
    for (const auto& [c, n] : check_names)
        if (n == name) return c;
    throw invalid_input("unknown check '" + std::string(name) + "'");
}

/// Checks over a composition eta; the others run over B_n or D_n.
inline bool takes_composition(check_kind k) {
    return k != check_kind::b_equidistribution && k != check_kind::d_equidistribution;
}

struct counterexample {
    std::string object;  // the failing word, permutation or composition
    std::string identity;
    std::string lhs;
    std::string rhs;
};

struct check_report {
    std::string check;
    std::string subject;
    bool passed = true;
    std::uint64_t objects = 0;  // elements examined
    std::vector<std::pair<std::string, std::string>> details{};
    std::optional<counterexample> failure{};

    void fail(counterexample c) {
        if (!failure) failure = std::move(c);
        passed = false;
    }
};

namespace detail {

inline std::string eta_subject(const composition& shape) { return "eta=(" + shape.to_string() + ")"; }

inline void compare_polys(check_report& rep, const std::string& object, const std::string& identity,
                          const bipoly& lhs, const bipoly& rhs) {
    if (lhs != rhs) rep.fail({object, identity, lhs.to_string(), rhs.to_string()});
}

} // namespace detail

/// (maj, des) and (denh, exc) have the same joint distribution over S_eta.
inline check_report check_euler_mahonian_a(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "euler-mahonian-a", .subject = detail::eta_subject(shape)};
    const auto dom = domain::words(shape);
    bipoly maj_des = joint_distribution(dom, statistic::maj, statistic::des, budget);
    bipoly denh_exc = joint_distribution(dom, statistic::denh, statistic::exc, budget);
    rep.objects = dom.cardinality();
    detail::compare_polys(rep, rep.subject, "sum x^denh y^exc = sum x^maj y^des", denh_exc, maj_des);
    rep.details.emplace_back("distribution", maj_des.to_string());
    return rep;
}

/// (den, iexc) over S^eta matches (maj, des) and (denh, exc) over S_eta.
inline check_report check_euler_mahonian_den(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "euler-mahonian-den", .subject = detail::eta_subject(shape)};
    bipoly den_iexc = joint_distribution(domain::admissible(shape), statistic::den, statistic::iexc, budget);
    bipoly maj_des = joint_distribution(domain::words(shape), statistic::maj, statistic::des, budget);
    bipoly denh_exc = joint_distribution(domain::words(shape), statistic::denh, statistic::exc, budget);
    rep.objects = 2 * shape.multinomial();
    detail::compare_polys(rep, rep.subject, "sum x^den y^iexc = sum x^maj y^des", den_iexc, maj_des);
    detail::compare_polys(rep, rep.subject, "sum x^den y^iexc = sum x^denh y^exc", den_iexc, denh_exc);
    rep.details.emplace_back("distribution", den_iexc.to_string());
    return rep;
}

/// |N+[<=]| = inv(N(pi(sigma^-1))) for every sigma in S^eta.
inline check_report check_lemma42(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "lemma42", .subject = detail::eta_subject(shape)};
    check_budget(shape.multinomial(), budget, "S^eta");
    block_context ctx(shape);
    for_each_admissible(ctx, [&](const permutation& p) {
        ++rep.objects;
        const word u = project(ctx, p.inverse());
        const int lhs = n_plus_split(ctx, p).first.size();
        const int rhs = inv(nonexceeding_subword(u));
        if (lhs != rhs) {
            rep.fail({p.to_string(), "|N+[<=]| = inv(N(pi(sigma^-1)))", std::to_string(lhs), std::to_string(rhs)});
            return false;
        }
        return true;
    });
    return rep;
}

namespace detail {

// The lemma and its four proof steps on one admissible permutation; the
// first violated identity is recorded.
inline bool lemma43_on(const block_context& ctx, const permutation& p, check_report& rep) {
    const word u = project(ctx, p.inverse());
    const int e_imv = imv(exceeding_subword(u));
    const int strict = n_plus_split(ctx, p).second.size();
    const int minus = n_minus_count(ctx, p);
    const int ie = iexc(ctx, p);
    auto fail = [&](std::string identity, long lhs, long rhs) {
        rep.fail({p.to_string(), std::move(identity), std::to_string(lhs), std::to_string(rhs)});
        return false;
    };
    if (strict != e_imv + minus + ie) return fail("|N+[>]| = imv(E(pi(sigma^-1))) + |N-| + iexc", strict, e_imv + minus + ie);

    int m_total = 0;
    for (int j0 = 1; j0 <= p.size(); ++j0) {
        if (!(ctx.block(j0) > ctx.block(p(j0)))) continue;
        const std::string at = " at j0=" + std::to_string(j0);
        const auto [m_eq, m_gt] = m_sets(ctx, p, j0);
        const int l = ctx.block(j0);
        const int lhs2 = m_eq.size() + m_gt.size() + n_minus_row(ctx, p, j0).size() + 1;
        const int u_size = u_set(ctx, p, l).size();
        const int u_inv_size = u_inv_set(ctx, p, l).size();
        const int row = n_plus_lower_row(ctx, p, j0).size();
        if (lhs2 != u_size) return fail("|M=| + |M>| + |N-(j0)| + 1 = |U(pi(j0))|" + at, lhs2, u_size);
        if (u_size != u_inv_size) return fail("|U(pi(j0))| = |U^-1(pi(j0))|" + at, u_size, u_inv_size);
        if (u_inv_size != row) return fail("|U^-1(pi(j0))| = |N+[>](j0)|" + at, u_inv_size, row);
        m_total += m_eq.size() + m_gt.size();
    }
    if (m_total != e_imv) return fail("sum_j0 (|M=(j0)| + |M>(j0)|) = imv(E(pi(sigma^-1)))", m_total, e_imv);
    return true;
}

} // namespace detail

/// |N+[>]| = imv(E(pi(sigma^-1))) + |N-| + iexc(sigma) for every sigma in
/// S^eta, together with the per-row identities
///   |M=(j0)| + |M>(j0)| + |N-(j0)| + 1 = |U(pi(j0))| = |U^-1(pi(j0))| = |N+[>](j0)|
/// and sum_j0 (|M=(j0)| + |M>(j0)|) = imv(E(pi(sigma^-1))).
inline check_report check_lemma43(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "lemma43", .subject = detail::eta_subject(shape)};
    check_budget(shape.multinomial(), budget, "S^eta");
    block_context ctx(shape);
    for_each_admissible(ctx, [&](const permutation& p) {
        ++rep.objects;
        return detail::lemma43_on(ctx, p, rep);
    });
    return rep;
}

/// Over B_n: (nmaj, ndes) and (nden, excabs) are both distributed as
/// (fmaj, fdes).
inline check_report check_b_equidistribution(int n, std::uint64_t budget = default_budget) {
    check_report rep{.check = "b-equidistribution", .subject = "n=" + std::to_string(n)};
    const auto dom = domain::hyperoctahedral(n);
    check_budget(dom.cardinality(), budget, dom.describe());
    detail::distribution_counter flag, negative, denert;
    for_each_signed(n, [&](const signed_permutation& s) {
        const auto b = b_stats(s);
        flag.add(b.fmaj, b.fdes);
        negative.add(b.nmaj, b.ndes);
        denert.add(nden(s), excabs(s));
    });
    rep.objects = dom.cardinality();
    const bipoly f = flag.to_bipoly();
    detail::compare_polys(rep, rep.subject, "sum x^nmaj y^ndes = sum x^fmaj y^fdes", negative.to_bipoly(), f);
    detail::compare_polys(rep, rep.subject, "sum x^nden y^excabs = sum x^fmaj y^fdes", denert.to_bipoly(), f);
    rep.details.emplace_back("distribution", f.to_string());
    return rep;
}

/// Over D_n: (dden, dexc) is distributed as (dmaj, ddes), and
/// nsp = -sum_{DNeg} sigma(i) - dneg holds pointwise.
inline check_report check_d_equidistribution(int n, std::uint64_t budget = default_budget) {
    check_report rep{.check = "d-equidistribution", .subject = "n=" + std::to_string(n)};
    const auto dom = domain::even_signed(n);
    check_budget(dom.cardinality(), budget, dom.describe());
    detail::distribution_counter major, denert;
    for_each_even_signed(n, [&](const signed_permutation& s) {
        ++rep.objects;
        int dneg_sum = 0;
        const auto dn = dneg_set(s);
        for (int i : dn) dneg_sum += s(i);
        const int lhs = nsp(s);
        const int rhs = -dneg_sum - static_cast<int>(dn.size());
        if (lhs != rhs) {
            rep.fail({s.to_string(), "nsp = -sum_{DNeg} sigma(i) - dneg", std::to_string(lhs), std::to_string(rhs)});
            return false;
        }
        const auto d = d_stats(s);
        major.add(d.dmaj, d.ddes);
        denert.add(d.dden, d.dexc);
        return true;
    });
    if (!rep.passed) return rep;
    const bipoly m = major.to_bipoly();
    detail::compare_polys(rep, rep.subject, "sum x^dden y^dexc = sum x^dmaj y^ddes", denert.to_bipoly(), m);
    rep.details.emplace_back("distribution", m.to_string());
    return rep;
}

/// Numerator of W_eta against (1 - x^n y) times the y-Hadamard product of
/// the single-block series, compared through y^{n+1}.
inline check_report check_hadamard(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "hadamard", .subject = detail::eta_subject(shape)};
    const bipoly num = w_numerator(shape, budget);
    rep.objects = 2 * shape.multinomial();
    const auto r = hadamard_check(shape, num);
    rep.details.emplace_back("depth", "y^0..y^" + std::to_string(r.depth));
    if (!r.holds) {
        const auto& w = *r.witness;
        rep.fail({rep.subject, "coefficient of y^" + std::to_string(w.y_degree), w.numerator_side.to_string(),
                  w.hadamard_side.to_string()});
    }
    return rep;
}

/// Rectangles (m^r) must satisfy the functional equation with
/// ((-1)^{rm}, rm(m-1)/2, m); every other composition must fail it. A
/// failure on a non-rectangle is the expected outcome and passes.
inline check_report check_reciprocity(const composition& shape, std::uint64_t budget = default_budget) {
    check_report rep{.check = "reciprocity", .subject = detail::eta_subject(shape)};
    const bipoly num = w_numerator(shape, budget);
    rep.objects = 2 * shape.multinomial();
    const auto got = reciprocity_check(num, shape.size());
    auto describe = [](const reciprocity_result& r) {
        if (!r.holds) return std::string("fails");
        return "holds with sign=" + std::to_string(r.sign) + ", a=" + std::to_string(r.x_exponent) +
               ", b=" + std::to_string(r.y_exponent);
    };
    if (shape.is_rectangle()) {
        const auto want = rectangle_reciprocity(shape.length(), shape.part(1));
        rep.details.emplace_back("result", describe(got) + " (expected: rectangle)");
        if (got != want) rep.fail({rep.subject, "W(1/x,1/y) = sign x^a y^b W(x,y)", describe(got), describe(want)});
    } else {
        rep.details.emplace_back("result", describe(got) + " (expected: non-rectangle)");
        if (got.holds) rep.fail({rep.subject, "no functional equation off rectangles", describe(got), "fails"});
    }
    return rep;
}

inline check_report run_check(check_kind k, const composition& shape, std::uint64_t budget = default_budget) {
    switch (k) {
        case check_kind::euler_mahonian_a: return check_euler_mahonian_a(shape, budget);
        case check_kind::euler_mahonian_den: return check_euler_mahonian_den(shape, budget);
        case check_kind::lemma42: return check_lemma42(shape, budget);
        case check_kind::lemma43: return check_lemma43(shape, budget);
        case check_kind::hadamard: return check_hadamard(shape, budget);
        case check_kind::reciprocity: return check_reciprocity(shape, budget);
        default: throw invalid_input(std::string(to_string(k)) + " takes --n, not --eta");
    }
}

inline check_report run_check(check_kind k, int n, std::uint64_t budget = default_budget) {
    switch (k) {
        case check_kind::b_equidistribution: return check_b_equidistribution(n, budget);
        case check_kind::d_equidistribution: return check_d_equidistribution(n, budget);
        default: throw invalid_input(std::string(to_string(k)) + " takes --eta, not --n");
    }
}

struct sweep_report {
    std::string check;
    int up_to = 0;
    bool passed = true;
    std::uint64_t subjects = 0;
    std::uint64_t objects = 0;
    std::optional<check_report> first_failure{};
};

/// Run a check for every composition of every n <= up_to (or every n <=
/// up_to for signed checks), stopping at the first failing subject.
inline sweep_report run_sweep(check_kind k, int up_to, std::uint64_t budget = default_budget) {
    if (up_to < 1 || up_to > max_size) throw invalid_input("sweep bound out of range");
    sweep_report sw{.check = std::string(to_string(k)), .up_to = up_to};
    auto absorb = [&](check_report rep) {
        ++sw.subjects;
        sw.objects += rep.objects;
        if (!rep.passed) {
            sw.passed = false;
            sw.first_failure = std::move(rep);
        }
        return sw.passed;
    };
    for (int n = 1; n <= up_to; ++n) {
        if (takes_composition(k)) {
            for (const auto& c : compositions_of(n))
                if (!absorb(run_check(k, c, budget))) return sw;
        } else if (!absorb(run_check(k, n, budget))) {
            return sw;
        }
    }
    return sw;
}

} // namespace mzeta
