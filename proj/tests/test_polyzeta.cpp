#include <gtest/gtest.h>

#include "mzeta/polyzeta.hpp"
#include "oracles.hpp"

using namespace mzeta;

namespace {

bipoly xy(int a, int b, int c = 1) { return bipoly::term(a, b, c); }
const bipoly one = bipoly::constant(1);

unipoly from_ll(const std::vector<long long>& c) {
    std::vector<integer> v(c.begin(), c.end());
    return unipoly(std::move(v));
}

bipoly from_distribution(const oracle::distribution& d) {
    bipoly p;
    for (const auto& [k, c] : d) p.add_term({k.first, k.second}, c);
    return p;
}

// y-expansion of sum_w x^maj y^des / prod_{j<n} (1 - x^j y), by brute force.
std::vector<unipoly> w_series_oracle(const std::vector<int>& eta, int terms) {
    const int n = oracle::total(eta);
    std::vector<std::vector<long long>> acc(terms);
    for (const auto& w : oracle::all_words(eta)) {
        const int m = oracle::maj(w), d = oracle::des(w);
        for (int k = d; k < terms; ++k) {
            const auto g = oracle::geometric_series_coefficient(n - 1, k - d);
            if (acc[k].size() < g.size() + m) acc[k].resize(g.size() + m, 0);
            for (std::size_t e = 0; e < g.size(); ++e) acc[k][e + m] += g[e];
        }
    }
    std::vector<unipoly> out;
    for (auto& c : acc) out.push_back(from_ll(c.empty() ? std::vector<long long>{0} : c));
    return out;
}

} // namespace

TEST(distribution, documented_examples) {
    EXPECT_EQ(joint_distribution(domain::words(composition({2, 1})), statistic::denh, statistic::exc),
              one + xy(1, 1) + xy(2, 1));
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(joint_distribution(domain::words(composition({n})), statistic::maj, statistic::des), one);
    const composition ones({1, 1, 1, 1});
    EXPECT_EQ(joint_distribution(domain::admissible(ones), statistic::den, statistic::iexc),
              joint_distribution(domain::words(ones), statistic::maj, statistic::des));
}

TEST(distribution, d2_dden_dexc_matches_oracle) {
    oracle::distribution ref;
    for (const auto& w : oracle::all_signed(2, true)) {
        const auto s = oracle::signed_of(w);
        ++ref[{s.dden, s.dexc}];
    }
    const bipoly p = joint_distribution(domain::even_signed(2), statistic::dden, statistic::dexc);
    EXPECT_EQ(p, from_distribution(ref));
    EXPECT_EQ(p, one + xy(1, 1, 2) + xy(2, 2));
    EXPECT_EQ(p.evaluate(integer(1), integer(1)), 4);
}

TEST(distribution, value_at_one_is_cardinality) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            const auto p = joint_distribution(domain::admissible(c), statistic::den, statistic::iexc);
            EXPECT_EQ(p.evaluate(integer(1), integer(1)), c.multinomial());
        }
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(joint_distribution(domain::hyperoctahedral(n), statistic::fmaj, statistic::fdes)
                      .evaluate(integer(1), integer(1)),
                  hyperoctahedral_order(n));
        EXPECT_EQ(joint_distribution(domain::even_signed(n), statistic::dmaj, statistic::ddes)
                      .evaluate(integer(1), integer(1)),
                  even_signed_order(n));
    }
}

TEST(distribution, rejects_statistics_outside_their_domain) {
    const auto words = domain::words(composition({2, 1}));
    EXPECT_THROW(joint_distribution(words, statistic::den, statistic::des), invalid_input);
    EXPECT_THROW(joint_distribution(domain::hyperoctahedral(2), statistic::dden, statistic::des), invalid_input);
    EXPECT_THROW(joint_distribution(domain::admissible(composition({2, 1})), statistic::denh, statistic::des),
                 invalid_input);
    EXPECT_THROW(parse_statistic("majj"), invalid_input);
    EXPECT_EQ(parse_statistic("excabs"), statistic::excabs);
}

TEST(distribution, budget_is_enforced) {
    EXPECT_THROW(joint_distribution(domain::words(composition({1, 1, 1, 1})), statistic::maj, statistic::des, 23),
                 budget_exceeded);
    EXPECT_THROW(joint_distribution(domain::hyperoctahedral(4), statistic::fmaj, statistic::fdes, 100),
                 budget_exceeded);
}

TEST(gaussian, documented_values) {
    EXPECT_EQ(gaussian_binomial(2, 1), (unipoly{1, 1}));
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(gaussian_binomial(m, 0), unipoly::constant(1));
    EXPECT_EQ(gaussian_binomial(4, 2), (unipoly{1, 1, 2, 1, 1}));
    EXPECT_TRUE(gaussian_binomial(3, 4).is_zero());
    EXPECT_TRUE(gaussian_binomial(3, -1).is_zero());
    EXPECT_THROW(gaussian_binomial(-1, 0), invalid_input);
}

TEST(gaussian, matches_series_oracle_is_palindromic_and_counts) {
    for (int m = 0; m <= 8; ++m)
        for (int k = 0; m + k <= 12; ++k) {
            const unipoly g = gaussian_binomial(m + k, k);
            EXPECT_EQ(g, from_ll(oracle::geometric_series_coefficient(m, k))) << m << "," << k;
            EXPECT_TRUE(g.is_palindromic());
            EXPECT_EQ(g.evaluate(1), oracle::binomial(m + k, k));
        }
}

TEST(numerator, documented_values) {
    EXPECT_EQ(w_numerator(composition({1, 1})), one + xy(1, 1));
    EXPECT_EQ(w_numerator(composition({2, 1})), one + xy(1, 1) + xy(2, 1));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(w_numerator(composition({n})), one);
}

TEST(numerator, both_routes_agree_and_count_multiset_permutations) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            const bipoly a = w_numerator_admissible(c);
            EXPECT_EQ(a, w_numerator_words(c)) << c.to_string();
            EXPECT_EQ(a.evaluate(integer(1), integer(1)), c.multinomial());
            EXPECT_LE(a.y_degree(), n);
        }
}

TEST(series, w_series_matches_brute_force_expansion) {
    for (const auto& eta : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {3, 2}}) {
        const auto w = rational_w::of(composition(eta));
        EXPECT_EQ(w.series(5), w_series_oracle(eta, 5));
    }
    const auto s = rational_w::of(composition({1, 1})).series(3);
    EXPECT_EQ(s[0], unipoly::constant(1));
    EXPECT_EQ(s[1], (unipoly{1, 2}));
}

TEST(series, hadamard_series_coefficients) {
    const auto h = hadamard_series(composition({1, 1}), 3);
    EXPECT_EQ(h[0], unipoly::constant(1));
    EXPECT_EQ(h[1], (unipoly{1, 2, 1}));
    EXPECT_EQ(h[2], gaussian_binomial(3, 2) * gaussian_binomial(3, 2));
}

TEST(series, hadamard_series_is_w_over_last_factor) {
    // W_eta = (1 - x^n y) * sum_k prod_i [eta_i + k choose k]_x y^k.
    for (const auto& eta : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {1, 3, 1}}) {
        const composition c(eta);
        const auto w = rational_w::of(c).series(6);
        auto h = hadamard_series(c, 6);
        for (std::size_t k = h.size(); k-- > 1;) h[k] -= h[k - 1].shifted(c.size());
        EXPECT_EQ(w, h) << c.to_string();
    }
}

TEST(hadamard, holds_on_small_cases) {
    for (const auto& eta : std::vector<std::vector<int>>{{1}, {3}, {1, 1}, {2, 1}, {1, 2, 2}}) {
        const auto r = hadamard_check(composition(eta));
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.depth, oracle::total(eta) + 1);
        EXPECT_FALSE(r.witness);
    }
}

TEST(hadamard, reports_first_mismatch_as_witness) {
    const composition c({2, 1});
    const bipoly wrong = w_numerator(c) + xy(0, 2);
    const auto r = hadamard_check(c, wrong);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->y_degree, 2);
    EXPECT_EQ(r.witness->numerator_side, unipoly::constant(1));
    EXPECT_TRUE(r.witness->hadamard_side.is_zero());
}

TEST(reciprocity, documented_cases) {
    EXPECT_EQ(reciprocity_check(composition({1, 1})), (reciprocity_result{true, 1, 0, 1}));
    EXPECT_FALSE(reciprocity_check(composition({2, 1})).holds);
    for (int r = 1; r * 1 <= 8; ++r)
        for (int m = 1; r * m <= 8; ++m)
            EXPECT_EQ(reciprocity_check(composition::rectangle(r, m)), rectangle_reciprocity(r, m)) << r << "," << m;
}

TEST(reciprocity, functional_equation_holds_at_rational_points) {
    // W(1/x, 1/y) = sign x^a y^b W(x, y), checked by exact evaluation.
    for (const auto& [r, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {2, 3}}) {
        const auto w = rational_w::of(composition::rectangle(r, m));
        const auto e = reciprocity_check(w.numerator, r * m);
        ASSERT_TRUE(e.holds);
        for (const auto& [x, y] : std::vector<std::pair<rational, rational>>{{2, rational(1, 3)}, {rational(3, 5), 7}}) {
            const rational lhs = w.evaluate(1 / x, 1 / y);
            const rational rhs = e.sign * detail::rational_pow(x, e.x_exponent) * detail::rational_pow(y, e.y_exponent) *
                                 w.evaluate(x, y);
            EXPECT_EQ(lhs, rhs) << r << "," << m;
        }
    }
}

TEST(reciprocity, zero_numerator_is_rejected) {
    EXPECT_THROW(reciprocity_check(bipoly(), 2), invalid_input);
}

TEST(zeta, documented_values) {
    EXPECT_EQ(zeta_eval(composition({2, 1}), 2, rational(1, 8)), rational(16, 3));
    EXPECT_EQ(zeta_eval(composition({1, 1}), 2, 0), 1);
    EXPECT_EQ(zeta_eval(composition({1, 1}), rational(7, 3), 0), 1);
    EXPECT_EQ(zeta_eval(composition({3}), 2, 0), 1);
}

TEST(zeta, matches_rational_oracle) {
    for (const auto& eta : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {2, 2}})
        for (const auto& [q, t] : std::vector<std::pair<rational, rational>>{
                 {2, rational(1, 32)}, {3, rational(1, 81)}, {rational(1, 2), rational(-2, 7)}})
            EXPECT_EQ(zeta_eval(composition(eta), q, t), oracle::zeta_value(eta, q, t));
}

TEST(zeta, pole_is_an_input_error) {
    EXPECT_THROW(zeta_eval(composition({1, 1}), 2, 1), invalid_input);
    EXPECT_THROW(zeta_eval(composition({1, 1}), 2, rational(1, 2)), invalid_input);
    EXPECT_NO_THROW(zeta_eval(composition({1, 1}), 2, rational(1, 4)));
}

TEST(cyclotomic, small_values_and_product_identity) {
    EXPECT_EQ(cyclotomic(1), (unipoly{-1, 1}));
    EXPECT_EQ(cyclotomic(2), (unipoly{1, 1}));
    EXPECT_EQ(cyclotomic(6), (unipoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), (unipoly{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic(105)[7], -2);  // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    for (int n = 1; n <= 40; ++n) {
        unipoly prod = unipoly::constant(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        EXPECT_EQ(prod, unipoly::monomial(n) - unipoly::constant(1)) << n;
    }
    EXPECT_THROW(cyclotomic(0), invalid_input);
}

TEST(unitary_scan, documented_examples) {
    const auto f11 = unitary_factor_scan(w_numerator(composition({1, 1})), scan_bounds::defaults_for(2));
    ASSERT_EQ(f11.size(), 1u);
    EXPECT_EQ(f11[0].d, 2);
    EXPECT_EQ(f11[0].a, 1);
    EXPECT_EQ(f11[0].b, 1);
    EXPECT_EQ(f11[0].factor, one + xy(1, 1));

    EXPECT_TRUE(unitary_factor_scan(w_numerator(composition({2, 1})), {3, 2, 12}).empty());

    const auto f1111 = unitary_factor_scan(w_numerator(composition({1, 1, 1, 1})), scan_bounds::defaults_for(4));
    bool found = false;
    for (const auto& f : f1111) found |= f.factor == one + xy(2, 1);
    EXPECT_TRUE(found);
}

TEST(unitary_scan, finds_planted_factors) {
    const bipoly g = one + xy(0, 1) + xy(0, 2);                 // Phi_3(y)
    const bipoly h = one + xy(1, 0) + xy(3, 2);
    const auto found = unitary_factor_scan(g * h, {3, 3, 10});
    bool ok = false;
    for (const auto& f : found) ok |= f.d == 3 && f.a == 0 && f.b == 1;
    EXPECT_TRUE(ok);
    const auto x_only = unitary_factor_scan((one + xy(1, 0)) * h, {1, 1, 4});
    ok = false;
    for (const auto& f : x_only) ok |= f.d == 2 && f.a == 1 && f.b == 0;
    EXPECT_TRUE(ok);
    EXPECT_THROW(unitary_factor_scan(bipoly(), {1, 1, 1}), invalid_input);
    EXPECT_THROW(unitary_factor_scan(one, {1, 0, 1}), invalid_input);
}

TEST(conjecture, documented_reports) {
    const auto r11 = make_conjecture_report(composition({1, 1}));
    EXPECT_TRUE(r11.rectangle);
    EXPECT_TRUE(r11.qualifies);
    EXPECT_TRUE(r11.divisible);
    ASSERT_TRUE(r11.residual);
    EXPECT_EQ(*r11.residual, one);
    EXPECT_EQ(r11.verdict, conjecture_verdict::consistent);

    const auto r21 = make_conjecture_report(composition({2, 1}));
    EXPECT_FALSE(r21.rectangle);
    EXPECT_FALSE(r21.divisible);
    EXPECT_TRUE(r21.factors.empty());
    EXPECT_EQ(r21.verdict, conjecture_verdict::consistent);

    const auto r33 = make_conjecture_report(composition({3, 3}));
    EXPECT_TRUE(r33.qualifies);
    EXPECT_TRUE(r33.divisible);
    EXPECT_EQ(*r33.residual * (one + xy(3, 1)), r33.numerator);
    EXPECT_EQ(r33.verdict, conjecture_verdict::consistent);

    const auto r1111 = make_conjecture_report(composition({1, 1, 1, 1}));
    EXPECT_TRUE(r1111.divisible);
    EXPECT_EQ(r1111.verdict, conjecture_verdict::consistent);
}
