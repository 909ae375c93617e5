#include <gtest/gtest.h>

#include "mzeta/verify.hpp"

using namespace mzeta;

namespace {

std::string detail_of(const check_report& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return {};
}

} // namespace

TEST(verify, check_names_round_trip) {
    for (const auto& [kind, name] : check_names) EXPECT_EQ(parse_check(name), kind);
    EXPECT_THROW(parse_check("lemma44"), invalid_input);
}

TEST(verify, composition_checks_pass_on_small_shapes) {
    const composition c({2, 1, 2});
    for (auto k : {check_kind::euler_mahonian_a, check_kind::euler_mahonian_den, check_kind::lemma42,
                   check_kind::lemma43, check_kind::hadamard, check_kind::reciprocity}) {
        const auto r = run_check(k, c);
        EXPECT_TRUE(r.passed) << to_string(k);
        EXPECT_FALSE(r.failure);
        EXPECT_EQ(r.subject, "eta=(2,1,2)");
        EXPECT_GT(r.objects, 0u);
    }
}

TEST(verify, signed_checks_pass) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(run_check(check_kind::b_equidistribution, n).passed);
        const auto d = run_check(check_kind::d_equidistribution, n);
        EXPECT_TRUE(d.passed);
        EXPECT_EQ(d.objects, even_signed_order(n));
    }
}

TEST(verify, lemma43_covers_every_admissible_permutation) {
    const auto r = check_lemma43(composition({3, 2, 2, 3}));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.objects, 25200u);
}

TEST(verify, reciprocity_on_non_rectangle_is_an_expected_failure) {
    const auto r = check_reciprocity(composition({2, 1}));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(detail_of(r, "result"), "fails (expected: non-rectangle)");
    const auto s = check_reciprocity(composition({2, 2}));
    EXPECT_TRUE(s.passed);
    EXPECT_EQ(detail_of(s, "result"), "holds with sign=1, a=2, b=2 (expected: rectangle)");
}

TEST(verify, kind_and_target_must_match) {
    EXPECT_THROW(run_check(check_kind::lemma42, 3), invalid_input);
    EXPECT_THROW(run_check(check_kind::b_equidistribution, composition({2})), invalid_input);
}

TEST(verify, budget_propagates) {
    EXPECT_THROW(check_lemma43(composition({1, 1, 1, 1, 1}), 100), budget_exceeded);
    EXPECT_THROW(check_b_equidistribution(5, 100), budget_exceeded);
    EXPECT_THROW(check_hadamard(composition({1, 1, 1, 1, 1}), 100), budget_exceeded);
}

TEST(verify, sweep_counts_subjects) {
    const auto sw = run_sweep(check_kind::euler_mahonian_den, 5);
    EXPECT_TRUE(sw.passed);
    EXPECT_EQ(sw.subjects, 1u + 2 + 4 + 8 + 16);
    EXPECT_FALSE(sw.first_failure);
    const auto sb = run_sweep(check_kind::b_equidistribution, 3);
    EXPECT_TRUE(sb.passed);
    EXPECT_EQ(sb.subjects, 3u);
    EXPECT_THROW(run_sweep(check_kind::lemma42, 0), invalid_input);
}

TEST(verify, report_keeps_first_failure) {
    check_report r;
    detail::compare_polys(r, "obj", "p = q", bipoly::constant(1), bipoly::constant(2));
    detail::compare_polys(r, "obj2", "p = r", bipoly::constant(1), bipoly::constant(3));
    ASSERT_FALSE(r.passed);
    EXPECT_EQ(r.failure->object, "obj");
    EXPECT_EQ(r.failure->lhs, "1");
    EXPECT_EQ(r.failure->rhs, "2");
}
