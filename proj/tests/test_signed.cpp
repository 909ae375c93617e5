#include <set>

#include <gtest/gtest.h>

#include "mzeta/signed.hpp"
#include "oracles.hpp"

using namespace mzeta;

namespace {
std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }
} // namespace

TEST(signed_perm, validation) {
    EXPECT_NO_THROW(signed_permutation({-2, 1}));
    EXPECT_THROW(signed_permutation({0, 1}), invalid_input);
    EXPECT_THROW(signed_permutation({2, -2}), invalid_input);
    EXPECT_THROW(signed_permutation({3, 1}), invalid_input);
    EXPECT_THROW(signed_permutation(std::vector<int>{}), invalid_input);
    EXPECT_TRUE(signed_permutation({-1, -2}).is_even());
    EXPECT_FALSE(signed_permutation({-1, 2}).is_even());
    EXPECT_EQ(signed_permutation({-2, 1}).absolute().to_string(), "2,1");
}

TEST(signed_perm, type_a_stats_use_integer_order) {
    auto a = type_a_stats(signed_permutation({-2, 1}));
    EXPECT_EQ(a.des, 0);
    EXPECT_EQ(a.maj, 0);
    a = type_a_stats(signed_permutation({-1, -2}));
    EXPECT_EQ(a.des, 1);
    EXPECT_EQ(a.maj, 1);
}

TEST(signed_perm, b_stats_examples) {
    const signed_permutation s({-2, 1});
    EXPECT_EQ(b_stats(s), (b_statistics{1, 1, 2, 1, 1}));
    EXPECT_EQ(excabs(s), 2);
    EXPECT_EQ(nden(s), 3);
    EXPECT_EQ(b_stats(signed_permutation({-1})), (b_statistics{1, 1, 1, 1, 1}));
    EXPECT_EQ(nden(signed_permutation({-1})), 1);
    EXPECT_EQ(excabs(signed_permutation({2, -1})), 2);
    const signed_permutation id({1, 2, 3, 4});
    EXPECT_EQ(b_stats(id), b_statistics{});
    EXPECT_EQ(excabs(id) + nden(id) + nsp(id), 0);
}

TEST(signed_perm, d_stats_examples) {
    EXPECT_EQ(d_stats(signed_permutation({-1, -2})), (d_statistics{1, 2, 2, 1, 1, 1}));
    const auto d = d_stats(signed_permutation({-2, -1}));
    EXPECT_EQ(d.dneg, 1);
    EXPECT_EQ(d.nsp, 1);
    EXPECT_EQ(d.dden, 2);
    EXPECT_EQ(d_stats(signed_permutation({1, 2, 3})), d_statistics{});
    EXPECT_THROW(d_stats(signed_permutation({-1, 2})), invalid_input);
    EXPECT_EQ(dneg_set(signed_permutation({-3, 1, -1 * 2})), (std::vector<int>{1, 3}));
}

TEST(signed_perm, group_orders) {
    EXPECT_EQ(hyperoctahedral_order(1), 2u);
    EXPECT_EQ(hyperoctahedral_order(2), 8u);
    EXPECT_EQ(hyperoctahedral_order(3), 48u);
    EXPECT_EQ(hyperoctahedral_order(6), 46080u);
    EXPECT_EQ(even_signed_order(1), 1u);
    EXPECT_EQ(even_signed_order(2), 4u);
    EXPECT_EQ(enumerate_signed(2).size(), 8u);
    EXPECT_EQ(enumerate_even_signed(2).size(), 4u);
    EXPECT_THROW(enumerate_signed(6, 1000), budget_exceeded);
}

TEST(signed_perm, b1_and_d1) {
    const auto b1 = enumerate_signed(1);
    ASSERT_EQ(b1.size(), 2u);
    EXPECT_EQ(b1[0].to_string(), "-1");
    EXPECT_EQ(b1[1].to_string(), "1");
    const auto d1 = enumerate_even_signed(1);
    ASSERT_EQ(d1.size(), 1u);
    EXPECT_EQ(d1[0].to_string(), "1");
}

TEST(signed_perm, enumeration_is_lexicographic_and_complete) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::vector<int>> got;
        for_each_signed(n, [&](const signed_permutation& s) { got.push_back(vec(s.window())); });
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        auto ref = oracle::all_signed(n, false);
        std::sort(ref.begin(), ref.end());
        EXPECT_EQ(got, ref);

        std::vector<std::vector<int>> even;
        for_each_even_signed(n, [&](const signed_permutation& s) { even.push_back(vec(s.window())); });
        auto ref_even = oracle::all_signed(n, true);
        std::sort(ref_even.begin(), ref_even.end());
        EXPECT_EQ(even, ref_even);
    }
}

TEST(signed_perm, statistics_match_definition_oracle) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : oracle::all_signed(n, false)) {
            const signed_permutation s(w);
            const auto ref = oracle::signed_of(w);
            const auto b = b_stats(s);
            ASSERT_EQ(b.neg, ref.neg);
            ASSERT_EQ(b.ndes, ref.ndes);
            ASSERT_EQ(b.nmaj, ref.nmaj);
            ASSERT_EQ(b.fdes, ref.fdes);
            ASSERT_EQ(b.fmaj, ref.fmaj);
            ASSERT_EQ(excabs(s), ref.excabs);
            ASSERT_EQ(nden(s), ref.nden);
            ASSERT_EQ(nsp(s), ref.nsp);
            if (!s.is_even()) continue;
            const auto d = d_stats(s);
            ASSERT_EQ(d.dneg, ref.dneg);
            ASSERT_EQ(d.ddes, ref.ddes);
            ASSERT_EQ(d.dmaj, ref.dmaj);
            ASSERT_EQ(d.dexc, ref.dexc);
            ASSERT_EQ(d.dden, ref.dden);
        }
}

TEST(signed_perm, excabs_and_dexc_differ_exactly_when_minus_one_appears) {
    for (int n = 1; n <= 5; ++n)
        for_each_even_signed(n, [&](const signed_permutation& s) {
            bool has_minus_one = false;
            for (int v : s.window()) has_minus_one |= v == -1;
            EXPECT_EQ(excabs(s) != d_stats(s).dexc, has_minus_one) << s.to_string();
        });
}
