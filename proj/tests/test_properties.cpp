// Exhaustive property sweeps over every composition of small n.

#include <gtest/gtest.h>

#include "mzeta/mzeta.hpp"
#include "oracles.hpp"

using namespace mzeta;

TEST(properties, bijection_round_trip_and_statistic_transport_up_to_8) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : compositions_of(n)) {
            const block_context ctx(c);
            std::uint64_t seen = 0;
            for_each_word(c, [&](const word& w) {
                ++seen;
                const permutation s = word_to_admissible(w);
                if (!is_admissible(ctx, s) || admissible_to_word(ctx, s) != w || den(ctx, s) != denh(w) ||
                    iexc(ctx, s) != exc(w)) {
                    ADD_FAILURE() << "eta=(" << c.to_string() << ") w=" << w.to_string();
                    return false;
                }
                return true;
            });
            ASSERT_EQ(seen, c.multinomial());
        }
}

TEST(properties, lemma42_and_lemma43_up_to_8) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : compositions_of(n)) {
            const auto a = check_lemma42(c);
            ASSERT_TRUE(a.passed) << a.subject << " " << a.failure->object << " " << a.failure->identity;
            const auto b = check_lemma43(c);
            ASSERT_TRUE(b.passed) << b.subject << " " << b.failure->object << " " << b.failure->identity;
        }
}

TEST(properties, numerator_counts_multiset_permutations_up_to_8) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : compositions_of(n))
            ASSERT_EQ(w_numerator_words(c).evaluate(integer(1), integer(1)), c.multinomial()) << c.to_string();
}

TEST(properties, nsp_identity_on_b_n_up_to_6) {
    // nsp = -sum_{sigma(i) < -1} sigma(i) - #{i : sigma(i) < -1} holds on all of
    // B_n, not only on D_n.
    for (int n = 1; n <= 6; ++n)
        for_each_signed(n, [&](const signed_permutation& s) {
            int sum = 0;
            const auto dn = dneg_set(s);
            for (int i : dn) sum += s(i);
            ASSERT_EQ(nsp(s), -sum - static_cast<int>(dn.size())) << s.to_string();
        });
}

TEST(properties, divide_exact_round_trip_on_numerators) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            const bipoly f = w_numerator_words(c);
            for (int a = 0; a <= n; ++a) {
                const bipoly g = bipoly::constant(1) + bipoly::term(a, 1);
                if (auto q = divide_exact(f, g)) {
                    ASSERT_EQ(*q * g, f);
                }
            }
        }
}

TEST(properties, json_round_trip_on_numerators) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            const bipoly f = w_numerator_words(c);
            ASSERT_EQ(parse_bipoly_json(to_json(f).dump()), f);
        }
}
