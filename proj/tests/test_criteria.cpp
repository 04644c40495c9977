#include "support.hpp"

#include <coxbal/criteria.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace coxbal;
using coxbal::testing::group;

namespace {

SignedPermutation to_signed(const GroupTable & g, Element w)
{
    SignedPermutation p(g.rank());
    auto word = g.reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        p = p.left(*it + 1);
    return p;
}

} // namespace

TEST(Criteria, MbcdOfSpecialLinearGroups)
{
    for (int n = 2; n <= 8; ++n) {
        auto g = group("A" + std::to_string(n - 1));
        EXPECT_EQ(mbcd(*g, profile(g->roots(), ProfileKind::Split)), (n + 1) / 2) << n;
        EXPECT_EQ(mbcd(*g, profile(g->roots(), ProfileKind::Complex)), 2 * ((n + 1) / 2)) << n;
    }
}

TEST(Criteria, MbcdByHand)
{
    EXPECT_EQ(mbcd(*group("B2"), profile(group("B2")->roots(), ProfileKind::Split)), 2);
    EXPECT_EQ(mbcd(*group("G2"), profile(group("G2")->roots(), ProfileKind::Split)), 3);
    EXPECT_EQ(mbcd(*group("A1xA1"), profile(group("A1xA1")->roots(), ProfileKind::Split)), 1);
}

TEST(Criteria, SubstitutionIdentity)
{
    for (const char * label : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA2"}) {
        auto g = group(label);
        for (auto kind : {ProfileKind::Split, ProfileKind::Complex}) {
            auto p = profile(g->roots(), kind);
            int best = -1;
            for (Element w = 0; w < g->size(); ++w)
                if (! leq(*g, g->multiply(g->w0(), w), w))
                    best = std::max(best, g->weighted_length(w, p));
            EXPECT_EQ(best, p.total() - mbcd(*g, p)) << label;
        }
    }
}

TEST(Criteria, TightnessWitness)
{
    const std::vector<std::pair<std::string, int>> cases = {{"A1", 0}, {"A2", 1}, {"A3", 4}, {"B2", 2}, {"A4", 7}};
    for (const auto & [label, dim] : cases) {
        auto g = group(label);
        auto p = profile(g->roots(), ProfileKind::Split);
        auto t = mbcd_tightness_witness(g, p);
        auto q = double_cosets(g, "all", "all");
        EXPECT_TRUE(is_balanced(q, t.ideal)) << label;
        EXPECT_TRUE(q.downset(q.project(t.w)).is_subset_of(t.ideal));
        EXPECT_EQ(t.witness_dim, dim) << label;
        EXPECT_EQ(t.ideal_dim, p.total() - mbcd(*g, p)) << label;
    }
}

TEST(Criteria, DeltaExamples)
{
    auto v = delta_criterion(make_signature(6, {3}));
    EXPECT_EQ(v.delta, 2);
    EXPECT_TRUE(v.exists);
    v = delta_criterion(make_signature(5, {2}));
    EXPECT_EQ(v.delta, 1);
    EXPECT_FALSE(v.exists);
    v = delta_criterion(make_signature(4, {1, 2, 3}));
    EXPECT_EQ(v.delta, 4);
    EXPECT_TRUE(v.exists);
    EXPECT_EQ(delta_criterion(make_signature(6, {2, 4})).delta, 0);
    EXPECT_FALSE(delta_criterion(make_signature(4, {2})).exists);
    EXPECT_THROW(make_signature(4, {2, 2}), Error);
    EXPECT_THROW(make_signature(4, {4}), Error);
    EXPECT_THROW(make_signature(4, {}), Error);
}

TEST(Criteria, DeltaRuleMatchesFixedPointsUpToSeven)
{
    for (int n = 2; n <= 7; ++n) {
        auto g = group("A" + std::to_string(n - 1));
        for (unsigned mask = 1; mask < (1U << (n - 1)); ++mask) {
            std::vector<int> dims;
            for (int i = 1; i < n; ++i)
                if (mask >> (i - 1) & 1U)
                    dims.push_back(i);
            auto sig = make_signature(n, dims);
            EXPECT_TRUE(cross_check_existence(g, sig)) << n << " mask " << mask;
        }
    }
    auto g6 = group("A5");
    EXPECT_TRUE(double_cosets(g6, "all", "2,4").has_fixed_point());
    EXPECT_TRUE(double_cosets(group("A3"), "all", "2").has_fixed_point());
    EXPECT_THROW(cross_check_existence(g6, make_signature(5, {2})), Error);
}

TEST(Criteria, SymplecticChain)
{
    for (int n = 1; n <= 9; ++n) {
        auto r = symplectic_chain_report(n);
        EXPECT_EQ(r.num_cosets, n + 1);
        EXPECT_TRUE(r.distinct_reps) << n;
        EXPECT_TRUE(r.order_ok) << n;
        EXPECT_TRUE(r.w0_ok) << n;
        EXPECT_EQ(r.count, static_cast<std::uint64_t>(n % 2)) << n;
        if (n % 2) {
            std::vector<int> upper;
            for (int k = n / 2 + 1; k <= n; ++k)
                upper.push_back(k);
            ASSERT_EQ(r.ideals.size(), 1U);
            EXPECT_EQ(r.ideals[0], upper);
        }
    }
    EXPECT_EQ(symplectic_chain_report(3).ideals.at(0), (std::vector<int>{2, 3}));
}

TEST(Criteria, SignedPermutationModelMatchesGroupTable)
{
    for (int n = 2; n <= 4; ++n) {
        auto g = group("C" + std::to_string(n));
        for (Element w = 0; w < g->size(); ++w) {
            auto p = to_signed(*g, w);
            ASSERT_EQ(p.length(), g->length(w));
            for (int i = 0; i < n; ++i)
                ASSERT_EQ(p.left(i + 1).length(), g->length(g->left_mul(w, i)));
        }
        std::mt19937 rng(static_cast<unsigned>(n));
        for (int t = 0; t < 2000; ++t) {
            Element u = static_cast<Element>(rng() % g->size()), w = static_cast<Element>(rng() % g->size());
            ASSERT_EQ(signed_leq(to_signed(*g, u), to_signed(*g, w)), leq(*g, u, w));
        }
    }
}

TEST(Criteria, ChainAgainstEnumerationEngine)
{
    for (int n = 2; n <= 7; ++n) {
        auto g = enumerate_group(CoxeterDiagram::from_label("C" + std::to_string(n)));
        auto nth = std::to_string(n);
        auto q = double_cosets(g, nth, nth, true);
        ASSERT_EQ(q.size(), static_cast<std::size_t>(n + 1));
        // Coset index c holds the elements with n - c positive entries.
        std::mt19937 rng(11);
        const std::size_t samples = n <= 5 ? g->size() : 20000;
        for (std::size_t t = 0; t < samples; ++t) {
            Element w = n <= 5 ? static_cast<Element>(t) : static_cast<Element>(rng() % g->size());
            ASSERT_EQ(static_cast<int>(q.project(w)), n - to_signed(*g, w).positive_count());
        }
        for (Coset a = 0; a <= static_cast<Coset>(n); ++a) {
            EXPECT_EQ(q.w0_action(a), static_cast<Coset>(n) - a);
            for (Coset b = 0; b <= static_cast<Coset>(n); ++b)
                EXPECT_EQ(q.leq(a, b), a <= b);
        }
        EXPECT_EQ(count_balanced(q), symplectic_chain_report(n).count) << n;
    }
}

TEST(Criteria, DumasSandersBounds)
{
    auto a1 = dumas_sanders_check(*group("A1"), profile(group("A1")->roots(), ProfileKind::Split));
    EXPECT_EQ(a1.required, 1);
    EXPECT_TRUE(a1.holds);
    const std::vector<std::pair<std::string, int>> cases = {
        {"A2", 2}, {"A3", 2}, {"B2", 2}, {"C2", 2}, {"A4", 3}, {"B3", 3}, {"C3", 3}, {"B4", 3},
        {"C4", 3}, {"D4", 3}, {"F4", 3}, {"G2", 3}, {"A2xA2", 2}, {"G2xG2", 3}, {"B2xG2", 2},
    };
    for (const auto & [label, required] : cases) {
        auto g = group(label);
        for (auto kind : {ProfileKind::Split, ProfileKind::Complex}) {
            auto r = dumas_sanders_check(*g, profile(g->roots(), kind));
            EXPECT_EQ(r.required, required) << label;
            EXPECT_TRUE(r.low_length_ok) << label;
            EXPECT_TRUE(r.holds) << label << " mbcd=" << r.mbcd;
        }
    }
    auto g2 = group("G2");
    EXPECT_EQ(dumas_sanders_check(*g2, profile(g2->roots(), ProfileKind::Split)).mbcd, 3);
}
