#include "properties.hpp"
#include "reference.hpp"
#include "support.hpp"

#include <coxbal/ideals.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace coxbal;
using coxbal::testing::group;
using coxbal::testing::word;

namespace {

const std::vector<std::string> kSmallGroups = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "A1xA2", "B4", "A5"};

} // namespace

TEST(Ideals, PredicateExamples)
{
    auto q = double_cosets(group("A3"), "all", "all");
    IdealSet empty(q.size()), full(q.size());
    full.set_all();
    EXPECT_TRUE(is_ideal(q, empty));
    EXPECT_TRUE(is_ideal(q, full));
    IdealSet top(q.size());
    top.set(q.top());
    EXPECT_FALSE(is_ideal(q, top));
    EXPECT_TRUE(is_fat(q, full));
    EXPECT_FALSE(is_slim(q, full));
    EXPECT_TRUE(is_slim(q, empty));
    EXPECT_FALSE(is_fat(q, empty));
    EXPECT_TRUE(is_ideal(q, ideal_generated_by(q, {3, 7, 11})));

    auto c3 = double_cosets(group("C3"), "3", "3");
    IdealSet low(4);
    low.set(0);
    low.set(1);
    EXPECT_TRUE(is_balanced(c3, low));
    auto [l, r] = invariance(q, full);
    EXPECT_EQ(l.count(), 3U);
    EXPECT_EQ(r.count(), 3U);
    EXPECT_THROW(invariance(c3, low), Error);
}

TEST(Ideals, MinimalGenerators)
{
    auto g = group("A3");
    auto q = double_cosets(g, "all", "all");
    IdealSet id(q.size());
    id.set(q.bottom());
    EXPECT_EQ(minimal_generators(q, id), std::vector<Coset>{q.bottom()});
    try {
        IdealSet top(q.size());
        top.set(q.top());
        minimal_generators(q, top);
        FAIL() << "expected NotAnIdeal";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAnIdeal);
    }
}

TEST(Ideals, SmallCounts)
{
    auto a1 = double_cosets(group("A1"), "all", "all");
    auto r1 = enumerate_balanced(a1, {.collect = true});
    ASSERT_EQ(r1.count, 1U);
    auto rep1 = make_report(a1, r1.ideals[0]);
    EXPECT_EQ(rep1.generator_words, std::vector<std::vector<int>>{{}});
    EXPECT_EQ(rep1.dimension, 0);

    auto a2 = double_cosets(group("A2"), "all", "all");
    auto r2 = enumerate_balanced(a2, {.collect = true});
    ASSERT_EQ(r2.count, 1U);
    auto rep2 = make_report(a2, r2.ideals[0]);
    EXPECT_EQ(rep2.generator_words, (std::vector<std::vector<int>>{{1}, {2}}));
    EXPECT_EQ(rep2.dimension, 1);

    EXPECT_EQ(count_balanced(double_cosets(group("A3"), "all", "all")), 10U);
    EXPECT_EQ(count_balanced(double_cosets(group("A4"), "all", "all")), 4608U);
    EXPECT_EQ(count_balanced(double_cosets(group("A3"), "all", "2")), 0U);
}

TEST(Ideals, A3ListingMatchesReference)
{
    auto g = group("A3");
    auto q = double_cosets(g, "all", "all");
    auto reports = make_reports(q, enumerate_balanced(q, {.collect = true}).ideals);
    ASSERT_EQ(reports.size(), 10U);

    using Key = std::tuple<std::vector<int>, std::vector<int>, int, std::set<Element>>;
    std::multiset<Key> expected, actual;
    for (const auto & row : reference::a3_rows()) {
        std::set<Element> gens;
        for (const auto & w : row.generators)
            gens.insert(word(*g, w));
        expected.insert({row.left, row.right, row.dimension, gens});
    }
    for (const auto & r : reports) {
        std::set<Element> gens;
        for (Coset c : r.generators)
            gens.insert(q.rep(c));
        actual.insert({subset_indices(*r.left_invariance), subset_indices(*r.right_invariance), *r.dimension, gens});
    }
    EXPECT_EQ(actual, expected);
}

TEST(Ideals, AgreesWithBruteForceOnSmallQuotients)
{
    auto quotients = properties::small_quotients(kSmallGroups, 20);
    auto check = properties::brute_force_balanced(quotients);
    EXPECT_TRUE(check.ok()) << check.failure;
    EXPECT_GT(check.cases, 100U);
    for (const auto & q : quotients) {
        EnumerationOptions options;
        options.collect = true;
        for (const auto & ideal : enumerate_balanced(q, options).ideals) {
            EXPECT_TRUE(is_balanced(q, ideal));
            EXPECT_EQ(2 * ideal.count(), q.size());
            for (Coset x = 0; x < q.size(); ++x)
                EXPECT_NE(ideal.test(x), ideal.test(q.w0_action(x)));
        }
    }
}

TEST(Ideals, MinimalFatIdealsAreBalanced)
{
    auto check = properties::minimal_fat_is_balanced(properties::small_quotients(kSmallGroups, 16));
    EXPECT_TRUE(check.ok()) << check.failure;
    EXPECT_GT(check.cases, 20U);
}

TEST(Ideals, CountsFollowInvarianceRule)
{
    auto check = properties::invariance_rule({"A3", "A4"});
    EXPECT_TRUE(check.ok()) << check.failure;
    EXPECT_EQ(check.cases, 3U * 7U + 3U * 15U); // three iota-invariant theta in each
}

TEST(Ideals, TypeASymmetryUnderDiagramFlip)
{
    for (int n = 2; n <= 7; ++n) {
        auto g = group("A" + std::to_string(n - 1));
        for (int k = 1; k < n; ++k) {
            auto a = count_balanced(double_cosets(g, "all", std::to_string(k)));
            auto b = count_balanced(double_cosets(g, "all", std::to_string(n - k)));
            EXPECT_EQ(a, b) << n << "," << k;
        }
    }
}

TEST(Ideals, ParallelismDoesNotChangeResults)
{
    auto q = double_cosets(group("A4"), "all", "all");
    auto one = enumerate_balanced(q, {.collect = true, .jobs = 1});
    auto four = enumerate_balanced(q, {.collect = true, .jobs = 4});
    auto seven = enumerate_balanced(q, {.collect = true, .jobs = 7});
    EXPECT_EQ(one.count, 4608U);
    EXPECT_EQ(one.ideals, four.ideals);
    EXPECT_EQ(one.ideals, seven.ideals);
    EXPECT_EQ(count_balanced(q, 3), 4608U);
}

TEST(Ideals, LimitAndDeadline)
{
    auto q = double_cosets(group("A4"), "all", "all");
    try {
        enumerate_balanced(q, {.collect = true, .limit = 100});
        FAIL() << "expected LimitExceeded";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
    }
    EXPECT_EQ(enumerate_balanced(q, {.collect = true, .limit = 4608}).count, 4608U);

    auto big = double_cosets(group("B6"), "1,2,3,4,5", "4");
    EnumerationOptions opts;
    opts.jobs = 1;
    opts.deadline = std::chrono::steady_clock::now();
    auto partial = enumerate_balanced(big, opts);
    EXPECT_FALSE(partial.complete);
    EXPECT_LT(partial.count, 616U);
}

TEST(Ideals, ExtendSlimToBalanced)
{
    auto q = double_cosets(group("A3"), "all", "all");
    IdealSet empty(q.size());
    auto ext = extend_slim_to_balanced(q, empty);
    EXPECT_TRUE(is_balanced(q, ext));

    auto all = enumerate_balanced(q, {.collect = true}).ideals;
    for (const auto & b : all)
        EXPECT_EQ(extend_slim_to_balanced(q, b), b);
    EXPECT_NE(std::find(all.begin(), all.end(), ext), all.end());

    auto c3 = double_cosets(group("C3"), "3", "3");
    IdealSet bottom(4);
    bottom.set(0);
    IdealSet expected(4);
    expected.set(0);
    expected.set(1);
    EXPECT_EQ(extend_slim_to_balanced(c3, bottom), expected);

    IdealSet fat_one(4);
    for (Coset c = 0; c < 3; ++c)
        fat_one.set(c);
    try {
        extend_slim_to_balanced(c3, fat_one);
        FAIL() << "expected NotSlim";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSlim);
    }
    auto c2 = double_cosets(group("C2"), "2", "2");
    try {
        extend_slim_to_balanced(c2, IdealSet(3));
        FAIL() << "expected FixedPointExists";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::FixedPointExists);
    }
}

TEST(Ideals, DimensionsScaleWithProfile)
{
    auto g = group("A3");
    auto q = double_cosets(g, "all", "all");
    auto split = profile(g->roots(), ProfileKind::Split);
    auto complex = profile(g->roots(), ProfileKind::Complex);
    for (const auto & ideal : enumerate_balanced(q, {.collect = true}).ideals)
        EXPECT_EQ(ideal_dimension(q, ideal, complex), 2 * ideal_dimension(q, ideal, split));
    auto side = double_cosets(g, "2", "all");
    EXPECT_THROW(ideal_dimension(side, IdealSet(side.size()), split), Error);
    auto report = make_report(side, enumerate_balanced(side, {.collect = true}).ideals.at(0));
    EXPECT_FALSE(report.dimension.has_value());
    EXPECT_FALSE(report.left_invariance.has_value());
}
