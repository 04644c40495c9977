#include "support.hpp"

#include <coxbal/parabolic.hpp>

#include <gtest/gtest.h>

#include <deque>

using namespace coxbal;
using coxbal::testing::group;
using coxbal::testing::word;

namespace {

std::vector<RootSubset> nonempty_subsets(int rank)
{
    std::vector<RootSubset> out;
    for (unsigned mask = 1; mask < (1U << rank); ++mask) {
        RootSubset s(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i)
            if (mask >> i & 1U)
                s.set(static_cast<std::size_t>(i));
        out.push_back(s);
    }
    return out;
}

/// Double-coset orbits by closure under the two parabolic subgroups.
std::vector<std::vector<Element>> orbits(const GroupTable & g, const RootSubset & theta, const RootSubset & eta)
{
    std::vector<int> seen(g.size(), -1);
    std::vector<std::vector<Element>> out;
    for (Element start = 0; start < g.size(); ++start) {
        if (seen[start] >= 0)
            continue;
        std::vector<Element> orbit{start};
        std::deque<Element> queue{start};
        seen[start] = static_cast<int>(out.size());
        while (! queue.empty()) {
            Element w = queue.front();
            queue.pop_front();
            for (int i = 0; i < g.rank(); ++i) {
                std::vector<Element> next;
                if (! theta.test(static_cast<std::size_t>(i)))
                    next.push_back(g.left_mul(w, i));
                if (! eta.test(static_cast<std::size_t>(i)))
                    next.push_back(g.right_mul(w, i));
                for (Element x : next)
                    if (seen[x] < 0) {
                        seen[x] = seen[start];
                        orbit.push_back(x);
                        queue.push_back(x);
                    }
            }
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace

TEST(Parabolic, SubsetParsing)
{
    EXPECT_EQ(subset_indices(parse_subset("all", 4)), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(subset_indices(parse_subset("1,4", 4)), (std::vector<int>{1, 4}));
    EXPECT_EQ(subset_indices(parse_subset("14", 4)), (std::vector<int>{1, 4}));
    EXPECT_EQ(subset_indices(parse_subset("{2 3}", 4)), (std::vector<int>{2, 3}));
    EXPECT_EQ(subset_indices(parse_subset("10", 12)), (std::vector<int>{10}));
    EXPECT_TRUE(parse_subset("none", 3).none());
    EXPECT_EQ(format_subset(parse_subset("3,1", 4)), "1,3");
    EXPECT_EQ(format_subset(parse_subset("all", 2)), "all");
    EXPECT_THROW(parse_subset("5", 4), Error);
    EXPECT_THROW(parse_subset("1,x", 4), Error);
    EXPECT_THROW(double_cosets(group("A3"), "none", "all"), Error);
}

TEST(Parabolic, MinimalRepresentativesAreUniqueOrbitMinima)
{
    for (const char * label : {"A3", "B3", "C3", "D4", "G2", "A4", "A1xA2", "F4"}) {
        auto g = group(label);
        for (const auto & theta : nonempty_subsets(g->rank()))
            for (const auto & eta : nonempty_subsets(g->rank())) {
                auto q = double_cosets(g, theta, eta);
                auto orbs = orbits(*g, theta, eta);
                ASSERT_EQ(q.size(), orbs.size()) << label;
                for (const auto & orbit : orbs) {
                    int min_len = 1 << 20;
                    int attained = 0;
                    Element argmin = 0;
                    for (Element w : orbit) {
                        if (g->length(w) < min_len) {
                            min_len = g->length(w);
                            attained = 1;
                            argmin = w;
                        }
                        else if (g->length(w) == min_len)
                            ++attained;
                    }
                    ASSERT_EQ(attained, 1) << label << " orbit minimum not unique";
                    Coset c = q.project(orbit.front());
                    ASSERT_EQ(q.rep(c), argmin);
                    for (Element w : orbit)
                        ASSERT_EQ(q.project(w), c);
                }
            }
    }
}

// Every product of irreducible types (C3 included beside B3) with |W| <= 120.
std::vector<std::string> labels_up_to_120()
{
    const std::vector<std::pair<std::string, unsigned>> irreducible = {
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"A4", 120}};
    std::vector<std::string> out;
    auto extend = [&](auto & self, std::size_t from, unsigned order, std::string label) -> void {
        if (! label.empty())
            out.push_back(label);
        for (std::size_t i = from; i < irreducible.size(); ++i)
            if (order * irreducible[i].second <= 120)
                self(self, i, order * irreducible[i].second, label.empty() ? irreducible[i].first : label + "x" + irreducible[i].first);
    };
    extend(extend, 0, 1, "");
    return out;
}

TEST(Parabolic, MinimalRepOrderEqualsExistentialOrder)
{
    auto labels = labels_up_to_120();
    EXPECT_EQ(labels.size(), 34U);
    for (const auto & label : labels) {
        auto g = group(label);
        ASSERT_LE(g->size(), 120U);
        for (const auto & theta : nonempty_subsets(g->rank()))
            for (const auto & eta : nonempty_subsets(g->rank())) {
                auto q = double_cosets(g, theta, eta);
                std::vector<DynamicBitset> exist(q.size(), DynamicBitset(q.size()));
                for (Element u = 0; u < g->size(); ++u)
                    for (Element v = 0; v < g->size(); ++v)
                        if (leq(*g, u, v))
                            exist[q.project(v)].set(q.project(u));
                for (Coset c = 0; c < q.size(); ++c)
                    ASSERT_EQ(q.downset(c), exist[c]) << label;
            }
    }
}

TEST(Parabolic, OrderAndW0Action)
{
    for (const char * label : {"A3", "B3", "D4", "F4", "A4", "G2"}) {
        auto g = group(label);
        for (const auto & theta : nonempty_subsets(g->rank()))
            for (const auto & eta : nonempty_subsets(g->rank())) {
                auto q = double_cosets(g, theta, eta);
                for (Coset c = 0; c < q.size(); ++c) {
                    EXPECT_TRUE(q.leq(q.bottom(), c));
                    EXPECT_TRUE(q.leq(c, q.top()));
                    EXPECT_EQ(q.downset(c).count() > 1, c != q.bottom());
                }
                EXPECT_EQ(q.bottom(), 0U);
                EXPECT_EQ(q.top(), q.size() - 1);
                EXPECT_EQ(q.has_w0_action(), iota_invariant(*g, theta));
                if (! q.has_w0_action())
                    continue;
                const auto & phi = q.w0_permutation();
                for (Coset a = 0; a < q.size(); ++a) {
                    EXPECT_EQ(phi[phi[a]], a);
                    for (Coset b = 0; b < q.size(); ++b)
                        EXPECT_EQ(q.leq(a, b), q.leq(phi[b], phi[a]));
                }
                for (Element w = 0; w < g->size(); ++w)
                    EXPECT_EQ(q.project(g->multiply(g->w0(), w)), phi[q.project(w)]);
            }
    }
}

TEST(Parabolic, Examples)
{
    auto a3 = group("A3");
    EXPECT_EQ(double_cosets(a3, "all", "all").size(), 24U);
    EXPECT_EQ(double_cosets(a3, "all", "2").size(), 6U);
    EXPECT_TRUE(double_cosets(a3, "all", "2").has_fixed_point());
    EXPECT_FALSE(double_cosets(a3, "all", "1").has_fixed_point());

    auto c3 = double_cosets(group("C3"), "3", "3");
    ASSERT_EQ(c3.size(), 4U);
    for (Coset a = 0; a < 4; ++a) {
        EXPECT_EQ(c3.w0_action(a), 3 - a);
        for (Coset b = 0; b < 4; ++b)
            EXPECT_EQ(c3.leq(a, b), a <= b);
    }
    EXPECT_TRUE(double_cosets(group("C2"), "2", "2").has_fixed_point());
    EXPECT_EQ(double_cosets(group("C2"), "2", "2").size(), 3U);

    auto side = double_cosets(a3, "1", "all");
    EXPECT_FALSE(side.has_w0_action());
    try {
        side.has_fixed_point();
        FAIL() << "expected IotaViolation";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::IotaViolation);
    }
    EXPECT_THROW(double_cosets(a3, "1", "all", true), Error);
    EXPECT_TRUE(double_cosets(a3, "1,3", "2", true).has_w0_action());
}

TEST(Parabolic, CosetDimensions)
{
    auto g = group("A3");
    auto q = double_cosets(g, "all", "all");
    auto split = profile(g->roots(), ProfileKind::Split);
    auto complex = profile(g->roots(), ProfileKind::Complex);
    EXPECT_EQ(q.coset_weighted_dim(q.bottom(), split), 0);
    EXPECT_EQ(q.coset_weighted_dim(q.top(), split), 6);
    Coset c = q.project(word(*g, {3, 1, 2, 1}));
    EXPECT_EQ(q.coset_weighted_dim(c, split), 4);
    EXPECT_EQ(q.coset_weighted_dim(c, complex), 8);
    EXPECT_EQ(q.rep_word(c), (std::vector<int>{1, 3, 2, 1})); // smallest word of the same element

    auto g5 = double_cosets(group("A4"), "all", "2");
    auto p5 = profile(group("A4")->roots(), ProfileKind::Split);
    EXPECT_EQ(g5.coset_weighted_dim(g5.top(), p5), 6); // dim Gr(2,5)
    try {
        double_cosets(g, "2", "all").coset_weighted_dim(0, split);
        FAIL() << "expected ThetaNotFull";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::ThetaNotFull);
    }
}
