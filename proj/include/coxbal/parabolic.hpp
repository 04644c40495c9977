#pragma once

#include "coxbal/bitset.hpp"
#include "coxbal/bruhat.hpp"
#include "coxbal/error.hpp"
#include "coxbal/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace coxbal {

using Coset = std::uint32_t;

/// A subset of the simple roots, as a bit set over 0..rank-1.
using RootSubset = DynamicBitset;

inline RootSubset all_roots(int rank)
{
    RootSubset s(static_cast<std::size_t>(rank));
    s.set_all();
    return s;
}

/// Parses "all", "1,2,4", "1 2 4", "{1,2}" or, for rank < 10, a digit string
/// such as "124". Indices are 1-based. "none" and "{}" give the empty set.
inline RootSubset parse_subset(const std::string & text, int rank)
{
    RootSubset out(static_cast<std::size_t>(rank));
    std::string t;
    for (char c : text)
        if (c != '{' && c != '}')
            t.push_back(c);
    auto lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "all" || lower == "delta") {
        out.set_all();
        return out;
    }
    if (lower.empty() || lower == "none")
        return out;
    std::vector<int> values;
    const bool digits_only = std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    if (digits_only && rank < 10 && t.size() > 1) {
        for (char c : t)
            values.push_back(c - '0');
    }
    else {
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        std::string tok;
        while (in >> tok) {
            if (! std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
                fail(ErrorKind::MalformedInput, "bad simple-root index '" + tok + "'");
            values.push_back(std::stoi(tok));
        }
    }
    for (int v : values) {
        if (v < 1 || v > rank)
            fail(ErrorKind::MalformedInput, "simple-root index " + std::to_string(v) + " outside 1.." + std::to_string(rank));
        out.set(static_cast<std::size_t>(v - 1));
    }
    return out;
}

/// 1-based indices of a subset.
inline std::vector<int> subset_indices(const RootSubset & s)
{
    std::vector<int> out;
    s.for_each([&](std::size_t i) { out.push_back(static_cast<int>(i) + 1); });
    return out;
}

/// Compact form used in tables and text output: "all", "none" or "1,4".
inline std::string format_subset(const RootSubset & s)
{
    if (s.none())
        return "none";
    if (s.count() == s.size())
        return "all";
    std::string out;
    for (int i : subset_indices(s))
        out += (out.empty() ? "" : ",") + std::to_string(i);
    return out;
}

/// The double-coset poset <Delta\theta> \ W / <Delta\eta> with its minimal
/// representatives, induced Bruhat order and, when iota(theta) = theta, the
/// left action of w0. Cosets are numbered in increasing order of their
/// representatives' group indices.
class Quotient {
public:
    const GroupTable & group() const { return *g_; }
    std::shared_ptr<const GroupTable> group_ptr() const { return g_; }
    const RootSubset & theta() const { return theta_; }
    const RootSubset & eta() const { return eta_; }
    bool theta_full() const { return theta_.count() == theta_.size(); }
    bool is_full() const { return theta_full() && eta_.count() == eta_.size(); }

    std::size_t size() const { return reps_.size(); }
    Element rep(Coset c) const { return reps_[c]; }
    const std::vector<Element> & reps() const { return reps_; }
    Coset project(Element w) const { return project_[w]; }

    bool leq(Coset a, Coset b) const { return down_[b].test(a); }
    const DynamicBitset & downset(Coset c) const { return down_[c]; }
    const DynamicBitset & upset(Coset c) const { return up_[c]; }

    bool has_w0_action() const { return w0_action_.has_value(); }
    Coset w0_action(Coset c) const
    {
        require_action();
        return (*w0_action_)[c];
    }
    const std::vector<Coset> & w0_permutation() const
    {
        require_action();
        return *w0_action_;
    }

    bool has_fixed_point() const
    {
        require_action();
        for (Coset c = 0; c < size(); ++c)
            if ((*w0_action_)[c] == c)
                return true;
        return false;
    }

    Coset bottom() const { return project_[GroupTable::identity()]; }
    Coset top() const { return project_[g_->w0()]; }

    /// Weighted length of the minimal representative; only meaningful for theta = Delta.
    int coset_weighted_dim(Coset c, const MultiplicityProfile & profile) const
    {
        if (! theta_full())
            fail(ErrorKind::ThetaNotFull, "coset dimension is defined only for theta = Delta");
        return g_->weighted_length(reps_[c], profile);
    }

    /// 1-based minimal reduced word of the representative.
    std::vector<int> rep_word(Coset c) const
    {
        auto w = g_->reduced_word(reps_[c]);
        for (auto & a : w)
            ++a;
        return w;
    }

    friend Quotient double_cosets(std::shared_ptr<const GroupTable> g, const RootSubset & theta, const RootSubset & eta, bool require_w0_action);

private:
    void require_action() const
    {
        if (! w0_action_)
            fail(ErrorKind::IotaViolation, "w0 does not act on this quotient: iota(theta) != theta for theta = {" + format_subset(theta_) + "}");
    }

    std::shared_ptr<const GroupTable> g_;
    RootSubset theta_, eta_;
    std::vector<Element> reps_;
    std::vector<Coset> project_;
    std::vector<DynamicBitset> down_, up_;
    std::optional<std::vector<Coset>> w0_action_;
};

inline bool iota_invariant(const GroupTable & g, const RootSubset & theta)
{
    for (int i = 0; i < g.rank(); ++i)
        if (theta.test(static_cast<std::size_t>(i)) != theta.test(static_cast<std::size_t>(g.iota(i))))
            return false;
    return true;
}

inline Quotient double_cosets(std::shared_ptr<const GroupTable> g, const RootSubset & theta, const RootSubset & eta, bool require_w0_action = false)
{
    const int rank = g->rank();
    if (theta.size() != static_cast<std::size_t>(rank) || eta.size() != static_cast<std::size_t>(rank))
        fail(ErrorKind::MalformedInput, "theta/eta must be subsets of the " + std::to_string(rank) + " simple roots");
    if (theta.none() || eta.none())
        fail(ErrorKind::MalformedInput, "theta and eta must be non-empty");

    Quotient q;
    q.g_ = g;
    q.theta_ = theta;
    q.eta_ = eta;

    // Minimal representatives by descent removal; indices increase with
    // length, so s_i w and w s_j are already resolved when w is visited.
    std::vector<int> left_gens, right_gens;
    for (int i = 0; i < rank; ++i) {
        if (! theta.test(static_cast<std::size_t>(i)))
            left_gens.push_back(i);
        if (! eta.test(static_cast<std::size_t>(i)))
            right_gens.push_back(i);
    }
    std::vector<Element> minrep(g->size());
    for (Element w = 0; w < g->size(); ++w) {
        Element m = w;
        for (int i : left_gens)
            if (g->left_descent(w, i)) {
                m = minrep[g->left_mul(w, i)];
                break;
            }
        if (m == w)
            for (int j : right_gens)
                if (g->right_descent(w, j)) {
                    m = minrep[g->right_mul(w, j)];
                    break;
                }
        minrep[w] = m;
        if (m == w)
            q.reps_.push_back(w);
    }
    std::vector<Coset> coset_of_rep(g->size(), 0);
    for (Coset c = 0; c < q.reps_.size(); ++c)
        coset_of_rep[q.reps_[c]] = c;
    q.project_.resize(g->size());
    for (Element w = 0; w < g->size(); ++w)
        q.project_[w] = coset_of_rep[minrep[w]];

    const std::size_t n = q.reps_.size();
    q.down_.assign(n, DynamicBitset(n));
    q.up_.assign(n, DynamicBitset(n));
    for (Coset b = 0; b < n; ++b)
        for (Coset a = 0; a <= b; ++a) // reps are sorted by length, so rep a <= rep b forces a <= b
            if (leq(*g, q.reps_[a], q.reps_[b])) {
                q.down_[b].set(a);
                q.up_[a].set(b);
            }

    if (iota_invariant(*g, theta)) {
        std::vector<Coset> action(n);
        for (Coset c = 0; c < n; ++c)
            action[c] = q.project_[g->multiply(g->w0(), q.reps_[c])];
        q.w0_action_ = std::move(action);
    }
    else if (require_w0_action)
        q.require_action();
    return q;
}

inline Quotient double_cosets(std::shared_ptr<const GroupTable> g, const std::string & theta, const std::string & eta, bool require_w0_action = false)
{
    const int rank = g->rank();
    return double_cosets(g, parse_subset(theta, rank), parse_subset(eta, rank), require_w0_action);
}

} // namespace coxbal
