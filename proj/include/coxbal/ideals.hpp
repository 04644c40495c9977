#pragma once

#include "coxbal/bitset.hpp"
#include "coxbal/error.hpp"
#include "coxbal/parabolic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace coxbal {

/// A set of cosets of one quotient.
using IdealSet = DynamicBitset;

inline bool is_ideal(const Quotient & q, const IdealSet & set)
{
    bool ok = true;
    set.for_each([&](std::size_t x) {
        if (ok && ! q.downset(static_cast<Coset>(x)).is_subset_of(set))
            ok = false;
    });
    return ok;
}

/// x not in I implies w0 x in I.
inline bool is_fat(const Quotient & q, const IdealSet & set)
{
    const auto & phi = q.w0_permutation();
    for (Coset c = 0; c < q.size(); ++c)
        if (! set.test(c) && ! set.test(phi[c]))
            return false;
    return true;
}

/// x in I implies w0 x not in I.
inline bool is_slim(const Quotient & q, const IdealSet & set)
{
    const auto & phi = q.w0_permutation();
    for (Coset c = 0; c < q.size(); ++c)
        if (set.test(c) && set.test(phi[c]))
            return false;
    return true;
}

inline bool is_balanced(const Quotient & q, const IdealSet & set)
{
    return is_fat(q, set) && is_slim(q, set) && is_ideal(q, set);
}

/// Downward closure of a set of cosets.
inline IdealSet ideal_generated_by(const Quotient & q, const std::vector<Coset> & gens)
{
    IdealSet out(q.size());
    for (Coset c : gens)
        out |= q.downset(c);
    return out;
}

/// The maximal elements of an ideal, in increasing coset order.
inline std::vector<Coset> minimal_generators(const Quotient & q, const IdealSet & ideal)
{
    if (! is_ideal(q, ideal))
        fail(ErrorKind::NotAnIdeal, "set is not downward closed");
    std::vector<Coset> out;
    ideal.for_each([&](std::size_t x) {
        if ((q.upset(static_cast<Coset>(x)) & ideal).count() == 1)
            out.push_back(static_cast<Coset>(x));
    });
    return out;
}

/// Simple roots alpha with s_alpha I = I (left) and I s_alpha = I (right).
/// Defined on the full quotient, where cosets are group elements.
inline std::pair<RootSubset, RootSubset> invariance(const Quotient & q, const IdealSet & ideal)
{
    if (! q.is_full())
        fail(ErrorKind::NotFullQuotient, "invariance is defined for theta = eta = Delta only");
    const auto & g = q.group();
    RootSubset left(static_cast<std::size_t>(g.rank())), right(static_cast<std::size_t>(g.rank()));
    for (int i = 0; i < g.rank(); ++i) {
        bool l = true, r = true;
        ideal.for_each([&](std::size_t x) {
            auto w = q.rep(static_cast<Coset>(x));
            l = l && ideal.test(q.project(g.left_mul(w, i)));
            r = r && ideal.test(q.project(g.right_mul(w, i)));
        });
        left.assign(static_cast<std::size_t>(i), l);
        right.assign(static_cast<std::size_t>(i), r);
    }
    return {left, right};
}

/// Maximum weighted coset dimension over the ideal (theta = Delta).
inline int ideal_dimension(const Quotient & q, const IdealSet & ideal, const MultiplicityProfile & profile)
{
    if (! q.theta_full())
        fail(ErrorKind::ThetaNotFull, "ideal dimension is defined only for theta = Delta");
    int best = 0;
    for (Coset c : minimal_generators(q, ideal))
        best = std::max(best, q.coset_weighted_dim(c, profile));
    return best;
}

/// Greedy completion of a slim ideal: walk cosets in increasing order and
/// put each undecided coset into the ideal when that keeps it slim,
/// otherwise its w0-image.
inline IdealSet extend_slim_to_balanced(const Quotient & q, const IdealSet & slim)
{
    if (! is_ideal(q, slim))
        fail(ErrorKind::NotAnIdeal, "input is not downward closed");
    if (q.has_fixed_point())
        fail(ErrorKind::FixedPointExists, "w0 fixes a coset, so no balanced ideal exists");
    if (! is_slim(q, slim))
        fail(ErrorKind::NotSlim, "input contains a coset together with its w0-image");
    const auto & phi = q.w0_permutation();
    IdealSet in = slim, out(q.size());
    in.for_each([&](std::size_t x) { out.set(phi[x]); });
    auto try_add = [&](Coset y) {
        if (q.leq(phi[y], y) || q.downset(y).intersects(out))
            return false;
        in |= q.downset(y);
        out |= q.upset(phi[y]);
        return true;
    };
    for (Coset c = 0; c < q.size(); ++c) {
        if (in.test(c) || out.test(c))
            continue;
        if (! try_add(c) && ! try_add(phi[c]))
            fail(ErrorKind::NotSlim, "no slim extension found"); // cannot happen for slim input
    }
    return in;
}

struct EnumerationOptions {
    bool collect = false;                 // keep the ideals, not only the count
    std::optional<std::uint64_t> limit;   // with collect: LimitExceeded above this many
    unsigned jobs = 0;                    // 0: hardware concurrency
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    bool complete = true; // false when the deadline stopped the search; count is then a lower bound
    std::vector<IdealSet> ideals; // sorted by bit pattern when collected
};

namespace detail {

/// Depth-first search over the w0-orbit pairs {x, w0 x}. A state is a slim
/// ideal `in` together with out = w0(in). Every slim ideal extends to a
/// balanced one, so every branch that passes the consistency test ends in
/// at least one leaf and the work is proportional to the output.
class BalancedSearch {
public:
    explicit BalancedSearch(const Quotient & q) : q_(q), n_(q.size()), words_(DynamicBitset::word_count(q.size()))
    {
        phi_ = q.w0_permutation();
        down_.assign(n_ * words_, 0);
        up_.assign(n_ * words_, 0);
        self_conflict_.assign(n_, 0);
        for (Coset c = 0; c < n_; ++c) {
            auto d = q.downset(c).words(), u = q.upset(c).words();
            std::copy(d.begin(), d.end(), down_.begin() + static_cast<std::ptrdiff_t>(c * words_));
            std::copy(u.begin(), u.end(), up_.begin() + static_cast<std::ptrdiff_t>(c * words_));
            self_conflict_[c] = q.leq(phi_[c], c);
        }
        // One representative per pair, higher pairs first so that each
        // decision settles as much of the poset as possible.
        const auto & g = q.group();
        for (Coset c = 0; c < n_; ++c)
            if (c > phi_[c])
                order_.push_back(c);
        std::stable_sort(order_.begin(), order_.end(), [&](Coset a, Coset b) {
            return g.length(q.rep(a)) > g.length(q.rep(b));
        });
    }

    struct State {
        std::vector<std::uint64_t> in, out;
        std::size_t pos = 0;
    };

    State root() const { return {std::vector<std::uint64_t>(words_, 0), std::vector<std::uint64_t>(words_, 0), 0}; }

    /// Advances `pos` to the next undecided pair; false if none is left.
    bool next_open(State & s) const
    {
        while (s.pos < order_.size()) {
            Coset x = order_[s.pos];
            if (! test(s.in, x) && ! test(s.out, x))
                return true;
            ++s.pos;
        }
        return false;
    }

    /// Children of a state with an open pair, in a fixed order.
    std::vector<State> children(const State & s) const
    {
        std::vector<State> out;
        Coset x = order_[s.pos];
        for (Coset y : {x, phi_[x]})
            if (can_add(s.out.data(), y)) {
                State c = s;
                add(c.in.data(), c.out.data(), y);
                ++c.pos;
                out.push_back(std::move(c));
            }
        return out;
    }

    template <typename Leaf, typename Tick>
    void run(const State & start, Leaf && leaf, Tick && tick) const
    {
        const std::size_t depth = order_.size() + 1;
        std::vector<std::uint64_t> in(depth * words_), out(depth * words_);
        std::copy(start.in.begin(), start.in.end(), in.begin());
        std::copy(start.out.begin(), start.out.end(), out.begin());
        dfs(0, start.pos, in, out, leaf, tick);
    }

    std::size_t words() const { return words_; }
    std::size_t size() const { return n_; }

private:
    static bool test(const std::vector<std::uint64_t> & bits, Coset c) { return (bits[c >> 6] >> (c & 63)) & 1U; }

    bool can_add(const std::uint64_t * out, Coset y) const
    {
        if (self_conflict_[y])
            return false;
        const std::uint64_t * d = down_.data() + y * words_;
        for (std::size_t i = 0; i < words_; ++i)
            if (d[i] & out[i])
                return false;
        return true;
    }

    void add(std::uint64_t * in, std::uint64_t * out, Coset y) const
    {
        const std::uint64_t * d = down_.data() + y * words_;
        const std::uint64_t * u = up_.data() + phi_[y] * words_;
        for (std::size_t i = 0; i < words_; ++i) {
            in[i] |= d[i];
            out[i] |= u[i];
        }
    }

    // Returns false when tick() asked to stop.
    template <typename Leaf, typename Tick>
    bool dfs(std::size_t level, std::size_t pos, std::vector<std::uint64_t> & in, std::vector<std::uint64_t> & out, Leaf & leaf, Tick & tick) const
    {
        if (! tick())
            return false;
        std::uint64_t * cur_in = in.data() + level * words_;
        std::uint64_t * cur_out = out.data() + level * words_;
        while (pos < order_.size()) {
            Coset x = order_[pos];
            if (! ((cur_in[x >> 6] >> (x & 63)) & 1U) && ! ((cur_out[x >> 6] >> (x & 63)) & 1U))
                break;
            ++pos;
        }
        if (pos == order_.size()) {
            leaf(cur_in);
            return true;
        }
        Coset x = order_[pos];
        std::uint64_t * next_in = cur_in + words_;
        std::uint64_t * next_out = cur_out + words_;
        for (Coset y : {x, phi_[x]}) {
            if (! can_add(cur_out, y))
                continue;
            std::copy_n(cur_in, words_, next_in);
            std::copy_n(cur_out, words_, next_out);
            add(next_in, next_out, y);
            if (! dfs(level + 1, pos + 1, in, out, leaf, tick))
                return false;
        }
        return true;
    }

    const Quotient & q_;
    std::size_t n_, words_;
    std::vector<Coset> phi_;
    std::vector<std::uint64_t> down_, up_;
    std::vector<char> self_conflict_;
    std::vector<Coset> order_;
};

} // namespace detail

/// All balanced ideals of a quotient on which w0 acts.
inline EnumerationResult enumerate_balanced(const Quotient & q, const EnumerationOptions & options = {})
{
    EnumerationResult result;
    if (q.has_fixed_point()) // also raises IotaViolation when w0 does not act
        return result;

    detail::BalancedSearch search(q);
    unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());

    // Expand the top of the tree breadth-first into independent subtrees.
    std::vector<detail::BalancedSearch::State> frontier{search.root()}, tasks;
    std::vector<std::vector<std::uint64_t>> early_leaves;
    const std::size_t wanted = 4 * static_cast<std::size_t>(jobs);
    while (! frontier.empty() && frontier.size() < wanted) {
        std::vector<detail::BalancedSearch::State> next;
        for (auto & s : frontier) {
            if (! search.next_open(s)) {
                early_leaves.push_back(std::move(s.in));
                continue;
            }
            for (auto & c : search.children(s))
                next.push_back(std::move(c));
        }
        frontier = std::move(next);
    }
    tasks = std::move(frontier);

    std::atomic<std::uint64_t> total{early_leaves.size()};
    std::atomic<bool> stop{false}, timed_out{false}, over_limit{false};
    std::atomic<std::size_t> next_task{0};
    std::mutex collect_mutex;
    std::vector<IdealSet> collected;
    auto keep = [&](const std::uint64_t * words) {
        collected.push_back(DynamicBitset::from_words(q.size(), std::span<const std::uint64_t>(words, search.words())));
    };
    for (const auto & leaf : early_leaves)
        if (options.collect)
            keep(leaf.data());
    if (options.collect && options.limit && total.load() > *options.limit)
        over_limit = true;

    auto worker = [&]() {
        std::uint64_t local_nodes = 0;
        std::vector<IdealSet> local;
        auto tick = [&]() {
            if ((local_nodes++ & 4095U) == 0) {
                if (stop.load(std::memory_order_relaxed))
                    return false;
                if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
                    timed_out = true;
                    stop = true;
                    return false;
                }
            }
            return ! over_limit.load(std::memory_order_relaxed);
        };
        auto leaf = [&](const std::uint64_t * words) {
            auto seen = ++total;
            if (options.collect) {
                if (options.limit && seen > *options.limit) {
                    over_limit = true;
                    stop = true;
                    return;
                }
                local.push_back(DynamicBitset::from_words(q.size(), std::span<const std::uint64_t>(words, search.words())));
            }
        };
        while (! stop.load()) {
            std::size_t t = next_task++;
            if (t >= tasks.size())
                break;
            search.run(tasks[t], leaf, tick);
        }
        std::lock_guard lock(collect_mutex);
        for (auto & s : local)
            collected.push_back(std::move(s));
    };

    if (! over_limit) {
        std::vector<std::thread> pool;
        const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
        for (unsigned j = 1; j < spawn; ++j)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();
    }

    if (over_limit)
        fail(ErrorKind::LimitExceeded, "more than " + std::to_string(*options.limit) + " balanced ideals; raise --limit or use count");
    result.count = total.load();
    result.complete = ! timed_out.load();
    if (options.collect) {
        std::sort(collected.begin(), collected.end());
        result.ideals = std::move(collected);
    }
    return result;
}

inline std::uint64_t count_balanced(const Quotient & q, unsigned jobs = 0)
{
    EnumerationOptions options;
    options.jobs = jobs;
    return enumerate_balanced(q, options).count;
}

/// Classification of one balanced ideal for output.
struct BalancedIdealReport {
    IdealSet members;
    std::vector<Coset> generators;
    std::vector<std::vector<int>> generator_words; // 1-based letters
    std::size_t size = 0;
    std::optional<int> dimension;                  // theta = Delta only
    std::optional<RootSubset> left_invariance;     // full quotient only
    std::optional<RootSubset> right_invariance;
};

inline BalancedIdealReport make_report(const Quotient & q, const IdealSet & ideal, const MultiplicityProfile * profile = nullptr)
{
    BalancedIdealReport r;
    r.members = ideal;
    r.generators = minimal_generators(q, ideal);
    for (Coset c : r.generators)
        r.generator_words.push_back(q.rep_word(c));
    r.size = ideal.count();
    if (q.theta_full()) {
        auto split = profile ? *profile : coxbal::profile(q.group().roots(), ProfileKind::Split);
        r.dimension = ideal_dimension(q, ideal, split);
    }
    if (q.is_full()) {
        auto [l, rr] = invariance(q, ideal);
        r.left_invariance = l;
        r.right_invariance = rr;
    }
    return r;
}

/// Reports sorted by (size, generator words compared lexicographically).
inline std::vector<BalancedIdealReport> make_reports(const Quotient & q, const std::vector<IdealSet> & ideals, const MultiplicityProfile * profile = nullptr)
{
    std::vector<BalancedIdealReport> out;
    out.reserve(ideals.size());
    for (const auto & i : ideals)
        out.push_back(make_report(q, i, profile));
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
        if (a.size != b.size)
            return a.size < b.size;
        return a.generator_words < b.generator_words;
    });
    return out;
}

} // namespace coxbal
