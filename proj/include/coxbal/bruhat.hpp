#pragma once

#include "coxbal/bitset.hpp"
#include "coxbal/error.hpp"
#include "coxbal/weyl.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace coxbal {

/// u <= w in the Bruhat order. Lifting: take s with sw < w; then
/// u <= w iff (su <= sw when su < u, otherwise u <= sw). Each step has a
/// single successor, so the walk costs O(length(w)) and needs no memo.
inline bool leq(const GroupTable & g, Element u, Element w)
{
    while (true) {
        if (g.length(u) > g.length(w))
            return false;
        if (u == GroupTable::identity())
            return true;
        if (g.length(u) == g.length(w))
            return u == w;
        int s = g.first_left_descent(w);
        if (g.left_descent(u, s))
            u = g.left_mul(u, s);
        w = g.left_mul(w, s);
    }
}

/// Type-A comparison via the rank tables w[i,j] = |{a <= i : w(a) <= j}|.
/// Permutations are in one-line notation on {1..n}.
inline bool one_line_leq_A(int n, const std::vector<int> & u, const std::vector<int> & w)
{
    auto check = [n](const std::vector<int> & p) {
        if (static_cast<int>(p.size()) != n)
            fail(ErrorKind::NotAPermutation, "expected " + std::to_string(n) + " entries");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : p) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                fail(ErrorKind::NotAPermutation, "not a permutation of 1.." + std::to_string(n));
            seen[static_cast<std::size_t>(v)] = true;
        }
    };
    check(u);
    check(w);
    std::vector<int> cu(static_cast<std::size_t>(n) + 1, 0), cw(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        // After row i, cu[j] = u[i+1, j].
        for (int j = u[static_cast<std::size_t>(i)]; j <= n; ++j)
            ++cu[static_cast<std::size_t>(j)];
        for (int j = w[static_cast<std::size_t>(i)]; j <= n; ++j)
            ++cw[static_cast<std::size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (cu[static_cast<std::size_t>(j)] < cw[static_cast<std::size_t>(j)])
                return false;
    }
    return true;
}

/// One-line notation of an element of W(A_{n-1}) with s_i the transposition (i, i+1).
inline std::vector<int> one_line_notation(const GroupTable & g, Element w)
{
    const int n = g.rank() + 1;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i + 1;
    for (int a : g.reduced_word(w))
        std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a) + 1]);
    return p;
}

/// {u : u <= w} as a bit set over W, built along a reduced word of w:
/// if x < s x then [e, s x] = [e, x] union s[e, x].
inline DynamicBitset downset(const GroupTable & g, Element w)
{
    DynamicBitset down(g.size());
    std::vector<Element> members{GroupTable::identity()};
    down.set(GroupTable::identity());
    auto word = g.reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const std::size_t n = members.size();
        for (std::size_t k = 0; k < n; ++k) {
            Element y = g.left_mul(members[k], *it);
            if (! down.test(y)) {
                down.set(y);
                members.push_back(y);
            }
        }
    }
    return down;
}

/// {u : u >= w}, using that left multiplication by w0 reverses the order.
inline DynamicBitset upset(const GroupTable & g, Element w)
{
    DynamicBitset up(g.size());
    downset(g, g.multiply(g.w0(), w)).for_each([&](std::size_t x) { up.set(g.multiply(g.w0(), static_cast<Element>(x))); });
    return up;
}

/// Covering relations, computed from the reflections on request.
class BruhatPoset {
public:
    explicit BruhatPoset(std::shared_ptr<const GroupTable> g) : g_(std::move(g))
    {
        reflections_.reserve(g_->num_positive_roots());
        for (std::size_t r = 0; r < g_->num_positive_roots(); ++r)
            reflections_.push_back(g_->reflection(r));
    }

    const GroupTable & group() const { return *g_; }
    const std::vector<Element> & reflections() const { return reflections_; }

    bool leq(Element u, Element w) const { return coxbal::leq(*g_, u, w); }

    /// Elements covered by w: t w with length one less, t a reflection.
    std::vector<Element> covers(Element w) const
    {
        std::vector<Element> out;
        for (Element t : reflections_) {
            Element tw = g_->multiply(t, w);
            if (g_->length(tw) + 1 == g_->length(w))
                out.push_back(tw);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    DynamicBitset downset(Element w) const { return coxbal::downset(*g_, w); }
    DynamicBitset upset(Element w) const { return coxbal::upset(*g_, w); }

private:
    std::shared_ptr<const GroupTable> g_;
    std::vector<Element> reflections_;
};

} // namespace coxbal
