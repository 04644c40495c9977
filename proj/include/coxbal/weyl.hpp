#pragma once

#include "coxbal/bitset.hpp"
#include "coxbal/error.hpp"
#include "coxbal/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace coxbal {

using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultCapacity = 10'000'000;

/// The whole finite Weyl group, one dense index per element. Index 0 is the
/// identity; indices increase with length and, within a length, with the
/// lexicographically smallest reduced word. Immutable once built.
class GroupTable {
public:
    /// Raw arrays, exposed so the cache can round-trip a table.
    struct Data {
        std::size_t size = 0;
        std::vector<std::uint64_t> inversions; // size * words_per_set
        std::vector<std::uint8_t> lengths;
        std::vector<Element> left_mul;  // size * rank
        std::vector<Element> right_mul; // size * rank
        std::vector<Element> inverse;
    };

    GroupTable(RootSystem roots, Data data) : roots_(std::move(roots)), d_(std::move(data))
    {
        words_ = DynamicBitset::word_count(roots_.num_positive());
        rank_ = roots_.rank();
        w0_ = static_cast<Element>(d_.size - 1);
        iota_.resize(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i) {
            Element conj = multiply(multiply(w0_, generator(i)), w0_);
            iota_[static_cast<std::size_t>(i)] = first_left_descent(conj);
        }
    }

    const RootSystem & roots() const { return roots_; }
    const CoxeterDiagram & diagram() const { return roots_.diagram(); }
    const Data & data() const { return d_; }

    std::size_t size() const { return d_.size; }
    int rank() const { return rank_; }
    std::size_t num_positive_roots() const { return roots_.num_positive(); }
    std::size_t words_per_set() const { return words_; }

    static constexpr Element identity() { return 0; }
    Element w0() const { return w0_; }
    Element generator(int i) const { return left_mul(identity(), i); }

    int length(Element w) const { return d_.lengths[w]; }
    Element left_mul(Element w, int i) const { return d_.left_mul[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i)]; }
    Element right_mul(Element w, int i) const { return d_.right_mul[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i)]; }
    Element inverse(Element w) const { return d_.inverse[w]; }

    std::span<const std::uint64_t> inversion_words(Element w) const
    {
        return {d_.inversions.data() + static_cast<std::size_t>(w) * words_, words_};
    }

    /// Psi_w = { beta > 0 : w^{-1} beta < 0 } as a bit set over positive-root indices.
    DynamicBitset inversion_set(Element w) const { return DynamicBitset::from_words(roots_.num_positive(), inversion_words(w)); }

    bool in_inversion_set(Element w, std::size_t r) const { return (inversion_words(w)[r >> 6] >> (r & 63)) & 1U; }

    /// s_i w < w
    bool left_descent(Element w, int i) const { return in_inversion_set(w, static_cast<std::size_t>(i)); }
    /// w s_i < w
    bool right_descent(Element w, int i) const { return d_.lengths[right_mul(w, i)] < d_.lengths[w]; }

    /// Smallest i with s_i w < w, or -1 for the identity.
    int first_left_descent(Element w) const
    {
        for (int i = 0; i < rank_; ++i)
            if (left_descent(w, i))
                return i;
        return -1;
    }

    DynamicBitset left_descents(Element w) const
    {
        DynamicBitset out(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i)
            if (left_descent(w, i))
                out.set(static_cast<std::size_t>(i));
        return out;
    }

    DynamicBitset right_descents(Element w) const
    {
        DynamicBitset out(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i)
            if (right_descent(w, i))
                out.set(static_cast<std::size_t>(i));
        return out;
    }

    /// iota(i) with w0 s_i w0 = s_{iota(i)}.
    int iota(int i) const { return iota_[static_cast<std::size_t>(i)]; }
    const std::vector<int> & opposition_involution() const { return iota_; }

    /// Lexicographically smallest reduced word, 0-based letters.
    std::vector<int> reduced_word(Element w) const
    {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(length(w)));
        while (w != identity()) {
            int a = first_left_descent(w);
            word.push_back(a);
            w = left_mul(w, a);
        }
        return word;
    }

    /// Product of generators s_{word[0]} s_{word[1]} ...; the word need not be reduced.
    Element from_word(std::span<const int> word) const
    {
        Element x = identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (*it < 0 || *it >= rank_)
                fail(ErrorKind::MalformedInput, "generator index out of range");
            x = left_mul(x, *it);
        }
        return x;
    }

    Element multiply(Element u, Element v) const
    {
        // u = s_{a1} ... s_{ak}; peel letters off the right end of u.
        Element x = v;
        Element cur = inverse(u);
        while (cur != identity()) {
            int a = first_left_descent(cur);
            x = left_mul(x, a);
            cur = left_mul(cur, a);
        }
        return x;
    }

    /// The reflection along positive root r as a group element.
    Element reflection(std::size_t r) const
    {
        auto [x, j] = roots_.conjugating_word(r);
        std::vector<int> word = x;
        word.push_back(j);
        word.insert(word.end(), x.rbegin(), x.rend());
        return from_word(word);
    }

    int weighted_length(Element w, const MultiplicityProfile & profile) const
    {
        int total = 0;
        auto span = inversion_words(w);
        for (std::size_t wi = 0; wi < span.size(); ++wi)
            for (std::uint64_t bits = span[wi]; bits; bits &= bits - 1)
                total += profile.weight(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        return total;
    }

private:
    RootSystem roots_;
    Data d_;
    std::size_t words_ = 0;
    int rank_ = 0;
    Element w0_ = 0;
    std::vector<int> iota_;
};

/// Breadth-first closure by left multiplication, identifying elements by
/// their inversion sets.
inline std::shared_ptr<const GroupTable> enumerate_group(const RootSystem & roots, std::uint64_t capacity = kDefaultCapacity)
{
    const auto order = roots.diagram().group_order();
    if (order > capacity)
        fail(ErrorKind::CapacityExceeded,
            "|W(" + roots.diagram().label() + ")| = " + std::to_string(order) + " exceeds the capacity " + std::to_string(capacity));

    const int rank = roots.rank();
    const std::size_t R = static_cast<std::size_t>(rank);
    const std::size_t N = roots.num_positive();
    const std::size_t W = DynamicBitset::word_count(N);
    const std::size_t total = static_cast<std::size_t>(order);

    GroupTable::Data d;
    d.size = total;
    d.inversions.assign(total * W, 0);
    d.lengths.assign(total, 0);
    d.left_mul.assign(total * R, 0);

    std::size_t level_begin = 0, level_end = 1, next_index = 1;
    int level = 0;
    std::vector<std::uint64_t> cand_words;
    struct Candidate {
        Element parent;
        int gen;
    };
    std::vector<Candidate> cands;
    std::vector<std::uint32_t> perm;

    while (level_end > level_begin) {
        cands.clear();
        cand_words.clear();
        for (std::size_t v = level_begin; v < level_end; ++v) {
            const std::uint64_t * psi = d.inversions.data() + v * W;
            for (int a = 0; a < rank; ++a) {
                if ((psi[static_cast<std::size_t>(a) >> 6] >> (a & 63)) & 1U)
                    continue;
                std::size_t base = cand_words.size();
                cand_words.resize(base + W, 0);
                std::uint64_t * out = cand_words.data() + base;
                out[static_cast<std::size_t>(a) >> 6] |= std::uint64_t{1} << (a & 63);
                for (std::size_t wi = 0; wi < W; ++wi)
                    for (std::uint64_t bits = psi[wi]; bits; bits &= bits - 1) {
                        auto r = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        auto img = roots.reflect(a, r).index;
                        out[img >> 6] |= std::uint64_t{1} << (img & 63);
                    }
                cands.push_back({static_cast<Element>(v), a});
            }
        }
        if (cands.empty())
            break;

        perm.resize(cands.size());
        std::iota(perm.begin(), perm.end(), 0U);
        auto words_of = [&](std::uint32_t c) { return cand_words.data() + static_cast<std::size_t>(c) * W; };
        std::sort(perm.begin(), perm.end(), [&](std::uint32_t x, std::uint32_t y) {
            auto px = words_of(x), py = words_of(y);
            for (std::size_t i = 0; i < W; ++i)
                if (px[i] != py[i])
                    return px[i] < py[i];
            return cands[x].gen < cands[y].gen;
        });

        // Group equal inversion sets; the first of each group has the smallest
        // generator, which is the element's smallest left descent.
        struct Group {
            std::size_t first, last;
        };
        std::vector<Group> groups;
        for (std::size_t k = 0; k < perm.size();) {
            std::size_t e = k + 1;
            while (e < perm.size() && std::equal(words_of(perm[k]), words_of(perm[k]) + W, words_of(perm[e])))
                ++e;
            groups.push_back({k, e});
            k = e;
        }
        std::sort(groups.begin(), groups.end(), [&](const Group & x, const Group & y) {
            const auto & cx = cands[perm[x.first]];
            const auto & cy = cands[perm[y.first]];
            if (cx.gen != cy.gen)
                return cx.gen < cy.gen;
            return cx.parent < cy.parent;
        });

        if (next_index + groups.size() > total)
            fail(ErrorKind::CapacityExceeded, "group enumeration overflowed the expected order");
        ++level;
        std::size_t new_begin = next_index;
        for (const auto & g : groups) {
            auto w = static_cast<Element>(next_index++);
            std::copy_n(words_of(perm[g.first]), W, d.inversions.data() + static_cast<std::size_t>(w) * W);
            d.lengths[w] = static_cast<std::uint8_t>(level);
            for (std::size_t k = g.first; k < g.last; ++k) {
                const auto & c = cands[perm[k]];
                d.left_mul[static_cast<std::size_t>(c.parent) * R + static_cast<std::size_t>(c.gen)] = w;
                d.left_mul[static_cast<std::size_t>(w) * R + static_cast<std::size_t>(c.gen)] = c.parent;
            }
        }
        level_begin = new_begin;
        level_end = next_index;
    }
    if (next_index != total)
        fail(ErrorKind::CapacityExceeded, "group enumeration produced " + std::to_string(next_index) + " elements, expected " + std::to_string(total));

    // Inverses: w = s_{a1} ... s_{ak} gives w^{-1} = s_{ak} ... s_{a1}.
    d.inverse.assign(total, 0);
    auto first_descent = [&](std::size_t w) {
        const std::uint64_t * psi = d.inversions.data() + w * W;
        for (int i = 0; i < rank; ++i)
            if ((psi[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U)
                return i;
        return -1;
    };
    for (std::size_t w = 0; w < total; ++w) {
        Element x = 0;
        std::size_t cur = w;
        while (cur != 0) {
            int a = first_descent(cur);
            x = d.left_mul[static_cast<std::size_t>(x) * R + static_cast<std::size_t>(a)];
            cur = d.left_mul[cur * R + static_cast<std::size_t>(a)];
        }
        d.inverse[w] = x;
    }
    d.right_mul.assign(total * R, 0);
    for (std::size_t w = 0; w < total; ++w) {
        std::size_t wi = d.inverse[w];
        for (std::size_t i = 0; i < R; ++i)
            d.right_mul[w * R + i] = d.inverse[d.left_mul[wi * R + i]];
    }
    return std::make_shared<const GroupTable>(roots, std::move(d));
}

inline std::shared_ptr<const GroupTable> enumerate_group(const CoxeterDiagram & diagram, std::uint64_t capacity = kDefaultCapacity)
{
    if (diagram.group_order() > capacity)
        fail(ErrorKind::CapacityExceeded,
            "|W(" + diagram.label() + ")| = " + std::to_string(diagram.group_order()) + " exceeds the capacity " + std::to_string(capacity));
    return enumerate_group(build_root_system(diagram), capacity);
}

} // namespace coxbal
