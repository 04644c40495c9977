#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coxbal {

/// Fixed-size-at-construction bit set backed by 64-bit words. Bits past
/// size() are always zero, so word-wise comparison and hashing are exact.
class DynamicBitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t bits) : size_(bits), words_(word_count(bits), 0) {}

    static constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

    static DynamicBitset from_words(std::size_t bits, std::span<const Word> words)
    {
        DynamicBitset result(bits);
        std::copy_n(words.begin(), result.words_.size(), result.words_.begin());
        result.trim();
        return result;
    }

    std::size_t size() const { return size_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= Word{1} << (i & 63); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

    void set_all()
    {
        std::fill(words_.begin(), words_.end(), ~Word{0});
        trim();
    }
    void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool any() const
    {
        return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
    }
    bool none() const { return ! any(); }

    bool intersects(const DynamicBitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const DynamicBitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    std::size_t find_first() const { return find_from(0); }
    std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    DynamicBitset & operator|=(const DynamicBitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    DynamicBitset & operator&=(const DynamicBitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    DynamicBitset & operator^=(const DynamicBitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= other.words_[i];
        return *this;
    }
    /// this \ other
    DynamicBitset & subtract(const DynamicBitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset & b) { return a |= b; }
    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset & b) { return a &= b; }
    friend DynamicBitset operator^(DynamicBitset a, const DynamicBitset & b) { return a ^= b; }

    DynamicBitset operator~() const
    {
        DynamicBitset result = *this;
        for (auto & w : result.words_)
            w = ~w;
        result.trim();
        return result;
    }

    friend bool operator==(const DynamicBitset &, const DynamicBitset &) = default;

    /// Total order used for canonical sorting: size first, then words from
    /// the highest word down (numeric order of the bit pattern).
    friend std::strong_ordering operator<=>(const DynamicBitset & a, const DynamicBitset & b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0)
            return c;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (auto c = a.words_[i] <=> b.words_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

private:
    std::size_t find_from(std::size_t start) const
    {
        if (start >= size_)
            return npos;
        std::size_t wi = start >> 6;
        Word w = words_[wi] & (~Word{0} << (start & 63));
        while (true) {
            if (w)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    void trim()
    {
        if (size_ & 63)
            words_.back() &= (Word{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct DynamicBitsetHash {
    std::size_t operator()(const DynamicBitset & b) const { return b.hash(); }
};

} // namespace coxbal
