#pragma once

#include "coxbal/error.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace coxbal {

/// Element of the hyperoctahedral group W(C_n), stored as the images
/// pi(1..n) in {+-1..+-n} with pi(-i) = -pi(i). Generators follow Bourbaki:
/// s_k (k < n) exchanges k and k+1, s_n changes the sign of n.
///
/// This model shares no code with GroupTable; it exists to check results
/// about C_n independently, including ranks beyond the enumeration capacity.
class SignedPermutation {
public:
    explicit SignedPermutation(int n) : images_(static_cast<std::size_t>(n))
    {
        for (int i = 0; i < n; ++i)
            images_[static_cast<std::size_t>(i)] = i + 1;
    }

    explicit SignedPermutation(std::vector<int> images) : images_(std::move(images))
    {
        const int n = rank();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : images_) {
            int a = std::abs(v);
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
                fail(ErrorKind::NotAPermutation, "not a signed permutation");
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    static SignedPermutation longest(int n)
    {
        SignedPermutation p(n);
        for (auto & v : p.images_)
            v = -v;
        return p;
    }

    int rank() const { return static_cast<int>(images_.size()); }
    const std::vector<int> & images() const { return images_; }
    int operator()(int i) const { return i > 0 ? images_[static_cast<std::size_t>(i - 1)] : -images_[static_cast<std::size_t>(-i - 1)]; }

    /// s_k * this (k is 1-based): acts on values.
    SignedPermutation left(int k) const
    {
        SignedPermutation p = *this;
        const int n = rank();
        for (auto & v : p.images_) {
            int a = std::abs(v), s = v > 0 ? 1 : -1;
            if (k == n) {
                if (a == n)
                    v = -v;
            }
            else if (a == k)
                v = s * (k + 1);
            else if (a == k + 1)
                v = s * k;
        }
        return p;
    }

    /// this * s_k: acts on positions.
    SignedPermutation right(int k) const
    {
        SignedPermutation p = *this;
        if (k == rank())
            p.images_.back() = -p.images_.back();
        else
            std::swap(p.images_[static_cast<std::size_t>(k - 1)], p.images_[static_cast<std::size_t>(k)]);
        return p;
    }

    SignedPermutation compose(const SignedPermutation & other) const
    {
        SignedPermutation p = other;
        for (auto & v : p.images_)
            v = (*this)(v);
        return p;
    }

    /// Number of positive roots e_i - e_j, e_i + e_j (i < j), 2e_i sent to negative roots.
    int length() const
    {
        const int n = rank();
        int len = 0;
        for (int i = 1; i <= n; ++i) {
            if ((*this)(i) < 0)
                ++len; // 2e_i
            for (int j = i + 1; j <= n; ++j) {
                if (negative_image(i, j, -1))
                    ++len;
                if (negative_image(i, j, +1))
                    ++len;
            }
        }
        return len;
    }

    /// Number of i in 1..n with pi(i) > 0.
    int positive_count() const
    {
        int c = 0;
        for (int v : images_)
            c += v > 0;
        return c;
    }

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;

private:
    // A root of C_n is positive iff its first nonzero coordinate is.
    bool negative_image(int i, int j, int sign) const
    {
        int a = (*this)(i), b = (*this)(j);
        int ca = a > 0 ? 1 : -1, cb = (b > 0 ? 1 : -1) * sign;
        return (std::abs(a) < std::abs(b) ? ca : cb) < 0;
    }

    std::vector<int> images_;
};

/// Bruhat comparison inside the model, by the lifting recursion on left descents.
inline bool signed_leq(SignedPermutation u, SignedPermutation w)
{
    while (true) {
        int lu = u.length(), lw = w.length();
        if (lu > lw)
            return false;
        if (lu == 0)
            return true;
        if (lu == lw)
            return u == w;
        int s = 0;
        for (int k = 1; k <= w.rank() && ! s; ++k)
            if (w.left(k).length() < lw)
                s = k;
        auto su = u.left(s);
        if (su.length() < lu)
            u = su;
        w = w.left(s);
    }
}

/// Minimal element of <s_1..s_{n-1}> pi <s_1..s_{n-1}> by descent removal.
inline SignedPermutation min_double_coset_rep_an(SignedPermutation p)
{
    const int n = p.rank();
    bool changed = true;
    while (changed) {
        changed = false;
        int len = p.length();
        for (int k = 1; k < n && ! changed; ++k) {
            auto l = p.left(k);
            if (l.length() < len) {
                p = l;
                changed = true;
                break;
            }
            auto r = p.right(k);
            if (r.length() < len) {
                p = r;
                changed = true;
            }
        }
    }
    return p;
}

} // namespace coxbal
