#pragma once

#include "coxbal/bruhat.hpp"
#include "coxbal/error.hpp"
#include "coxbal/ideals.hpp"
#include "coxbal/parabolic.hpp"
#include "coxbal/signed_permutation.hpp"
#include "coxbal/weyl.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxbal {

/// min dim Psi_w over all w with NOT (w0 w >= w).
inline int mbcd(const GroupTable & g, const MultiplicityProfile & profile)
{
    int best = std::numeric_limits<int>::max();
    for (Element w = 0; w < g.size(); ++w)
        if (! leq(g, w, g.multiply(g.w0(), w)))
            best = std::min(best, g.weighted_length(w, profile));
    if (best == std::numeric_limits<int>::max())
        fail(ErrorKind::MalformedInput, "every element satisfies w0 w >= w; the group is trivial");
    return best;
}

struct TightnessWitness {
    Element w;          // maximises dim Psi_w over {w : w0 w not <= w}
    int witness_dim;
    IdealSet ideal;     // balanced, contains [e, w]
    int ideal_dim;
};

inline TightnessWitness mbcd_tightness_witness(std::shared_ptr<const GroupTable> g, const MultiplicityProfile & profile)
{
    auto q = double_cosets(g, all_roots(g->rank()), all_roots(g->rank()), true);
    TightnessWitness t{0, -1, IdealSet(q.size()), 0};
    for (Element w = 0; w < g->size(); ++w)
        if (! leq(*g, g->multiply(g->w0(), w), w)) {
            int d = g->weighted_length(w, profile);
            if (d > t.witness_dim) {
                t.w = w;
                t.witness_dim = d;
            }
        }
    t.ideal = extend_slim_to_balanced(q, q.downset(q.project(t.w)));
    t.ideal_dim = ideal_dimension(q, t.ideal, profile);
    return t;
}

/// Dimensions 0 < i_1 < ... < i_k < n of a partial flag in R^n.
struct FlagSignature {
    int n;
    std::vector<int> dims;
};

inline FlagSignature make_signature(int n, std::vector<int> dims)
{
    if (n < 2 || dims.empty())
        fail(ErrorKind::MalformedInput, "a flag signature needs n >= 2 and at least one dimension");
    int prev = 0;
    for (int d : dims) {
        if (d <= prev || d >= n)
            fail(ErrorKind::MalformedInput, "flag dimensions must satisfy 0 < i_1 < ... < i_k < n");
        prev = d;
    }
    return {n, std::move(dims)};
}

struct DeltaVerdict {
    int delta;   // number of odd gaps i_{j+1} - i_j, with i_0 = 0 and i_{k+1} = n
    bool exists; // n even: delta >= 1; n odd: delta >= 2
};

inline DeltaVerdict delta_criterion(const FlagSignature & sig)
{
    int delta = 0, prev = 0;
    for (int d : sig.dims) {
        delta += (d - prev) % 2;
        prev = d;
    }
    delta += (sig.n - prev) % 2;
    return {delta, sig.n % 2 == 0 ? delta >= 1 : delta >= 2};
}

/// The parity rule against the fixed points of w0 on W_{Delta, eta}, eta = {alpha_i : i in dims}.
inline bool cross_check_existence(std::shared_ptr<const GroupTable> g, const FlagSignature & sig)
{
    const auto & comps = g->diagram().components();
    if (comps.size() != 1 || comps[0].series != Series::A || comps[0].rank != sig.n - 1)
        fail(ErrorKind::MalformedInput, "signature with n = " + std::to_string(sig.n) + " needs W(A" + std::to_string(sig.n - 1) + ")");
    RootSubset eta(static_cast<std::size_t>(g->rank()));
    for (int d : sig.dims)
        eta.set(static_cast<std::size_t>(comps[0].nodes[static_cast<std::size_t>(d - 1)]));
    auto q = double_cosets(g, all_roots(g->rank()), eta, true);
    return delta_criterion(sig).exists == ! q.has_fixed_point();
}

/// W(C_n) double cosets by <alpha_1..alpha_{n-1}> on both sides, checked in
/// the signed-permutation model. The coset [k] holds the signed
/// permutations with exactly k positive entries.
struct ChainReport {
    int n = 0;
    int num_cosets = 0;
    bool distinct_reps = false; // the n+1 minimal representatives differ
    bool order_ok = false;      // [k] <= [l] iff k >= l
    bool w0_ok = false;         // w0 [k] = [n-k]
    std::uint64_t count = 0;    // balanced ideals of the chain
    std::vector<std::vector<int>> ideals; // each as the sorted list of k
    std::vector<std::vector<int>> reps;   // one-line images of the minimal representatives
};

inline ChainReport symplectic_chain_report(int n)
{
    if (n < 1 || n > 16)
        fail(ErrorKind::MalformedInput, "chain report supports 1 <= n <= 16");
    ChainReport r;
    r.n = n;
    r.num_cosets = n + 1;
    std::vector<SignedPermutation> reps;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            img[static_cast<std::size_t>(i - 1)] = i <= k ? i : -i;
        reps.push_back(min_double_coset_rep_an(SignedPermutation(img)));
        r.reps.push_back(reps.back().images());
    }
    r.distinct_reps = true;
    for (int k = 0; k <= n; ++k) {
        r.distinct_reps = r.distinct_reps && reps[static_cast<std::size_t>(k)].positive_count() == k;
        for (int l = 0; l < k; ++l)
            r.distinct_reps = r.distinct_reps && ! (reps[static_cast<std::size_t>(k)] == reps[static_cast<std::size_t>(l)]);
    }
    r.order_ok = true;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l)
            r.order_ok = r.order_ok && signed_leq(reps[static_cast<std::size_t>(k)], reps[static_cast<std::size_t>(l)]) == (k >= l);
    r.w0_ok = true;
    auto w0 = SignedPermutation::longest(n);
    for (int k = 0; k <= n; ++k)
        r.w0_ok = r.w0_ok && w0.compose(reps[static_cast<std::size_t>(k)]).positive_count() == n - k;

    // Every subset of the chain, against the definitions.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n + 1)); ++mask) {
        auto in = [&](int k) { return (mask >> k & 1U) != 0; };
        bool ok = true;
        for (int k = 0; k <= n && ok; ++k) {
            if (in(k))
                for (int l = k; l <= n; ++l) // [l] <= [k] for l >= k
                    ok = ok && in(l);
            ok = ok && in(k) != in(n - k);
        }
        if (ok) {
            ++r.count;
            std::vector<int> ks;
            for (int k = 0; k <= n; ++k)
                if (in(k))
                    ks.push_back(k);
            r.ideals.push_back(ks);
        }
    }
    return r;
}

struct DumasSandersResult {
    int required = 1;          // lower bound that applies to this diagram (1: nothing to check)
    int mbcd = 0;
    bool low_length_ok = true; // w0 w >= w whenever length(w) < required
    bool holds = true;
};

/// Without A1 factors every w of length <= 1 satisfies w0 w >= w, so
/// mbcd >= 2; without A1, A2, A3 or B2 factors the same holds up to length 2
/// and mbcd >= 3.
inline DumasSandersResult dumas_sanders_check(const GroupTable & g, const MultiplicityProfile & profile)
{
    DumasSandersResult r;
    bool small = false;
    for (const auto & c : g.diagram().components()) {
        if (c.series == Series::A && c.rank == 1)
            return r;
        if ((c.series == Series::A && c.rank <= 3) || ((c.series == Series::B || c.series == Series::C) && c.rank == 2))
            small = true;
    }
    r.required = small ? 2 : 3;
    r.mbcd = mbcd(g, profile);
    for (Element w = 0; w < g.size() && g.length(w) < r.required; ++w)
        r.low_length_ok = r.low_length_ok && leq(g, w, g.multiply(g.w0(), w));
    r.holds = r.low_length_ok && r.mbcd >= r.required;
    return r;
}

} // namespace coxbal
