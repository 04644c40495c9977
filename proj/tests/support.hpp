#pragma once

#include <coxbal/rootdata.hpp>
#include <coxbal/weyl.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace coxbal::testing {

/// Groups are shared between tests in one binary; building F4 or B5 once is enough.
inline std::shared_ptr<const GroupTable> group(const std::string & label)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const GroupTable>> cache;
    std::lock_guard lock(mutex);
    auto & slot = cache[label];
    if (! slot)
        slot = enumerate_group(CoxeterDiagram::from_label(label));
    return slot;
}

/// 1-based word to element.
inline Element word(const GroupTable & g, std::vector<int> letters)
{
    for (auto & a : letters)
        --a;
    return g.from_word(letters);
}

/// Coefficients of prod_d (1 + q + ... + q^{d-1}).
inline std::vector<long long> poincare(const std::vector<int> & degrees)
{
    std::vector<long long> p{1};
    for (int d : degrees) {
        std::vector<long long> next(p.size() + static_cast<std::size_t>(d) - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int k = 0; k < d; ++k)
                next[i + static_cast<std::size_t>(k)] += p[i];
        p = std::move(next);
    }
    return p;
}

} // namespace coxbal::testing
