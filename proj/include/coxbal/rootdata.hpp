#pragma once

#include "coxbal/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxbal {

// Labeling follows Bourbaki for every series. Cartan entries use
//   cartan(i, j) = <alpha_j, alpha_i^vee>,  so  s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
// For a double bond the short root i has cartan(i, long) = -2; for a triple
// bond cartan(short, long) = -3.

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One irreducible factor of a diagram. `nodes[k]` is the diagram index
/// playing the role of the Bourbaki simple root alpha_{k+1}.
struct Component {
    Series series;
    int rank;
    std::vector<int> nodes;

    std::string label() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
};

namespace detail {

inline std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

/// |W| of an irreducible factor, saturating at UINT64_MAX is unnecessary for
/// the ranks we accept (E8 is the largest at 696729600).
inline std::uint64_t component_group_order(Series s, int n)
{
    switch (s) {
    case Series::A: return factorial(n + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << n) * factorial(n);
    case Series::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Series::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Series::F: return 1152;
    case Series::G: return 12;
    }
    return 0;
}

inline int component_num_positive_roots(Series s, int n)
{
    switch (s) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
    }
    return 0;
}

inline bool valid_series_rank(Series s, int n)
{
    switch (s) {
    case Series::A: return n >= 1;
    case Series::B:
    case Series::C: return n >= 2;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
    }
    return false;
}

inline int coxeter_from_cartan(int a, int b)
{
    switch (a * b) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return -1;
    }
}

} // namespace detail

/// A validated finite crystallographic Coxeter system together with the
/// Cartan matrix that orients its multiple bonds.
class CoxeterDiagram {
public:
    /// Off-diagonal Coxeter entry meaning "infinity" in matrix input.
    static constexpr int kInfinity = 0;

    static CoxeterDiagram from_label(std::string_view label);
    static CoxeterDiagram from_matrices(int rank, std::vector<int> coxeter, std::optional<std::vector<int>> cartan);

    int rank() const { return rank_; }
    int coxeter(int i, int j) const { return coxeter_[static_cast<std::size_t>(i * rank_ + j)]; }
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
    const std::vector<int> & coxeter_matrix() const { return coxeter_; }
    const std::vector<int> & cartan_matrix() const { return cartan_; }
    const std::string & label() const { return label_; }
    const std::vector<Component> & components() const { return components_; }
    /// Human-readable notes produced while building (e.g. a defaulted orientation).
    const std::vector<std::string> & notices() const { return notices_; }

    std::uint64_t group_order() const
    {
        std::uint64_t order = 1;
        for (const auto & c : components_) {
            auto f = detail::component_group_order(c.series, c.rank);
            if (order > UINT64_MAX / f)
                return UINT64_MAX;
            order *= f;
        }
        return order;
    }

    int num_positive_roots() const
    {
        int n = 0;
        for (const auto & c : components_)
            n += detail::component_num_positive_roots(c.series, c.rank);
        return n;
    }

    /// FNV-1a over rank and both matrices; keys the on-disk group cache.
    std::uint64_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&](std::int64_t v) {
            for (int b = 0; b < 8; ++b) {
                h ^= static_cast<std::uint64_t>((v >> (8 * b)) & 0xff);
                h *= 1099511628211ULL;
            }
        };
        mix(rank_);
        for (int v : coxeter_)
            mix(v);
        for (int v : cartan_)
            mix(v);
        return h;
    }

    friend bool operator==(const CoxeterDiagram & a, const CoxeterDiagram & b)
    {
        return a.rank_ == b.rank_ && a.coxeter_ == b.coxeter_ && a.cartan_ == b.cartan_;
    }

private:
    void classify();

    int rank_ = 0;
    std::vector<int> coxeter_;
    std::vector<int> cartan_;
    std::string label_;
    std::vector<Component> components_;
    std::vector<std::string> notices_;
};

namespace detail {

inline std::vector<int> bourbaki_cartan(Series s, int n)
{
    std::vector<int> a(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> int & { return a[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i)
        at(i, i) = 2;
    auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
    switch (s) {
    case Series::A:
        for (int i = 0; i + 1 < n; ++i)
            bond(i, i + 1);
        break;
    case Series::B:
        for (int i = 0; i + 1 < n; ++i)
            bond(i, i + 1);
        at(n - 1, n - 2) = -2; // alpha_n short
        break;
    case Series::C:
        for (int i = 0; i + 1 < n; ++i)
            bond(i, i + 1);
        at(n - 2, n - 1) = -2; // alpha_n long
        break;
    case Series::D:
        for (int i = 0; i + 2 < n; ++i)
            bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case Series::E:
        bond(0, 2);
        bond(1, 3);
        for (int i = 2; i + 1 < n; ++i)
            bond(i, i + 1);
        break;
    case Series::F:
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        at(2, 1) = -2; // alpha_3, alpha_4 short
        break;
    case Series::G:
        at(0, 1) = -3; // alpha_1 short
        at(1, 0) = -1;
        break;
    }
    return a;
}

inline std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::pair<Series, int>> parse_label(std::string_view label)
{
    std::string text(label);
    // Normalise the multiplication sign (UTF-8) and '*' to 'x'.
    for (std::string::size_type p; (p = text.find("\xC3\x97")) != std::string::npos;)
        text.replace(p, 2, "x");
    std::replace(text.begin(), text.end(), '*', 'x');
    std::replace(text.begin(), text.end(), 'X', 'x');

    std::vector<std::pair<Series, int>> parts;
    for (std::size_t start = 0; start <= text.size();) {
        auto end = std::min(text.find('x', start), text.size());
        std::string piece = trim(std::string_view(text).substr(start, end - start));
        start = end + 1;
        if (piece.size() < 2)
            fail(ErrorKind::MalformedInput, "cannot parse type label '" + std::string(label) + "'");
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
        if (letter < 'A' || letter > 'G')
            fail(ErrorKind::MalformedInput, "unknown series '" + std::string(1, piece[0]) + "' in '" + std::string(label) + "'");
        int n = 0;
        auto digits = std::string_view(piece).substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            fail(ErrorKind::MalformedInput, "cannot parse rank in '" + piece + "'");
        auto series = static_cast<Series>(letter);
        if (! valid_series_rank(series, n))
            fail(ErrorKind::MalformedInput, "no finite type " + piece);
        parts.emplace_back(series, n);
    }
    if (parts.empty())
        fail(ErrorKind::MalformedInput, "empty type label");
    return parts;
}

/// Given the nodes of one connected component, identify its finite type and
/// the Bourbaki ordering of its nodes. Orientation of multiple bonds is read
/// from the Cartan matrix (which is already set).
inline Component classify_component(const CoxeterDiagram & d, std::vector<int> nodes)
{
    std::sort(nodes.begin(), nodes.end());
    const int n = static_cast<int>(nodes.size());
    auto not_finite = [&]() -> Component {
        std::string list;
        for (int v : nodes)
            list += (list.empty() ? "" : ",") + std::to_string(v + 1);
        fail(ErrorKind::NotFiniteType, "component {" + list + "} is not a finite-type diagram");
    };
    auto is_short = [&](int i, int j) { return d.cartan(i, j) < d.cartan(j, i); };

    if (n == 1)
        return {Series::A, 1, nodes};

    std::map<int, std::vector<int>> adj;
    int edges = 0;
    for (int a : nodes)
        for (int b : nodes)
            if (a < b && d.coxeter(a, b) >= 3) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++edges;
            }
    if (edges != n - 1)
        not_finite();
    for (auto & [v, list] : adj)
        std::sort(list.begin(), list.end());

    std::vector<int> branch;
    for (int v : nodes)
        if (adj[v].size() >= 3)
            branch.push_back(v);

    auto walk = [&](int from, int start) {
        std::vector<int> arm{start};
        int prev = from, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev)
                    next = w;
            if (next < 0 || adj[cur].size() > 2)
                break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        return arm;
    };

    if (! branch.empty()) {
        int b = branch.front();
        if (branch.size() != 1 || adj[b].size() != 3)
            not_finite();
        for (int a : nodes)
            for (int c : nodes)
                if (a < c && d.coxeter(a, c) > 3)
                    not_finite();
        std::vector<std::vector<int>> arms;
        for (int w : adj[b])
            arms.push_back(walk(b, w));
        std::vector<int> lens;
        for (auto & arm : arms)
            lens.push_back(static_cast<int>(arm.size()));
        std::sort(lens.begin(), lens.end());
        if (lens[0] == 1 && lens[1] == 1) {
            // D_n: long arm leaf-first, branch, then the two short leaves.
            std::stable_sort(arms.begin(), arms.end(), [](const auto & x, const auto & y) {
                if (x.size() != y.size())
                    return x.size() > y.size();
                return x.front() < y.front();
            });
            std::vector<int> order(arms[0].rbegin(), arms[0].rend());
            order.push_back(b);
            order.push_back(std::min(arms[1][0], arms[2][0]));
            order.push_back(std::max(arms[1][0], arms[2][0]));
            return {Series::D, n, order};
        }
        if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
            std::stable_sort(arms.begin(), arms.end(), [](const auto & x, const auto & y) {
                if (x.size() != y.size())
                    return x.size() < y.size();
                return x.front() < y.front();
            });
            std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], b};
            order.insert(order.end(), arms[2].begin(), arms[2].end());
            return {Series::E, n, order};
        }
        not_finite();
    }

    // A path.
    std::vector<int> leaves;
    for (int v : nodes)
        if (adj[v].size() == 1)
            leaves.push_back(v);
    auto path_from = [&](int leaf) {
        std::vector<int> order{leaf};
        auto rest = walk(leaf, adj[leaf][0]);
        order.insert(order.end(), rest.begin(), rest.end());
        return order;
    };
    std::vector<int> order = path_from(leaves.front());
    std::vector<int> heavy; // positions k with bond (order[k], order[k+1]) multiple
    for (int k = 0; k + 1 < n; ++k)
        if (d.coxeter(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k + 1)]) > 3)
            heavy.push_back(k);
    if (heavy.empty())
        return {Series::A, n, order};
    if (heavy.size() != 1)
        not_finite();
    int m = d.coxeter(order[static_cast<std::size_t>(heavy[0])], order[static_cast<std::size_t>(heavy[0] + 1)]);
    if (m == 6) {
        if (n != 2)
            not_finite();
        int a = order[0], c = order[1];
        return is_short(a, c) ? Component{Series::G, 2, {a, c}} : Component{Series::G, 2, {c, a}};
    }
    // m == 4
    if (n == 4 && heavy[0] == 1) {
        // F4: start from the end on the long side of the double bond.
        if (! is_short(order[1], order[2]))
            return {Series::F, 4, order};
        std::reverse(order.begin(), order.end());
        return {Series::F, 4, order};
    }
    if (heavy[0] == 0 && n > 2)
        std::reverse(order.begin(), order.end());
    else if (heavy[0] != n - 2 && heavy[0] != 0)
        not_finite();
    int last = order.back(), prev = order[static_cast<std::size_t>(n - 2)];
    return {is_short(last, prev) ? Series::B : Series::C, n, order};
}

} // namespace detail

inline void CoxeterDiagram::classify()
{
    // Connected components over bonds with m >= 3.
    std::vector<int> comp(static_cast<std::size_t>(rank_), -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < rank_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        std::vector<int> group{s}, stack{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(groups.size());
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < rank_; ++w)
                if (w != v && coxeter(v, w) >= 3 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
                    group.push_back(w);
                    stack.push_back(w);
                }
        }
        groups.push_back(std::move(group));
    }
    components_.clear();
    for (auto & g : groups)
        components_.push_back(detail::classify_component(*this, g));
}

inline CoxeterDiagram CoxeterDiagram::from_label(std::string_view label)
{
    auto parts = detail::parse_label(label);
    int rank = 0;
    for (auto & [s, n] : parts)
        rank += n;
    std::vector<int> cartan(static_cast<std::size_t>(rank * rank), 0);
    int offset = 0;
    for (auto & [s, n] : parts) {
        auto block = detail::bourbaki_cartan(s, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cartan[static_cast<std::size_t>((offset + i) * rank + offset + j)] = block[static_cast<std::size_t>(i * n + j)];
        offset += n;
    }
    std::vector<int> coxeter(static_cast<std::size_t>(rank * rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            coxeter[static_cast<std::size_t>(i * rank + j)] =
                i == j ? 1 : detail::coxeter_from_cartan(cartan[static_cast<std::size_t>(i * rank + j)], cartan[static_cast<std::size_t>(j * rank + i)]);

    CoxeterDiagram d;
    d.rank_ = rank;
    d.coxeter_ = std::move(coxeter);
    d.cartan_ = std::move(cartan);
    // Components are placed in label order with Bourbaki numbering.
    offset = 0;
    for (auto & [s, n] : parts) {
        std::vector<int> nodes(static_cast<std::size_t>(n));
        std::iota(nodes.begin(), nodes.end(), offset);
        d.components_.push_back({s, n, std::move(nodes)});
        offset += n;
    }
    for (const auto & c : d.components_)
        d.label_ += (d.label_.empty() ? "" : "x") + c.label();
    return d;
}

inline CoxeterDiagram CoxeterDiagram::from_matrices(int rank, std::vector<int> coxeter, std::optional<std::vector<int>> cartan)
{
    if (rank < 1)
        fail(ErrorKind::MalformedInput, "rank must be positive");
    const auto cells = static_cast<std::size_t>(rank * rank);
    if (coxeter.size() != cells)
        fail(ErrorKind::MalformedInput, "Coxeter matrix must have rank^2 entries");
    auto m = [&](int i, int j) { return coxeter[static_cast<std::size_t>(i * rank + j)]; };
    for (int i = 0; i < rank; ++i) {
        if (m(i, i) != 1)
            fail(ErrorKind::MalformedInput, "Coxeter matrix diagonal must be 1");
        for (int j = 0; j < rank; ++j) {
            if (i == j)
                continue;
            if (m(i, j) != m(j, i))
                fail(ErrorKind::MalformedInput, "Coxeter matrix is not symmetric");
            if (m(i, j) == kInfinity)
                fail(ErrorKind::NotFiniteType, "m_" + std::to_string(i + 1) + std::to_string(j + 1) + " is infinite");
            if (m(i, j) != 2 && m(i, j) != 3 && m(i, j) != 4 && m(i, j) != 6)
                fail(ErrorKind::MalformedInput, "Coxeter entry " + std::to_string(m(i, j)) + " not in {2,3,4,6}");
        }
    }

    CoxeterDiagram d;
    d.rank_ = rank;
    d.coxeter_ = std::move(coxeter);

    if (cartan) {
        if (cartan->size() != cells)
            fail(ErrorKind::MalformedInput, "Cartan matrix must have rank^2 entries");
        d.cartan_ = std::move(*cartan);
        for (int i = 0; i < rank; ++i) {
            if (d.cartan(i, i) != 2)
                fail(ErrorKind::MalformedInput, "Cartan matrix diagonal must be 2");
            for (int j = 0; j < rank; ++j) {
                if (i == j)
                    continue;
                int a = d.cartan(i, j), b = d.cartan(j, i);
                if (a > 0 || b > 0 || (a == 0) != (b == 0) || detail::coxeter_from_cartan(a, b) != d.coxeter(i, j))
                    fail(ErrorKind::MalformedInput,
                        "Cartan entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") inconsistent with the Coxeter matrix");
            }
        }
    }
    else {
        // B-orientation: on a double bond the leaf end is short; otherwise the
        // higher index is short. On a triple bond the lower index is short.
        d.cartan_.assign(cells, 0);
        std::vector<int> degree(static_cast<std::size_t>(rank), 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (i != j && d.coxeter(i, j) >= 3)
                    ++degree[static_cast<std::size_t>(i)];
        bool oriented = false;
        for (int i = 0; i < rank; ++i) {
            d.cartan_[static_cast<std::size_t>(i * rank + i)] = 2;
            for (int j = i + 1; j < rank; ++j) {
                int mij = d.coxeter(i, j);
                int short_node = -1;
                if (mij == 3) {
                    d.cartan_[static_cast<std::size_t>(i * rank + j)] = d.cartan_[static_cast<std::size_t>(j * rank + i)] = -1;
                    continue;
                }
                if (mij == 4) {
                    bool li = degree[static_cast<std::size_t>(i)] == 1, lj = degree[static_cast<std::size_t>(j)] == 1;
                    short_node = li && ! lj ? i : lj && ! li ? j : j;
                }
                else if (mij == 6)
                    short_node = i;
                else
                    continue;
                int long_node = short_node == i ? j : i;
                d.cartan_[static_cast<std::size_t>(short_node * rank + long_node)] = mij == 4 ? -2 : -3;
                d.cartan_[static_cast<std::size_t>(long_node * rank + short_node)] = -1;
                oriented = true;
            }
        }
        if (oriented)
            d.notices_.push_back("no Cartan matrix given; multiple bonds oriented by the B-convention "
                                 "(counts of balanced ideals do not depend on this choice)");
    }

    d.classify();
    for (const auto & c : d.components_)
        d.label_ += (d.label_.empty() ? "" : "x") + c.label();
    return d;
}

/// Reads "rank, rank^2 Coxeter entries, optional rank^2 Cartan entries".
/// Infinite Coxeter entries may be written as inf, oo, 0 or -1.
inline CoxeterDiagram parse_matrix_text(std::istream & in)
{
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    if (tokens.empty())
        fail(ErrorKind::MalformedInput, "empty matrix input");
    auto to_int = [](const std::string & t, bool coxeter_entry) {
        if (coxeter_entry && (t == "inf" || t == "oo" || t == "\xE2\x88\x9E" || t == "-1"))
            return CoxeterDiagram::kInfinity;
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size())
            fail(ErrorKind::MalformedInput, "not an integer: '" + t + "'");
        return v;
    };
    int rank = to_int(tokens[0], false);
    if (rank < 1 || rank > 64)
        fail(ErrorKind::MalformedInput, "rank out of range");
    const auto cells = static_cast<std::size_t>(rank * rank);
    if (tokens.size() != 1 + cells && tokens.size() != 1 + 2 * cells)
        fail(ErrorKind::MalformedInput, "expected " + std::to_string(cells) + " or " + std::to_string(2 * cells) + " matrix entries");
    std::vector<int> coxeter(cells);
    for (std::size_t i = 0; i < cells; ++i)
        coxeter[i] = to_int(tokens[1 + i], true);
    std::optional<std::vector<int>> cartan;
    if (tokens.size() == 1 + 2 * cells) {
        cartan.emplace(cells);
        for (std::size_t i = 0; i < cells; ++i)
            (*cartan)[i] = to_int(tokens[1 + cells + i], false);
    }
    return CoxeterDiagram::from_matrices(rank, std::move(coxeter), std::move(cartan));
}

inline CoxeterDiagram read_matrix_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        fail(ErrorKind::MalformedInput, "cannot open matrix file '" + path + "'");
    return parse_matrix_text(in);
}

/// A type label such as "A3", "C3" or "A1xB2"; anything that does not parse
/// as a label but names a readable file is treated as a matrix file.
inline CoxeterDiagram build_diagram(std::string_view text)
{
    try {
        return CoxeterDiagram::from_label(text);
    }
    catch (const Error &) {
        std::ifstream probe{std::string(text)};
        if (! probe)
            throw;
        return parse_matrix_text(probe);
    }
}

struct SignedRoot {
    std::uint32_t index;
    bool negative;

    friend bool operator==(const SignedRoot &, const SignedRoot &) = default;
};

/// Positive roots in the simple-root basis, simple roots first, then by
/// height; together with the action of every simple reflection.
class RootSystem {
public:
    const CoxeterDiagram & diagram() const { return diagram_; }
    int rank() const { return diagram_.rank(); }
    std::size_t num_positive() const { return roots_.size(); }
    const std::vector<int> & root(std::size_t r) const { return roots_[r]; }
    const std::vector<std::vector<int>> & positive_roots() const { return roots_; }

    int height(std::size_t r) const { return std::accumulate(roots_[r].begin(), roots_[r].end(), 0); }

    /// s_i(alpha_r) as a signed root index.
    SignedRoot reflect(int i, std::size_t r) const { return table_[static_cast<std::size_t>(i)][r]; }

    std::optional<std::size_t> find(const std::vector<int> & coords) const
    {
        auto it = index_.find(coords);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    /// A word x and simple index j with alpha_r = x(alpha_j). The reflection
    /// along alpha_r is then x s_j x^{-1}.
    std::pair<std::vector<int>, int> conjugating_word(std::size_t r) const
    {
        std::vector<int> word;
        while (r >= static_cast<std::size_t>(rank())) {
            word.push_back(parent_[r].first);
            r = parent_[r].second;
        }
        return {word, static_cast<int>(r)};
    }

    friend RootSystem build_root_system(const CoxeterDiagram & diagram);

private:
    CoxeterDiagram diagram_;
    std::vector<std::vector<int>> roots_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<SignedRoot>> table_;
    std::vector<std::pair<int, std::size_t>> parent_; // root r = s_{first}(alpha_{second})
};

inline RootSystem build_root_system(const CoxeterDiagram & diagram)
{
    const int n = diagram.rank();
    auto apply = [&](int i, std::vector<int> v) {
        int pairing = 0;
        for (int j = 0; j < n; ++j)
            pairing += v[static_cast<std::size_t>(j)] * diagram.cartan(i, j);
        v[static_cast<std::size_t>(i)] -= pairing;
        return v;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (! frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto & v : frontier)
            for (int i = 0; i < n; ++i) {
                auto w = apply(i, v);
                if (std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; }) && seen.insert(w).second)
                    next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }

    RootSystem rs;
    rs.diagram_ = diagram;
    rs.roots_.assign(seen.begin(), seen.end());
    std::sort(rs.roots_.begin(), rs.roots_.end(), [](const auto & a, const auto & b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb)
            return ha < hb;
        return a > b;
    });
    for (std::size_t r = 0; r < rs.roots_.size(); ++r)
        rs.index_.emplace(rs.roots_[r], r);

    rs.table_.assign(static_cast<std::size_t>(n), std::vector<SignedRoot>(rs.roots_.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t r = 0; r < rs.roots_.size(); ++r) {
            auto image = apply(i, rs.roots_[r]);
            if (r == static_cast<std::size_t>(i))
                rs.table_[static_cast<std::size_t>(i)][r] = {static_cast<std::uint32_t>(r), true};
            else
                rs.table_[static_cast<std::size_t>(i)][r] = {static_cast<std::uint32_t>(rs.index_.at(image)), false};
        }

    rs.parent_.assign(rs.roots_.size(), {-1, 0});
    for (std::size_t r = static_cast<std::size_t>(n); r < rs.roots_.size(); ++r)
        for (int i = 0; i < n; ++i) {
            auto img = rs.table_[static_cast<std::size_t>(i)][r];
            if (! img.negative && rs.height(img.index) < rs.height(r)) {
                rs.parent_[r] = {i, img.index};
                break;
            }
        }
    return rs;
}

/// dim g_alpha for every positive root.
class MultiplicityProfile {
public:
    MultiplicityProfile() = default;
    explicit MultiplicityProfile(std::vector<int> weights) : weights_(std::move(weights)) {}

    int weight(std::size_t r) const { return weights_[r]; }
    const std::vector<int> & weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    int total() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

    friend bool operator==(const MultiplicityProfile &, const MultiplicityProfile &) = default;

private:
    std::vector<int> weights_;
};

enum class ProfileKind { Split, Complex };

inline MultiplicityProfile profile(const RootSystem & rs, ProfileKind kind)
{
    return MultiplicityProfile(std::vector<int>(rs.num_positive(), kind == ProfileKind::Split ? 1 : 2));
}

/// Custom weights keyed by root coordinates. Every positive root must be
/// covered.
inline MultiplicityProfile profile(const RootSystem & rs, const std::vector<std::pair<std::vector<int>, int>> & table)
{
    std::vector<int> weights(rs.num_positive(), 0);
    for (const auto & [coords, weight] : table) {
        auto r = rs.find(coords);
        if (! r)
            fail(ErrorKind::MalformedInput, "custom weight given for a vector that is not a positive root");
        if (weight < 1)
            fail(ErrorKind::MalformedInput, "root weights must be >= 1");
        if (weights[*r] != 0 && weights[*r] != weight)
            fail(ErrorKind::MalformedInput, "conflicting weights for one root");
        weights[*r] = weight;
    }
    for (std::size_t r = 0; r < weights.size(); ++r)
        if (weights[r] == 0) {
            std::string coords;
            for (int c : rs.root(r))
                coords += (coords.empty() ? "" : " ") + std::to_string(c);
            fail(ErrorKind::MissingRootWeight, "no weight for root (" + coords + ")");
        }
    return MultiplicityProfile(std::move(weights));
}

/// One line per positive root: its rank coordinates, then the weight.
/// Blank lines and lines starting with '#' are ignored.
inline MultiplicityProfile parse_profile_text(const RootSystem & rs, std::istream & in)
{
    std::vector<std::pair<std::vector<int>, int>> table;
    for (std::string line; std::getline(in, line);) {
        auto t = detail::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::istringstream ls(t);
        std::vector<int> values;
        for (int v; ls >> v;)
            values.push_back(v);
        if (! ls.eof() || values.size() != static_cast<std::size_t>(rs.rank()) + 1)
            fail(ErrorKind::MalformedInput, "bad multiplicity line '" + t + "'");
        int weight = values.back();
        values.pop_back();
        table.emplace_back(std::move(values), weight);
    }
    return profile(rs, table);
}

} // namespace coxbal
