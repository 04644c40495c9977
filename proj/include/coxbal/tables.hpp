#pragma once

#include "coxbal/cache.hpp"
#include "coxbal/ideals.hpp"
#include "coxbal/parabolic.hpp"
#include "coxbal/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace coxbal {

struct TableCell {
    std::uint64_t count = 0;
    bool complete = true;
};

/// A count table; cells that do not exist (k >= n and the like) are empty.
struct Table {
    std::string name;
    std::string corner;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::optional<TableCell>>> cells;

    bool complete() const
    {
        for (const auto & row : cells)
            for (const auto & c : row)
                if (c && ! c->complete)
                    return false;
        return true;
    }

    std::optional<std::uint64_t> at(std::size_t row, std::size_t col) const
    {
        const auto & c = cells.at(row).at(col);
        return c ? std::optional<std::uint64_t>(c->count) : std::nullopt;
    }
};

struct TableOptions {
    unsigned jobs = 0;
    GroupOptions group;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    int max_n = 10;            // grassmannian-sl
    int max_p = 6;             // so-pq
    bool allow_expensive = false;
    bool full = false;         // grassmannian-sl: every (n, k) instead of even n, odd k
};

namespace detail {

inline TableCell count_cell(const std::shared_ptr<const GroupTable> & g, const RootSubset & theta, const RootSubset & eta, const TableOptions & o)
{
    auto q = double_cosets(g, theta, eta, true);
    EnumerationOptions e;
    e.jobs = o.jobs;
    e.deadline = o.deadline;
    auto r = enumerate_balanced(q, e);
    return {r.count, r.complete};
}

inline RootSubset single_root(int rank, int k)
{
    RootSubset s(static_cast<std::size_t>(rank));
    s.set(static_cast<std::size_t>(k - 1));
    return s;
}

} // namespace detail

/// W(A_{n-1}), theta = Delta, eta = {alpha_k}.
inline Table grassmannian_table(const TableOptions & o)
{
    if (o.max_n < 2)
        fail(ErrorKind::MalformedInput, "--max-n must be at least 2");
    Table t;
    t.name = "grassmannian-sl";
    t.corner = "n\\k";
    const int kstep = o.full ? 1 : 2;
    for (int k = 1; k < o.max_n; k += kstep)
        t.columns.push_back("k=" + std::to_string(k));
    for (int n = 2; n <= o.max_n; n += kstep) {
        t.row_labels.push_back("n=" + std::to_string(n));
        auto g = load_or_build(CoxeterDiagram::from_label("A" + std::to_string(n - 1)), o.group);
        std::vector<std::optional<TableCell>> row;
        for (int k = 1; k < o.max_n; k += kstep) {
            if (k >= n)
                row.emplace_back();
            else
                row.emplace_back(detail::count_cell(g, all_roots(n - 1), detail::single_root(n - 1, k), o));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

/// Column order of the rank-4 tables: all, then the 3-, 2- and 1-element subsets in lexicographic order.
inline std::vector<std::string> rank4_subsets()
{
    return {"1234", "123", "134", "124", "234", "12", "13", "14", "23", "24", "34", "1", "2", "3", "4"};
}

inline Table rank4_table(const std::string & name, const std::string & type, const std::vector<std::string> & thetas, const TableOptions & o)
{
    Table t;
    t.name = name;
    t.corner = "theta\\eta";
    t.columns = rank4_subsets();
    auto g = load_or_build(CoxeterDiagram::from_label(type), o.group);
    for (const auto & theta : thetas) {
        t.row_labels.push_back(theta);
        std::vector<std::optional<TableCell>> row;
        for (const auto & eta : t.columns)
            row.emplace_back(detail::count_cell(g, parse_subset(theta, 4), parse_subset(eta, 4), o));
        t.cells.push_back(std::move(row));
    }
    return t;
}

inline Table a4_table(const TableOptions & o)
{
    return rank4_table("a4-matrix", "A4", {"1234", "14", "23"}, o);
}

inline Table f4_table(const TableOptions & o)
{
    return rank4_table("f4-row", "F4", {"12"}, o);
}

/// W(B_p), theta = {alpha_1..alpha_{p-1}}, eta = {alpha_k}.
inline Table so_table(const TableOptions & o)
{
    if (o.max_p < 2)
        fail(ErrorKind::MalformedInput, "--max-p must be at least 2");
    if (o.max_p > 7)
        fail(ErrorKind::CapacityExceeded, "--max-p above 7 exceeds the group capacity");
    if (o.max_p > 6 && ! o.allow_expensive)
        fail(ErrorKind::BudgetExceeded, "the p = 7 row enumerates over a million ideals; pass --allow-expensive to run it");
    Table t;
    t.name = "so-pq";
    t.corner = "p\\k";
    for (int k = 1; k <= o.max_p; ++k)
        t.columns.push_back("k=" + std::to_string(k));
    for (int p = 2; p <= o.max_p; ++p) {
        t.row_labels.push_back("p=" + std::to_string(p));
        auto g = load_or_build(CoxeterDiagram::from_label("B" + std::to_string(p)), o.group);
        RootSubset theta = all_roots(p);
        theta.reset(static_cast<std::size_t>(p - 1));
        std::vector<std::optional<TableCell>> row;
        for (int k = 1; k <= o.max_p; ++k) {
            if (k > p)
                row.emplace_back();
            else
                row.emplace_back(detail::count_cell(g, theta, detail::single_root(p, k), o));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

inline const std::vector<std::string> & table_names()
{
    static const std::vector<std::string> names = {"grassmannian-sl", "a4-matrix", "so-pq", "f4-row"};
    return names;
}

inline Table make_table(const std::string & name, const TableOptions & o)
{
    if (name == "grassmannian-sl")
        return grassmannian_table(o);
    if (name == "a4-matrix")
        return a4_table(o);
    if (name == "so-pq")
        return so_table(o);
    if (name == "f4-row")
        return f4_table(o);
    fail(ErrorKind::MalformedInput, "unknown table '" + name + "' (grassmannian-sl, a4-matrix, so-pq, f4-row)");
}

inline std::string format_cell(const std::optional<TableCell> & c)
{
    if (! c)
        return "";
    return (c->complete ? "" : ">=") + std::to_string(c->count);
}

inline void write_table(std::ostream & out, const Table & t, OutputFormat f)
{
    switch (f) {
    case OutputFormat::Text: {
        std::size_t label_w = t.corner.size();
        for (const auto & l : t.row_labels)
            label_w = std::max(label_w, l.size());
        std::vector<std::size_t> w(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            w[c] = t.columns[c].size();
            for (const auto & row : t.cells)
                w[c] = std::max(w[c], format_cell(row[c]).size());
        }
        std::ostringstream line;
        line << std::left << std::setw(static_cast<int>(label_w)) << t.corner << " |" << std::right;
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            line << ' ' << std::setw(static_cast<int>(w[c])) << t.columns[c];
        out << line.str() << '\n' << std::string(line.str().size(), '-') << '\n';
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            std::ostringstream row;
            row << std::left << std::setw(static_cast<int>(label_w)) << t.row_labels[r] << " |" << std::right;
            for (std::size_t c = 0; c < t.columns.size(); ++c)
                row << ' ' << std::setw(static_cast<int>(w[c])) << format_cell(t.cells[r][c]);
            auto s = row.str();
            s.erase(s.find_last_not_of(' ') + 1);
            out << s << '\n';
        }
        if (! t.complete())
            out << "incomplete: budget exhausted, cells marked >= are lower bounds\n";
        break;
    }
    case OutputFormat::Csv:
        out << t.corner;
        for (const auto & c : t.columns)
            out << ',' << c;
        out << '\n';
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            out << t.row_labels[r];
            for (const auto & c : t.cells[r])
                out << ',' << format_cell(c);
            out << '\n';
        }
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["table"] = t.name;
        j["columns"] = t.columns;
        j["rows"] = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            nlohmann::ordered_json row;
            row["label"] = t.row_labels[r];
            row["cells"] = nlohmann::ordered_json::array();
            for (const auto & c : t.cells[r])
                row["cells"].push_back(c ? nlohmann::ordered_json(c->count) : nlohmann::ordered_json(nullptr));
            j["rows"].push_back(row);
        }
        j["complete"] = t.complete();
        out << j.dump(2) << '\n';
        break;
    }
    }
}

} // namespace coxbal
