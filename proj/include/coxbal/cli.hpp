#pragma once

#include "coxbal/cache.hpp"
#include "coxbal/criteria.hpp"
#include "coxbal/error.hpp"
#include "coxbal/ideals.hpp"
#include "coxbal/parabolic.hpp"
#include "coxbal/report_io.hpp"
#include "coxbal/rootdata.hpp"
#include "coxbal/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace coxbal::cli {

enum ExitCode : int { Ok = 0, DomainError = 1, BadInput = 2, BudgetExhausted = 3 };

inline int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::NotAPermutation:
    case ErrorKind::MissingRootWeight:
        return BadInput;
    default:
        return DomainError;
    }
}

struct Request {
    std::string type, matrix;
    std::string left = "all", right = "all";
    std::string profile = "split";
    std::string format = "text";
    unsigned jobs = 0;
    std::uint64_t limit = 100000;
    std::string cache_dir;
    bool no_cache = false;
    double budget_seconds = 0;
    int n = 0;
    int max_n = 10, max_p = 6;
    bool allow_expensive = false, full = false;
    std::string table;
    std::ostream * notices = nullptr; // receives diagram notices such as a defaulted B/C orientation
};

namespace detail {

inline CoxeterDiagram diagram(const Request & r)
{
    if (! r.type.empty() && ! r.matrix.empty())
        fail(ErrorKind::MalformedInput, "give either --type or --matrix, not both");
    if (! r.matrix.empty()) {
        auto d = read_matrix_file(r.matrix);
        if (r.notices)
            for (const auto & n : d.notices())
                *r.notices << "note: " << n << '\n';
        return d;
    }
    if (r.type.empty())
        fail(ErrorKind::MalformedInput, "--type or --matrix is required");
    return CoxeterDiagram::from_label(r.type);
}

inline GroupOptions group_options(const Request & r)
{
    GroupOptions o;
    if (! r.no_cache)
        o.cache_dir = r.cache_dir.empty() ? cache::default_directory() : std::optional<std::filesystem::path>(r.cache_dir);
    return o;
}

inline std::optional<std::chrono::steady_clock::time_point> deadline(const Request & r)
{
    if (r.budget_seconds <= 0)
        return std::nullopt;
    return std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(r.budget_seconds));
}

inline MultiplicityProfile load_profile(const RootSystem & rs, const std::string & selector)
{
    if (selector == "split")
        return profile(rs, ProfileKind::Split);
    if (selector == "complex")
        return profile(rs, ProfileKind::Complex);
    if (selector.rfind("custom:", 0) == 0) {
        std::ifstream in(selector.substr(7));
        if (! in)
            fail(ErrorKind::MalformedInput, "cannot open profile file '" + selector.substr(7) + "'");
        return parse_profile_text(rs, in);
    }
    fail(ErrorKind::MalformedInput, "unknown profile '" + selector + "' (split, complex, custom:FILE)");
}

struct Loaded {
    std::shared_ptr<const GroupTable> group;
    Quotient quotient;
};

inline Loaded load_quotient(const Request & r, bool require_action)
{
    auto g = load_or_build(diagram(r), group_options(r));
    auto q = double_cosets(g, r.left, r.right, require_action);
    return {g, std::move(q)};
}

inline int cmd_count(const Request & r, std::ostream & out)
{
    auto [g, q] = load_quotient(r, true);
    EnumerationOptions e;
    e.jobs = r.jobs;
    e.deadline = deadline(r);
    auto result = enumerate_balanced(q, e);
    write_count(out, summarize(g->diagram().label(), q, result.count, result.complete), parse_format(r.format));
    return result.complete ? Ok : BudgetExhausted;
}

inline int cmd_list(const Request & r, std::ostream & out)
{
    auto [g, q] = load_quotient(r, true);
    auto prof = load_profile(g->roots(), r.profile);
    EnumerationOptions e;
    e.jobs = r.jobs;
    e.collect = true;
    e.limit = r.limit;
    e.deadline = deadline(r);
    auto result = enumerate_balanced(q, e);
    auto reports = make_reports(q, result.ideals, &prof);
    write_list(out, summarize(g->diagram().label(), q, result.count, result.complete), reports, parse_format(r.format));
    return result.complete ? Ok : BudgetExhausted;
}

inline int cmd_exists(const Request & r, std::ostream & out)
{
    auto [g, q] = load_quotient(r, true);
    const bool exists = ! q.has_fixed_point();
    std::optional<Coset> fixed;
    for (Coset c = 0; c < q.size() && ! fixed; ++c)
        if (q.w0_action(c) == c)
            fixed = c;
    switch (parse_format(r.format)) {
    case OutputFormat::Text:
        out << (exists ? "yes" : "no") << '\n';
        if (fixed)
            out << "w0 fixes the coset of " << format_word(q.rep_word(*fixed)) << '\n';
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["type"] = g->diagram().label();
        j["theta"] = subset_indices(q.theta());
        j["eta"] = subset_indices(q.eta());
        j["exists"] = exists;
        if (fixed)
            j["fixed_coset"] = q.rep_word(*fixed);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "type,theta,eta,exists\n"
            << g->diagram().label() << ",\"" << format_subset(q.theta()) << "\",\"" << format_subset(q.eta()) << "\"," << (exists ? "true" : "false") << '\n';
        break;
    }
    return Ok;
}

inline int cmd_mbcd(const Request & r, std::ostream & out)
{
    auto g = load_or_build(diagram(r), group_options(r));
    auto prof = load_profile(g->roots(), r.profile);
    const int value = mbcd(*g, prof);
    auto ds = dumas_sanders_check(*g, prof);
    switch (parse_format(r.format)) {
    case OutputFormat::Text:
        out << value << '\n';
        if (ds.required > 1)
            out << "low-length bound " << ds.required << ": " << (ds.holds ? "holds" : "fails") << '\n';
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["type"] = g->diagram().label();
        j["profile"] = r.profile;
        j["mbcd"] = value;
        j["total_dimension"] = prof.total();
        j["low_length_bound"] = ds.required;
        j["low_length_bound_holds"] = ds.holds;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "type,profile,mbcd,total_dimension\n" << g->diagram().label() << ',' << r.profile << ',' << value << ',' << prof.total() << '\n';
        break;
    }
    return Ok;
}

inline int cmd_quotient_info(const Request & r, std::ostream & out)
{
    auto [g, q] = load_quotient(r, false);
    const bool action = q.has_w0_action();
    const auto f = parse_format(r.format);
    auto w0_of = [&](Coset c) { return action ? std::to_string(q.w0_action(c)) : std::string("-"); };
    switch (f) {
    case OutputFormat::Text:
        out << "type " << g->diagram().label() << "  theta " << format_subset(q.theta()) << "  eta " << format_subset(q.eta()) << "  cosets " << q.size() << '\n';
        out << "w0 action " << (action ? "yes" : "no (iota(theta) != theta)");
        if (action)
            out << "  fixed-point-free " << (q.has_fixed_point() ? "no" : "yes");
        out << '\n';
        for (Coset c = 0; c < q.size(); ++c)
            out << std::setw(4) << c << "  length " << std::setw(3) << int{g->length(q.rep(c))} << "  w0 -> " << std::setw(4) << w0_of(c) << "  rep "
                << format_word(q.rep_word(c)) << '\n';
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["type"] = g->diagram().label();
        j["theta"] = subset_indices(q.theta());
        j["eta"] = subset_indices(q.eta());
        j["num_cosets"] = q.size();
        j["w0_action"] = action;
        if (action)
            j["fixed_point_free"] = ! q.has_fixed_point();
        j["cosets"] = nlohmann::ordered_json::array();
        for (Coset c = 0; c < q.size(); ++c) {
            nlohmann::ordered_json e;
            e["rep"] = q.rep_word(c);
            e["length"] = int{g->length(q.rep(c))};
            if (action)
                e["w0"] = q.w0_action(c);
            j["cosets"].push_back(e);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "coset,length,w0,rep\n";
        for (Coset c = 0; c < q.size(); ++c)
            out << c << ',' << int{g->length(q.rep(c))} << ',' << (action ? std::to_string(q.w0_action(c)) : "") << ',' << format_word(q.rep_word(c)) << '\n';
        break;
    }
    return Ok;
}

inline int cmd_sp_chain(const Request & r, std::ostream & out)
{
    auto rep = symplectic_chain_report(r.n);
    auto ks = [](const std::vector<int> & v) {
        std::string t;
        for (int k : v)
            t += (t.empty() ? "" : " ") + std::to_string(k);
        return t;
    };
    switch (parse_format(r.format)) {
    case OutputFormat::Text:
        out << "count " << rep.count << '\n';
        out << "cosets " << rep.num_cosets << "  distinct " << (rep.distinct_reps ? "yes" : "no") << "  order [k] <= [l] iff k >= l: "
            << (rep.order_ok ? "yes" : "no") << "  w0[k] = [n-k]: " << (rep.w0_ok ? "yes" : "no") << '\n';
        for (const auto & i : rep.ideals)
            out << "ideal {" << ks(i) << "}\n";
        break;
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["n"] = rep.n;
        j["num_cosets"] = rep.num_cosets;
        j["distinct_reps"] = rep.distinct_reps;
        j["order_ok"] = rep.order_ok;
        j["w0_ok"] = rep.w0_ok;
        j["count"] = rep.count;
        j["ideals"] = rep.ideals;
        j["reps"] = rep.reps;
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "n,count,distinct_reps,order_ok,w0_ok,ideals\n"
            << rep.n << ',' << rep.count << ',' << rep.distinct_reps << ',' << rep.order_ok << ',' << rep.w0_ok << ',';
        for (std::size_t i = 0; i < rep.ideals.size(); ++i)
            out << (i ? ";" : "") << ks(rep.ideals[i]);
        out << '\n';
        break;
    }
    return Ok;
}

inline int cmd_table(const Request & r, std::ostream & out)
{
    TableOptions o;
    o.jobs = r.jobs;
    o.group = group_options(r);
    o.deadline = deadline(r);
    o.max_n = r.max_n;
    o.max_p = r.max_p;
    o.allow_expensive = r.allow_expensive;
    o.full = r.full;
    auto t = make_table(r.table, o);
    write_table(out, t, parse_format(r.format));
    return t.complete() ? Ok : BudgetExhausted;
}

} // namespace detail

/// Parses and executes one command line; never throws.
inline int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    Request r;
    r.notices = &err;
    CLI::App app{"Balanced ideals in parabolic double-coset posets of finite Weyl groups", "coxbal"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--jobs,-j", r.jobs, "worker threads (0: all cores)");
    app.add_option("--format", r.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", r.cache_dir, "group cache directory (default $COXBAL_CACHE_DIR or ~/.cache/coxbal)");
    app.add_flag("--no-cache", r.no_cache, "neither read nor write the group cache");
    app.add_option("--budget-seconds", r.budget_seconds, "stop enumerating after this long and report a lower bound");

    auto add_diagram = [&](CLI::App * sub, bool with_subsets) {
        sub->add_option("--type,-t", r.type, "type label, e.g. A3, B4, F4, A1xB2");
        sub->add_option("--matrix", r.matrix, "file with rank, Coxeter matrix and optional Cartan matrix");
        if (with_subsets) {
            sub->add_option("--left", r.left, "theta: 'all' or 1-based indices such as 1,4");
            sub->add_option("--right", r.right, "eta: 'all' or 1-based indices");
        }
    };
    auto * count = app.add_subcommand("count", "number of balanced ideals in W_{theta,eta}");
    add_diagram(count, true);
    auto * list = app.add_subcommand("list", "all balanced ideals with generators, dimension and invariance");
    add_diagram(list, true);
    list->add_option("--limit", r.limit, "fail if there are more ideals than this");
    list->add_option("--profile", r.profile, "split, complex or custom:FILE");
    auto * exists = app.add_subcommand("exists", "whether a balanced ideal exists (w0 acts without fixed points)");
    add_diagram(exists, true);
    auto * mb = app.add_subcommand("mbcd", "minimal balanced codimension");
    add_diagram(mb, false);
    mb->add_option("--profile", r.profile, "split, complex or custom:FILE");
    auto * info = app.add_subcommand("quotient-info", "cosets, representatives and the w0 action");
    add_diagram(info, true);
    auto * chain = app.add_subcommand("sp-chain", "the chain W(C_n) double cosets by <alpha_1..alpha_{n-1}>");
    chain->add_option("--n", r.n, "rank")->required();
    auto * table = app.add_subcommand("table", "reproduce a count table");
    table->add_option("name", r.table, "grassmannian-sl, a4-matrix, so-pq or f4-row")->required();
    table->add_option("--max-n", r.max_n, "grassmannian-sl: largest n (default 10)");
    table->add_option("--max-p", r.max_p, "so-pq: largest p (default 6)");
    table->add_flag("--allow-expensive", r.allow_expensive, "so-pq: permit p = 7");
    table->add_flag("--full", r.full, "grassmannian-sl: every n and k, not only even n and odd k");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (count->parsed())
            return detail::cmd_count(r, out);
        if (list->parsed())
            return detail::cmd_list(r, out);
        if (exists->parsed())
            return detail::cmd_exists(r, out);
        if (mb->parsed())
            return detail::cmd_mbcd(r, out);
        if (info->parsed())
            return detail::cmd_quotient_info(r, out);
        if (chain->parsed())
            return detail::cmd_sp_chain(r, out);
        return detail::cmd_table(r, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return DomainError;
    }
}

} // namespace coxbal::cli
