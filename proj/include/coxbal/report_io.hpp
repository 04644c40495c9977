#pragma once

#include "coxbal/ideals.hpp"
#include "coxbal/parabolic.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coxbal {

enum class OutputFormat { Text, Json, Csv };

inline OutputFormat parse_format(const std::string & s)
{
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    fail(ErrorKind::MalformedInput, "unknown format '" + s + "' (text, json, csv)");
}

/// Header of a count or list answer.
struct QuerySummary {
    std::string type;
    RootSubset theta, eta;
    std::size_t num_cosets = 0;
    bool fixed_point_free = false;
    std::uint64_t count = 0;
    bool complete = true;
};

inline QuerySummary summarize(const std::string & type, const Quotient & q, std::uint64_t count, bool complete)
{
    return {type, q.theta(), q.eta(), q.size(), ! q.has_fixed_point(), count, complete};
}

/// "3 1 2 1", or "e" for the identity.
inline std::string format_word(const std::vector<int> & word)
{
    if (word.empty())
        return "e";
    std::string out;
    for (int a : word)
        out += (out.empty() ? "" : " ") + std::to_string(a);
    return out;
}

inline std::string format_count(const QuerySummary & s)
{
    return s.complete ? std::to_string(s.count) : ">= " + std::to_string(s.count);
}

inline nlohmann::ordered_json summary_json(const QuerySummary & s)
{
    nlohmann::ordered_json j;
    j["type"] = s.type;
    j["theta"] = subset_indices(s.theta);
    j["eta"] = subset_indices(s.eta);
    j["num_cosets"] = s.num_cosets;
    j["fixed_point_free"] = s.fixed_point_free;
    j["count"] = s.count;
    if (! s.complete)
        j["complete"] = false; // count is a lower bound
    return j;
}

inline nlohmann::ordered_json report_json(const BalancedIdealReport & r)
{
    nlohmann::ordered_json j;
    j["generators"] = r.generator_words;
    j["size"] = r.size;
    if (r.dimension)
        j["dimension"] = *r.dimension;
    if (r.left_invariance)
        j["left_invariance"] = subset_indices(*r.left_invariance);
    if (r.right_invariance)
        j["right_invariance"] = subset_indices(*r.right_invariance);
    return j;
}

inline void write_count(std::ostream & out, const QuerySummary & s, OutputFormat f)
{
    switch (f) {
    case OutputFormat::Text:
        out << format_count(s) << '\n';
        if (! s.complete)
            out << "incomplete: budget exhausted, count is a lower bound\n";
        break;
    case OutputFormat::Json:
        out << summary_json(s).dump(2) << '\n';
        break;
    case OutputFormat::Csv:
        out << "type,theta,eta,num_cosets,fixed_point_free,count,complete\n"
            << s.type << ',' << '"' << format_subset(s.theta) << "\",\"" << format_subset(s.eta) << "\"," << s.num_cosets << ','
            << (s.fixed_point_free ? "true" : "false") << ',' << s.count << ',' << (s.complete ? "true" : "false") << '\n';
        break;
    }
}

inline void write_list(std::ostream & out, const QuerySummary & s, const std::vector<BalancedIdealReport> & reports, OutputFormat f)
{
    auto spaced = [](const RootSubset & r) {
        std::string t;
        for (int i : subset_indices(r))
            t += (t.empty() ? "" : " ") + std::to_string(i);
        return t;
    };
    auto generators = [](const BalancedIdealReport & r, const char * sep) {
        std::string t;
        for (const auto & w : r.generator_words)
            t += (t.empty() ? "" : sep) + format_word(w);
        return t;
    };
    switch (f) {
    case OutputFormat::Text:
        out << "type " << s.type << "  theta " << format_subset(s.theta) << "  eta " << format_subset(s.eta) << "  cosets " << s.num_cosets
            << "  fixed-point-free " << (s.fixed_point_free ? "yes" : "no") << '\n';
        out << "count " << format_count(s) << '\n';
        if (! s.complete)
            out << "incomplete: budget exhausted, the ideals below are a partial listing\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto & r = reports[i];
            out << '#' << i + 1 << "  size " << r.size;
            if (r.dimension)
                out << "  dim " << *r.dimension;
            if (r.left_invariance)
                out << "  left {" << spaced(*r.left_invariance) << "}  right {" << spaced(*r.right_invariance) << '}';
            out << "  generators " << generators(r, ", ") << '\n';
        }
        break;
    case OutputFormat::Json: {
        auto j = summary_json(s);
        j["ideals"] = nlohmann::ordered_json::array();
        for (const auto & r : reports)
            j["ideals"].push_back(report_json(r));
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "index,size,dimension,left_invariance,right_invariance,generators\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto & r = reports[i];
            out << i + 1 << ',' << r.size << ',' << (r.dimension ? std::to_string(*r.dimension) : "") << ','
                << (r.left_invariance ? spaced(*r.left_invariance) : "") << ',' << (r.right_invariance ? spaced(*r.right_invariance) : "") << ','
                << generators(r, ";") << '\n';
        }
        break;
    }
}

} // namespace coxbal
