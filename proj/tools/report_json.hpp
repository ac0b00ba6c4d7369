#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/oracle.hpp"

namespace turan::cli {

using nlohmann::json;

/// Numeric-looking parameter values become JSON numbers.
inline json scalar(const std::string& s)
{
    std::uint64_t u = 0;
    auto [pu, eu] = std::from_chars(s.data(), s.data() + s.size(), u);
    if (eu == std::errc() && pu == s.data() + s.size() && !s.empty())
        return u;
    double d = 0;
    auto [pd, ed] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ed == std::errc() && pd == s.data() + s.size() && !s.empty())
        return d;
    return s;
}

inline json to_json(const Check& c)
{
    json j{{"claim", c.claim},
           {"cited_location", c.cited_location},
           {"measured", c.measured},
           {"bound", c.bound},
           {"pass", c.pass}};
    if (c.advisory)
        j["advisory"] = true;
    return j;
}

inline json to_json(const ConstructionReport& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = scalar(v);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return json{{"name", r.name}, {"params", params}, {"n", r.n}, {"m", r.m}, {"checks", checks}, {"pass", r.all_pass()}};
}

inline json to_json(const ExtremalResult& r)
{
    return json{{"r", r.r},
                {"n", r.n},
                {"pattern", r.pattern},
                {"value", r.value},
                {"witness", r.witness},
                {"witness_verified", r.witness_verified},
                {"pruning", r.pruning},
                {"nodes", r.nodes},
                {"elapsed_ms", r.elapsed_ms}};
}

inline json to_json(const SearchOutcome& s)
{
    json j{{"verdict", std::string(to_string(s.verdict))}, {"nodes", s.nodes}};
    if (s.embedding)
        j["map"] = s.embedding->map;
    return j;
}

} // namespace turan::cli
