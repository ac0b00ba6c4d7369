#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "turan/error.hpp"
#include "turan/oracle.hpp"

namespace turan::cli {

inline constexpr int kGoldenVersion = 1;

enum class GoldenStatus { Matched, Recorded, Mismatch };

inline std::string_view to_string(GoldenStatus s)
{
    switch (s) {
    case GoldenStatus::Matched:
        return "matched";
    case GoldenStatus::Recorded:
        return "recorded";
    case GoldenStatus::Mismatch:
        return "mismatch";
    }
    return "mismatch";
}

inline std::string golden_key(const ExtremalResult& r)
{
    return "ex" + std::to_string(r.r) + "/n=" + std::to_string(r.n) + "/" + r.pattern;
}

/// Compares the value and witness of `r` against the stored entry, or
/// records them when the file or entry is missing. The file is rewritten
/// with sorted keys so repeated recordings are byte-stable.
inline GoldenStatus check_or_record(const std::filesystem::path& path, const ExtremalResult& r)
{
    nlohmann::json doc{{"format", "turan-oracle-golden"}, {"version", kGoldenVersion}, {"entries", nlohmann::json::object()}};
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::ParseError, "golden file: " + std::string(e.what()));
        }
        if (doc.value("version", 0) != kGoldenVersion)
            throw Error(ErrorCode::ParseError, "golden file has an unsupported version");
    }
    const auto key = golden_key(r);
    auto& entries = doc["entries"];
    if (entries.contains(key)) {
        const auto& e = entries[key];
        const bool same = e.at("value").get<std::size_t>() == r.value &&
                          e.at("witness").get<std::vector<std::vector<Vertex>>>() == r.witness;
        return same ? GoldenStatus::Matched : GoldenStatus::Mismatch;
    }
    entries[key] = {{"value", r.value}, {"witness", r.witness}};
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << doc.dump(2) << '\n';
    if (!out)
        throw Error(ErrorCode::BadParameter, "cannot write golden file " + path.string());
    return GoldenStatus::Recorded;
}

} // namespace turan::cli
