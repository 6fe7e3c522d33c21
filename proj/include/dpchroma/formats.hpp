#pragma once

#include <dpchroma/cover.hpp>
#include <dpchroma/graph.hpp>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace dpchroma
{
    /// Text format:
    ///     graph <n> <m>
    ///     bipartition <k> <t>      (optional; left 0..k-1, right k..k+t-1)
    ///     edge <u> <v>             (m lines)
    /// Throws parse-error on anything else.
    auto read_graph_text(std::istream & in) -> Graph;
    void write_graph_text(std::ostream & out, const Graph & g);

    auto graph_to_json(const Graph & g) -> nlohmann::json;
    auto graph_from_json(const nlohmann::json & j) -> Graph;

    /// {"graph": ..., "k": fold, "matchings": [{"perm": [...], "u": u, "v": v}, ...]}
    /// with matchings in edge order and an optional "claim" of
    /// "colorable" or "uncolorable".
    auto cover_to_json(const MatchingCover & c, const std::optional<std::string> & claim = std::nullopt) -> nlohmann::json;
    auto cover_from_json(const nlohmann::json & j) -> MatchingCover;

    /// Sorted keys, two-space indent, trailing newline.
    auto dump_json(const nlohmann::json & j) -> std::string;
    auto read_json_file(const std::string & path) -> nlohmann::json;
    void write_text_file(const std::string & path, const std::string & text);
}
