#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lbcut/graph.hpp"
#include "lbcut/instance.hpp"

namespace lbcut {

/// Reads a PACE `.gr` graph: `p tw <n> <m>` followed by `<u> <v>` lines;
/// `c` lines are comments. Duplicate edges collapse. Errors name the line.
Graph parse_graph(std::string_view text);

/// Canonical `.gr` text: header, then edges in sorted order.
std::string write_graph(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Graph load_graph(const std::filesystem::path& path);

/// Instance JSON:
///   {"graph_file": "...", "terminals": [ids],
///    "constraints": [{"u": .., "v": .., "bound": ..}], "limit": Lim}
/// `graph_file` is resolved relative to `base_dir`. Terminal pairs missing
/// from `constraints` get bound 1.
CutInstance parse_instance(std::string_view json_text, const std::filesystem::path& base_dir);
CutInstance load_instance(const std::filesystem::path& path);

/// Inverse of parse_instance; only pairs with bound > 1 are listed.
std::string write_instance(const CutInstance& inst, const std::string& graph_file);

}  // namespace lbcut
