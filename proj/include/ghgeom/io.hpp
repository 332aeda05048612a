#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ghgeom/interval_union.hpp"
#include "ghgeom/metric_space.hpp"
#include "ghgeom/metric_tree.hpp"

namespace ghgeom::io {

using nlohmann::json;

/// Parse a file; ParseError carries the path and the parser's position info.
json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

/// {"labels": [...], "matrix": [[...]], "eps": optional}
FiniteMetricSpace space_from_json(const json& j, double default_eps = kDefaultEps);
json space_to_json(const FiniteMetricSpace& space);

/// {"vertices": [...], "edges": [[u, v, length], ...]} with u, v either
/// labels or indices.
MetricTree tree_from_json(const json& j, double default_eps = kDefaultEps);
json tree_to_json(const MetricTree& tree);

/// {"vertices": [...], "edge_points": [[edge_index, offset], ...]}
TreeSubsetX subset_from_json(const json& j, const MetricTree& tree);
json subset_to_json(const MetricTree& tree, const TreeSubsetX& x);

/// {"edge_intervals": [[edge_index, lo, hi], ...]}
IntervalUnion intervals_from_json(const json& j, const MetricTree& tree);
json intervals_to_json(const IntervalUnion& s);

/// Member list for subsets of a finite space: bare array or {"members":
/// [...]}; entries are labels or indices.
std::vector<int> members_from_json(const json& j, const FiniteMetricSpace& space);

enum class Format { Json, Csv };
Format format_from_string(const std::string& name);

/// JSON: pretty, trailing newline. CSV: one key,value row per top-level
/// field; nested values are rendered as quoted compact JSON.
std::string render_report(const json& j, Format format);

}  // namespace ghgeom::io
