#include "ghgeom/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace ghgeom::io {

namespace {

const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::ParseError,
                    std::string(what) + " is missing required field \"" + key + "\"");
    return j.at(key);
}

double need_number(const json& j, const char* what) {
    if (!j.is_number())
        throw Error(ErrorKind::ParseError, std::string(what) + " must be a number");
    return j.get<double>();
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error(ErrorKind::ParseError, "failed writing " + path);
}

FiniteMetricSpace space_from_json(const json& j, double default_eps) {
    const json& jlabels = need(j, "labels", "space");
    const json& jmatrix = need(j, "matrix", "space");
    if (!jlabels.is_array() || !jmatrix.is_array())
        throw Error(ErrorKind::ParseError, "space labels and matrix must be arrays");
    std::vector<std::string> labels;
    for (const json& l : jlabels) {
        if (!l.is_string()) throw Error(ErrorKind::ParseError, "space labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<double>> rows;
    for (const json& r : jmatrix) {
        if (!r.is_array()) throw Error(ErrorKind::ParseError, "space matrix rows must be arrays");
        std::vector<double> row;
        for (const json& v : r) row.push_back(need_number(v, "matrix entry"));
        rows.push_back(std::move(row));
    }
    for (const auto& row : rows)
        if (row.size() != rows.size())
            throw Error(ErrorKind::ParseError, "space matrix must be square");
    double eps = j.contains("eps") ? need_number(j.at("eps"), "eps") : default_eps;
    return FiniteMetricSpace(std::move(labels), rows, eps);
}

json space_to_json(const FiniteMetricSpace& space) {
    return json{{"labels", space.labels()}, {"matrix", space.matrix().rows()},
                {"eps", space.eps()}};
}

MetricTree tree_from_json(const json& j, double default_eps) {
    const json& jverts = need(j, "vertices", "tree");
    const json& jedges = need(j, "edges", "tree");
    if (!jverts.is_array() || !jedges.is_array())
        throw Error(ErrorKind::ParseError, "tree vertices and edges must be arrays");
    std::vector<std::string> labels;
    std::map<std::string, int> by_label;
    for (const json& v : jverts) {
        if (!v.is_string()) throw Error(ErrorKind::ParseError, "tree vertices must be strings");
        by_label[v.get<std::string>()] = static_cast<int>(labels.size());
        labels.push_back(v.get<std::string>());
    }
    auto resolve = [&](const json& v) -> int {
        if (v.is_number_integer()) return v.get<int>();
        if (v.is_string()) {
            auto it = by_label.find(v.get<std::string>());
            if (it == by_label.end())
                throw Error(ErrorKind::ParseError,
                            "unknown vertex \"" + v.get<std::string>() + "\" in edge list");
            return it->second;
        }
        throw Error(ErrorKind::ParseError, "edge endpoints must be labels or indices");
    };
    std::vector<TreeEdge> edges;
    for (const json& e : jedges) {
        if (!e.is_array() || e.size() != 3)
            throw Error(ErrorKind::ParseError, "each edge must be [u, v, length]");
        edges.push_back({resolve(e[0]), resolve(e[1]), need_number(e[2], "edge length")});
    }
    double eps = j.contains("eps") ? need_number(j.at("eps"), "eps") : default_eps;
    return MetricTree(std::move(labels), std::move(edges), eps);
}

json tree_to_json(const MetricTree& tree) {
    json edges = json::array();
    for (const TreeEdge& e : tree.edges())
        edges.push_back({tree.vertex_labels()[e.u], tree.vertex_labels()[e.v], e.length});
    return json{{"vertices", tree.vertex_labels()}, {"edges", edges}, {"eps", tree.eps()}};
}

TreeSubsetX subset_from_json(const json& j, const MetricTree& tree) {
    std::vector<TreePoint> pts;
    if (j.contains("vertices")) {
        for (const json& v : j.at("vertices")) {
            if (v.is_number_integer()) {
                pts.push_back(TreePoint::at_vertex(tree, v.get<int>()));
            } else if (v.is_string()) {
                const auto& labels = tree.vertex_labels();
                auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
                if (it == labels.end())
                    throw Error(ErrorKind::ParseError,
                                "unknown vertex \"" + v.get<std::string>() + "\" in subset");
                pts.push_back(
                    TreePoint::at_vertex(tree, static_cast<int>(it - labels.begin())));
            } else {
                throw Error(ErrorKind::ParseError, "subset vertices must be labels or indices");
            }
        }
    }
    if (j.contains("edge_points")) {
        for (const json& p : j.at("edge_points")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer())
                throw Error(ErrorKind::ParseError,
                            "each edge point must be [edge_index, offset]");
            pts.push_back(
                TreePoint::on_edge(tree, p[0].get<int>(), need_number(p[1], "offset")));
        }
    }
    if (pts.empty())
        throw Error(ErrorKind::ParseError, "subset needs \"vertices\" or \"edge_points\"");
    return TreeSubsetX(tree, std::move(pts));
}

json subset_to_json(const MetricTree& tree, const TreeSubsetX& x) {
    json verts = json::array();
    json epts = json::array();
    for (const TreePoint& p : x.points) {
        if (p.is_vertex())
            verts.push_back(tree.vertex_labels()[p.vertex]);
        else
            epts.push_back({p.edge, p.offset});
    }
    return json{{"vertices", verts}, {"edge_points", epts}};
}

IntervalUnion intervals_from_json(const json& j, const MetricTree& tree) {
    const json& list = need(j, "edge_intervals", "interval union");
    if (!list.is_array())
        throw Error(ErrorKind::ParseError, "edge_intervals must be an array");
    IntervalUnion s(tree);
    for (const json& iv : list) {
        if (!iv.is_array() || iv.size() != 3 || !iv[0].is_number_integer())
            throw Error(ErrorKind::ParseError, "each interval must be [edge_index, lo, hi]");
        const int e = iv[0].get<int>();
        if (e < 0 || e >= tree.edge_count())
            throw Error(ErrorKind::IndexOutOfRange, "interval edge index out of range", {e});
        const double lo = need_number(iv[1], "interval lo");
        const double hi = need_number(iv[2], "interval hi");
        const Tol& tol = tree.tol();
        if (tol.lt(lo, 0.0) || tol.gt(hi, tree.edge(e).length) || tol.gt(lo, hi))
            throw Error(ErrorKind::OutOfRange,
                        "interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] outside edge of length " +
                            std::to_string(tree.edge(e).length),
                        {e});
        s.add(e, lo, hi);
    }
    s.normalize();
    return s;
}

json intervals_to_json(const IntervalUnion& s) {
    json list = json::array();
    for (int e = 0; e < s.tree().edge_count(); ++e)
        for (const Interval& iv : s.on_edge(e)) list.push_back({e, iv.lo, iv.hi});
    return json{{"edge_intervals", list}};
}

std::vector<int> members_from_json(const json& j, const FiniteMetricSpace& space) {
    const json& list = j.is_array() ? j : need(j, "members", "member list");
    if (!list.is_array()) throw Error(ErrorKind::ParseError, "members must be an array");
    std::vector<int> out;
    for (const json& m : list) {
        if (m.is_number_integer()) {
            out.push_back(m.get<int>());
        } else if (m.is_string()) {
            const auto& labels = space.labels();
            auto it = std::find(labels.begin(), labels.end(), m.get<std::string>());
            if (it == labels.end())
                throw Error(ErrorKind::ParseError,
                            "unknown point \"" + m.get<std::string>() + "\" in member list");
            out.push_back(static_cast<int>(it - labels.begin()));
        } else {
            throw Error(ErrorKind::ParseError, "members must be labels or indices");
        }
    }
    return out;
}

Format format_from_string(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw Error(ErrorKind::UsageError, "unknown format '" + name + "' (expected csv or json)");
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const json& v) {
    if (v.is_string()) return csv_quote(v.get<std::string>());
    return csv_quote(v.dump());
}

}  // namespace

std::string render_report(const json& j, Format format) {
    if (format == Format::Json) return j.dump(2) + "\n";
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [key, value] : j.items()) out << csv_quote(key) << "," << csv_cell(value)
                                                   << "\n";
    return out.str();
}

}  // namespace ghgeom::io
