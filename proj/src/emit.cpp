#include "subtyper/emit.hpp"

#include <algorithm>

#include <json.hpp>

namespace subtyper {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(const Label& label) {
    std::string out;
    for (char ch : label) {
        if (ch == '\n') {
            out += "\\n";
            continue;
        }
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string xml_escape(const Label& label) {
    std::string out;
    for (char ch : label) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

ordered_json row_to_json(const IterationRow& row) {
    return ordered_json{{"iteration", row.iteration},
                        {"mode", to_string(row.mode)},
                        {"vertices", row.vertex_count},
                        {"edges", row.edge_count},
                        {"intervals", row.interval_count},
                        {"wildcard_expressible", row.wildcard_expressible_count}};
}

IterationRow row_from_json(const ordered_json& j) {
    IterationRow row;
    row.iteration = j.at("iteration").get<int>();
    row.mode = arg_mode_from_string(j.at("mode").get<std::string>());
    row.vertex_count = j.at("vertices").get<std::size_t>();
    row.edge_count = j.at("edges").get<std::size_t>();
    row.interval_count = j.at("intervals").get<std::size_t>();
    row.wildcard_expressible_count = j.at("wildcard_expressible").get<std::size_t>();
    return row;
}

}  // namespace

EmitFormat emit_format_from_string(std::string_view text) {
    if (text == "dot") return EmitFormat::dot;
    if (text == "graphml") return EmitFormat::graphml;
    if (text == "json") return EmitFormat::json;
    throw Error("unknown emit format: '" + std::string(text) + "'");
}

GraphDocument make_document(const DirectedGraph& g, const IterationReport& report,
                            ArgMode mode, int iteration) {
    GraphDocument doc;
    doc.mode = to_string(mode);
    doc.iteration = iteration;
    doc.vertices = g.vertices();
    doc.edges = g.edges();
    doc.stats = report;
    return doc;
}

std::string to_json(const GraphDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["mode"] = doc.mode;
    j["iteration"] = doc.iteration;
    j["vertices"] = doc.vertices;
    auto& edges = j["edges"] = ordered_json::array();
    for (const Edge& e : doc.edges) edges.push_back({e.first, e.second});
    auto& rows = j["stats"]["rows"] = ordered_json::array();
    for (const IterationRow& row : doc.stats.rows) rows.push_back(row_to_json(row));
    return j.dump(2) + "\n";
}

GraphDocument from_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("malformed JSON document");
    try {
        GraphDocument doc;
        doc.format_version = j.at("format_version").get<int>();
        if (doc.format_version != 1)
            throw Error("unsupported format_version " +
                        std::to_string(doc.format_version));
        doc.mode = j.at("mode").get<std::string>();
        arg_mode_from_string(doc.mode);
        doc.iteration = j.at("iteration").get<int>();
        doc.vertices = j.at("vertices").get<std::vector<Label>>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error("edges must be [from, to] pairs");
            doc.edges.emplace_back(e[0].get<Label>(), e[1].get<Label>());
        }
        for (const auto& row : j.at("stats").at("rows"))
            doc.stats.rows.push_back(row_from_json(row));
        if (!std::is_sorted(doc.vertices.begin(), doc.vertices.end()))
            throw Error("document vertices must be sorted");
        if (!std::is_sorted(doc.edges.begin(), doc.edges.end()))
            throw Error("document edges must be sorted");
        std::set<Label> known(doc.vertices.begin(), doc.vertices.end());
        if (known.size() != doc.vertices.size())
            throw Error("document vertices must be unique");
        for (const Edge& e : doc.edges) {
            if (e.first == e.second)
                throw Error("document contains a self-loop on '" + e.first + "'");
            if (!known.count(e.first) || !known.count(e.second))
                throw Error("edge endpoint missing from vertices: " + e.first + " -> " +
                            e.second);
        }
        return doc;
    } catch (const ordered_json::exception& e) {
        throw Error(std::string("malformed graph document: ") + e.what());
    }
}

std::string to_dot(const GraphDocument& doc,
                   const std::optional<std::set<Label>>& previous_vertices) {
    std::string out = "digraph subtyping {\n  rankdir=BT;\n";
    for (const Label& v : doc.vertices) out += "  \"" + dot_escape(v) + "\";\n";
    for (const Edge& e : doc.edges) {
        out += "  \"" + dot_escape(e.first) + "\" -> \"" + dot_escape(e.second) + "\"";
        if (previous_vertices && previous_vertices->count(e.first) &&
            previous_vertices->count(e.second))
            out += " [color=blue]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_graphml(const GraphDocument& doc) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        "  <graph id=\"subtyping\" edgedefault=\"directed\">\n";
    for (const Label& v : doc.vertices) {
        std::string esc = xml_escape(v);
        out += "    <node id=\"" + esc + "\"><data key=\"label\">" + esc +
               "</data></node>\n";
    }
    for (const Edge& e : doc.edges)
        out += "    <edge source=\"" + xml_escape(e.first) + "\" target=\"" +
               xml_escape(e.second) + "\"/>\n";
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string emit(const DirectedGraph& g, const IterationReport& report, ArgMode mode,
                 int iteration, EmitFormat format) {
    GraphDocument doc = make_document(g, report, mode, iteration);
    switch (format) {
        case EmitFormat::dot: return to_dot(doc);
        case EmitFormat::graphml: return to_graphml(doc);
        case EmitFormat::json: return to_json(doc);
    }
    throw Error("unhandled emit format");
}

}  // namespace subtyper
