#include "starprism/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "starprism/errors.hpp"

namespace starprism {

using json = nlohmann::ordered_json;

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph " << to_string(g.kind()) << " {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    }
    for (auto [a, b] : g.edges()) {
        out << "  v" << a << " -- v" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    json doc;
    doc["kind"] = to_string(g.kind());
    if (g.star_order() >= 0) doc["n"] = g.star_order();
    if (g.cycle_order() >= 0) doc["m"] = g.cycle_order();
    doc["vertex_count"] = g.vertex_count();
    json edges = json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back(json::array({a, b}));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw UsageError("field 'document' is not valid JSON");
    }
    return doc;
}

int require_int(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number_integer()) {
        throw UsageError(std::string("field '") + field + "' is missing or not an integer");
    }
    return doc[field].get<int>();
}

std::string require_string(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_string()) {
        throw UsageError(std::string("field '") + field + "' is missing or not a string");
    }
    return doc[field].get<std::string>();
}

} // namespace

Graph graph_from_json(const std::string& text) {
    const json doc = parse_document(text);
    GraphKind kind;
    try {
        kind = graph_kind_from_string(require_string(doc, "kind"));
    } catch (const InvalidParameterError& e) {
        throw UsageError(std::string("field 'kind': ") + e.what());
    }
    const int vertex_count = require_int(doc, "vertex_count");
    const int n = doc.contains("n") ? require_int(doc, "n") : -1;
    const int m = doc.contains("m") ? require_int(doc, "m") : -1;
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw UsageError("field 'edges' is missing or not an array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw UsageError("field 'edges' must contain [a, b] integer pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(vertex_count, std::move(edges), kind, n, m);
    } catch (const InvalidParameterError& e) {
        throw UsageError(std::string("field 'edges': ") + e.what());
    }
}

namespace {

json labeling_body(const Graph& g, int diameter, const RadioLabeling& phi, bool valid) {
    json doc;
    if (g.is_star_cycle_product()) {
        doc["n"] = g.star_order();
        doc["m"] = g.cycle_order();
    } else {
        doc["vertex_count"] = g.vertex_count();
    }
    doc["diameter"] = diameter;
    doc["method"] = to_string(phi.method);

    const int min_label = *std::min_element(phi.labels.begin(), phi.labels.end());
    doc["span"] = span_of(phi);
    doc["valid"] = valid;
    json labels = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json entry;
        if (g.is_star_cycle_product()) {
            const VertexKey key = g.key_of(v);
            entry["vertex"] = json::array({key.star_index, key.cycle_index + 1});
        } else {
            entry["vertex"] = v;
        }
        entry["label"] = phi.labels[static_cast<size_t>(v)] - min_label;
        labels.push_back(std::move(entry));
    }
    doc["labels"] = std::move(labels);
    return doc;
}

} // namespace

std::string labeling_to_json(const Graph& g, int diameter, const RadioLabeling& phi,
                             bool valid) {
    return labeling_body(g, diameter, phi, valid).dump(2) + "\n";
}

ParsedLabeling labeling_from_json(const std::string& text) {
    const json doc = parse_document(text);
    const int n = require_int(doc, "n");
    const int m = require_int(doc, "m");
    if (n < 1) throw UsageError("field 'n' must be >= 1");
    if (m < 3) throw UsageError("field 'm' must be >= 3");

    ParsedLabeling parsed;
    parsed.n = n;
    parsed.m = m;
    try {
        parsed.labeling.method = label_method_from_string(require_string(doc, "method"));
    } catch (const InvalidParameterError& e) {
        throw UsageError(std::string("field 'method': ") + e.what());
    }

    const int vertex_count = (n + 1) * m;
    parsed.labeling.labels.assign(static_cast<size_t>(vertex_count), -1);
    if (!doc.contains("labels") || !doc["labels"].is_array()) {
        throw UsageError("field 'labels' is missing or not an array");
    }
    for (const json& entry : doc["labels"]) {
        if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("label")) {
            throw UsageError("field 'labels' entries need 'vertex' and 'label'");
        }
        const json& vert = entry["vertex"];
        if (!vert.is_array() || vert.size() != 2 || !vert[0].is_number_integer() ||
            !vert[1].is_number_integer()) {
            throw UsageError("field 'vertex' must be an [i, j] integer pair");
        }
        const int i = vert[0].get<int>();
        const int j = vert[1].get<int>();  // 1-based cycle index on disk
        if (i < 0 || i > n || j < 1 || j > m) {
            throw UsageError("field 'vertex' [" + std::to_string(i) + ", " +
                             std::to_string(j) + "] out of range");
        }
        if (!entry["label"].is_number_integer() || entry["label"].get<long long>() < 0) {
            throw UsageError("field 'label' must be a non-negative integer");
        }
        const int id = (j - 1) * (n + 1) + i;
        if (parsed.labeling.labels[static_cast<size_t>(id)] >= 0) {
            throw UsageError("field 'labels' assigns vertex [" + std::to_string(i) + ", " +
                             std::to_string(j) + "] twice");
        }
        parsed.labeling.labels[static_cast<size_t>(id)] = entry["label"].get<int>();
    }
    for (int v = 0; v < vertex_count; ++v) {
        if (parsed.labeling.labels[static_cast<size_t>(v)] < 0) {
            throw UsageError("field 'labels' misses vertex id " + std::to_string(v));
        }
    }
    parsed.labeling.span = span_of(parsed.labeling);
    parsed.labeling.normalized =
        *std::min_element(parsed.labeling.labels.begin(), parsed.labeling.labels.end()) == 0;

    if (doc.contains("diameter")) {
        const int stated = require_int(doc, "diameter");
        const int actual = all_pairs_distances(Graph::star_cycle_product(n, m)).diameter();
        if (stated != actual) {
            throw UsageError("field 'diameter' is " + std::to_string(stated) +
                             " but the graph has diameter " + std::to_string(actual));
        }
    }
    return parsed;
}

std::string report_to_json(const Graph& g, int diameter, const ConstructionReport& report) {
    const bool valid = report.method_chosen != ConstructionMethod::paper_literal ||
                       report.paper_literal_violations == 0;
    json doc = labeling_body(g, diameter, report.labeling, valid);
    doc["formula_value"] = report.formula_value;
    doc["paper_literal_violations"] = report.paper_literal_violations;
    doc["method_chosen"] = to_string(report.method_chosen);
    doc["seed"] = report.seed_chosen;
    return doc.dump(2) + "\n";
}

std::string exact_to_json(const Graph& g, int diameter, const ExactResult& result) {
    json doc;
    doc["optimum"] = result.optimum;
    doc["status"] = to_string(result.status);
    doc["nodes_explored"] = result.nodes_explored;
    doc["elapsed_ms"] = result.elapsed.count();
    doc["labeling"] = labeling_body(g, diameter, result.labeling, true);
    return doc.dump(2) + "\n";
}

std::string violations_csv(const Graph& g, std::span<const Violation> violations) {
    std::ostringstream out;
    out << "u,v,distance,required_gap,actual_gap\n";
    for (const Violation& violation : violations) {
        out << g.vertex_name(violation.u) << ',' << g.vertex_name(violation.v) << ','
            << violation.distance << ',' << violation.required_gap << ','
            << violation.actual_gap << '\n';
    }
    return out.str();
}

} // namespace starprism
