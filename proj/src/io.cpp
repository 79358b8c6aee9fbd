#include "pcc/io.hpp"

#include <fstream>
#include <sstream>

namespace pcc {

namespace {

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

std::vector<std::pair<int, int>> edges_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("graph json: edges must be an array");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

const char* label_name(VertexLabel l) { return l == VertexLabel::root ? "root" : "fresh"; }

const char* palette_name(Palette p) { return p == Palette::A1 ? "A1" : "A2"; }

json counts_to_json(const std::map<int, int>& counts) {
    json obj = json::object();
    for (auto [color, count] : counts) obj[std::to_string(color)] = count;
    return obj;
}

} // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = edges_to_json(g.edges());
    if (g.labeled()) {
        json labels = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(label_name(g.label(v)));
        j["labels"] = labels;
    }
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need fields n and edges");
    int n = j["n"].get<int>();
    auto edges = edges_from_json(j["edges"]);
    if (!j.contains("labels")) return Graph(n, std::move(edges));
    std::vector<VertexLabel> labels;
    for (const auto& name : j["labels"]) {
        std::string s = name.get<std::string>();
        if (s == "root")
            labels.push_back(VertexLabel::root);
        else if (s == "fresh")
            labels.push_back(VertexLabel::fresh);
        else
            throw std::invalid_argument("graph json: label must be root or fresh");
    }
    return Graph::with_labels(n, std::move(edges), std::move(labels));
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph pcc {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.labeled())
            out << " [shape=" << (g.is_root(v) ? "circle" : "point") << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

json coloring_to_json(const Coloring& f) {
    json j;
    j["k"] = f.k;
    j["colors"] = f.colors;
    return j;
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colors"))
        throw std::invalid_argument("coloring json: need fields k and colors");
    Coloring f;
    f.k = j["k"].get<int>();
    f.colors = j["colors"].get<std::vector<int>>();
    return f;
}

json split_to_json(const SplitColoring& sc) {
    json j = coloring_to_json(sc.base);
    json pal = json::array();
    for (Palette p : sc.palette_of_color) pal.push_back(palette_name(p));
    j["palette"] = pal;
    return j;
}

SplitColoring split_from_json(const json& j) {
    SplitColoring sc;
    sc.base = coloring_from_json(j);
    if (!j.contains("palette"))
        throw std::invalid_argument("split coloring json: need field palette");
    for (const auto& name : j["palette"]) {
        std::string s = name.get<std::string>();
        if (s == "A1")
            sc.palette_of_color.push_back(Palette::A1);
        else if (s == "A2")
            sc.palette_of_color.push_back(Palette::A2);
        else
            throw std::invalid_argument("split coloring json: palette entry must be A1 or A2");
    }
    return sc;
}

json witness_to_json(const Witness& w) {
    json j;
    j["kind"] = w.kind == Witness::Kind::violation ? "violation" : "threat";
    j["vertices"] = w.vertices;
    j["colors"] = counts_to_json(w.color_counts);
    if (w.kind == Witness::Kind::threat) {
        j["threat_color"] = w.threat_color;
        j["load_a1"] = w.load_a1;
        j["load_a2"] = w.load_a2;
    }
    return j;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["centered"] = v.centered;
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j;
}

json threats_to_json(const std::vector<Witness>& threats) {
    json arr = json::array();
    for (const auto& w : threats) arr.push_back(witness_to_json(w));
    return arr;
}

json solve_to_json(const SolveResult& r) {
    json j;
    switch (r.status) {
    case SolveResult::Status::exact: j["status"] = "exact"; break;
    case SolveResult::Status::lower_bound_only: j["status"] = "lower_bound_only"; break;
    default: j["status"] = "timeout"; break;
    }
    j["chi"] = r.chi;
    j["coloring"] = r.coloring ? coloring_to_json(*r.coloring) : json(nullptr);
    j["stats"] = {{"nodes", r.stats.nodes}, {"colorings_tested", r.stats.colorings_tested}};
    return j;
}

json janson_to_json(const JansonReport& r) {
    json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["q"] = r.q;
    j["m"] = r.m;
    j["mu"] = r.mu;
    j["delta_upper"] = r.delta_upper;
    j["zero_prob_upper"] = r.zero_prob_upper;
    j["log_zero_prob_upper"] = r.log_zero_prob_upper;
    j["log_coloring_count_bound"] = r.log_coloring_count_bound;
    j["log_union_bound_product"] = r.log_union_bound_product;
    j["union_bound_succeeds"] = r.union_bound_succeeds;
    return j;
}

json nabla_to_json(const NablaResult& r) {
    json j;
    j["r"] = r.model.r;
    json parts = json::array();
    for (const auto& part : r.model.parts) parts.push_back(part);
    j["parts"] = parts;
    j["h_edges"] = edges_to_json(r.h_edges);
    j["density"] = r.density.str();
    return j;
}

json reduction_to_json(const ReductionReport& r) {
    json j;
    j["p"] = r.p;
    j["t"] = r.t;
    j["p1"] = r.p1;
    j["p2"] = r.p2;
    j["total"] = r.total;
    j["total_centered"] = r.total_centered;
    j["split_centered"] = r.split_centered;
    switch (r.implication) {
    case ReductionReport::Implication::holds: j["implication"] = "holds"; break;
    case ReductionReport::Implication::not_applicable: j["implication"] = "not_applicable"; break;
    default: j["implication"] = "counterexample"; break;
    }
    j["counterexample"] = r.counterexample ? witness_to_json(*r.counterexample) : json(nullptr);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace pcc
