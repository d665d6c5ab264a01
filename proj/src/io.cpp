#include "quasitree/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace quasitree {

using nlohmann::json;

std::string tool_version() { return "quasitree 0.1.0"; }

namespace {

json number9(double x) { return json(round9(x)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

MetricGraph parse_graph(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(std::string("parse failure: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
        throw Error("parse failure: document needs 'nodes' and 'edges'");
    }
    GraphBuilder b;
    const json& labels = doc.contains("labels") ? doc["labels"] : json::object();
    for (const json& nd : doc["nodes"]) {
        if (!nd.is_string()) throw Error("parse failure: node identifiers must be strings");
        std::string name = nd.get<std::string>();
        std::vector<double> label;
        if (labels.contains(name)) {
            for (const json& c : labels[name]) label.push_back(c.get<double>());
        }
        b.add_vertex(name, std::move(label));
    }
    for (const json& ed : doc["edges"]) {
        if (!ed.contains("u") || !ed.contains("v") || !ed.contains("length")) {
            throw Error("parse failure: edges need 'u', 'v' and 'length'");
        }
        b.add_edge(ed["u"].get<std::string>(), ed["v"].get<std::string>(),
                   ed["length"].get<double>());
    }
    return std::move(b).build();
}

MetricGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string graph_to_json(const MetricGraph& g,
                          const std::vector<std::vector<std::string>>& midpoints) {
    json doc;
    doc["nodes"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) doc["nodes"].push_back(g.name(v));
    doc["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        doc["edges"].push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"length", number9(e.length)}});
    }
    if (g.has_labels()) {
        json labels = json::object();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!g.label(v).empty()) {
                json arr = json::array();
                for (double c : g.label(v)) arr.push_back(number9(c));
                labels[g.name(v)] = arr;
            }
        }
        doc["labels"] = labels;
    }
    if (!midpoints.empty()) {
        doc["midpoints"] = midpoints;
    }
    return doc.dump(2) + "\n";
}

void save_graph(const MetricGraph& g, const std::string& path,
                const std::vector<std::vector<std::string>>& midpoints) {
    write_file(path, graph_to_json(g, midpoints));
}

std::vector<std::vector<std::string>> load_midpoints(const std::string& path) {
    json doc = json::parse(read_file(path));
    std::vector<std::vector<std::string>> out;
    if (doc.contains("midpoints")) {
        for (const json& level : doc["midpoints"]) {
            out.emplace_back();
            for (const json& name : level) out.back().push_back(name.get<std::string>());
        }
    }
    return out;
}

namespace {

void newick_rec(const RealTree& t, int node, const std::vector<std::string>& names,
                std::string& out) {
    const auto& kids = t.children(node);
    if (!kids.empty()) {
        out += '(';
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i) out += ',';
            newick_rec(t, kids[i], names, out);
        }
        out += ')';
    }
    out += t.node_label(node, names);
    if (node != t.root()) {
        out += ':';
        out += format9(t.height(node) - t.height(t.parent(node)));
    }
}

}  // namespace

std::string tree_to_newick(const RealTree& t, const std::vector<std::string>& vertex_names) {
    std::string out;
    newick_rec(t, t.root(), vertex_names, out);
    out += ";\n";
    return out;
}

std::string tree_to_dot(const RealTree& t, const std::vector<std::string>& vertex_names) {
    std::ostringstream out;
    out << "graph endtree {\n";
    for (int v = 0; v < t.node_count(); ++v) {
        out << "  n" << v << " [label=\"" << t.node_label(v, vertex_names) << " @ "
            << format9(t.height(v)) << "\"];\n";
    }
    for (int v = 0; v < t.node_count(); ++v) {
        if (t.parent(v) >= 0) {
            out << "  n" << t.parent(v) << " -- n" << v << " [label=\""
                << format9(t.height(v) - t.height(t.parent(v))) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string tree_classes_to_json(const RealTree& t, const std::vector<std::string>& vertex_names) {
    json doc = json::array();
    for (int v = 0; v < t.node_count(); ++v) {
        json node;
        node["node"] = t.node_label(v, vertex_names);
        node["height"] = number9(t.height(v));
        if (t.parent(v) >= 0) node["parent"] = t.node_label(t.parent(v), vertex_names);
        json members = json::array();
        for (int m : t.members(v)) members.push_back(vertex_names[m]);
        node["members"] = members;
        doc.push_back(node);
    }
    return doc.dump(2) + "\n";
}

std::string simplicial_to_dot(const SimplicialTree& g) {
    std::ostringstream out;
    out << "graph layered {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  s" << v << " [label=\"layer " << g.verts[v].layer << "\"];\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.verts[v].parent >= 0) out << "  s" << g.verts[v].parent << " -- s" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string simplicial_to_json(const SimplicialTree& g) {
    json doc;
    doc["nodes"] = json::array();
    doc["edges"] = json::array();
    json layers = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        doc["nodes"].push_back("s" + std::to_string(v));
        layers.push_back(g.verts[v].layer);
        if (g.verts[v].parent >= 0) {
            doc["edges"].push_back({{"u", "s" + std::to_string(g.verts[v].parent)},
                                    {"v", "s" + std::to_string(v)},
                                    {"length", 1.0}});
        }
    }
    doc["layers"] = layers;
    return doc.dump(2) + "\n";
}

std::string psi_table(const Layering& l, const RealTree& t,
                      const std::vector<std::string>& vertex_names) {
    std::ostringstream out;
    for (int v = 0; v < t.node_count(); ++v) {
        out << t.node_label(v, vertex_names) << "\ts" << l.psi[v] << "\n";
    }
    return out.str();
}

std::string phi_table(const Layering& l, const RealTree& t,
                      const std::vector<std::string>& vertex_names) {
    std::ostringstream out;
    for (int v = 0; v < l.gamma.vertex_count(); ++v) {
        const TreePoint& p = l.gamma.verts[v].source;
        out << "s" << v << "\t" << t.node_label(p.carrier, vertex_names) << ":"
            << format9(p.height) << "\n";
    }
    return out.str();
}

namespace {

json header(const MetricGraph& g, const std::string& config) {
    json h;
    h["tool"] = tool_version();
    h["config"] = config;
    h["vertices"] = g.vertex_count();
    h["edges"] = g.edge_count();
    return h;
}

json pair_json(const PairError& p, const MetricGraph& g) {
    json j;
    j["x"] = g.name(p.x);
    j["y"] = g.name(p.y);
    j["d"] = number9(p.d);
    j["image_d"] = number9(p.image_d);
    return j;
}

}  // namespace

std::string bottleneck_report_to_json(const BottleneckReport& r, const MetricGraph& g,
                                      const std::string& config) {
    json doc = header(g, config);
    doc["Delta"] = number9(r.delta_bn);
    json w;
    w["x"] = g.name(r.witness.x);
    w["y"] = g.name(r.witness.y);
    w["z"] = g.name(r.witness.z);
    json path = json::array();
    for (int v : r.witness.path) path.push_back(g.name(v));
    w["path"] = path;
    doc["Delta_witness"] = w;
    doc["A"] = number9(r.A);
    doc["A_witness"] = {{"x0", g.name(r.A_witness.x0)},
                        {"x", g.name(r.A_witness.x)},
                        {"y", g.name(r.A_witness.y)}};
    doc["delta_4pt"] = number9(r.delta_4pt);
    doc["delta_witness"] = {g.name(r.delta_witness[0]), g.name(r.delta_witness[1]),
                            g.name(r.delta_witness[2]), g.name(r.delta_witness[3])};
    doc["delta_sampled"] = r.delta_sampled;
    if (r.budget >= 0.0) {
        doc["budget"] = number9(r.budget);
        doc["pass"] = r.pass;
    }
    return doc.dump(2) + "\n";
}

std::string distortion_report_to_json(const DistortionReport& r, const MetricGraph& g,
                                      const std::string& config) {
    json doc = header(g, config);
    doc["max_additive"] = number9(r.max_additive);
    doc["image_dominates"] = r.image_dominates;
    doc["witness"] = pair_json(r.witness, g);
    doc["additive_C"] = number9(r.additive_C);
    doc["best_L"] = number9(r.best_L);
    doc["best_C"] = number9(r.best_C);
    json bounds = json::array();
    for (const BoundCheck& b : r.bounds) {
        bounds.push_back({{"name", b.name}, {"value", number9(b.value)}, {"satisfied", b.satisfied}});
    }
    doc["bounds"] = bounds;
    doc["all_bounds_satisfied"] = r.all_bounds_satisfied;
    doc["geodesic_isometry"] = r.geodesic_isometry;
    doc["geodesic_max_deviation"] = number9(r.geodesic_max_deviation);
    if (r.surjectivity_radius > 0.0) doc["surjectivity_radius"] = number9(r.surjectivity_radius);
    return doc.dump(2) + "\n";
}

std::string certificate_to_json(const SubsetCertificate& c, const MetricGraph& g,
                                const std::string& config) {
    json doc = header(g, config);
    doc["budget"] = number9(c.budget);
    doc["pass"] = c.pass;
    json samples = json::array();
    for (const auto& s : c.samples) {
        json sj;
        json z = json::array();
        for (int v : s.z) z.push_back(g.name(v));
        sj["Z"] = z;
        sj["upper"] = number9(s.upper);
        sj["upper_basepoint"] = g.name(s.upper_basepoint);
        sj["lower"] = number9(s.lower);
        sj["defect_witness"] = {g.name(s.defect_witness[0]), g.name(s.defect_witness[1]),
                                g.name(s.defect_witness[2]), g.name(s.defect_witness[3])};
        sj["pass"] = s.pass;
        samples.push_back(sj);
    }
    doc["samples"] = samples;
    return doc.dump(2) + "\n";
}

std::string pairs_dump(const Matrix& d, const Matrix& image, const std::vector<int>& points) {
    std::ostringstream out;
    const int m = static_cast<int>(points.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            out << format9(d.at(i, j)) << "\t" << format9(image.at(i, j)) << "\n";
        }
    }
    return out.str();
}

}  // namespace quasitree
