#pragma once

#include <string>
#include <vector>

#include "quasitree/approx.hpp"
#include "quasitree/endtree.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/report.hpp"
#include "quasitree/simplicial.hpp"

namespace quasitree {

// Graph document: {"nodes": [...], "edges": [{"u","v","length"}],
// optional "labels": {name: [coords]}, optional "midpoints": [[names]...]}.
MetricGraph load_graph(const std::string& path);
MetricGraph parse_graph(const std::string& json_text);

std::string graph_to_json(const MetricGraph& g,
                          const std::vector<std::vector<std::string>>& midpoints = {});
void save_graph(const MetricGraph& g, const std::string& path,
                const std::vector<std::vector<std::string>>& midpoints = {});

// optional "midpoints" block of a graph document (empty when absent)
std::vector<std::vector<std::string>> load_midpoints(const std::string& path);

std::string tree_to_newick(const RealTree& t, const std::vector<std::string>& vertex_names);
std::string tree_to_dot(const RealTree& t, const std::vector<std::string>& vertex_names);
std::string tree_classes_to_json(const RealTree& t, const std::vector<std::string>& vertex_names);

std::string simplicial_to_dot(const SimplicialTree& g);
std::string simplicial_to_json(const SimplicialTree& g);
// two-column mapping: tree node label -> gamma vertex
std::string psi_table(const Layering& l, const RealTree& t,
                      const std::vector<std::string>& vertex_names);
// two-column mapping: gamma vertex -> tree point
std::string phi_table(const Layering& l, const RealTree& t,
                      const std::vector<std::string>& vertex_names);

std::string bottleneck_report_to_json(const BottleneckReport& r, const MetricGraph& g,
                                      const std::string& config);
std::string distortion_report_to_json(const DistortionReport& r, const MetricGraph& g,
                                      const std::string& config);
std::string certificate_to_json(const SubsetCertificate& c, const MetricGraph& g,
                                const std::string& config);
// two columns: source distance, image distance
std::string pairs_dump(const Matrix& d, const Matrix& image, const std::vector<int>& points);

void write_file(const std::string& path, const std::string& content);
std::string tool_version();

}  // namespace quasitree
