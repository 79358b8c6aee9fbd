#pragma once

#include <string>

#include <json.hpp>

#include "pcc/centered.hpp"
#include "pcc/expansion.hpp"
#include "pcc/graph.hpp"
#include "pcc/random_lb.hpp"
#include "pcc/solver.hpp"

namespace pcc {

// insertion-ordered JSON so serialized output is byte-stable
using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// graphviz text; labeled graphs draw roots as circles and fresh vertices as
// points
std::string graph_to_dot(const Graph& g);

json coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const json& j);

json split_to_json(const SplitColoring& sc);
SplitColoring split_from_json(const json& j);

json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);
json threats_to_json(const std::vector<Witness>& threats);

// stats carry node and coloring counters only, keeping output run-independent
json solve_to_json(const SolveResult& r);

json janson_to_json(const JansonReport& r);
json nabla_to_json(const NablaResult& r);
json reduction_to_json(const ReductionReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace pcc
