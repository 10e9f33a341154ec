#ifndef COMBGRAPH_IO_HPP
#define COMBGRAPH_IO_HPP

#include <string>

#include "combgraph/blockade.hpp"
#include "combgraph/graph.hpp"

namespace combgraph {

// Graph files: {"n": int, "edges": [[u,v], ...]} with u < v normalized.
// The loader rejects duplicate edges, self-loops and out-of-range endpoints.
Graph graph_from_json(const std::string& text);
Graph load_graph(const std::string& path);
std::string graph_to_json(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

// Blockade files: {"blocks": [[v, ...], ...]}, validated against the host
// graph's vertex count on load.
Blockade blockade_from_json(const std::string& text, int universe);
Blockade load_blockade(const std::string& path, int universe);
std::string blockade_to_json(const Blockade& b);
void save_blockade(const Blockade& b, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace combgraph

#endif
