#include "combgraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "combgraph/errors.hpp"
#include "json.hpp"

namespace combgraph {

namespace {
using nlohmann::json;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("graph json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error("graph json: expected object with \"n\" and \"edges\"");
  }
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("graph json: edge must be a pair");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u == v) throw Error("graph json: self-loop rejected");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw Error("graph json: endpoint out of range");
    if (!seen.insert({u, v}).second) throw Error("graph json: duplicate edge rejected");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.size();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

void save_graph(const Graph& g, const std::string& path) {
  write_file(path, graph_to_json(g) + "\n");
}

Blockade blockade_from_json(const std::string& text, int universe) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("blockade json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("blocks")) {
    throw Error("blockade json: expected object with \"blocks\"");
  }
  std::vector<Bits> blocks;
  for (const auto& blk : j.at("blocks")) {
    Bits b(universe);
    for (const auto& v : blk) {
      int x = v.get<int>();
      if (x < 0 || x >= universe) throw Error("blockade json: vertex out of range");
      if (b.test(x)) throw Error("blockade json: duplicate vertex in block");
      b.set(x);
    }
    blocks.push_back(std::move(b));
  }
  return Blockade(universe, std::move(blocks));
}

Blockade load_blockade(const std::string& path, int universe) {
  return blockade_from_json(read_file(path), universe);
}

std::string blockade_to_json(const Blockade& b) {
  json j;
  j["blocks"] = json::array();
  for (int i = 0; i < b.length(); ++i) j["blocks"].push_back(b.block(i).to_vector());
  return j.dump();
}

void save_blockade(const Blockade& b, const std::string& path) {
  write_file(path, blockade_to_json(b) + "\n");
}

}  // namespace combgraph
