#include "lbcut/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lbcut/error.hpp"

namespace lbcut {

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  long long n = 0;
  EdgeSet edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream in(line);
    std::string head;
    if (!(in >> head) || head == "c") continue;
    if (head == "p") {
      std::string kind, rest;
      long long m = 0;
      if (have_header || !(in >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0 || (in >> rest)) {
        throw ParseError(line_no, "malformed header, expected 'p tw <n> <m>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "edge before header");
    std::istringstream edge_in(line);
    long long u = 0, v = 0;
    std::string rest;
    if (!(edge_in >> u >> v) || (edge_in >> rest)) throw ParseError(line_no, "malformed edge line");
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(line_no, "endpoint out of range [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(0, "missing header 'p tw <n> <m>'");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ArgumentError("write failed: " + path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + std::string(e.what()));
  }
}

CutInstance parse_instance(std::string_view json_text, const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("instance JSON: ") + e.what());
  }
  try {
    const auto graph_path = base_dir / doc.at("graph_file").get<std::string>();
    Graph g = load_graph(graph_path);
    std::vector<Vertex> terminals = doc.at("terminals").get<std::vector<Vertex>>();
    const int limit = doc.at("limit").get<int>();
    std::vector<Vertex> sorted = terminals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("terminals must be distinct");
    }
    std::vector<Bound> entries(pair_count(sorted.size()), 1);
    LengthVector probe(sorted, entries, std::max(limit, 1));
    if (doc.contains("constraints")) {
      for (const auto& c : doc.at("constraints")) {
        const Vertex u = c.at("u").get<Vertex>();
        const Vertex v = c.at("v").get<Vertex>();
        const int bound = c.at("bound").get<int>();
        auto pu = probe.position(u);
        auto pv = probe.position(v);
        if (!pu || !pv || *pu == *pv) {
          throw ArgumentError("constraint (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not a terminal pair");
        }
        if (bound < 1 || bound > kMaxLimit) throw ArgumentError("constraint bound out of range");
        entries[pair_index(std::min(*pu, *pv), std::max(*pu, *pv), sorted.size())] = static_cast<Bound>(bound);
      }
    }
    CutInstance inst{std::move(g), std::move(terminals), LengthVector(sorted, std::move(entries), limit), limit};
    inst.check();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("instance JSON: ") + e.what());
  }
}

CutInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path), path.parent_path());
}

std::string write_instance(const CutInstance& inst, const std::string& graph_file) {
  nlohmann::ordered_json doc;
  doc["graph_file"] = graph_file;
  doc["terminals"] = inst.terminals;
  auto constraints = nlohmann::ordered_json::array();
  const auto& support = inst.constraints.support();
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const Bound b = inst.constraints.entries()[pair_index(i, j, support.size())];
      if (b > 1) constraints.push_back({{"u", support[i]}, {"v", support[j]}, {"bound", b}});
    }
  }
  doc["constraints"] = constraints;
  doc["limit"] = inst.limit;
  return doc.dump(2) + "\n";
}

}  // namespace lbcut
