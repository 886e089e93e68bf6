// lbcut: length-bounded cut solver, oracle, generators and checks.
//
// Exit codes: 0 success, 1 input or validation failure, 2 resource refusal.

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lbcut/decomposition.hpp"
#include "lbcut/error.hpp"
#include "lbcut/gadgets.hpp"
#include "lbcut/io.hpp"
#include "lbcut/oracle.hpp"
#include "lbcut/solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace lbcut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

EdgeSet edges_from_json(const json& arr) {
  EdgeSet out;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError(0, "cut entries must be [u, v] pairs");
    out.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return normalize(out);
}

json vector_json(const LengthVector& a) {
  return json{{"support", a.support()}, {"entries", std::vector<int>(a.entries().begin(), a.entries().end())}};
}

json result_json(const SolveResult& r) {
  return json{{"size", r.size},
              {"cut", edges_json(r.cut)},
              {"root_vector", vector_json(r.root_vector)},
              {"stats",
               {{"nodes", r.stats.nodes},
                {"table_entries", r.stats.table_entries},
                {"elapsed_ms", r.stats.elapsed_ms},
                {"width", r.stats.width},
                {"lim", r.stats.lim}}}};
}

json oracle_json(const OracleResult& r) { return json{{"size", r.size}, {"cut", edges_json(r.cut)}}; }

std::string edge_list_text(const EdgeSet& edges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i].u << '-' << edges[i].v;
  return out.str();
}

void emit(const json& doc, bool as_json, const std::string& text, const std::string& out_path) {
  if (!out_path.empty()) write_text_file(out_path, doc.dump(2) + "\n");
  if (as_json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string violations_text(const std::vector<Violation>& problems) {
  std::ostringstream out;
  for (const auto& v : problems) out << "violation: " << v.message << '\n';
  return out.str();
}

std::optional<TreeDecomposition> load_td(const std::string& path, const Graph& g) {
  if (path.empty()) return std::nullopt;
  TreeDecomposition td = parse_td(read_text_file(path));
  const auto problems = validate_decomposition(g, td);
  if (!problems.empty()) {
    std::cerr << violations_text(problems);
    throw ArgumentError(path + " is not a tree decomposition of the graph");
  }
  return td;
}

// -- multicolour instance files ------------------------------------------------

json multicolor_json(const MulticolorInstance& inst) {
  json pairs = json::array();
  for (int i = 1; i <= inst.k; ++i) {
    for (int j = i + 1; j <= inst.k; ++j) {
      pairs.push_back({{"i", i}, {"j", j}, {"edges", edges_json(EdgeSet(inst.pair_edges(i, j)))}});
    }
  }
  return json{{"k", inst.k}, {"n", inst.n}, {"pairs", pairs}};
}

MulticolorInstance multicolor_from_json(const json& doc) {
  MulticolorInstance inst = make_multicolor(doc.at("k").get<int>(), doc.at("n").get<int>());
  for (const auto& p : doc.at("pairs")) {
    std::vector<Edge> list;
    for (const auto& e : p.at("edges")) list.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    inst.edges.at(inst.pair_slot(p.at("i").get<int>(), p.at("j").get<int>())) = std::move(list);
  }
  inst.check();
  return inst;
}

/// Writes `<prefix>.gr`, `<prefix>.json` and optionally `<prefix>.td`.
void write_artifacts(const fs::path& prefix, const CutInstance& inst, const TreeDecomposition* td) {
  if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
  const std::string stem = prefix.filename().string();
  write_text_file(prefix.string() + ".gr", write_graph(inst.graph));
  write_text_file(prefix.string() + ".json", write_instance(inst, stem + ".gr"));
  if (td) write_text_file(prefix.string() + ".td", write_td(*td));
}

// -- options shared by solver commands -----------------------------------------

struct SolveOptions {
  std::string td_path;
  double cap = 1e7;
  std::size_t leaf_cap = 20;
  unsigned threads = 1;
  bool check = false;
  bool as_json = false;
  std::string out;

  DpLimits limits() const { return {cap, leaf_cap, threads}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--td", td_path, "Tree decomposition (.td) to use after validation");
    cmd->add_option("--cap", cap, "Refuse when a node table would exceed this many keys")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--leaf-cap", leaf_cap, "Largest leaf edge set to exhaust")->check(CLI::Range(0, 63));
    cmd->add_option("--threads", threads, "Worker threads for independent subtrees")->check(CLI::Range(1, 256));
    cmd->add_flag("--check", check, "Re-verify the cut before printing");
    cmd->add_flag("--json", as_json, "Print JSON");
    cmd->add_option("--out", out, "Also write the JSON result to this file");
  }
};

std::string solve_text(const SolveResult& r) {
  std::ostringstream out;
  out << "size " << r.size << '\n'
      << "cut " << edge_list_text(r.cut) << '\n'
      << "root_vector " << r.root_vector.to_string() << '\n'
      << "nodes " << r.stats.nodes << " table_entries " << r.stats.table_entries << " width " << r.stats.width
      << " lim " << r.stats.lim << " elapsed_ms " << std::fixed << std::setprecision(3) << r.stats.elapsed_ms
      << '\n';
  return out.str();
}

int finish_solve(const SolveResult& r, const CutInstance& inst, const SolveOptions& opt) {
  if (opt.check && !verify_cut(inst, r.cut)) {
    std::cerr << "error: returned cut fails verification\n";
    return kExitInput;
  }
  emit(result_json(r), opt.as_json, solve_text(r), opt.out);
  return kExitOk;
}

// -- bench ---------------------------------------------------------------------

json bench_row(const fs::path& file, const DpLimits& limits, std::size_t oracle_cap, bool timing) {
  json row{{"instance", file.filename().string()}};
  try {
    const CutInstance inst = load_instance(file);
    row["n"] = inst.graph.vertex_count();
    row["m"] = inst.graph.edge_count();
    const SolveResult r = solve_instance(inst, std::nullopt, limits);
    row["width"] = r.stats.width;
    row["lim"] = r.stats.lim;
    row["table_entries"] = r.stats.table_entries;
    if (timing) row["ms"] = r.stats.elapsed_ms;
    row["size"] = r.size;
    if (inst.graph.edge_count() <= oracle_cap) {
      const auto o = brute_force_mlbmc(inst.graph, inst.constraints, oracle_cap);
      row["oracle"] = o.size;
      row["agree"] = o.size == r.size;
    } else {
      row["oracle"] = nullptr;
      row["agree"] = nullptr;
    }
  } catch (const std::exception& e) {
    row["error"] = e.what();
  }
  return row;
}

std::string cell(const json& row, const char* key) {
  if (!row.contains(key) || row[key].is_null()) return "-";
  if (row[key].is_boolean()) return row[key].get<bool>() ? "yes" : "NO";
  if (row[key].is_number_float()) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << row[key].get<double>();
    return out.str();
  }
  if (row[key].is_string()) return row[key].get<std::string>();
  return row[key].dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum length-bounded cuts on graphs of small tree-width"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lbcut 0.1.0");

  // solve
  std::string graph_path;
  Vertex s = 0, t = 0;
  int L = 0;
  SolveOptions sopt;
  auto* solve = app.add_subcommand("solve", "Minimum L-cut between two terminals");
  solve->add_option("--graph", graph_path, "Graph (.gr)")->required()->check(CLI::ExistingFile);
  solve->add_option("-s", s, "Source vertex")->required();
  solve->add_option("-t", t, "Sink vertex")->required();
  solve->add_option("-L", L, "Paths of length at most L must be cut")->required()->check(CLI::PositiveNumber);
  sopt.attach(solve);

  // multicut
  std::string instance_path;
  auto* multicut = app.add_subcommand("multicut", "Minimum multi-cut for an instance JSON");
  multicut->add_option("--instance", instance_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  sopt.attach(multicut);

  // oracle
  std::size_t edge_cap = 20;
  bool oracle_json_flag = false;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solver");
  auto* o_graph = oracle->add_option("--graph", graph_path, "Graph (.gr)")->check(CLI::ExistingFile);
  auto* o_inst = oracle->add_option("--instance", instance_path, "Instance JSON")->check(CLI::ExistingFile);
  o_graph->excludes(o_inst);
  oracle->add_option("-s", s, "Source vertex")->needs(o_graph);
  oracle->add_option("-t", t, "Sink vertex")->needs(o_graph);
  oracle->add_option("-L", L, "Length bound")->needs(o_graph);
  oracle->add_option("--edge-cap", edge_cap, "Refuse graphs with more edges")->check(CLI::Range(0, 63));
  oracle->add_flag("--json", oracle_json_flag, "Print JSON");
  oracle->add_option("--out", oracle_out, "Also write the JSON result to this file");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate gadget instances");
  gen->require_subcommand(1);
  std::string out_prefix;
  int h = 0, q = 0, x = 0, k = 0, n = 0, m = 0, gen_L = 0;
  std::int64_t K = 0;
  std::vector<int> heights;
  std::uint64_t seed = 1;
  bool plant = false;
  std::string from_path;
  std::vector<std::string> compose_graphs;
  std::vector<Vertex> compose_s, compose_t;

  auto* g_butte = gen->add_subcommand("butte", "Single butte between s = 1 and t = 2");
  g_butte->set_help_flag("--help", "Print this help message and exit");
  g_butte->add_option("--h", h, "Shortcut count")->required()->check(CLI::PositiveNumber);
  g_butte->add_option("--q", q, "Ridgeway count")->required()->check(CLI::PositiveNumber);
  g_butte->add_option("-L", gen_L, "Length bound for the instance (default h + 1)");
  g_butte->add_option("--out", out_prefix, "Output prefix")->required();

  auto* g_high = gen->add_subcommand("highland", "Highland between s = 1 and t = 2");
  g_high->add_option("--x", x, "Low butte count")->required()->check(CLI::PositiveNumber);
  g_high->add_option("--heights", heights, "High butte heights, each in [X^4, X^4 + X - 1]")->required();
  g_high->add_option("-L", gen_L, "Length bound (default 2(X+Y) + X^4 + X^2 + X - 1)");
  g_high->add_option("--out", out_prefix, "Output prefix")->required();

  auto* g_red = gen->add_subcommand("reduction", "Multicolour clique instance reduced to an L-cut instance");
  g_red->add_option("--k", k, "Colours");
  g_red->add_option("--n", n, "Part size N");
  g_red->add_option("--m", m, "Edges per colour pair M");
  g_red->add_option("--seed", seed, "Random seed");
  g_red->add_option("--from", from_path, "Read the multicolour instance from JSON instead")
      ->check(CLI::ExistingFile);
  g_red->add_flag("--plant", plant, "Plant a clique and write its ridge set");
  g_red->add_option("--out", out_prefix, "Output prefix")->required();

  auto* g_mcc = gen->add_subcommand("mcc", "Random multicolour clique instance");
  g_mcc->add_option("--k", k, "Colours")->required();
  g_mcc->add_option("--n", n, "Part size N")->required();
  g_mcc->add_option("--m", m, "Edges per colour pair M")->required();
  g_mcc->add_option("--seed", seed, "Random seed");
  g_mcc->add_flag("--plant", plant, "Plant a clique");
  g_mcc->add_option("--out", out_prefix, "Output prefix")->required();

  auto* g_comp = gen->add_subcommand("compose", "AND-composition of two-terminal instances");
  g_comp->add_option("--graphs", compose_graphs, "Input graphs")->required()->check(CLI::ExistingFile);
  g_comp->add_option("-s", compose_s, "Source of each input")->required();
  g_comp->add_option("-t", compose_t, "Sink of each input")->required();
  g_comp->add_option("-L", gen_L, "Length bound")->required()->check(CLI::PositiveNumber);
  g_comp->add_option("-K", K, "Cut budget carried with the composition")->required();
  g_comp->add_option("--out", out_prefix, "Output prefix")->required();

  // td
  auto* td = app.add_subcommand("td", "Tree decompositions");
  td->require_subcommand(1);
  std::string td_path;
  std::vector<Vertex> terminals;
  auto* td_compute = td->add_subcommand("compute", "Min-degree heuristic decomposition");
  td_compute->add_option("--graph", graph_path, "Graph (.gr)")->required()->check(CLI::ExistingFile);
  td_compute->add_option("--terminals", terminals, "Make these vertices share a bag");
  td_compute->add_option("--out", td_path, "Output .td (default: stdout)");
  auto* td_validate = td->add_subcommand("validate", "Check a decomposition");
  td_validate->add_option("--graph", graph_path, "Graph (.gr)")->required()->check(CLI::ExistingFile);
  td_validate->add_option("--td", td_path, "Decomposition (.td)")->required()->check(CLI::ExistingFile);

  // validate
  std::string cut_path;
  auto* validate = app.add_subcommand("validate", "Check a decomposition or a cut witness");
  auto* v_graph = validate->add_option("--graph", graph_path, "Graph (.gr)")->check(CLI::ExistingFile);
  auto* v_td = validate->add_option("--td", td_path, "Decomposition (.td)")->check(CLI::ExistingFile);
  auto* v_inst = validate->add_option("--instance", instance_path, "Instance JSON")->check(CLI::ExistingFile);
  auto* v_cut = validate->add_option("--cut", cut_path, "Cut JSON with a \"cut\" array")->check(CLI::ExistingFile);
  v_td->needs(v_graph);
  v_cut->needs(v_inst);
  v_graph->excludes(v_inst);

  // bench
  std::string corpus;
  std::string bench_out;
  bool timing = false;
  unsigned bench_threads = 1;
  auto* bench = app.add_subcommand("bench", "Solve every instance JSON in a directory");
  bench->add_option("--corpus", corpus, "Directory of instance JSON files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--out", bench_out, "Write the rows as JSON");
  bench->add_option("--oracle-cap", edge_cap, "Compare with the oracle up to this many edges")
      ->check(CLI::Range(0, 63));
  bench->add_option("--threads", bench_threads, "Worker threads")->check(CLI::Range(1, 256));
  bench->add_flag("--timing", timing, "Include wall-clock milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) {
      const Graph g = load_graph(graph_path);
      const CutInstance inst = CutInstance::two_terminal(g, s, t, L);
      const auto given = load_td(sopt.td_path, g);
      return finish_solve(solve_mlbc(g, s, t, L, given, sopt.limits()), inst, sopt);
    }

    if (*multicut) {
      const CutInstance inst = load_instance(instance_path);
      const auto given = load_td(sopt.td_path, inst.graph);
      return finish_solve(solve_instance(inst, given, sopt.limits()), inst, sopt);
    }

    if (*oracle) {
      OracleResult r;
      if (!instance_path.empty()) {
        const CutInstance inst = load_instance(instance_path);
        r = brute_force_mlbmc(inst.graph, inst.constraints, edge_cap);
      } else {
        if (graph_path.empty() || L < 1) throw ArgumentError("oracle needs --instance or --graph with -s -t -L");
        r = brute_force_mlbc(load_graph(graph_path), s, t, L, edge_cap);
      }
      emit(oracle_json(r), oracle_json_flag, "size " + std::to_string(r.size) + "\ncut " + edge_list_text(r.cut) + "\n",
           oracle_out);
      return kExitOk;
    }

    if (*g_butte) {
      const ButteGraph bg = make_butte(h, q);
      const int bound = gen_L > 0 ? gen_L : h + 1;
      const auto inst = CutInstance::two_terminal(bg.graph, bg.butte.s, bg.butte.t, bound);
      const auto path = butte_path_decomposition(bg);
      write_artifacts(out_prefix, inst, &path);
      std::cout << "vertices " << bg.graph.vertex_count() << " edges " << bg.graph.edge_count() << " L " << bound
                << " width " << path.width() << '\n';
      return kExitOk;
    }

    if (*g_high) {
      const HighlandGraph hg = make_highland(x, heights);
      const long long X = x, Y = static_cast<long long>(heights.size());
      const long long fallback = 2 * (X + Y) + X * X * X * X + X * X + X - 1;
      const int bound = gen_L > 0 ? gen_L : static_cast<int>(fallback);
      const auto inst = CutInstance::two_terminal(hg.graph, hg.highland.s, hg.highland.t, bound);
      const auto path = highland_path_decomposition(hg);
      write_artifacts(out_prefix, inst, &path);
      std::cout << "vertices " << hg.graph.vertex_count() << " edges " << hg.graph.edge_count() << " L " << bound
                << " width " << path.width() << '\n';
      return kExitOk;
    }

    if (*g_mcc) {
      const auto inst = random_multicolor_instance(k, n, m, plant, seed);
      const auto clique = find_multicolor_clique(inst);
      json doc = multicolor_json(inst);
      doc["seed"] = seed;
      doc["planted"] = plant;
      doc["clique"] = clique ? json(*clique) : json(nullptr);
      const fs::path prefix(out_prefix);
      if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
      write_text_file(out_prefix + ".mcc.json", doc.dump(2) + "\n");
      std::cout << "seed " << seed << "\nclique " << (clique ? "found" : "none") << '\n';
      return kExitOk;
    }

    if (*g_red) {
      MulticolorInstance mc;
      if (!from_path.empty()) {
        mc = multicolor_from_json(json::parse(read_text_file(from_path)));
      } else {
        if (k < 2 || n < 1 || m < 1) throw ArgumentError("reduction needs --k >= 2, --n >= 1, --m >= 1 or --from");
        mc = random_multicolor_instance(k, n, m, plant, seed);
      }
      const ReductionOutput out = reduce_clique_to_mlbc(mc);
      if (out.L + 1 > kMaxLimit) throw ArgumentError("L + 1 exceeds the supported bound limit");
      const auto inst = CutInstance::two_terminal(out.graph, out.s, out.t, static_cast<int>(out.L));
      const auto path = reduction_path_decomposition(out);
      write_artifacts(out_prefix, inst, &path);
      json mdoc = multicolor_json(mc);
      mdoc["seed"] = seed;
      mdoc["planted"] = plant;
      write_text_file(out_prefix + ".mcc.json", mdoc.dump(2) + "\n");
      std::cout << "seed " << seed << "\nvertices " << out.graph.vertex_count() << " edges "
                << out.graph.edge_count() << " L " << out.L << " budget " << out.budget << " width "
                << path.width() << '\n';
      if (plant) {
        const auto clique = find_multicolor_clique(mc);
        if (!clique) throw InternalError("planted instance has no clique");
        const auto sel = clique_selection(mc, *clique);
        const EdgeSet cut = ridge_set_for_clique(out, mc, sel);
        json witness{{"clique", *clique}, {"size", cut.size()}, {"budget", out.budget}, {"cut", edges_json(cut)}};
        write_text_file(out_prefix + ".cut.json", witness.dump(2) + "\n");
        std::cout << "witness " << cut.size() << " edges\n";
      }
      return kExitOk;
    }

    if (*g_comp) {
      if (compose_s.size() != compose_graphs.size() || compose_t.size() != compose_graphs.size()) {
        throw ArgumentError("give one -s and one -t per graph");
      }
      std::vector<CompositionInput> parts;
      for (std::size_t i = 0; i < compose_graphs.size(); ++i) {
        parts.push_back({load_graph(compose_graphs[i]), compose_s[i], compose_t[i]});
      }
      const CompositionOutput out = and_compose(parts, gen_L, K);
      const auto inst = CutInstance::two_terminal(out.graph, out.s, out.t, out.L);
      write_artifacts(out_prefix, inst, &out.path);
      std::cout << "vertices " << out.graph.vertex_count() << " edges " << out.graph.edge_count() << " width "
                << out.path.width() << '\n';
      return kExitOk;
    }

    if (*td_compute) {
      const Graph g = load_graph(graph_path);
      const TreeDecomposition dec =
          terminals.empty() ? heuristic_decomposition(g) : decomposition_for_terminals(g, terminals);
      if (td_path.empty()) {
        std::cout << write_td(dec);
      } else {
        write_text_file(td_path, write_td(dec));
        std::cout << "width " << dec.width() << " bags " << dec.bags.size() << '\n';
      }
      return kExitOk;
    }

    if (*td_validate || (*validate && !td_path.empty())) {
      const Graph g = load_graph(graph_path);
      const auto problems = validate_decomposition(g, parse_td(read_text_file(td_path)));
      if (!problems.empty()) {
        std::cout << violations_text(problems);
        return kExitInput;
      }
      std::cout << "valid\n";
      return kExitOk;
    }

    if (*validate) {
      if (instance_path.empty() || cut_path.empty()) {
        throw ArgumentError("validate needs --graph with --td, or --instance with --cut");
      }
      const CutInstance inst = load_instance(instance_path);
      const json doc = json::parse(read_text_file(cut_path));
      const EdgeSet cut = edges_from_json(doc.at("cut"));
      for (const Edge& e : cut) {
        if (!inst.graph.has_edge(e.u, e.v)) {
          throw ArgumentError("cut pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
        }
      }
      const bool ok = verify_cut(inst, cut);
      std::cout << (ok ? "valid" : "invalid") << " cut of size " << cut.size() << '\n';
      return ok ? kExitOk : kExitInput;
    }

    if (*bench) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            name.find(".mcc.") == std::string::npos && name.find(".cut.") == std::string::npos) {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      const DpLimits limits{sopt.cap, sopt.leaf_cap, bench_threads};
      json rows = json::array();
      for (const auto& f : files) rows.push_back(bench_row(f, limits, edge_cap, timing));
      std::cout << "instance n m width lim entries" << (timing ? " ms" : "") << " size oracle agree\n";
      std::size_t agree = 0, compared = 0;
      for (const auto& row : rows) {
        std::cout << cell(row, "instance") << ' ' << cell(row, "n") << ' ' << cell(row, "m") << ' '
                  << cell(row, "width") << ' ' << cell(row, "lim") << ' ' << cell(row, "table_entries") << ' ';
        if (timing) std::cout << cell(row, "ms") << ' ';
        std::cout << cell(row, "size") << ' ' << cell(row, "oracle") << ' ' << cell(row, "agree");
        if (row.contains("error")) std::cout << " error: " << row["error"].get<std::string>();
        std::cout << '\n';
        if (row.contains("agree") && row["agree"].is_boolean()) {
          ++compared;
          agree += row["agree"].get<bool>() ? 1 : 0;
        }
      }
      std::cout << "oracle agreement " << agree << "/" << compared << '\n';
      if (!bench_out.empty()) write_text_file(bench_out, json{{"rows", rows}}.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "refused: " << e.what() << " (projected " << std::setprecision(12) << e.projected() << ", cap "
              << e.cap() << ")\n";
    return kExitResource;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
