#include "lbcut/solver.hpp"

#include <algorithm>
#include <chrono>

#include "lbcut/error.hpp"

namespace lbcut {

SolvePipeline run_pipeline(const Graph& g, const std::vector<Vertex>& terminals, const LengthVector& constraints,
                           int lim, const std::optional<TreeDecomposition>& td, const DpLimits& limits) {
  std::vector<Vertex> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("terminals must be distinct");
  }
  for (Vertex v : sorted) {
    if (!g.contains(v)) throw ArgumentError("terminal " + std::to_string(v) + " is not a vertex");
  }
  if (constraints.support() != sorted) throw ArgumentError("constraints must range over the terminals");

  SolvePipeline p;
  if (td) {
    auto problems = validate_decomposition(g, *td);
    if (!problems.empty()) throw ArgumentError("invalid tree decomposition: " + problems.front().message);
    p.decomposition = inject_terminals(*td, sorted);
  } else {
    p.decomposition = decomposition_for_terminals(g, sorted);
  }
  p.nice = make_nice(p.decomposition, g, sorted);
  p.run = run_dp(g, p.nice, lim, limits);
  p.answer = root_query(p.run.root(p.nice), constraints);
  p.cut = reconstruct_cut(p.nice, p.run, p.answer.root_key);
  if (p.cut.size() != p.answer.size) throw InternalError("witness size differs from the table minimum");
  if (!verify_cut(g, constraints, p.cut)) throw InternalError("witness cut violates the constraints");
  return p;
}

namespace {

SolveResult finish(SolvePipeline&& p, int lim, std::chrono::steady_clock::time_point started) {
  SolveResult r;
  r.size = p.answer.size;
  r.cut = std::move(p.cut);
  r.root_vector = std::move(p.answer.root_key);
  r.stats.nodes = p.run.stats.nodes;
  r.stats.table_entries = p.run.stats.table_entries;
  r.stats.width = p.nice.width();
  r.stats.lim = lim;
  r.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace

SolveResult solve_mlbc(const Graph& g, Vertex s, Vertex t, int L, const std::optional<TreeDecomposition>& td,
                       const DpLimits& limits) {
  const auto started = std::chrono::steady_clock::now();
  const CutInstance inst = CutInstance::two_terminal(g, s, t, L);
  return finish(run_pipeline(g, {s, t}, inst.constraints, inst.limit, td, limits), inst.limit, started);
}

SolveResult solve_mlbmc(const Graph& g, const std::vector<Vertex>& terminals, const LengthVector& constraints,
                        const std::optional<TreeDecomposition>& td, const DpLimits& limits) {
  const auto started = std::chrono::steady_clock::now();
  const auto entries = constraints.entries();
  const int lim = entries.empty() ? 1 : *std::max_element(entries.begin(), entries.end());
  const LengthVector narrowed(constraints.support(), std::vector<Bound>(entries.begin(), entries.end()), lim);
  return finish(run_pipeline(g, terminals, narrowed, lim, td, limits), lim, started);
}

SolveResult solve_instance(const CutInstance& inst, const std::optional<TreeDecomposition>& td,
                           const DpLimits& limits) {
  inst.check();
  return solve_mlbmc(inst.graph, inst.terminals, inst.constraints, td, limits);
}

}  // namespace lbcut
