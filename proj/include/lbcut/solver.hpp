#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbcut/decomposition.hpp"
#include "lbcut/dp.hpp"
#include "lbcut/graph.hpp"
#include "lbcut/instance.hpp"
#include "lbcut/length_vector.hpp"

namespace lbcut {

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t table_entries = 0;
  double elapsed_ms = 0;
  int width = 0;
  int lim = 0;
};

struct SolveResult {
  std::uint32_t size = 0;
  EdgeSet cut;
  LengthVector root_vector;
  SolveStats stats;
};

/// Intermediate products of one solve, kept for inspection.
struct SolvePipeline {
  TreeDecomposition decomposition;
  NiceDecomposition nice;
  DpRun run;
  RootAnswer answer;
  EdgeSet cut;
};

/// Decomposition → terminal injection → nice form → tables → root query →
/// witness. Without `td`, decomposes g with the terminals made adjacent.
/// The cut is re-checked with verify_cut (InternalError on failure).
SolvePipeline run_pipeline(const Graph& g, const std::vector<Vertex>& terminals,
                           const LengthVector& constraints, int lim,
                           const std::optional<TreeDecomposition>& td, const DpLimits& limits);

/// Minimum L-cut between s and t (distance at least L + 1 afterwards).
SolveResult solve_mlbc(const Graph& g, Vertex s, Vertex t, int L,
                       const std::optional<TreeDecomposition>& td = std::nullopt,
                       const DpLimits& limits = {});

/// Minimum a-bounded multi-cut over terminals S. Lim is the largest entry.
SolveResult solve_mlbmc(const Graph& g, const std::vector<Vertex>& terminals,
                        const LengthVector& constraints,
                        const std::optional<TreeDecomposition>& td = std::nullopt,
                        const DpLimits& limits = {});

SolveResult solve_instance(const CutInstance& inst,
                           const std::optional<TreeDecomposition>& td = std::nullopt,
                           const DpLimits& limits = {});

}  // namespace lbcut
