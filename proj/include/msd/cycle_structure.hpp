#pragma once

#include <cstddef>
#include <vector>

#include "msd/check_report.hpp"
#include "msd/digraph.hpp"

namespace msd {

// One vertex of the Hasse diagram, i.e. one strong component of the digraph
// left after deleting the cycle arcs.
struct HasseNode {
  std::vector<Vertex> members;                // vertices of the component
  std::vector<std::size_t> cycle_positions;   // positions on the cycle, ascending
  bool anchored = false;
  bool trivial = false;
  bool minimal = false;        // indegree 0 in H
  bool maximal = false;        // outdegree 0 in H
  bool pseudominimal = false;  // anchored with outdegree > 0
  bool pseudomaximal = false;  // anchored with indegree > 0
  bool linear = false;         // indegree = outdegree = 1 in H

  std::size_t lambda() const noexcept { return cycle_positions.size(); }
};

struct HasseDiagram {
  Digraph graph;  // vertex i is component i
  std::vector<HasseNode> nodes;
};

struct CycleDecomposition {
  Digraph digraph;
  Cycle cycle;
  Digraph associated;  // digraph minus the cycle arcs
  SccPartition components;
  HasseDiagram hasse;
};

// Throws not_msd / invalid_cycle on bad input and internal_inconsistency if
// the Hasse diagram comes out with a transitive arc.
CycleDecomposition decompose(const Digraph& d, const Cycle& cycle);

// Anchored components avoid consecutive cycle vertices, cut pairs are never
// adjacent on the cycle, no H arc joins two anchored components, and every
// lambda is at most floor(q/2).
CheckReport check_cycle_structure(const CycleDecomposition& dec);

// Linear-vertex lower bounds: cycle components carry a linear vertex, non
// trivial components with lambda <= 1 carry one, components with lambda > 1
// carry lambda of them, and the whole digraph has floor((q+1)/2).
CheckReport check_linear_vertex_bounds(const CycleDecomposition& dec);

// Every minimal-to-maximal path of H has an interior H-linear vertex, and H
// has at least as many linear vertices as pseudominimal (and pseudomaximal)
// ones. With `pseudo_endpoints` the path clause is also checked on paths
// from pseudominimal to pseudomaximal vertices.
CheckReport check_hasse_properties(const CycleDecomposition& dec, bool pseudo_endpoints = false);

inline constexpr const char* kConjectureCounterexample = "CONJECTURE-COUNTEREXAMPLE";

// Open lower bound floor((q+3)/2) on the number of anchored components.
// A failure carries the full instance in `notes`.
CheckReport check_conjecture(const CycleDecomposition& dec);

std::vector<CheckReport> check_theorems(const CycleDecomposition& dec, bool pseudo_endpoints = false);

}  // namespace msd
