#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "msd/check_report.hpp"
#include "msd/digraph.hpp"

namespace msd {

// Minimal strong digraph test: strong and free of transitive arcs.
// Requires at least two vertices (Error::precondition otherwise).
bool is_msd(const Digraph& d);

// Same predicate by the other definition: deleting any single arc must
// destroy strong connectivity.
bool is_msd_by_arc_deletion(const Digraph& d);

std::optional<Arc> find_transitive_arc(const Digraph& d);

// Deletes transitive arcs in a seed-shuffled order until none remain.
// A single pass suffices: deleting an arc never makes another arc transitive.
Digraph make_minimal(const Digraph& d, std::uint64_t seed);

// Random Hamiltonian cycle plus `extra_arcs` random arcs, then minimized.
Digraph random_msd(std::size_t n, std::size_t extra_arcs, std::uint64_t seed);

struct MsdSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Vertex> linear;
  std::size_t longest_cycle = 0;
  std::size_t lower_bound_l = 0;  // ceil(m / (m - n + 1))
  std::size_t upper_bound_l = 0;  // 2n - m
};

struct MsdReport {
  MsdSummary summary;
  std::vector<CheckReport> checks;

  bool passed() const { return all_passed(checks); }
};

// Arc-count bounds, at least two linear vertices, longest-cycle bounds and
// the linear-or-cut-point property of every 2-cycle.
MsdReport check_msd_invariants(const Digraph& d);

}  // namespace msd
