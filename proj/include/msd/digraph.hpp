#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "msd/error.hpp"

namespace msd {

using Vertex = std::size_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple digraph on vertices 0..n-1: no self-loops, no parallel arcs.
// Neighbor lists are kept sorted so every traversal is deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex from, Vertex to) const;
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

  // All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  void add_arc(Vertex from, Vertex to);
  void remove_arc(Vertex from, Vertex to);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  static std::uint64_t key(Vertex from, Vertex to) {
    return (static_cast<std::uint64_t>(from) << 32) | static_cast<std::uint64_t>(to);
  }

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::unordered_set<std::uint64_t> arc_set_;
  std::size_t arc_count_ = 0;
};

// Directed cycle given as its vertex sequence; the closing arc runs from the
// last vertex back to the first.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  Arc arc(std::size_t i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

bool is_cycle_of(const Digraph& d, std::span<const Vertex> vertices);

// Validates and returns the cycle; throws Error(invalid_cycle) otherwise.
Cycle make_cycle(const Digraph& d, std::vector<Vertex> vertices);

// Strong components with ids in topological order of the condensation.
// Ties between components that are simultaneously available are broken by
// the smallest vertex each one contains.
struct SccPartition {
  std::vector<std::size_t> component_of;
  std::vector<std::vector<Vertex>> components;  // each sorted ascending

  std::size_t count() const noexcept { return components.size(); }
};

// Vertices reachable from `source`; `skip` removes one arc from consideration.
std::vector<bool> reachable_from(const Digraph& d, Vertex source,
                                 std::optional<Arc> skip = std::nullopt);

bool is_strongly_connected(const Digraph& d);
SccPartition scc_partition(const Digraph& d);

// True iff some u->v path avoids the arc (u,v). Throws arc_not_present.
bool is_transitive_arc(const Digraph& d, Vertex u, Vertex v);

std::vector<Vertex> linear_vertices(const Digraph& d);

// Articulation points of the underlying undirected graph.
std::vector<Vertex> cut_points(const Digraph& d);

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

// Every directed cycle once, smallest vertex first, ordered by length and then
// lexicographically. Stops after `max_count` cycles and sets `truncated`.
CycleEnumeration enumerate_cycles(const Digraph& d,
                                  std::optional<std::size_t> max_count = std::nullopt);

std::size_t longest_cycle_length(const Digraph& d);

struct Contraction {
  Digraph digraph;
  std::vector<Vertex> vertex_map;  // old id -> new id
  Vertex merged = 0;               // id of the vertex replacing the set
};

// Replaces a strongly connected vertex set by one vertex. Surviving vertices
// keep their relative order; the merged vertex takes the last id.
Contraction contract(const Digraph& d, std::span<const Vertex> vertices);

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

Digraph directed_cycle(std::size_t n);

}  // namespace msd
