#include "msd/cycle_structure.hpp"

#include <algorithm>
#include <string>

#include "msd/config.hpp"
#include "msd/io.hpp"
#include "msd/msd.hpp"

namespace msd {

CycleDecomposition decompose(const Digraph& d, const Cycle& cycle) {
  if (d.vertex_count() < 2 || !is_msd(d)) {
    throw Error(ErrorKind::not_msd, "decompose needs a minimal strong digraph");
  }
  if (!is_cycle_of(d, cycle.vertices)) {
    throw Error(ErrorKind::invalid_cycle, "decompose: the given vertex list is not a cycle of the digraph");
  }

  CycleDecomposition dec{d, cycle, d, {}, {}};
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    const Arc a = cycle.arc(i);
    dec.associated.remove_arc(a.from, a.to);
  }
  dec.components = scc_partition(dec.associated);

  const std::size_t k = dec.components.count();
  HasseDiagram& h = dec.hasse;
  h.graph = Digraph(k);
  for (const Arc& a : dec.associated.arcs()) {
    const std::size_t s = dec.components.component_of[a.from];
    const std::size_t t = dec.components.component_of[a.to];
    if (s == t || h.graph.has_arc(s, t)) continue;
    if (s > t) {
      throw Error(ErrorKind::internal_inconsistency, "component ids are not topologically ordered");
    }
    h.graph.add_arc(s, t);
  }

  h.nodes.resize(k);
  for (std::size_t c = 0; c < k; ++c) h.nodes[c].members = dec.components.components[c];
  for (std::size_t p = 0; p < cycle.length(); ++p) {
    h.nodes[dec.components.component_of[cycle.vertices[p]]].cycle_positions.push_back(p);
  }
  for (std::size_t c = 0; c < k; ++c) {
    HasseNode& node = h.nodes[c];
    const std::size_t in = h.graph.in_degree(c), out = h.graph.out_degree(c);
    node.anchored = !node.cycle_positions.empty();
    node.trivial = node.members.size() == 1;
    node.minimal = in == 0;
    node.maximal = out == 0;
    node.pseudominimal = node.anchored && out > 0;
    node.pseudomaximal = node.anchored && in > 0;
    node.linear = in == 1 && out == 1;
  }

  if (auto bad = find_transitive_arc(h.graph)) {
    throw Error(ErrorKind::internal_inconsistency,
                "Hasse diagram has transitive arc (" + std::to_string(bad->from) + "," +
                    std::to_string(bad->to) + ")");
  }
  return dec;
}

namespace {

std::vector<std::size_t> component_at_positions(const CycleDecomposition& dec) {
  std::vector<std::size_t> result(dec.cycle.length());
  for (std::size_t p = 0; p < result.size(); ++p) {
    result[p] = dec.components.component_of[dec.cycle.vertices[p]];
  }
  return result;
}

std::vector<bool> linear_flags(const Digraph& d) {
  std::vector<bool> flags(d.vertex_count(), false);
  for (Vertex v : linear_vertices(d)) flags[v] = true;
  return flags;
}

}  // namespace

CheckReport check_cycle_structure(const CycleDecomposition& dec) {
  CheckReport report("cycle-structure");
  const std::size_t q = dec.cycle.length();
  const auto& nodes = dec.hasse.nodes;
  const auto at = component_at_positions(dec);

  for (std::size_t p = 0; p < q; ++p) {
    if (at[p] == at[(p + 1) % q]) {
      report.fail("consecutive-cycle-vertices-in-component", {at[p], p, (p + 1) % q});
    }
  }

  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (nodes[a].lambda() < 2) continue;
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[b].lambda() < 2 ||
          !is_cut(nodes[a].cycle_positions, nodes[b].cycle_positions, q)) {
        continue;
      }
      for (std::size_t p = 0; p < q; ++p) {
        const std::size_t x = at[p], y = at[(p + 1) % q];
        if ((x == a && y == b) || (x == b && y == a)) {
          report.fail("cut-components-adjacent", {a, b, p}, "cut components meet at cycle position " + std::to_string(p));
        }
      }
    }
  }

  for (const Arc& arc : dec.hasse.graph.arcs()) {
    if (nodes[arc.from].anchored && nodes[arc.to].anchored) {
      report.fail("hasse-arc-between-anchored", {arc.from, arc.to});
    }
  }

  for (std::size_t c = 0; c < nodes.size(); ++c) {
    if (nodes[c].anchored && nodes[c].lambda() > q / 2) {
      report.fail("lambda-bound", {c, nodes[c].lambda(), q / 2}, "lambda exceeds floor(q/2)");
    }
  }
  return report;
}

CheckReport check_linear_vertex_bounds(const CycleDecomposition& dec) {
  CheckReport report("linear-vertex-bounds");
  const auto linear = linear_flags(dec.digraph);
  const auto& parts = dec.components;

  for (std::size_t c = 0; c < parts.count(); ++c) {
    const auto& members = parts.components[c];
    const HasseNode& node = dec.hasse.nodes[c];
    std::size_t internal_arcs = 0;
    std::vector<std::size_t> linear_members;
    for (Vertex v : members) {
      if (linear[v]) linear_members.push_back(v);
      for (Vertex w : dec.associated.out_neighbors(v)) {
        if (parts.component_of[w] == c) ++internal_arcs;
      }
    }
    const bool is_cycle = members.size() >= 2 && internal_arcs == members.size();

    if (is_cycle && linear_members.empty()) {
      report.fail("cycle-component-without-linear-vertex", {c}, "component is a cycle with no vertex linear in D");
    }
    if (!node.trivial && node.lambda() <= 1 && linear_members.empty()) {
      report.fail("nontrivial-component-without-linear-vertex", {c});
    }
    if (node.lambda() > 1 && linear_members.size() < node.lambda()) {
      report.fail("fewer-linear-vertices-than-lambda", {c, linear_members.size(), node.lambda()});
    }
  }

  const std::size_t alpha = std::count(linear.begin(), linear.end(), true);
  const std::size_t q = dec.cycle.length();
  if (alpha < (q + 1) / 2) {
    report.fail("total-linear-vertices", {alpha, (q + 1) / 2}, "alpha below floor((q+1)/2)");
  }
  return report;
}

namespace {

// Searches for a path from `start` to any vertex accepted by `is_end`, of
// length >= 1, whose interior avoids H-linear vertices. Returns the path or
// an empty vector.
template <class EndPredicate>
std::vector<std::size_t> path_without_linear_interior(const HasseDiagram& h, std::size_t start,
                                                      EndPredicate is_end) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t k = h.nodes.size();
  std::vector<std::size_t> parent(k, none);
  std::vector<bool> visited(k, false);
  std::vector<std::size_t> frontier{start};
  visited[start] = true;
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    for (Vertex y : h.graph.out_neighbors(x)) {
      if (is_end(y)) {
        std::vector<std::size_t> path{y, x};
        for (std::size_t p = parent[x]; p != none; p = parent[p]) path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!visited[y] && !h.nodes[y].linear) {
        visited[y] = true;
        parent[y] = x;
        frontier.push_back(y);
      }
    }
  }
  return {};
}

}  // namespace

CheckReport check_hasse_properties(const CycleDecomposition& dec, bool pseudo_endpoints) {
  CheckReport report("hasse-properties");
  const HasseDiagram& h = dec.hasse;
  const auto& nodes = h.nodes;

  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (!nodes[s].minimal) continue;
    auto path = path_without_linear_interior(h, s, [&](std::size_t t) { return nodes[t].maximal; });
    if (!path.empty()) {
      report.fail("min-max-path-without-linear-vertex", std::move(path));
    }
  }
  if (pseudo_endpoints) {
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      if (!nodes[s].pseudominimal) continue;
      auto path = path_without_linear_interior(h, s, [&](std::size_t t) { return nodes[t].pseudomaximal; });
      if (!path.empty()) {
        report.fail("pseudo-path-without-linear-vertex", std::move(path));
      }
    }
  }

  std::size_t linear = 0, pseudomin = 0, pseudomax = 0;
  for (const auto& node : nodes) {
    linear += node.linear;
    pseudomin += node.pseudominimal;
    pseudomax += node.pseudomaximal;
  }
  if (linear < pseudomin) {
    report.fail("linear-below-pseudominimal", {linear, pseudomin});
  }
  if (linear < pseudomax) {
    report.fail("linear-below-pseudomaximal", {linear, pseudomax});
  }
  report.notes = "H-linear=" + std::to_string(linear) + " pseudominimal=" + std::to_string(pseudomin) +
                 " pseudomaximal=" + std::to_string(pseudomax);
  return report;
}

CheckReport check_conjecture(const CycleDecomposition& dec) {
  CheckReport report("anchored-lower-bound-conjecture");
  const std::size_t q = dec.cycle.length();
  const std::size_t anchored = std::count_if(dec.hasse.nodes.begin(), dec.hasse.nodes.end(),
                                             [](const HasseNode& n) { return n.anchored; });
  const std::size_t bound = (q + 3) / 2;
  if (anchored < bound) {
    report.fail(kConjectureCounterexample, {anchored, bound},
                "anchored components below floor((q+3)/2)");
    report.notes = format_digraph(dec.digraph, dec.cycle.vertices);
  }
  return report;
}

std::vector<CheckReport> check_theorems(const CycleDecomposition& dec, bool pseudo_endpoints) {
  return {check_cycle_structure(dec), check_linear_vertex_bounds(dec),
          check_hasse_properties(dec, pseudo_endpoints)};
}

}  // namespace msd
