#include "msd/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace msd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_digraph: return "invalid-digraph";
    case ErrorKind::arc_not_present: return "arc-not-present";
    case ErrorKind::not_strongly_connected: return "not-strongly-connected";
    case ErrorKind::not_msd: return "not-an-msd";
    case ErrorKind::invalid_cycle: return "invalid-cycle";
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::realization_failed: return "realization-verification-failed";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::precondition: return "precondition-violation";
    case ErrorKind::parse: return "parse-error";
  }
  return "unknown";
}

Digraph::Digraph(std::size_t vertex_count)
    : out_(vertex_count), in_(vertex_count) {}

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs)
    : Digraph(vertex_count) {
  for (const Arc& a : arcs) add_arc(a.from, a.to);
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  return arc_set_.contains(key(from, to));
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

void Digraph::add_arc(Vertex from, Vertex to) {
  const std::size_t n = vertex_count();
  if (from >= n || to >= n) {
    throw Error(ErrorKind::invalid_digraph,
                "arc (" + std::to_string(from) + "," + std::to_string(to) +
                    ") out of range for " + std::to_string(n) + " vertices");
  }
  if (from == to) {
    throw Error(ErrorKind::invalid_digraph,
                "self-loop at vertex " + std::to_string(from));
  }
  if (!arc_set_.insert(key(from, to)).second) {
    throw Error(ErrorKind::invalid_digraph,
                "duplicate arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  auto& out = out_[from];
  out.insert(std::lower_bound(out.begin(), out.end(), to), to);
  auto& in = in_[to];
  in.insert(std::lower_bound(in.begin(), in.end(), from), from);
  ++arc_count_;
}

void Digraph::remove_arc(Vertex from, Vertex to) {
  if (from >= vertex_count() || to >= vertex_count() || !arc_set_.erase(key(from, to))) {
    throw Error(ErrorKind::arc_not_present,
                "arc (" + std::to_string(from) + "," + std::to_string(to) + ") not present");
  }
  auto& out = out_[from];
  out.erase(std::lower_bound(out.begin(), out.end(), to));
  auto& in = in_[to];
  in.erase(std::lower_bound(in.begin(), in.end(), from));
  --arc_count_;
}

bool is_cycle_of(const Digraph& d, std::span<const Vertex> vertices) {
  const std::size_t q = vertices.size();
  if (q < 2) return false;
  std::vector<bool> seen(d.vertex_count(), false);
  for (Vertex v : vertices) {
    if (v >= d.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < q; ++i) {
    if (!d.has_arc(vertices[i], vertices[(i + 1) % q])) return false;
  }
  return true;
}

Cycle make_cycle(const Digraph& d, std::vector<Vertex> vertices) {
  if (!is_cycle_of(d, vertices)) {
    std::string text;
    for (Vertex v : vertices) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorKind::invalid_cycle, "(" + text + ") is not a directed cycle of the digraph");
  }
  return Cycle{std::move(vertices)};
}

std::vector<bool> reachable_from(const Digraph& d, Vertex source, std::optional<Arc> skip) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<Vertex> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : d.out_neighbors(u)) {
      if (seen[v] || (skip && skip->from == u && skip->to == v)) continue;
      seen[v] = true;
      stack.push_back(v);
    }
  }
  return seen;
}

namespace {

std::vector<bool> reaching(const Digraph& d, Vertex target) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<Vertex> stack{target};
  seen[target] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : d.in_neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.vertex_count() == 0) return true;
  return all_true(reachable_from(d, 0)) && all_true(reaching(d, 0));
}

SccPartition scc_partition(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next neighbor slot
  std::size_t next_index = 0;
  std::size_t raw_count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, slot] = call.back();
      const auto out = d.out_neighbors(u);
      if (slot < out.size()) {
        const Vertex v = out[slot++];
        if (index[v] == unvisited) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const Vertex done = u;
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_component[w] = raw_count;
        } while (w != done);
        ++raw_count;
      }
    }
  }

  std::vector<std::vector<Vertex>> members(raw_count);
  for (Vertex v = 0; v < n; ++v) members[raw_component[v]].push_back(v);

  // Kahn's algorithm on the condensation, smallest member vertex first.
  std::vector<std::vector<std::size_t>> succ(raw_count);
  std::vector<std::size_t> indegree(raw_count, 0);
  for (const Arc& a : d.arcs()) {
    const std::size_t cu = raw_component[a.from], cv = raw_component[a.to];
    if (cu != cv) succ[cu].push_back(cv);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t c : s) ++indegree[c];
  }
  using Entry = std::pair<Vertex, std::size_t>;  // (smallest member, raw id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < raw_count; ++c) {
    if (indegree[c] == 0) ready.push({members[c].front(), c});
  }

  SccPartition result;
  result.component_of.assign(n, 0);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    const std::size_t id = result.components.size();
    for (Vertex v : members[c]) result.component_of[v] = id;
    result.components.push_back(std::move(members[c]));
    for (std::size_t s : succ[c]) {
      if (--indegree[s] == 0) ready.push({members[s].front(), s});
    }
  }
  return result;
}

bool is_transitive_arc(const Digraph& d, Vertex u, Vertex v) {
  if (u >= d.vertex_count() || v >= d.vertex_count() || !d.has_arc(u, v)) {
    throw Error(ErrorKind::arc_not_present,
                "arc (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  }
  return reachable_from(d, u, Arc{u, v})[v];
}

std::vector<Vertex> linear_vertices(const Digraph& d) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.in_degree(v) == 1 && d.out_degree(v) == 1) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> cut_points(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Arc& a : d.arcs()) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Hopcroft-Tarjan articulation points, iterative.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, unvisited), low(n, 0), parent(n, unvisited);
  std::vector<bool> is_cut(n, false);
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != unvisited) continue;
    std::size_t root_children = 0;
    depth[root] = low[root] = counter++;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [u, slot] = call.back();
      if (slot < adj[u].size()) {
        const Vertex v = adj[u][slot++];
        if (depth[v] == unvisited) {
          parent[v] = u;
          depth[v] = low[v] = counter++;
          if (u == root) ++root_children;
          call.push_back({v, 0});
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], depth[v]);
        }
        continue;
      }
      const Vertex done = u;
      call.pop_back();
      if (!call.empty()) {
        const Vertex p = call.back().first;
        low[p] = std::min(low[p], low[done]);
        if (p != root && low[done] >= depth[p]) is_cut[p] = true;
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }

  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) result.push_back(v);
  }
  return result;
}

namespace {

// Cycles of exactly `length` whose smallest vertex is `start`.
void cycles_of_length(const Digraph& d, Vertex start, std::size_t length,
                      std::vector<Vertex>& path, std::vector<bool>& on_path,
                      std::vector<Cycle>& out) {
  const Vertex u = path.back();
  for (Vertex v : d.out_neighbors(u)) {
    if (v == start) {
      if (path.size() == length) out.push_back(Cycle{path});
      continue;
    }
    if (v < start || on_path[v] || path.size() >= length) continue;
    path.push_back(v);
    on_path[v] = true;
    cycles_of_length(d, start, length, path, on_path, out);
    on_path[v] = false;
    path.pop_back();
  }
}

}  // namespace

CycleEnumeration enumerate_cycles(const Digraph& d, std::optional<std::size_t> max_count) {
  CycleEnumeration result;
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  for (std::size_t length = 2; length <= n; ++length) {
    std::vector<Cycle> found;
    for (Vertex start = 0; start < n; ++start) {
      path.assign(1, start);
      on_path[start] = true;
      cycles_of_length(d, start, length, path, on_path, found);
      on_path[start] = false;
    }
    std::sort(found.begin(), found.end());
    for (auto& c : found) {
      if (max_count && result.cycles.size() >= *max_count) {
        result.truncated = true;
        return result;
      }
      result.cycles.push_back(std::move(c));
    }
  }
  return result;
}

std::size_t longest_cycle_length(const Digraph& d) {
  const auto all = enumerate_cycles(d);
  return all.cycles.empty() ? 0 : all.cycles.back().length();
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<std::size_t> local(d.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = i;
  Digraph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : d.out_neighbors(vertices[i])) {
      if (local[w] != static_cast<std::size_t>(-1)) sub.add_arc(i, local[w]);
    }
  }
  return sub;
}

Contraction contract(const Digraph& d, std::span<const Vertex> vertices) {
  const std::size_t n = d.vertex_count();
  if (vertices.empty()) {
    throw Error(ErrorKind::precondition, "cannot contract an empty vertex set");
  }
  std::vector<bool> in_set(n, false);
  for (Vertex v : vertices) {
    if (v >= n || in_set[v]) {
      throw Error(ErrorKind::precondition, "contraction set has an invalid or repeated vertex");
    }
    in_set[v] = true;
  }
  if (!is_strongly_connected(induced_subdigraph(d, vertices))) {
    throw Error(ErrorKind::not_strongly_connected,
                "contracted vertex set does not induce a strong subdigraph");
  }

  Contraction result;
  result.vertex_map.assign(n, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_set[v]) result.vertex_map[v] = next++;
  }
  result.merged = next;
  for (Vertex v : vertices) result.vertex_map[v] = result.merged;

  result.digraph = Digraph(next + 1);
  for (const Arc& a : d.arcs()) {
    const Vertex u = result.vertex_map[a.from], v = result.vertex_map[a.to];
    if (u != v && !result.digraph.has_arc(u, v)) result.digraph.add_arc(u, v);
  }
  return result;
}

Digraph directed_cycle(std::size_t n) {
  Digraph d(n);
  for (Vertex v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

}  // namespace msd
