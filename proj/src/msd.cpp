#include "msd/msd.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "msd/random.hpp"

namespace msd {

namespace {

void require_order_two(const Digraph& d) {
  if (d.vertex_count() < 2) {
    throw Error(ErrorKind::precondition, "MSD recognition needs at least two vertices");
  }
}

}  // namespace

std::optional<Arc> find_transitive_arc(const Digraph& d) {
  for (const Arc& a : d.arcs()) {
    if (is_transitive_arc(d, a.from, a.to)) return a;
  }
  return std::nullopt;
}

bool is_msd(const Digraph& d) {
  require_order_two(d);
  return is_strongly_connected(d) && !find_transitive_arc(d);
}

bool is_msd_by_arc_deletion(const Digraph& d) {
  require_order_two(d);
  if (!is_strongly_connected(d)) return false;
  for (const Arc& a : d.arcs()) {
    Digraph without = d;
    without.remove_arc(a.from, a.to);
    if (is_strongly_connected(without)) return false;
  }
  return true;
}

Digraph make_minimal(const Digraph& d, std::uint64_t seed) {
  if (!is_strongly_connected(d)) {
    throw Error(ErrorKind::not_strongly_connected, "make_minimal needs a strong digraph");
  }
  std::mt19937_64 rng(seed);
  auto order = d.arcs();
  shuffle(order, rng);

  Digraph result = d;
  for (const Arc& a : order) {
    if (is_transitive_arc(result, a.from, a.to)) result.remove_arc(a.from, a.to);
  }
  return result;
}

Digraph random_msd(std::size_t n, std::size_t extra_arcs, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::precondition, "random_msd needs n >= 2");
  std::mt19937_64 rng(seed);

  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  shuffle(perm, rng);

  Digraph d(n);
  for (std::size_t i = 0; i < n; ++i) d.add_arc(perm[i], perm[(i + 1) % n]);

  const std::size_t capacity = n * (n - 1) - d.arc_count();
  const std::size_t wanted = std::min(extra_arcs, capacity);
  while (d.arc_count() < n + wanted) {
    const Vertex u = uniform_below(rng, n);
    const Vertex v = uniform_below(rng, n);
    if (u != v && !d.has_arc(u, v)) d.add_arc(u, v);
  }
  return make_minimal(d, rng());
}

MsdReport check_msd_invariants(const Digraph& d) {
  if (d.vertex_count() < 2 || !is_msd(d)) {
    throw Error(ErrorKind::not_msd, "check_msd_invariants needs a minimal strong digraph");
  }
  MsdReport report;
  MsdSummary& s = report.summary;
  s.n = d.vertex_count();
  s.m = d.arc_count();
  s.linear = linear_vertices(d);

  const auto cycles = enumerate_cycles(d);
  s.longest_cycle = cycles.cycles.back().length();
  s.lower_bound_l = (s.m + (s.m - s.n + 1) - 1) / (s.m - s.n + 1);
  s.upper_bound_l = 2 * s.n >= s.m ? 2 * s.n - s.m : 0;

  CheckReport arcs("arc-count-bounds");
  if (s.m < s.n || s.m > 2 * (s.n - 1)) {
    arcs.fail("arc-count", {s.n, s.m}, "expected n <= m <= 2(n-1)");
  }
  report.checks.push_back(std::move(arcs));

  CheckReport linear("two-linear-vertices");
  if (s.linear.size() < 2) {
    linear.fail("linear-count", s.linear, "fewer than two linear vertices");
  }
  report.checks.push_back(std::move(linear));

  CheckReport bounds("longest-cycle-bounds");
  if (s.longest_cycle < s.lower_bound_l || s.longest_cycle > s.upper_bound_l ||
      2 * s.n < s.m) {
    bounds.fail("longest-cycle", {s.lower_bound_l, s.longest_cycle, s.upper_bound_l},
                "expected ceil(m/(m-n+1)) <= l <= 2n-m");
  }
  report.checks.push_back(std::move(bounds));

  CheckReport two_cycles("two-cycle-endpoints");
  const auto cuts = cut_points(d);
  for (const Cycle& c : cycles.cycles) {
    if (c.length() != 2) break;
    for (Vertex v : c.vertices) {
      const bool linear_v = d.in_degree(v) == 1 && d.out_degree(v) == 1;
      const bool cut_v = std::binary_search(cuts.begin(), cuts.end(), v);
      if (!linear_v && !cut_v) {
        two_cycles.fail("neither-linear-nor-cut", {c.vertices[0], c.vertices[1], v},
                        "2-cycle endpoint " + std::to_string(v) + " is neither linear nor a cut point");
      }
    }
  }
  report.checks.push_back(std::move(two_cycles));
  return report;
}

}  // namespace msd
