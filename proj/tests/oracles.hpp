#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library routines they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "msd/digraph.hpp"

namespace oracle {

using msd::Arc;
using msd::Digraph;
using msd::Vertex;

// Floyd-Warshall style closure on an adjacency matrix.
inline std::vector<std::vector<bool>> closure(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const Arc& a : arcs) r[a.from][a.to] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline bool strong(std::size_t n, const std::vector<Arc>& arcs) {
  const auto r = closure(n, arcs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

inline bool transitive(std::size_t n, const std::vector<Arc>& arcs, Arc arc) {
  std::vector<Arc> rest;
  for (const Arc& a : arcs)
    if (a != arc) rest.push_back(a);
  return closure(n, rest)[arc.from][arc.to];
}

inline bool msd(std::size_t n, const std::vector<Arc>& arcs) {
  if (!strong(n, arcs)) return false;
  for (const Arc& a : arcs)
    if (transitive(n, arcs, a)) return false;
  return true;
}

// Cycles by trying every ordered vertex sequence that starts at its minimum.
inline std::vector<std::vector<Vertex>> all_cycles(std::size_t n, const std::vector<Arc>& arcs) {
  std::set<std::pair<Vertex, Vertex>> has;
  for (const Arc& a : arcs) has.insert({a.from, a.to});
  std::vector<std::vector<Vertex>> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    if (verts.size() < 2) continue;
    std::vector<Vertex> tail(verts.begin() + 1, verts.end());
    do {
      std::vector<Vertex> seq{verts[0]};
      seq.insert(seq.end(), tail.begin(), tail.end());
      bool ok = true;
      for (std::size_t i = 0; i < seq.size() && ok; ++i)
        ok = has.count({seq[i], seq[(i + 1) % seq.size()]}) > 0;
      if (ok) found.push_back(seq);
    } while (std::next_permutation(tail.begin(), tail.end()));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

inline std::vector<Vertex> cut_points(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<Vertex> out;
  for (Vertex removed = 0; removed < n; ++removed) {
    std::vector<Arc> undirected;
    std::map<Vertex, Vertex> id;
    for (Vertex v = 0; v < n; ++v)
      if (v != removed) id[v] = id.size();
    for (const Arc& a : arcs) {
      if (a.from == removed || a.to == removed) continue;
      undirected.push_back({id[a.from], id[a.to]});
      undirected.push_back({id[a.to], id[a.from]});
    }
    if (n - 1 >= 1 && !strong(n - 1, undirected)) out.push_back(removed);
  }
  return out;
}

// Every array of length q over 0..q-1 satisfying the configuration invariants,
// in lexicographic order.
inline std::vector<std::vector<int>> all_config_arrays(int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(q, 0);
  while (true) {
    bool ok = a[0] == 0;
    int mx = 0;
    for (int k = 0; k < q && ok; ++k) {
      if (a[k] == a[(k + 1) % q]) ok = false;
      if (k > 0 && a[k] > mx + 1) ok = false;
      mx = std::max(mx, a[k]);
    }
    if (ok) out.push_back(a);
    int k = q - 1;
    while (k >= 0 && a[k] == q - 1) a[k--] = 0;
    if (k < 0) break;
    ++a[k];
  }
  return out;
}

// Same set as all_config_arrays, generated as restricted growth strings so
// that q = 9, 10 stay cheap.
inline std::vector<std::vector<int>> restricted_growth_arrays(int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(q, 0);
  std::function<void(int, int)> grow = [&](int k, int mx) {
    if (k == q) {
      if (a[q - 1] != a[0]) out.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1 && v < q; ++v) {
      if (v == a[k - 1]) continue;
      a[k] = v;
      grow(k + 1, std::max(mx, v));
    }
  };
  if (q >= 2) grow(1, 0);
  return out;
}

inline std::vector<int> renumber(const std::vector<int>& a) {
  std::map<int, int> m;
  std::vector<int> out;
  for (int v : a) {
    if (!m.count(v)) {
      const int next = static_cast<int>(m.size());
      m[v] = next;
    }
    out.push_back(m[v]);
  }
  return out;
}

inline std::vector<int> canonical(const std::vector<int>& a) {
  std::vector<int> best;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<int> r(a.begin() + k, a.end());
    r.insert(r.end(), a.begin(), a.begin() + k);
    r = renumber(r);
    if (best.empty() || r < best) best = r;
  }
  return best;
}

// The gadget digraph of a configuration, built here independently of the
// library, and tested for minimality with the matrix routines above.
inline bool gadget_is_msd(const std::vector<int>& a) {
  const std::size_t q = a.size();
  std::map<int, std::vector<Vertex>> blocks;
  for (std::size_t k = 0; k < q; ++k) blocks[a[k]].push_back(k);
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < q; ++v) arcs.push_back({v, (v + 1) % q});
  std::size_t next = q;
  for (auto& [id, pos] : blocks) {
    if (pos.size() < 2) continue;
    for (std::size_t i = 0; i < pos.size(); ++i, ++next) {
      arcs.push_back({pos[i], next});
      arcs.push_back({next, pos[(i + 1) % pos.size()]});
    }
  }
  return msd(next, arcs);
}

inline Digraph random_strong(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  Digraph d(n);
  for (std::size_t i = 0; i < n; ++i) d.add_arc(perm[i], perm[(i + 1) % n]);
  for (std::size_t t = 0; t < extra; ++t) {
    const Vertex u = rng() % n, v = rng() % n;
    if (u != v && !d.has_arc(u, v)) d.add_arc(u, v);
  }
  return d;
}

}  // namespace oracle
