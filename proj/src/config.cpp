#include "msd/config.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <set>
#include <string>
#include <thread>

#include "msd/cycle_structure.hpp"
#include "msd/msd.hpp"

namespace msd {

namespace {

std::string describe(std::span<const int> comp) {
  std::string text;
  for (int v : comp) text += (text.empty() ? "" : ",") + std::to_string(v);
  return "[" + text + "]";
}

void require_length(std::size_t q) {
  if (q < 2 || q > kMaxConfigLength) {
    throw Error(ErrorKind::invalid_config,
                "cycle length " + std::to_string(q) + " outside [2, " +
                    std::to_string(kMaxConfigLength) + "]");
  }
}

}  // namespace

bool satisfies_config_invariants(std::span<const int> comp) {
  const std::size_t q = comp.size();
  if (q < 2 || q > kMaxConfigLength || comp[0] != 0) return false;
  int max_so_far = 0;
  for (std::size_t k = 0; k < q; ++k) {
    const int v = comp[k];
    if (v < 0 || v >= static_cast<int>(q)) return false;
    if (v == comp[(k + 1) % q]) return false;
    if (k > 0 && v > max_so_far + 1) return false;
    max_so_far = std::max(max_so_far, v);
  }
  return true;
}

Config::Config(std::vector<int> comp) : comp_(std::move(comp)) {
  if (!satisfies_config_invariants(comp_)) {
    throw Error(ErrorKind::invalid_config, describe(comp_) + " is not a configuration array");
  }
}

std::size_t Config::block_count() const {
  return static_cast<std::size_t>(*std::max_element(comp_.begin(), comp_.end())) + 1;
}

std::vector<std::vector<std::size_t>> Config::blocks() const {
  std::vector<std::vector<std::size_t>> result(block_count());
  for (std::size_t k = 0; k < comp_.size(); ++k) result[comp_[k]].push_back(k);
  return result;
}

void fill_minimal_suffix(std::span<int> comp, std::size_t from) {
  const std::size_t q = comp.size();
  for (std::size_t j = std::max<std::size_t>(from, 1); j < q; ++j) {
    if (j != q - 1) {
      comp[j] = comp[j - 1] != 0 ? 0 : 1;
    } else {
      comp[j] = comp[j - 1] == 1 ? 2 : 1;
    }
  }
}

Config initial_config(std::size_t q) {
  require_length(q);
  std::vector<int> comp(q, 0);
  fill_minimal_suffix(comp, 1);
  return Config(std::move(comp));
}

bool advance_config(std::span<int> comp, std::size_t fixed_prefix) {
  const std::size_t q = comp.size();
  if (q < 2) return false;

  // prefix_max[k] = max(comp[0..k-1])
  std::array<int, kMaxConfigLength> prefix_max{};
  prefix_max[1] = comp[0];
  for (std::size_t k = 2; k < q; ++k) prefix_max[k] = std::max(prefix_max[k - 1], comp[k - 1]);

  // (i) rightmost position that can still grow
  std::size_t k = q - 1;
  while (k > 0 && comp[k] > prefix_max[k]) --k;
  // (ii)
  if (k == 0 || k < fixed_prefix) return false;
  // (iii)
  comp[k] = comp[k - 1] != comp[k] + 1 ? comp[k] + 1 : comp[k] + 2;
  // (iv)
  fill_minimal_suffix(comp, k + 1);
  return true;
}

std::optional<Config> next_config(const Config& c) {
  std::vector<int> comp(c.values().begin(), c.values().end());
  if (!advance_config(comp)) return std::nullopt;
  return Config(std::move(comp));
}

bool is_cut(std::span<const std::size_t> a, std::span<const std::size_t> b, std::size_t q) {
  if (a.size() < 2 || b.size() < 2) return false;
  std::vector<int> label(q, -1);
  for (std::size_t p : a) label.at(p) = 0;
  for (std::size_t p : b) label.at(p) = 1;
  // Interleaving means at least four label runs around the circle.
  std::size_t runs = 0;
  int first = -1, last = -1;
  for (int l : label) {
    if (l < 0) continue;
    if (first < 0) first = l;
    if (l != last) {
      ++runs;
      last = l;
    }
  }
  if (runs > 1 && first == last) --runs;
  return runs >= 4;
}

bool has_cut_adjacent_blocks(const Config& c) {
  const auto blocks = c.blocks();
  const std::size_t q = c.length();
  for (std::size_t k = 0; k < q; ++k) {
    const auto& a = blocks[c[k]];
    const auto& b = blocks[c[(k + 1) % q]];
    if (is_cut(a, b, q)) return true;
  }
  return false;
}

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t p) { return Mask{1} << p; }

// Checks the arcs k -> k+1 for k < len-1 (plus the closing arc when
// `closed`) using only positions 0..len-1. Returns the first transitive one.
std::optional<std::size_t> transitive_arc_in(std::span<const int> comp, std::size_t len, bool closed) {
  const std::size_t q = comp.size();
  std::array<Mask, kMaxConfigLength> block{};
  for (std::size_t p = 0; p < len; ++p) block[comp[p]] |= bit(p);

  const std::size_t arc_count = closed ? q : len - 1;
  for (std::size_t e = 0; e < arc_count; ++e) {
    const std::size_t target = (e + 1) % q;
    Mask seen = block[comp[e]];
    Mask frontier = seen;
    while (frontier != 0 && !(seen & bit(target))) {
      Mask next = 0;
      for (Mask f = frontier & ~bit(e); f != 0; f &= f - 1) {
        const std::size_t x = static_cast<std::size_t>(std::countr_zero(f));
        std::size_t y;
        if (x + 1 < len) {
          y = x + 1;
        } else if (closed) {
          y = 0;
        } else {
          continue;
        }
        next |= block[comp[y]];
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen & bit(target)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> first_transitive_cycle_arc(std::span<const int> comp) {
  if (comp.size() < 2 || comp.size() > kMaxConfigLength) {
    throw Error(ErrorKind::invalid_config, "configuration length out of range");
  }
  return transitive_arc_in(comp, comp.size(), true);
}

bool is_valid_config(const Config& c) {
  return !first_transitive_cycle_arc(c.values());
}

namespace {

void renumber_rotation(std::span<const int> comp, std::size_t origin, std::span<int> out) {
  const std::size_t q = comp.size();
  std::array<int, kMaxConfigLength> relabel;
  relabel.fill(-1);
  int next = 0;
  for (std::size_t j = 0; j < q; ++j) {
    const int v = comp[(origin + j) % q];
    if (relabel[v] < 0) relabel[v] = next++;
    out[j] = relabel[v];
  }
}

void canonicalize(std::span<const int> comp, std::span<int> best) {
  const std::size_t q = comp.size();
  std::array<int, kMaxConfigLength> aux{};
  std::array<bool, kMaxConfigLength> renumbered{};
  std::copy(comp.begin(), comp.end(), best.begin());
  for (std::size_t k = 1; k < q; ++k) {
    for (std::size_t j = 0; j < q; ++j) aux[j] = comp[(k + j) % q];
    std::fill_n(renumbered.begin(), q, false);
    int new_comp = 0;
    for (std::size_t j = 0; j < q; ++j) {
      if (renumbered[j]) continue;
      const int old = aux[j];
      for (std::size_t t = j; t < q; ++t) {
        if (aux[t] == old && !renumbered[t]) {
          aux[t] = new_comp;
          renumbered[t] = true;
        }
      }
      ++new_comp;
    }
    if (std::lexicographical_compare(aux.begin(), aux.begin() + q, best.begin(), best.end())) {
      std::copy_n(aux.begin(), q, best.begin());
    }
  }
}

}  // namespace

Config rotate_config(const Config& c, std::size_t k) {
  std::vector<int> out(c.length());
  renumber_rotation(c.values(), k % c.length(), out);
  return Config(std::move(out));
}

Config canonical_config(const Config& c) {
  std::vector<int> best(c.length());
  canonicalize(c.values(), best);
  return Config(std::move(best));
}

namespace {

using Key = std::string;

Key key_of(std::span<const int> comp) {
  Key k(comp.size(), '\0');
  for (std::size_t i = 0; i < comp.size(); ++i) k[i] = static_cast<char>(comp[i]);
  return k;
}

std::vector<int> values_of(const Key& key) {
  return std::vector<int>(key.begin(), key.end());
}

std::size_t shard_depth(std::size_t q) { return std::min<std::size_t>(q - 1, 8); }

bool prefix_viable(std::span<const int> comp, std::size_t len, SearchStrategy strategy) {
  if (strategy != SearchStrategy::pruned || len < 2) return true;
  return !transitive_arc_in(comp, len, false);
}

// Admissible restricted-growth prefixes of length `depth`, in lexicographic order.
std::vector<std::vector<int>> shard_prefixes(std::size_t q, std::size_t depth, SearchStrategy strategy) {
  std::vector<std::vector<int>> prefixes;
  std::vector<int> comp(q, 0);
  auto rec = [&](auto&& self, std::size_t pos, int max_so_far) -> void {
    if (pos == depth) {
      prefixes.emplace_back(comp.begin(), comp.begin() + depth);
      return;
    }
    for (int v = 0; v <= max_so_far + 1 && v < static_cast<int>(q); ++v) {
      if (v == comp[pos - 1] || (pos == q - 1 && v == 0)) continue;
      comp[pos] = v;
      if (!prefix_viable(comp, pos + 1, strategy)) continue;
      self(self, pos + 1, std::max(max_so_far, v));
    }
  };
  rec(rec, 1, 0);
  return prefixes;
}

struct ShardResult {
  std::uint64_t count = 0;
  std::vector<Key> keys;
};

class ShardWorker {
 public:
  ShardWorker(std::size_t q, EnumerationMode mode, bool collect)
      : q_(q), mode_(mode), collect_(collect), comp_(q, 0), canon_(q, 0) {}

  ShardResult run(const std::vector<int>& prefix, SearchStrategy strategy) {
    result_ = {};
    std::copy(prefix.begin(), prefix.end(), comp_.begin());
    if (strategy == SearchStrategy::pruned && mode_ != EnumerationMode::raw) {
      const int max_so_far = *std::max_element(prefix.begin(), prefix.end());
      descend(prefix.size(), max_so_far);
    } else {
      fill_minimal_suffix(comp_, prefix.size());
      do {
        visit();
      } while (advance_config(comp_, prefix.size()));
    }
    return std::move(result_);
  }

 private:
  void visit() {
    if (mode_ == EnumerationMode::raw) {
      ++result_.count;
      if (collect_) result_.keys.push_back(key_of(comp_));
      return;
    }
    if (transitive_arc_in(comp_, q_, true)) return;
    if (mode_ == EnumerationMode::valid) {
      ++result_.count;
      if (collect_) result_.keys.push_back(key_of(comp_));
      return;
    }
    canonicalize(comp_, canon_);
    result_.keys.push_back(key_of(canon_));
  }

  void descend(std::size_t pos, int max_so_far) {
    if (pos == q_) {
      visit();
      return;
    }
    for (int v = 0; v <= max_so_far + 1 && v < static_cast<int>(q_); ++v) {
      if (v == comp_[pos - 1] || (pos == q_ - 1 && v == 0)) continue;
      comp_[pos] = v;
      if (!prefix_viable(comp_, pos + 1, SearchStrategy::pruned)) continue;
      descend(pos + 1, std::max(max_so_far, v));
    }
  }

  std::size_t q_;
  EnumerationMode mode_;
  bool collect_;
  std::vector<int> comp_;
  std::vector<int> canon_;
  ShardResult result_;
};

// Runs every shard, results stored by shard index so merging is independent
// of scheduling.
std::vector<ShardResult> run_shards(std::size_t q, EnumerationMode mode, EnumerationOptions options,
                                    bool collect) {
  require_length(q);
  const auto prefixes = shard_prefixes(q, shard_depth(q), options.strategy);
  std::vector<ShardResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    ShardWorker worker(q, mode, collect);
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      results[i] = worker.run(prefixes[i], options.strategy);
      if (mode == EnumerationMode::canonical) {
        auto& keys = results[i].keys;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(prefixes.size(), 1));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(work);
  }
  return results;
}

std::set<Key> merge_canonical(std::vector<ShardResult>& results) {
  std::set<Key> all;
  for (auto& r : results) {
    all.insert(std::make_move_iterator(r.keys.begin()), std::make_move_iterator(r.keys.end()));
  }
  return all;
}

}  // namespace

void for_each_config(std::size_t q, EnumerationMode mode,
                     const std::function<void(std::span<const int>)>& visit) {
  require_length(q);
  if (mode == EnumerationMode::canonical) {
    for (const Config& c : canonical_configs(q)) visit(c.values());
    return;
  }
  std::vector<int> comp(q, 0);
  fill_minimal_suffix(comp, 1);
  do {
    if (mode == EnumerationMode::raw || !transitive_arc_in(comp, q, true)) visit(comp);
  } while (advance_config(comp));
}

std::uint64_t count_configs(std::size_t q, EnumerationMode mode, EnumerationOptions options) {
  auto results = run_shards(q, mode, options, false);
  if (mode == EnumerationMode::canonical) return merge_canonical(results).size();
  std::uint64_t total = 0;
  for (const auto& r : results) total += r.count;
  return total;
}

std::uint64_t count_canonical_configs(std::size_t q, std::size_t jobs, SearchStrategy strategy) {
  return count_configs(q, EnumerationMode::canonical, {jobs, strategy});
}

std::vector<Config> canonical_configs(std::size_t q, EnumerationOptions options) {
  auto results = run_shards(q, EnumerationMode::canonical, options, true);
  std::vector<Config> out;
  for (const Key& k : merge_canonical(results)) out.emplace_back(values_of(k));
  return out;
}

Realization realize_config(const Config& c) {
  if (auto arc = first_transitive_cycle_arc(c.values())) {
    throw Error(ErrorKind::invalid_config,
                describe(c.values()) + " makes cycle arc " + std::to_string(*arc) + " transitive");
  }
  const std::size_t q = c.length();
  const auto blocks = c.blocks();

  std::size_t n = q;
  for (const auto& b : blocks) {
    if (b.size() >= 2) n += b.size();
  }
  Realization r{Digraph(n), {}};
  for (Vertex v = 0; v < q; ++v) {
    r.digraph.add_arc(v, (v + 1) % q);
    r.cycle.vertices.push_back(v);
  }
  Vertex aux = q;
  for (const auto& b : blocks) {
    if (b.size() < 2) continue;
    for (std::size_t i = 0; i < b.size(); ++i, ++aux) {
      r.digraph.add_arc(b[i], aux);
      r.digraph.add_arc(aux, b[(i + 1) % b.size()]);
    }
  }

  if (!is_msd(r.digraph)) {
    throw RealizationError("realization of " + describe(c.values()) + " is not an MSD", r.digraph);
  }
  const CycleDecomposition dec = decompose(r.digraph, r.cycle);
  std::vector<std::vector<std::size_t>> recovered;
  for (const HasseNode& node : dec.hasse.nodes) {
    if (!node.anchored) {
      throw RealizationError("realization of " + describe(c.values()) + " has an unanchored component", r.digraph);
    }
    if (node.lambda() == 1 && !node.trivial) {
      throw RealizationError("realization of " + describe(c.values()) + " has a non-trivial singleton block", r.digraph);
    }
    recovered.push_back(node.cycle_positions);
  }
  auto expected = blocks;
  std::sort(recovered.begin(), recovered.end());
  std::sort(expected.begin(), expected.end());
  if (recovered != expected) {
    throw RealizationError("realization of " + describe(c.values()) + " does not recover its blocks", r.digraph);
  }
  return r;
}

}  // namespace msd
