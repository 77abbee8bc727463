#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "msd/digraph.hpp"

namespace msd {

// Block masks are 64-bit words, one bit per cycle position.
inline constexpr std::size_t kMaxConfigLength = 64;

// Assignment of the q cycle positions to anchored strong components, kept in
// restricted-growth form:
//   0 <= comp[k] < q,  comp[k] != comp[k+1 mod q],  comp[0] == 0,
//   comp[k] <= 1 + max(comp[0..k-1]).
class Config {
 public:
  // Throws Error(invalid_config) if the array breaks an invariant.
  explicit Config(std::vector<int> comp);

  std::size_t length() const noexcept { return comp_.size(); }
  std::span<const int> values() const noexcept { return comp_; }
  int operator[](std::size_t k) const { return comp_[k]; }

  std::size_t block_count() const;
  // Positions of each block, indexed by block id, ascending.
  std::vector<std::vector<std::size_t>> blocks() const;

  friend auto operator<=>(const Config&, const Config&) = default;

 private:
  std::vector<int> comp_;
};

bool satisfies_config_invariants(std::span<const int> comp);

// [0,1,0,...,0,1] for even q, [0,1,0,1,...,0,1,2] for odd q.
Config initial_config(std::size_t q);

// Lexicographic successor among arrays satisfying the invariants, following
// the Next procedure; nullopt after [0,1,...,q-1].
std::optional<Config> next_config(const Config& c);

// In-place Next. Positions below `fixed_prefix` are never changed: returns
// false instead of touching them.
bool advance_config(std::span<int> comp, std::size_t fixed_prefix = 0);

// Overwrites comp[from..q-1] with the smallest admissible suffix.
void fill_minimal_suffix(std::span<int> comp, std::size_t from);

// True iff a and b interleave around a cycle of length q: there are
// u1, u2 in a and v1, v2 in b in circular order u1, v1, u2, v2.
bool is_cut(std::span<const std::size_t> a, std::span<const std::size_t> b, std::size_t q);

// Pairwise rule: some two cut blocks hold cyclically consecutive positions.
bool has_cut_adjacent_blocks(const Config& c);

// Position k whose cycle arc k -> k+1 is transitive once every block is
// strongly connected, or nullopt. Reachability uses the other cycle arcs and
// free movement inside a block.
std::optional<std::size_t> first_transitive_cycle_arc(std::span<const int> comp);

// A configuration is valid when no cycle arc becomes transitive. This
// implies the pairwise cut rule and is exactly the realizability condition.
bool is_valid_config(const Config& c);

// Rotation to origin k followed by first-occurrence renumbering.
Config rotate_config(const Config& c, std::size_t k);

// Lexicographically least renumbered rotation (the Canonical procedure).
Config canonical_config(const Config& c);

enum class EnumerationMode { raw, valid, canonical };
enum class SearchStrategy {
  reference,  // Next + filter + canonicalize
  pruned,     // depth-first, cutting prefixes that already hold a transitive arc
};

struct EnumerationOptions {
  std::size_t jobs = 1;
  SearchStrategy strategy = SearchStrategy::reference;
};

// Raw and valid arrays in Next order, single-threaded.
void for_each_config(std::size_t q, EnumerationMode mode,
                     const std::function<void(std::span<const int>)>& visit);

// Counts are independent of jobs and strategy. The pruned strategy does not
// apply to raw mode and falls back to the reference search there.
std::uint64_t count_configs(std::size_t q, EnumerationMode mode, EnumerationOptions options = {});

std::uint64_t count_canonical_configs(std::size_t q, std::size_t jobs = 1,
                                      SearchStrategy strategy = SearchStrategy::reference);

// Distinct canonical forms in ascending order.
std::vector<Config> canonical_configs(std::size_t q, EnumerationOptions options = {});

struct Realization {
  Digraph digraph;
  Cycle cycle;  // always 0, 1, ..., q-1
};

class RealizationError : public Error {
 public:
  RealizationError(const std::string& what, Digraph digraph)
      : Error(ErrorKind::realization_failed, what), digraph_(std::move(digraph)) {}

  const Digraph& digraph() const noexcept { return digraph_; }

 private:
  Digraph digraph_;
};

// Cycle 0..q-1 plus, for each block with p >= 2 positions v_1 < ... < v_p,
// auxiliary vertices a_1..a_p and arcs v_i -> a_i -> v_{i+1 mod p}.
// The result is checked to be an MSD whose anchored components are exactly
// the blocks; a failed check throws RealizationError.
Realization realize_config(const Config& c);

}  // namespace msd
