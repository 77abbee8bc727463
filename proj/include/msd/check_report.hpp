#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace msd {

// One counterexample record: which clause failed and the ids involved
// (vertices, components or cycle positions depending on the label).
struct Witness {
  std::string label;
  std::vector<std::size_t> items;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// A check passes exactly when it has collected no witnesses.
struct CheckReport {
  std::string name;
  std::vector<Witness> witnesses;
  std::string notes;

  explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

  bool passed() const noexcept { return witnesses.empty(); }

  void fail(std::string label, std::vector<std::size_t> items, std::string detail = {}) {
    witnesses.push_back({std::move(label), std::move(items), std::move(detail)});
  }
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace msd
