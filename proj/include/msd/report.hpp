#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "msd/check_report.hpp"
#include "msd/cycle_structure.hpp"
#include "msd/msd.hpp"

namespace msd {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const MsdSummary& s);
nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const CycleDecomposition& dec);

// The single machine-readable document a command produces. The text
// rendering is generated from the JSON, never the other way round.
class ReportDocument {
 public:
  ReportDocument(std::string command, std::vector<std::string> args);

  // Command-specific payload.
  nlohmann::json& result() { return doc_["result"]; }

  void add_check(const CheckReport& report, const std::string& scope = {});

  bool all_passed() const;
  bool has_conjecture_counterexample() const;

  nlohmann::json document() const;
  std::string render_text() const;

 private:
  nlohmann::json doc_;
};

}  // namespace msd
