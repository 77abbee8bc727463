#include "msd/report.hpp"

#include <sstream>

#include "msd/io.hpp"

namespace msd {

using nlohmann::json;

json to_json(const Witness& w) {
  json j{{"label", w.label}, {"items", w.items}};
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

json to_json(const CheckReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json j{{"name", r.name}, {"passed", r.passed()}, {"witnesses", witnesses}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json to_json(const MsdSummary& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"linear_vertices", s.linear},
          {"longest_cycle", s.longest_cycle},
          {"lower_bound_l", s.lower_bound_l},
          {"upper_bound_l", s.upper_bound_l}};
}

json to_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
  return {{"n", d.vertex_count()}, {"arcs", arcs}};
}

json to_json(const CycleDecomposition& dec) {
  json nodes = json::array();
  for (std::size_t c = 0; c < dec.hasse.nodes.size(); ++c) {
    const HasseNode& n = dec.hasse.nodes[c];
    nodes.push_back({{"id", c},
                     {"members", n.members},
                     {"cycle_positions", n.cycle_positions},
                     {"lambda", n.lambda()},
                     {"anchored", n.anchored},
                     {"trivial", n.trivial},
                     {"minimal", n.minimal},
                     {"maximal", n.maximal},
                     {"pseudominimal", n.pseudominimal},
                     {"pseudomaximal", n.pseudomaximal},
                     {"linear", n.linear}});
  }
  json hasse_arcs = json::array();
  for (const Arc& a : dec.hasse.graph.arcs()) hasse_arcs.push_back({a.from, a.to});
  return {{"cycle", dec.cycle.vertices},
          {"associated_arcs", to_json(dec.associated)["arcs"]},
          {"components", dec.components.components},
          {"hasse", {{"arcs", hasse_arcs}, {"nodes", nodes}}}};
}

ReportDocument::ReportDocument(std::string command, std::vector<std::string> args) {
  doc_["tool_version"] = kToolVersion;
  doc_["command"] = {{"name", std::move(command)}, {"args", std::move(args)}};
  doc_["result"] = json::object();
  doc_["checks"] = json::array();
}

void ReportDocument::add_check(const CheckReport& report, const std::string& scope) {
  json j = to_json(report);
  if (!scope.empty()) j["scope"] = scope;
  doc_["checks"].push_back(std::move(j));
}

bool ReportDocument::all_passed() const {
  for (const auto& c : doc_["checks"]) {
    if (!c["passed"].get<bool>()) return false;
  }
  return true;
}

bool ReportDocument::has_conjecture_counterexample() const {
  for (const auto& c : doc_["checks"]) {
    for (const auto& w : c["witnesses"]) {
      if (w["label"] == kConjectureCounterexample) return true;
    }
  }
  return false;
}

json ReportDocument::document() const {
  nlohmann::json out = doc_;
  std::size_t passed = 0, failed = 0;
  for (const auto& c : doc_["checks"]) (c["passed"].get<bool>() ? passed : failed)++;
  out["summary"] = {{"checks", passed + failed}, {"passed", passed}, {"failed", failed}};
  return out;
}

namespace {

bool is_scalar_list(const nlohmann::json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured() && !is_scalar_list(e)) return false;
  }
  return true;
}

void render(std::ostream& out, const nlohmann::json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_list(value)) {
        out << pad << key << ":\n";
        render(out, value, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        render(out, e, indent + 1);
      } else {
        out << pad << "- " << e.dump() << '\n';
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

}  // namespace

std::string ReportDocument::render_text() const {
  const nlohmann::json doc = document();
  std::ostringstream out;
  out << "msdtool " << doc["tool_version"].get<std::string>() << " " << doc["command"]["name"].get<std::string>();
  for (const auto& a : doc["command"]["args"]) out << ' ' << a.get<std::string>();
  out << '\n';
  if (!doc["result"].empty()) render(out, doc["result"], 0);
  for (const auto& c : doc["checks"]) {
    out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("scope")) out << " [" << c["scope"].get<std::string>() << "]";
    out << '\n';
    for (const auto& w : c["witnesses"]) {
      out << "  witness " << w["label"].get<std::string>() << ' ' << w["items"].dump();
      if (w.contains("detail")) out << " (" << w["detail"].get<std::string>() << ")";
      out << '\n';
    }
    if (!c["passed"].get<bool>() && c.contains("notes")) {
      std::istringstream notes(c["notes"].get<std::string>());
      for (std::string line; std::getline(notes, line);) out << "  | " << line << '\n';
    }
  }
  const auto& s = doc["summary"];
  out << "checks: " << s["checks"] << " passed: " << s["passed"] << " failed: " << s["failed"] << '\n';
  return out.str();
}

}  // namespace msd
