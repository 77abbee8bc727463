#include "msd/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "msd/cycle_structure.hpp"
#include "msd/io.hpp"
#include "msd/msd.hpp"
#include "msd/report.hpp"

namespace msd::cli {

namespace {

void emit(const ReportDocument& doc, bool json, std::ostream& out) {
  if (json) {
    out << doc.document().dump(2) << '\n';
  } else {
    out << doc.render_text();
  }
}

int exit_code_for(const ReportDocument& doc) {
  if (!doc.all_passed()) {
    // A conjecture miss alone gets its own code; a failed theorem check wins.
    const nlohmann::json document = doc.document();
    for (const auto& c : document["checks"]) {
      if (c["passed"].get<bool>()) continue;
      bool conjecture_only = true;
      for (const auto& w : c["witnesses"]) conjecture_only &= w["label"] == kConjectureCounterexample;
      if (!conjecture_only) return kCheckFailed;
    }
    return kConjectureCounterexample;
  }
  return kSuccess;
}

void add_msd_verdict(ReportDocument& doc, const Digraph& d) {
  CheckReport verdict("is-msd");
  if (!is_strongly_connected(d)) {
    const auto reach = reachable_from(d, 0);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (!reach[v]) {
        verdict.fail("not-strongly-connected", {0, v}, "vertex " + std::to_string(v) + " unreachable from 0");
        break;
      }
    }
    if (verdict.passed()) verdict.fail("not-strongly-connected", {}, "some vertex cannot reach vertex 0");
  } else if (auto arc = find_transitive_arc(d)) {
    verdict.fail("transitive-arc", {arc->from, arc->to},
                 "arc (" + std::to_string(arc->from) + "," + std::to_string(arc->to) + ") is transitive");
  }
  doc.add_check(verdict);
}

void add_msd_report(ReportDocument& doc, const Digraph& d) {
  const MsdReport report = check_msd_invariants(d);
  doc.result()["summary"] = to_json(report.summary);
  doc.result()["bounds"] = std::to_string(report.summary.lower_bound_l) + " <= " +
                           std::to_string(report.summary.longest_cycle) + " <= " +
                           std::to_string(report.summary.upper_bound_l);
  for (const auto& c : report.checks) doc.add_check(c);
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  DigraphFile file;
  try {
    file = read_digraph_file(opts.input);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const Digraph& d = file.digraph;
  ReportDocument doc("verify", {opts.input.string()});
  if (d.vertex_count() < 2) {
    err << "error: an MSD needs at least two vertices\n";
    return kInputError;
  }
  add_msd_verdict(doc, d);
  doc.result()["msd"] = doc.all_passed();
  if (doc.all_passed()) add_msd_report(doc, d);
  emit(doc, opts.json, out);
  return exit_code_for(doc);
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const DigraphFile file = read_digraph_file(opts.input);
    std::vector<Vertex> cycle_vertices;
    if (opts.cycle) {
      cycle_vertices = parse_index_list(*opts.cycle);
    } else if (file.designated_cycle) {
      cycle_vertices = *file.designated_cycle;
    } else {
      err << "error: no --cycle given and the file designates none\n";
      return kInputError;
    }
    if (file.digraph.vertex_count() < 2 || !is_msd(file.digraph)) {
      err << "error: " << to_string(ErrorKind::not_msd) << ": input is not a minimal strong digraph\n";
      return kInputError;
    }
    const Cycle cycle = make_cycle(file.digraph, cycle_vertices);
    const CycleDecomposition dec = decompose(file.digraph, cycle);

    std::vector<std::string> args{opts.input.string(), "--cycle", format_index_list(cycle.vertices)};
    if (opts.strict_remark3) args.push_back("--strict-remark3");
    ReportDocument doc("analyze", args);
    doc.result() = to_json(dec);
    doc.result()["q"] = cycle.length();
    doc.result()["alpha"] = linear_vertices(file.digraph).size();
    for (const auto& c : check_theorems(dec, opts.strict_remark3)) doc.add_check(c);
    doc.add_check(check_conjecture(dec));
    emit(doc, opts.json, out);
    return exit_code_for(doc);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.q < 2 || opts.q > kMaxConfigLength) {
    err << "error: --q must be in [2, " << kMaxConfigLength << "]\n";
    return kInputError;
  }
  if (opts.q >= kLongRunningLength && !opts.allow_long) {
    err << "error: q >= " << kLongRunningLength << " is long-running; pass --allow-long\n";
    return kInputError;
  }
  const EnumerationOptions eo{opts.jobs, opts.pruned ? SearchStrategy::pruned : SearchStrategy::reference};
  if (opts.count_only) {
    out << count_configs(opts.q, opts.mode, eo) << '\n';
    return kSuccess;
  }
  if (opts.mode == EnumerationMode::canonical) {
    for (const Config& c : canonical_configs(opts.q, eo)) out << format_config(c.values()) << '\n';
  } else {
    for_each_config(opts.q, opts.mode, [&](std::span<const int> c) { out << format_config(c) << '\n'; });
  }
  return kSuccess;
}

int cmd_table1(const Table1Options& opts, std::ostream& out, std::ostream& err) {
  if (opts.max_q < 2 || opts.max_q >= kPublishedCounts.size()) {
    err << "error: --q must be in [2, " << kPublishedCounts.size() - 1 << "]\n";
    return kInputError;
  }
  if (opts.max_q >= kLongRunningLength && !opts.allow_long) {
    err << "error: q >= " << kLongRunningLength << " is long-running; pass --allow-long\n";
    return kInputError;
  }
  ReportDocument doc("table1", {"--q", std::to_string(opts.max_q), "--jobs", std::to_string(opts.jobs)});
  auto rows = nlohmann::json::array();
  bool all_match = true;
  for (std::size_t q = 2; q <= opts.max_q; ++q) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = count_canonical_configs(
        q, opts.jobs, opts.pruned ? SearchStrategy::pruned : SearchStrategy::reference);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool match = count == kPublishedCounts[q];
    all_match &= match;
    rows.push_back({{"q", q}, {"count", count}, {"published", kPublishedCounts[q]},
                    {"status", match ? "MATCH" : "MISMATCH"}, {"seconds", seconds}});
  }
  doc.result()["rows"] = rows;
  CheckReport check("published-counts");
  for (const auto& r : rows) {
    if (r["status"] == "MISMATCH") {
      check.fail("count-mismatch", {r["q"].get<std::size_t>(), r["count"].get<std::size_t>(),
                                    r["published"].get<std::size_t>()});
    }
  }
  doc.add_check(check);

  if (opts.json) {
    out << doc.document().dump(2) << '\n';
  } else {
    out << std::setw(4) << "q" << std::setw(12) << "count" << std::setw(12) << "published"
        << "  status\n";
    for (const auto& r : rows) {
      out << std::setw(4) << r["q"].get<std::size_t>() << std::setw(12) << r["count"].get<std::uint64_t>()
          << std::setw(12) << r["published"].get<std::uint64_t>() << "  " << r["status"].get<std::string>()
          << '\n';
    }
  }
  return all_match ? kSuccess : kCheckFailed;
}

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n < 2) {
    err << "error: --n must be at least 2\n";
    return kInputError;
  }
  const Digraph d = random_msd(opts.n, opts.extra_arcs, opts.seed);
  const std::vector<std::string> comments{"random MSD n=" + std::to_string(opts.n) + " extra-arcs=" +
                                          std::to_string(opts.extra_arcs) + " seed=" + std::to_string(opts.seed)};
  const std::string text = format_digraph(d, {}, comments);
  if (opts.output) {
    std::ofstream file(*opts.output);
    if (!file) {
      err << "error: cannot write " << opts.output->string() << '\n';
      return kInputError;
    }
    file << text;
  } else {
    out << text;
  }
  if (!opts.check) return kSuccess;

  ReportDocument doc("random", {"--n", std::to_string(opts.n), "--extra-arcs", std::to_string(opts.extra_arcs),
                                "--seed", std::to_string(opts.seed), "--check"});
  add_msd_verdict(doc, d);
  if (doc.all_passed()) add_msd_report(doc, d);
  if (opts.n <= 12) {
    const auto cycles = enumerate_cycles(d);
    doc.result()["cycles_checked"] = cycles.cycles.size();
    for (const Cycle& c : cycles.cycles) {
      const auto dec = decompose(d, c);
      const std::string scope = "cycle " + format_index_list(c.vertices);
      for (const auto& r : check_theorems(dec)) doc.add_check(r, scope);
      doc.add_check(check_conjecture(dec), scope);
    }
  } else {
    doc.result()["cycles_checked"] = 0;
  }
  emit(doc, opts.json, out);
  return exit_code_for(doc);
}

int cmd_realize(const RealizeOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<Config> config;
  try {
    auto values = parse_config_text(opts.config);
    if (values.size() != opts.q) {
      throw Error(ErrorKind::invalid_config, "configuration has " + std::to_string(values.size()) +
                                                 " entries, expected q = " + std::to_string(opts.q));
    }
    config.emplace(std::move(values));
    if (!is_valid_config(*config)) {
      throw Error(ErrorKind::invalid_config,
                  "configuration " + opts.config + " makes a cycle arc transitive");
    }
  } catch (const Error& e) {
    err << "error: " << to_string(ErrorKind::invalid_config) << ": " << e.what() << '\n';
    return kInputError;
  }

  try {
    const Realization r = realize_config(*config);
    const std::vector<std::string> comments{"realization of configuration " + format_config(config->values())};
    const std::string text = format_digraph(r.digraph, r.cycle.vertices, comments);
    if (opts.output) {
      std::ofstream file(*opts.output);
      if (!file) {
        err << "error: cannot write " << opts.output->string() << '\n';
        return kInputError;
      }
      file << text;
    } else {
      out << text;
    }
    return kSuccess;
  } catch (const RealizationError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n' << format_digraph(e.digraph());
    return kCheckFailed;
  }
}

}  // namespace msd::cli
