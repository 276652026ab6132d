// specx: spectral regularity analysis of regular graphs.
//
// Exit codes: 0 success, 1 internal error, 2 usage, 3 parse error,
// 4 precondition failure, 5 numerical failure, 6 I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specx/analysis.hpp"
#include "specx/batch.hpp"
#include "specx/families.hpp"
#include "specx/graph6.hpp"
#include "specx/graph_io.hpp"
#include "specx/report_json.hpp"
#include "specx/report_text.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kPrecondition = 4, kNumerical = 5, kIo = 6 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string g6;
  std::string family;
  std::string input;
  std::string from = "g6";
};

struct Tolerances {
  double cluster = specx::ClusterOptions{}.tolerance;
  double equality = specx::ExcessOptions{}.equality_tolerance;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string first_record(const std::string& text) {
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  throw specx::ParseError("input contains no graph6 record");
}

std::pair<specx::Graph, std::string> load(const Source& src) {
  const int given = !src.g6.empty() + !src.family.empty() + !src.input.empty();
  if (given != 1) throw CLI::ValidationError("exactly one of --g6, --family, --input is required");
  if (!src.family.empty()) return {specx::families::generate(src.family), src.family};
  if (!src.g6.empty()) return {specx::parse_graph6(src.g6), "g6:" + src.g6};
  const std::string text = read_file(src.input);
  if (src.from == "edges") return {specx::parse_edge_list(text), src.input};
  if (src.from == "adjacency") return {specx::parse_adjacency(text), src.input};
  return {specx::parse_graph6(first_record(text)), src.input};
}

specx::AnalysisOptions options_from(const Tolerances& tol) {
  specx::AnalysisOptions opt;
  opt.cluster.tolerance = tol.cluster;
  opt.excess.equality_tolerance = tol.equality;
  return opt;
}

void add_source_flags(CLI::App* cmd, Source& src, bool with_from) {
  cmd->add_option("--g6", src.g6, "graph6 string");
  cmd->add_option("--family", src.family, "generated family, e.g. odd:4, hamming:4,3, cycle:5");
  cmd->add_option("--input", src.input, "file holding the graph ('-' for stdin)");
  if (with_from)
    cmd->add_option("--from", src.from, "input file format")->check(CLI::IsMember({"g6", "edges", "adjacency"}));
}

void add_tolerance_flags(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-cluster", tol.cluster, "relative gap below which eigenvalues are merged")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-equality", tol.equality, "relative tolerance for bound equality (env SPECX_TOL_EQUALITY)")
      ->check(CLI::PositiveNumber);
}

int report_error(int code, const std::string& kind, const std::string& message, bool as_json) {
  if (as_json)
    std::cout << nlohmann::json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2)
              << "\n";
  std::cerr << "specx: " << kind << " error: " << message << "\n";
  return code;
}

std::string batch_text(const std::vector<specx::BatchItem>& items, const specx::BatchSummary& s) {
  std::ostringstream os;
  for (const auto& item : items) {
    os << "line " << item.line << ": ";
    if (!item.report) {
      os << item.error_kind << " error: " << item.error << "\n";
      continue;
    }
    const auto& r = *item.report;
    os << "n=" << r.n << " k=" << r.k << " D=" << r.diameter << " d=" << r.d
       << (r.drg.distance_regular ? " drg" : "") << " equalities=" << r.equalities();
    for (const auto& e : r.excess)
      if (e.status == "equality") os << " [" << e.theorem << " j=" << e.j << "]";
    os << "\n";
  }
  os << "summary: graphs=" << s.graphs << " analyzed=" << s.analyzed << " parse_errors=" << s.parse_errors
     << " precondition_failures=" << s.precondition_failures << " numerical_failures=" << s.numerical_failures
     << " distance_regular=" << s.distance_regular << " equality_verdicts=" << s.equality_verdicts << "\n";
  for (const auto& [key, count] : s.excess_status) os << "  " << key << ": " << count << "\n";
  return os.str();
}

nlohmann::json batch_json(const std::vector<specx::BatchItem>& items, const specx::BatchSummary& s) {
  nlohmann::json out{{"schema_version", specx::kSchemaVersion}, {"items", nlohmann::json::array()}};
  for (const auto& item : items) {
    nlohmann::json j{{"line", item.line}, {"input", item.input}};
    if (item.report)
      j["report"] = *item.report;
    else
      j["error"] = {{"kind", item.error_kind}, {"message", item.error}};
    out["items"].push_back(std::move(j));
  }
  out["summary"] = {{"graphs", s.graphs},
                    {"analyzed", s.analyzed},
                    {"parse_errors", s.parse_errors},
                    {"precondition_failures", s.precondition_failures},
                    {"numerical_failures", s.numerical_failures},
                    {"distance_regular", s.distance_regular},
                    {"equality_verdicts", s.equality_verdicts},
                    {"excess_status", s.excess_status}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of regular graphs: predistance polynomials, spectral excess and "
               "distance-graph bounds, checked against combinatorial oracles."};
  app.require_subcommand(1);

  Tolerances tol;
  if (const char* env = std::getenv("SPECX_TOL_EQUALITY")) {
    try {
      std::size_t used = 0;
      tol.equality = std::stod(env, &used);
      if (used != std::string(env).size() || !(tol.equality > 0)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "specx: usage error: SPECX_TOL_EQUALITY must be a positive number\n";
      return kUsage;
    }
  }

  bool as_json = false;
  Source src;
  std::string output;

  auto* analyze = app.add_subcommand("analyze", "analyse one graph");
  add_source_flags(analyze, src, true);
  add_tolerance_flags(analyze, tol);
  analyze->add_flag("--json", as_json, "structured output");

  std::string batch_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "analyse every graph6 line of a file");
  batch->add_option("file", batch_path, "graph6 file, one graph per line ('-' for stdin)")->required();
  batch->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  add_tolerance_flags(batch, tol);
  batch->add_flag("--json", as_json, "structured output");

  std::string family;
  auto* gen = app.add_subcommand("gen", "write a generated family member as graph6");
  gen->add_option("family", family, "family spec, e.g. odd:4")->required();
  gen->add_option("-o,--output", output, "output path (default stdout)");

  std::string to = "g6";
  auto* convert = app.add_subcommand("convert", "convert between graph6, edge list and adjacency matrix");
  add_source_flags(convert, src, true);
  convert->add_option("--to", to, "output format")->check(CLI::IsMember({"g6", "edges", "adjacency"}));
  convert->add_option("-o,--output", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) {
      const auto [graph, name] = load(src);
      const auto report = specx::analyze(graph, name, options_from(tol));
      std::cout << (as_json ? specx::render_json(report) + "\n" : specx::render_text(report));
    } else if (*batch) {
      std::vector<std::string> lines;
      std::istringstream is(read_file(batch_path));
      for (std::string line; std::getline(is, line);) lines.push_back(line);
      const auto items = specx::run_batch(lines, options_from(tol), threads);
      const auto summary = specx::summarize(items);
      std::cout << (as_json ? batch_json(items, summary).dump(2) + "\n" : batch_text(items, summary));
    } else if (*gen) {
      write_output(output, specx::write_graph6(specx::families::generate(family)) + "\n");
    } else if (*convert) {
      const auto [graph, name] = load(src);
      std::string text;
      if (to == "edges")
        text = specx::write_edge_list(graph);
      else if (to == "adjacency")
        text = specx::write_adjacency(graph);
      else
        text = specx::write_graph6(graph) + "\n";
      write_output(output, text);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "specx: usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    return report_error(kIo, "io", e.what(), as_json);
  } catch (const specx::ParseError& e) {
    return report_error(kParse, "parse", e.what(), as_json);
  } catch (const specx::PreconditionError& e) {
    return report_error(kPrecondition, "precondition", e.what(), as_json);
  } catch (const specx::NumericalError& e) {
    return report_error(kNumerical, "numerical", e.what(), as_json);
  } catch (const std::exception& e) {
    return report_error(kInternal, "internal", e.what(), as_json);
  }
  return kOk;
}
