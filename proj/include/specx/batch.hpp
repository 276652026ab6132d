#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "specx/analysis.hpp"
#include "specx/error.hpp"
#include "specx/graph6.hpp"

namespace specx {

struct BatchItem {
  std::size_t line = 0;  // 1-based line number in the input
  std::string input;
  std::optional<AnalysisReport> report;
  /// "parse", "precondition" or "numerical" when report is empty.
  std::string error_kind;
  std::string error;
};

struct BatchSummary {
  std::size_t graphs = 0;
  std::size_t analyzed = 0;
  std::size_t parse_errors = 0;
  std::size_t precondition_failures = 0;
  std::size_t numerical_failures = 0;
  std::size_t distance_regular = 0;
  std::size_t equality_verdicts = 0;
  /// "theorem j=.. status" -> count over analysed graphs.
  std::map<std::string, std::size_t> excess_status;
};

inline BatchItem analyze_line(std::size_t line, const std::string& text, const AnalysisOptions& opt) {
  BatchItem item{line, text, std::nullopt, "", ""};
  try {
    item.report = analyze(parse_graph6(text), "line " + std::to_string(line), opt);
  } catch (const ParseError& e) {
    item.error_kind = "parse";
    item.error = e.what();
  } catch (const PreconditionError& e) {
    item.error_kind = "precondition";
    item.error = e.what();
  } catch (const NumericalError& e) {
    item.error_kind = "numerical";
    item.error = e.what();
  }
  return item;
}

/// Analyses every nonblank line; results come back in input order whatever
/// the number of worker threads.
inline std::vector<BatchItem> run_batch(const std::vector<std::string>& lines, const AnalysisOptions& opt = {},
                                        unsigned threads = 1) {
  std::vector<std::pair<std::size_t, std::string>> work;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string s = lines[i];
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
      s.pop_back();
    if (!s.empty()) work.emplace_back(i + 1, std::move(s));
  }
  std::vector<BatchItem> out(work.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++)
      out[i] = analyze_line(work[i].first, work[i].second, opt);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(work.size())));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return out;
}

inline BatchSummary summarize(const std::vector<BatchItem>& items) {
  BatchSummary s;
  for (const auto& item : items) {
    ++s.graphs;
    if (!item.report) {
      if (item.error_kind == "parse") ++s.parse_errors;
      else if (item.error_kind == "precondition") ++s.precondition_failures;
      else ++s.numerical_failures;
      continue;
    }
    ++s.analyzed;
    s.distance_regular += item.report->drg.distance_regular;
    s.equality_verdicts += item.report->equalities();
    for (const auto& e : item.report->excess)
      ++s.excess_status[e.theorem + " j=" + std::to_string(e.j) + " " + e.status];
  }
  return s;
}

}  // namespace specx
