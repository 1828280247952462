#pragma once

#include "qreider/criteria.hpp"
#include "qreider/decomposition_search.hpp"
#include "qreider/document.hpp"
#include "qreider/hirzebruch.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qreider {

enum class QueryStatus { established, not_established, value, error };
const char* to_string(QueryStatus s);

struct QueryReport {
  std::string query;  // canonical text of the query line
  QueryStatus status = QueryStatus::value;
  std::string rule;
  std::vector<TraceEntry> trace;
  std::optional<std::vector<Rational>> witness;  // flat tuple
  NamedValues values;
  std::vector<std::pair<std::string, std::string>> facts;  // non-numeric results (classes, names)
  std::vector<std::string> notes;
  std::string error;
  double elapsed_ms = 0;
  std::vector<QueryReport> checks;  // sub-checks of a claim
};

struct RunOptions {
  unsigned depth = 24;  // witness and schedule depth
  Execution execution = Execution::parallel;
};

struct RunReport {
  std::vector<QueryReport> queries;
  bool any_error() const;
};

std::string query_text(const Query& q);

/// Executes one query. Errors from the query are captured in the report.
QueryReport run_query(const Query& q, const Workspace& ws, const RunOptions& options = {});

/// Executes every query in document order.
RunReport run(const Document& doc, const Workspace& ws, const RunOptions& options = {});

QueryReport claim_query(int n, int part, std::optional<int> m, const RunOptions& options = {});

std::string render_text(const RunReport& report);
std::string render_json(const RunReport& report, int indent = 2);

}  // namespace qreider
