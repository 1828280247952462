#include "qreider/document.hpp"
#include "qreider/errors.hpp"
#include "qreider/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr const char* kVersion = "qreider 0.1.0";

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int emit(const qreider::RunReport& report, bool json) {
  std::cout << (json ? qreider::render_json(report) + "\n" : qreider::render_text(report));
  return report.any_error() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact adjoint-system criteria on surfaces with boundary"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  qreider::RunOptions options;
  bool json = false;
  bool serial = false;

  std::string path;
  auto* check = app.add_subcommand("check", "Run the queries of a .surf document");
  check->add_option("file", path, "Input document, or - for stdin")->required();
  check->add_flag("--json", json, "Emit a JSON report");
  check->add_option("--depth", options.depth, "Dyadic search depth")->check(CLI::Range(1u, 64u));
  check->add_flag("--serial", serial, "Disable the parallel sweeps");

  int n = 0, part = 1, m = 0;
  auto* claim = app.add_subcommand("hirzebruch", "Run the worked example on F_n");
  claim->add_option("--n", n, "Hirzebruch index")->required()->check(CLI::PositiveNumber);
  claim->add_option("--part", part, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  auto* m_opt = claim->add_option("--m", m, "m for part 2 (default n + 1)");
  claim->add_flag("--json", json, "Emit a JSON report");
  claim->add_option("--depth", options.depth, "Dyadic search depth")->check(CLI::Range(1u, 64u));
  claim->add_flag("--serial", serial, "Disable the parallel sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (serial) options.execution = qreider::Execution::serial;

  if (*claim) {
    qreider::RunReport report;
    report.queries.push_back(qreider::claim_query(n, part, m_opt->count() ? std::optional<int>(m) : std::nullopt, options));
    return emit(report, json);
  }

  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "qreider: cannot read " << path << "\n";
    return 1;
  }
  try {
    auto [doc, ws] = qreider::load(text);
    return emit(qreider::run(doc, ws, options), json);
  } catch (const qreider::ParseError& e) {
    std::cerr << (path == "-" ? "<stdin>" : path) << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qreider: internal error: " << e.what() << "\n";
    return 2;
  }
}
