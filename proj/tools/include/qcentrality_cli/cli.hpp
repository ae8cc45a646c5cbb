#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qcentrality/centrality.hpp>
#include <qcentrality/graph.hpp>
#include <qcentrality/ranking.hpp>

namespace qcentrality::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class OutputFormat { table, csv, json };

/// Everything a rank or compare invocation needs once flags are parsed.
struct RunSpec {
  std::string input_path;
  std::string input_format = "auto";  // auto | edgelist | mtx
  std::string generator;              // e.g. "path:4", empty when reading a file
  std::optional<std::uint64_t> seed;
  std::vector<Method> methods;
  double alpha = 0.85;
  std::optional<std::size_t> k;
  OutputFormat format = OutputFormat::table;
  double tie_tol = kDefaultTieTol;
  std::string output_path;
};

/// Thrown for malformed generator specs and similar user errors (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "path:n", "diamond:n", "star:n", "tailed:n1,n2", "example5" or
/// "scalefree:n,ag,bg,gg" and builds the graph.
DirectedGraph generate_from_spec(const std::string& spec, std::optional<std::uint64_t> seed);

/// Splits a comma-separated method list; throws UsageError on unknown names.
std::vector<Method> parse_method_list(const std::string& list);

/// Runs the requested methods, concurrently, in the order given.
std::vector<CentralityResult> run_methods(const DirectedGraph& g, const std::vector<Method>& methods,
                                          double alpha);

void render_scores(std::ostream& out, const DirectedGraph& g,
                   const std::vector<CentralityResult>& results, OutputFormat format);

void render_comparison(std::ostream& out, const DirectedGraph& g,
                       const std::vector<CentralityResult>& results, const ComparisonReport& hub,
                       const ComparisonReport& authority, OutputFormat format);

/// Entry point; args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcentrality::cli
