#include "qcentrality_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"
#include <qcentrality/error.hpp>
#include <qcentrality/generators.hpp>
#include <qcentrality/io.hpp>

namespace qcentrality::cli {
namespace {

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double default_alpha() {
  if (const char* env = std::getenv("QCENTRALITY_ALPHA")) {
    return parse_number<double>(env, "QCENTRALITY_ALPHA");
  }
  return 0.85;
}

LoadResult resolve_input(const RunSpec& spec) {
  if (!spec.generator.empty()) {
    return {generate_from_spec(spec.generator, spec.seed)};
  }
  GraphFormat fmt = format_from_path(spec.input_path);
  if (spec.input_format == "edgelist") fmt = GraphFormat::edgelist;
  if (spec.input_format == "mtx") fmt = GraphFormat::matrix_market;
  return load_graph_file(spec.input_path, fmt);
}

// Shared flags of rank and compare.
void add_run_options(CLI::App* cmd, RunSpec& spec, std::string& methods, std::string& format) {
  auto* input = cmd->add_option("--input,-i", spec.input_path, "Graph file (edge list or .mtx)");
  auto* gen = cmd->add_option("--generate,-g", spec.generator,
                              "Generator spec: path:n, diamond:n, star:n, tailed:n1,n2, "
                              "example5, scalefree:n,ag,bg,gg");
  input->excludes(gen);
  gen->excludes(input);
  cmd->add_option("--input-format", spec.input_format, "auto, edgelist or mtx")
      ->check(CLI::IsMember({"auto", "edgelist", "mtx"}));
  cmd->add_option("--seed", spec.seed, "Generator seed");
  cmd->add_option("--methods,-m", methods, "Comma-separated: cqau,cqaw,cqg,hits,pagerank,bek")
      ->required();
  cmd->add_option("--alpha", spec.alpha, "Teleportation for CQA, CQG and PageRank")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tie-tol", spec.tie_tol, "Score gap treated as a tie")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format,-f", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--output,-o", spec.output_path, "Write the report here instead of stdout");
}

OutputFormat to_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  return OutputFormat::table;
}

void report_warnings(const std::vector<CentralityResult>& results, OutputFormat format,
                     std::ostream& err) {
  if (format == OutputFormat::json) return;
  for (const auto& r : results) {
    for (const auto& w : r.warnings) err << "warning: " << method_name(r.method) << ": " << w << '\n';
  }
}

// Writes through `sink` either to the -o file or to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn sink) {
  if (path.empty()) {
    sink(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  sink(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

int execute_rank(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const LoadResult loaded = resolve_input(spec);
  const auto results = run_methods(loaded.graph, spec.methods, spec.alpha);
  report_warnings(results, spec.format, err);
  emit(spec.output_path, out, [&](std::ostream& o) {
    render_scores(o, loaded.graph, results, spec.format);
  });
  return kOk;
}

int execute_compare(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.methods.size() < 2) throw UsageError("compare needs at least two methods");
  const LoadResult loaded = resolve_input(spec);
  const std::size_t n = loaded.graph.node_count();
  const std::size_t k = spec.k.value_or(std::min<std::size_t>(10, n));
  if (k == 0 || k > n) {
    throw UsageError("--k must lie in [1, " + std::to_string(n) + "]");
  }
  const auto results = run_methods(loaded.graph, spec.methods, spec.alpha);
  report_warnings(results, spec.format, err);
  const auto hub = comparison_report(results, Side::hub, k, spec.tie_tol);
  const auto authority = comparison_report(results, Side::authority, k, spec.tie_tol);
  emit(spec.output_path, out, [&](std::ostream& o) {
    render_comparison(o, loaded.graph, results, hub, authority, spec.format);
  });
  return kOk;
}

int execute_generate(const std::string& gen, std::optional<std::uint64_t> seed,
                     const std::string& path, std::ostream& out, std::ostream& err) {
  const DirectedGraph g = generate_from_spec(gen, seed);
  const std::string summary =
      "n=" + std::to_string(g.node_count()) + " edges=" + std::to_string(g.edge_count()) + '\n';
  if (path.empty()) {
    write_edgelist(out, g);
    err << summary;
  } else {
    emit(path, out, [&](std::ostream& o) { write_edgelist(o, g); });
    out << summary;
  }
  return kOk;
}

}  // namespace

DirectedGraph generate_from_spec(const std::string& spec, std::optional<std::uint64_t> seed) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<std::string_view> args;
  if (colon != std::string::npos) args = split(std::string_view(spec).substr(colon + 1), ',');

  const auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw UsageError("generator '" + name + "' takes " + std::to_string(count) +
                       " parameter(s), got '" + spec + "'");
    }
  };
  const auto size_arg = [&](std::size_t i) { return parse_number<std::size_t>(args[i], "size"); };

  try {
    if (name == "path" || name == "diamond" || name == "star") {
      want(1);
      const std::size_t n = size_arg(0);
      if (name == "path") return path_graph(n);
      if (name == "diamond") return diamond_graph(n);
      return star_graph(n);
    }
    if (name == "tailed") {
      want(2);
      return tailed_graph(size_arg(0), size_arg(1));
    }
    if (name == "example5") {
      want(0);
      return example5_graph();
    }
    if (name == "scalefree") {
      ScaleFreeParams p;
      if (args.size() != 1 && args.size() != 4) {
        throw UsageError("scalefree takes n or n,ag,bg,gg");
      }
      if (args.size() == 4) {
        p.alpha_g = parse_number<double>(args[1], "alpha_g");
        p.beta_g = parse_number<double>(args[2], "beta_g");
        p.gamma_g = parse_number<double>(args[3], "gamma_g");
      }
      p.seed = seed.value_or(0);
      return scale_free(size_arg(0), p);
    }
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown generator '" + name + "'");
}

std::vector<Method> parse_method_list(const std::string& list) {
  std::vector<Method> methods;
  for (std::string_view name : split(list, ',')) {
    const auto m = parse_method(name);
    if (!m) throw UsageError("unknown method '" + std::string(name) + "'");
    methods.push_back(*m);
  }
  return methods;
}

std::vector<CentralityResult> run_methods(const DirectedGraph& g, const std::vector<Method>& methods,
                                          double alpha) {
  MethodOptions opts;
  opts.alpha = alpha;
  std::map<Method, std::future<CentralityResult>> pending;
  for (Method m : methods) {
    if (!pending.contains(m)) {
      pending.emplace(m, std::async(std::launch::async,
                                    [&g, m, opts] { return compute_centrality(m, g, opts); }));
    }
  }
  std::map<Method, CentralityResult> done;
  for (auto& [m, f] : pending) done.emplace(m, f.get());
  std::vector<CentralityResult> results;
  for (Method m : methods) results.push_back(done.at(m));
  return results;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hub and authority centrality from quantum walks and classical baselines",
               "qcentrality"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string methods;
  std::string format = "table";
  std::size_t k = 0;

  auto* rank = app.add_subcommand("rank", "Per-node hub and authority scores");
  add_run_options(rank, spec, methods, format);

  auto* compare = app.add_subcommand("compare", "Kendall tau-b and top-k overlap between methods");
  add_run_options(compare, spec, methods, format);
  compare->add_option("--k,-k", k, "Top-k list length (default min(10, n))")
      ->check(CLI::PositiveNumber);

  std::string gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("spec", gen, "Generator spec")->required();
  generate->add_option("--seed", spec.seed, "Generator seed");
  generate->add_option("--output,-o", gen_out, "Edge-list destination (default stdout)");

  auto* info = app.add_subcommand("info", "Graph metadata");
  info->add_option("--input,-i", spec.input_path, "Graph file")->required();
  info->add_option("--input-format", spec.input_format, "auto, edgelist or mtx")
      ->check(CLI::IsMember({"auto", "edgelist", "mtx"}));

  std::vector<std::string> argv_store{"qcentrality"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    spec.alpha = default_alpha();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return execute_generate(gen, spec.seed, gen_out, out, err);
    if (*info) {
      out << graph_metadata(resolve_input(spec));
      return kOk;
    }
    spec.methods = parse_method_list(methods);
    spec.format = to_format(format);
    if (k != 0) spec.k = k;
    if (spec.input_path.empty() && spec.generator.empty()) {
      throw UsageError("one of --input or --generate is required");
    }
    return *rank ? execute_rank(spec, out, err) : execute_compare(spec, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace qcentrality::cli
