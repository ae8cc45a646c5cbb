#include "qcentrality/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "qcentrality/error.hpp"

namespace qcentrality {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::size_t parse_id(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'", line);
  }
  return value;
}

double parse_value(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid matrix value '" + std::string(token) + "'", line);
  }
  return value;
}

// Deduplicates and builds the graph; `edges` are loop-free 1-based pairs.
LoadResult finish(std::size_t n, std::vector<Edge> edges, std::size_t loops, std::size_t zeros) {
  const std::size_t raw = edges.size();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const std::size_t duplicates = raw - edges.size();
  DirectedGraph g = DirectedGraph::from_edges(n, edges);
  const bool connected = is_weakly_connected(g);
  return LoadResult{std::move(g), loops, duplicates, zeros, connected};
}

}  // namespace

LoadResult load_edgelist(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t declared_n = 0;
  std::size_t max_id = 0;
  std::size_t loops = 0;
  bool saw_content = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    saw_content = true;

    if (line.starts_with("n=")) {
      if (declared_n != 0) throw ParseError("duplicate n= header", line_no);
      declared_n = parse_id(trim(line.substr(2)), line_no, "node count");
      if (declared_n == 0) throw ParseError("node count must be positive", line_no);
      continue;
    }

    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("expected 'src dst', got '" + std::string(line) + "'", line_no);
    }
    const std::size_t src = parse_id(tokens[0], line_no, "node id");
    const std::size_t dst = parse_id(tokens[1], line_no, "node id");
    if (src == 0 || dst == 0) throw ParseError("node ids are 1-based", line_no);
    max_id = std::max({max_id, src, dst});
    if (src == dst) {
      ++loops;
      continue;
    }
    edges.push_back({src, dst});
  }

  if (!saw_content) throw ParseError("empty edge list", 0);
  if (declared_n != 0 && max_id > declared_n) {
    throw ParseError("node id " + std::to_string(max_id) + " exceeds declared n=" +
                         std::to_string(declared_n),
                     0);
  }
  const std::size_t n = declared_n != 0 ? declared_n : max_id;
  return finish(n, std::move(edges), loops, 0);
}

LoadResult load_matrix_market(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw)) throw ParseError("empty Matrix Market input", 0);
  ++line_no;

  const auto header = split_ws(trim(raw));
  if (header.size() != 5 || lower(header[0]) != "%%matrixmarket") {
    throw ParseError("missing %%MatrixMarket header", line_no);
  }
  const std::string object = lower(header[1]);
  const std::string format = lower(header[2]);
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  if (object != "matrix") throw ParseError("unsupported object '" + object + "'", line_no);
  if (format != "coordinate") throw ParseError("unsupported format '" + format + "'", line_no);
  if (field != "pattern" && field != "real" && field != "integer") {
    throw ParseError("unsupported field '" + field + "'", line_no);
  }
  if (symmetry != "general") {
    throw ParseError("unsupported symmetry '" + symmetry + "' (expand to general first)", line_no);
  }
  const bool pattern = field == "pattern";

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  bool have_size = false;
  std::size_t read = 0;
  std::size_t loops = 0;
  std::size_t zeros = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    const auto tokens = split_ws(line);

    if (!have_size) {
      if (tokens.size() != 3) throw ParseError("expected 'rows cols nnz'", line_no);
      rows = parse_id(tokens[0], line_no, "row count");
      cols = parse_id(tokens[1], line_no, "column count");
      nnz = parse_id(tokens[2], line_no, "entry count");
      if (rows != cols) {
        throw ParseError("matrix is not square (" + std::to_string(rows) + "x" +
                             std::to_string(cols) + ")",
                         line_no);
      }
      if (rows == 0) throw ParseError("matrix has no rows", line_no);
      have_size = true;
      edges.reserve(nnz);
      continue;
    }

    if (read == nnz) throw ParseError("more entries than declared", line_no);
    if (tokens.size() != (pattern ? 2u : 3u)) throw ParseError("malformed entry", line_no);
    const std::size_t i = parse_id(tokens[0], line_no, "row index");
    const std::size_t j = parse_id(tokens[1], line_no, "column index");
    if (i == 0 || j == 0 || i > rows || j > cols) throw ParseError("entry index out of range", line_no);
    ++read;
    if (!pattern && parse_value(tokens[2], line_no) == 0.0) {
      ++zeros;
      continue;
    }
    if (i == j) {
      ++loops;
      continue;
    }
    edges.push_back({i, j});
  }

  if (!have_size) throw ParseError("missing size line", line_no);
  if (read != nnz) {
    throw ParseError("expected " + std::to_string(nnz) + " entries, found " + std::to_string(read),
                     line_no);
  }
  return finish(rows, std::move(edges), loops, zeros);
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".mtx" ? GraphFormat::matrix_market
                                                    : GraphFormat::edgelist;
}

LoadResult load_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return format == GraphFormat::matrix_market ? load_matrix_market(in) : load_edgelist(in);
}

void write_edgelist(std::ostream& out, const DirectedGraph& g) {
  out << "n=" << g.node_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.source << ' ' << e.target << '\n';
  }
}

std::string graph_metadata(const LoadResult& loaded) {
  const DirectedGraph& g = loaded.graph;
  const DegreeVector d = degrees(g);
  const auto zero_count = [](const std::vector<std::size_t>& v) {
    return std::count(v.begin(), v.end(), std::size_t{0});
  };
  std::ostringstream os;
  os << "n=" << g.node_count() << '\n'
     << "edges=" << g.edge_count() << '\n'
     << "zero_out_degree=" << zero_count(d.out_deg) << '\n'
     << "zero_in_degree=" << zero_count(d.in_deg) << '\n'
     << "weakly_connected=" << (loaded.weakly_connected ? "true" : "false") << '\n'
     << "bipartite_components=" << bipartite_component_count(g)
     << '\n'
     << "dropped_self_loops=" << loaded.dropped_self_loops << '\n'
     << "duplicate_edges=" << loaded.duplicate_edges << '\n';
  return os.str();
}

std::string graph_metadata(const DirectedGraph& g) {
  return graph_metadata(LoadResult{g, 0, 0, 0, is_weakly_connected(g)});
}

}  // namespace qcentrality
