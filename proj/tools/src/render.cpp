#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "qcentrality_cli/cli.hpp"

namespace qcentrality::cli {
namespace {

using json = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
  if (std::isnan(v)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::size_t label_width(const DirectedGraph& g) {
  std::size_t w = 4;
  for (NodeId id = 1; id <= g.node_count(); ++id) w = std::max(w, g.label(id).size());
  return w;
}

void score_table(std::ostream& out, const DirectedGraph& g,
                 const std::vector<CentralityResult>& results, Side side) {
  const std::size_t lw = label_width(g);
  constexpr std::size_t cw = 10;
  out << side_name(side) << " scores\n" << pad_right("node", lw);
  for (const auto& r : results) out << pad_left(std::string(method_label(r.method)), cw);
  out << '\n';
  for (NodeId id = 1; id <= g.node_count(); ++id) {
    out << pad_right(g.label(id), lw);
    for (const auto& r : results) {
      const auto& v = side == Side::hub ? r.hub : r.authority;
      out << pad_left(fixed(v[id - 1], 5), cw);
    }
    out << '\n';
  }
}

json graph_json(const DirectedGraph& g) {
  return {{"n", g.node_count()}, {"edges", g.edge_count()}};
}

json results_json(const std::vector<CentralityResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    arr.push_back({{"method", method_name(r.method)},
                   {"hub", r.hub},
                   {"authority", r.authority},
                   {"normalization", normalization_name(r.normalization)},
                   {"warnings", r.warnings}});
  }
  return arr;
}

json report_json(const ComparisonReport& rep) {
  json tau = json::array();
  json overlap = json::array();
  for (Eigen::Index i = 0; i < rep.tau.rows(); ++i) {
    json trow = json::array();
    json orow = json::array();
    for (Eigen::Index j = 0; j < rep.tau.cols(); ++j) {
      trow.push_back(std::isnan(rep.tau(i, j)) ? json(nullptr) : json(rep.tau(i, j)));
      orow.push_back(rep.topk_overlap(i, j));
    }
    tau.push_back(std::move(trow));
    overlap.push_back(std::move(orow));
  }
  return {{"methods", rep.methods}, {"k", rep.k}, {"tau", tau}, {"topk_overlap", overlap}};
}

void matrix_table(std::ostream& out, const ComparisonReport& rep, const std::string& title,
                  bool overlap) {
  std::vector<std::string> labels;
  std::size_t lw = 0;
  for (const auto& m : rep.methods) {
    labels.emplace_back(method_label(*parse_method(m)));
    lw = std::max(lw, labels.back().size());
  }
  constexpr std::size_t cw = 9;
  out << title << '\n' << std::string(lw, ' ');
  for (const auto& l : labels) out << pad_left(l, cw);
  out << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << pad_right(labels[i], lw);
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      const std::string cell = overlap ? std::to_string(rep.topk_overlap(ii, jj))
                                       : fixed(rep.tau(ii, jj), 3);
      out << pad_left(cell, cw);
    }
    out << '\n';
  }
}

}  // namespace

void render_scores(std::ostream& out, const DirectedGraph& g,
                   const std::vector<CentralityResult>& results, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      score_table(out, g, results, Side::hub);
      out << '\n';
      score_table(out, g, results, Side::authority);
      break;
    case OutputFormat::csv:
      out << "node,method,hub,authority\n";
      for (const auto& r : results) {
        for (NodeId id = 1; id <= g.node_count(); ++id) {
          out << g.label(id) << ',' << method_name(r.method) << ',' << full(r.hub[id - 1]) << ','
              << full(r.authority[id - 1]) << '\n';
        }
      }
      break;
    case OutputFormat::json:
      out << json{{"graph", graph_json(g)},
                  {"results", results_json(results)},
                  {"comparisons", json::object()}}
                 .dump(2)
          << '\n';
      break;
  }
}

void render_comparison(std::ostream& out, const DirectedGraph& g,
                       const std::vector<CentralityResult>& results, const ComparisonReport& hub,
                       const ComparisonReport& authority, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      for (const ComparisonReport* rep : {&hub, &authority}) {
        const std::string side(side_name(rep->side));
        matrix_table(out, *rep, side + " Kendall tau-b", false);
        out << '\n';
        matrix_table(out, *rep, side + " top-" + std::to_string(rep->k) + " overlap", true);
        if (rep == &hub) out << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "side,metric,method_a,method_b,value\n";
      for (const ComparisonReport* rep : {&hub, &authority}) {
        for (std::size_t i = 0; i < rep->methods.size(); ++i) {
          for (std::size_t j = 0; j < rep->methods.size(); ++j) {
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            const std::string prefix = std::string(side_name(rep->side));
            out << prefix << ",tau," << rep->methods[i] << ',' << rep->methods[j] << ','
                << (std::isnan(rep->tau(ii, jj)) ? std::string("nan") : full(rep->tau(ii, jj)))
                << '\n';
            out << prefix << ",topk_overlap," << rep->methods[i] << ',' << rep->methods[j] << ','
                << rep->topk_overlap(ii, jj) << '\n';
          }
        }
      }
      break;
    case OutputFormat::json:
      out << json{{"graph", graph_json(g)},
                  {"results", results_json(results)},
                  {"comparisons", {{"hub", report_json(hub)}, {"authority", report_json(authority)}}}}
                 .dump(2)
          << '\n';
      break;
  }
}

}  // namespace qcentrality::cli
